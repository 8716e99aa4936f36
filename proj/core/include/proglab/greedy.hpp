#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace proglab {

// Progression family generated by f_n: translations f_n(x) = x + n (n >= 1),
// dilations f_n(x) = n*x (integer n >= 2), exponentiations f_n(x) = x^n
// (integer n >= 2). A 3-term progression is x, f_n(x), f_n(f_n(x)).
enum class Progression { Translation, Dilation, Exponentiation };

/// First candidate of the greedy enumeration: 0 for Translation, else 1.
std::uint64_t progression_start(Progression family);

// The two smaller terms (x, f_n(x)) of a progression completed by a
// candidate as its largest term.
struct ProgressionWitness {
    std::uint64_t first = 0;
    std::uint64_t middle = 0;
    friend bool operator==(const ProgressionWitness&,
                           const ProgressionWitness&) = default;
};

// Least witness (x, f_n(x)) with both terms in `members` and
// f_n(f_n(x)) == candidate, scanning the family parameter upward;
// nullopt when the candidate completes nothing. `members` is a bitmap
// indexed by value.
std::optional<ProgressionWitness> completes_progression(
    std::uint64_t candidate, const std::vector<bool>& members,
    Progression family);

struct GreedySet {
    Progression family = Progression::Translation;
    std::uint64_t limit = 0;
    std::vector<std::uint64_t> members;  // ascending
    std::vector<bool> bitmap;            // indexed 0..limit

    bool contains(std::uint64_t n) const {
        return n <= limit && bitmap[n];
    }
};

// Greedy construction: candidates ascend from the family start and each is
// included iff it completes no progression over the prior members.
GreedySet greedy_set(Progression family, std::uint64_t limit);

struct ProgressionTriple {
    std::uint64_t first = 0;
    std::uint64_t middle = 0;
    std::uint64_t last = 0;
    friend bool operator==(const ProgressionTriple&,
                           const ProgressionTriple&) = default;
};

// Exhaustive search for any 3-term progression of the family inside
// `members` (ascending list); nullopt certifies freeness.
std::optional<ProgressionTriple> verify_free(
    const std::vector<std::uint64_t>& members, Progression family);

// A non-member <= limit whose insertion creates no progression in any of
// the three positions, or nullopt, which certifies maximality.
std::optional<std::uint64_t> verify_maximal(const GreedySet& set);

}  // namespace proglab
