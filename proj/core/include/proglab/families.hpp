#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace proglab {

// Identifier of a characterized set: the greedy arithmetic set (A3),
// Rankin's geometric set (G3), the exponential set (E3), or the iterated
// family S(level) with S(1) = A3 and S(2) = G3.
struct SetFamily {
    enum class Kind { A3, G3, E3, S };
    Kind kind = Kind::A3;
    std::uint32_t level = 0;  // set for Kind::S only

    static SetFamily a3() { return {Kind::A3, 0}; }
    static SetFamily g3() { return {Kind::G3, 0}; }
    static SetFamily e3() { return {Kind::E3, 0}; }
    static SetFamily s(std::uint32_t level) { return {Kind::S, level}; }

    // Accepts "a3" | "g3" | "e3" | "s:<level>".
    static SetFamily parse(const std::string& id);
    std::string id() const;

    friend bool operator==(const SetFamily&, const SetFamily&) = default;
};

/// n has no digit 2 in its ternary expansion.
bool member_a3(std::uint64_t n);

/// Every exponent of n's factorization is in A3. Requires n >= 1.
bool member_g3(std::uint64_t n);

/// n = 1 or the gcd of n's exponents is in G3. Requires n >= 1.
bool member_e3(std::uint64_t n);

// Iterated construction: level 1 is member_a3 (n >= 0); level >= 2 holds
// iff every exponent of n lies in the level-1 lower set (n >= 1; exponent
// 0 is vacuously admissible, and 1 always belongs).
bool member_s(std::uint64_t n, std::uint32_t level);

bool member(const SetFamily& family, std::uint64_t n);
std::function<bool(std::uint64_t)> family_predicate(const SetFamily& family);

/// All e in [1, bound] outside the level's set, ascending.
std::vector<std::uint64_t> excluded_exponents(std::uint32_t level,
                                              std::uint64_t bound);

// Smallest excluded element of the level's set (n from 0 at level 1, from 1
// above). Supported for levels 1..4; the level-5 threshold is 2^65536 and
// the operation refuses rather than search unbounded.
std::uint64_t first_excluded(std::uint32_t level);

}  // namespace proglab
