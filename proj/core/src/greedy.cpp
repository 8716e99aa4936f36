#include "proglab/greedy.hpp"

#include <stdexcept>

#include "proglab/numtheory.hpp"

namespace proglab {

namespace {

constexpr std::uint64_t kMaxEnumerationLimit = 1'000'000'000;

bool in(const std::vector<bool>& members, std::uint64_t v) {
    return v < members.size() && members[v];
}

}  // namespace

std::uint64_t progression_start(Progression family) {
    return family == Progression::Translation ? 0 : 1;
}

std::optional<ProgressionWitness> completes_progression(
    std::uint64_t candidate, const std::vector<bool>& members,
    Progression family) {
    switch (family) {
        case Progression::Translation:
            for (std::uint64_t n = 1; 2 * n <= candidate; ++n) {
                if (in(members, candidate - n) && in(members, candidate - 2 * n))
                    return ProgressionWitness{candidate - 2 * n, candidate - n};
            }
            return std::nullopt;
        case Progression::Dilation:
            for (std::uint64_t r = 2; r * r <= candidate; ++r) {
                if (candidate % (r * r) == 0 &&
                    in(members, candidate / r) &&
                    in(members, candidate / (r * r)))
                    return ProgressionWitness{candidate / (r * r),
                                              candidate / r};
            }
            return std::nullopt;
        case Progression::Exponentiation: {
            if (candidate < 4) return std::nullopt;
            for (const auto& root : power_roots(candidate)) {
                std::uint64_t m = iroot(root.k, 2);
                if (m < 2 || m * m != root.k) continue;
                std::uint64_t middle =
                    *checked_pow(root.base, static_cast<std::uint32_t>(m),
                                 candidate);
                if (in(members, root.base) && in(members, middle))
                    return ProgressionWitness{root.base, middle};
            }
            return std::nullopt;
        }
    }
    throw std::logic_error("completes_progression: bad family");
}

GreedySet greedy_set(Progression family, std::uint64_t limit) {
    const std::uint64_t start = progression_start(family);
    if (limit < start)
        throw std::invalid_argument("greedy_set: limit below family start");
    if (limit > kMaxEnumerationLimit)
        throw std::domain_error("greedy_set: limit exceeds working range");
    GreedySet set;
    set.family = family;
    set.limit = limit;
    set.bitmap.assign(limit + 1, false);
    for (std::uint64_t candidate = start; candidate <= limit; ++candidate) {
        if (!completes_progression(candidate, set.bitmap, family)) {
            set.bitmap[candidate] = true;
            set.members.push_back(candidate);
        }
    }
    return set;
}

std::optional<ProgressionTriple> verify_free(
    const std::vector<std::uint64_t>& members, Progression family) {
    if (members.empty()) return std::nullopt;
    const std::uint64_t max = members.back();
    if (max > kMaxEnumerationLimit)
        throw std::domain_error("verify_free: members exceed working range");
    std::vector<bool> bitmap(max + 1, false);
    for (std::uint64_t m : members) bitmap[m] = true;

    switch (family) {
        case Progression::Translation:
            for (std::uint64_t x : members) {
                for (std::uint64_t n = 1; x + 2 * n <= max; ++n) {
                    if (bitmap[x + n] && bitmap[x + 2 * n])
                        return ProgressionTriple{x, x + n, x + 2 * n};
                }
            }
            break;
        case Progression::Dilation:
            for (std::uint64_t x : members) {
                if (x == 0) continue;
                for (std::uint64_t r = 2; x <= max / (r * r); ++r) {
                    if (bitmap[x * r] && bitmap[x * r * r])
                        return ProgressionTriple{x, x * r, x * r * r};
                }
            }
            break;
        case Progression::Exponentiation:
            for (std::uint64_t x : members) {
                if (x < 2) continue;
                for (std::uint32_t n = 2;; ++n) {
                    auto last = checked_pow(x, n * n, max);
                    if (!last) break;
                    std::uint64_t middle = *checked_pow(x, n, max);
                    if (bitmap[middle] && bitmap[*last])
                        return ProgressionTriple{x, middle, *last};
                }
            }
            break;
    }
    return std::nullopt;
}

namespace {

// Insertion of non-member m as middle or first term; completes_progression
// already covers m as last term.
bool creates_as_middle_or_first(std::uint64_t m, const GreedySet& set) {
    const auto& bit = set.bitmap;
    const std::uint64_t limit = set.limit;
    switch (set.family) {
        case Progression::Translation:
            for (std::uint64_t n = 1; n <= m && m + n <= limit; ++n)
                if (bit[m - n] && bit[m + n]) return true;
            for (std::uint64_t n = 1; m + 2 * n <= limit; ++n)
                if (bit[m + n] && bit[m + 2 * n]) return true;
            return false;
        case Progression::Dilation:
            for (std::uint64_t r = 2; r <= m && m <= limit / r; ++r)
                if (m % r == 0 && bit[m / r] && bit[m * r]) return true;
            for (std::uint64_t r = 2; m <= limit / (r * r); ++r)
                if (bit[m * r] && bit[m * r * r]) return true;
            return false;
        case Progression::Exponentiation: {
            if (m < 2) return false;
            if (m >= 4) {
                for (const auto& root : power_roots(m)) {
                    auto z = checked_pow(m, root.k, limit);
                    if (z && bit[root.base] && bit[*z]) return true;
                }
            }
            for (std::uint32_t n = 2;; ++n) {
                auto z2 = checked_pow(m, n * n, limit);
                if (!z2) break;
                if (bit[*checked_pow(m, n, limit)] && bit[*z2]) return true;
            }
            return false;
        }
    }
    throw std::logic_error("verify_maximal: bad family");
}

}  // namespace

std::optional<std::uint64_t> verify_maximal(const GreedySet& set) {
    for (std::uint64_t m = progression_start(set.family); m <= set.limit;
         ++m) {
        if (set.bitmap[m]) continue;
        if (completes_progression(m, set.bitmap, set.family)) continue;
        if (creates_as_middle_or_first(m, set)) continue;
        return m;
    }
    return std::nullopt;
}

}  // namespace proglab
