#include "proglab/families.hpp"

#include <array>
#include <stdexcept>

#include "proglab/numtheory.hpp"

namespace proglab {

namespace {

// Admissible-exponent masks for levels 1..3: bit e is set iff exponent e
// may appear in a member of the level-above set. Exponents of a 64-bit
// integer are < 64, and every e < 64 is admissible from level 4 on (the
// first level-4 exclusion is 65536), so three masks cover all levels.
const std::array<std::uint64_t, 4>& admissible_masks() {
    static const std::array<std::uint64_t, 4> masks = [] {
        std::array<std::uint64_t, 4> m{};
        for (std::uint64_t e = 0; e < 64; ++e)
            if (member_a3(e)) m[1] |= 1ull << e;
        for (std::uint32_t level = 2; level <= 3; ++level) {
            m[level] = 1ull;  // exponent 0 is always admissible
            for (std::uint64_t e = 1; e < 64; ++e) {
                bool ok = true;
                for (const auto& pp : factorize(e))
                    if (!((m[level - 1] >> pp.exponent) & 1)) {
                        ok = false;
                        break;
                    }
                if (ok) m[level] |= 1ull << e;
            }
        }
        return m;
    }();
    return masks;
}

}  // namespace

bool member_a3(std::uint64_t n) {
    while (n > 0) {
        if (n % 3 == 2) return false;
        n /= 3;
    }
    return true;
}

bool member_g3(std::uint64_t n) { return member_s(n, 2); }

bool member_e3(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("member_e3: n must be >= 1");
    if (n == 1) return true;
    return member_g3(exponent_gcd(n));
}

bool member_s(std::uint64_t n, std::uint32_t level) {
    if (level == 0)
        throw std::invalid_argument("member_s: level must be >= 1");
    if (level == 1) return member_a3(n);
    if (n == 0)
        throw std::invalid_argument("member_s: n must be >= 1 for level >= 2");
    if (n == 1) return true;
    if (level >= 5) return true;  // first exclusion is 2^^level > 2^64
    const std::uint64_t mask = admissible_masks()[level - 1];
    for (const auto& pp : factorize(n))
        if (!((mask >> pp.exponent) & 1)) return false;
    return true;
}

SetFamily SetFamily::parse(const std::string& id) {
    if (id == "a3") return a3();
    if (id == "g3") return g3();
    if (id == "e3") return e3();
    if (id.rfind("s:", 0) == 0 && id.size() > 2) {
        std::uint64_t level = 0;
        for (std::size_t i = 2; i < id.size(); ++i) {
            if (id[i] < '0' || id[i] > '9')
                throw std::invalid_argument("unknown set id: " + id);
            level = level * 10 + static_cast<std::uint64_t>(id[i] - '0');
            if (level > 1'000'000)
                throw std::invalid_argument("set level out of range: " + id);
        }
        if (level == 0) throw std::invalid_argument("set level must be >= 1");
        return s(static_cast<std::uint32_t>(level));
    }
    throw std::invalid_argument("unknown set id: " + id);
}

std::string SetFamily::id() const {
    switch (kind) {
        case Kind::A3: return "a3";
        case Kind::G3: return "g3";
        case Kind::E3: return "e3";
        case Kind::S: return "s:" + std::to_string(level);
    }
    return "?";
}

bool member(const SetFamily& family, std::uint64_t n) {
    switch (family.kind) {
        case SetFamily::Kind::A3: return member_a3(n);
        case SetFamily::Kind::G3: return member_g3(n);
        case SetFamily::Kind::E3: return member_e3(n);
        case SetFamily::Kind::S: return member_s(n, family.level);
    }
    throw std::logic_error("member: bad family kind");
}

std::function<bool(std::uint64_t)> family_predicate(const SetFamily& family) {
    return [family](std::uint64_t n) { return member(family, n); };
}

std::vector<std::uint64_t> excluded_exponents(std::uint32_t level,
                                              std::uint64_t bound) {
    if (level == 0)
        throw std::invalid_argument("excluded_exponents: level must be >= 1");
    if (bound == 0)
        throw std::invalid_argument("excluded_exponents: bound must be >= 1");
    std::vector<std::uint64_t> out;
    for (std::uint64_t e = 1; e <= bound; ++e)
        if (!member_s(e, level)) out.push_back(e);
    return out;
}

std::uint64_t first_excluded(std::uint32_t level) {
    if (level < 1 || level > 4)
        throw std::domain_error(
            "first_excluded: only levels 1..4 are searchable");
    const std::uint64_t search_bound = 2 * 65536;
    for (std::uint64_t n = (level == 1) ? 0 : 1; n <= search_bound; ++n)
        if (!member_s(n, level)) return n;
    throw std::runtime_error("first_excluded: search bound exceeded");
}

}  // namespace proglab
