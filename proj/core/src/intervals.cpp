#include "proglab/intervals.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace proglab {

namespace {

using int128 = __int128;

constexpr std::uint64_t kMaxBlockAnchor = 1'000'000'000'000'000'000ull;
constexpr std::uint64_t kMaxVerifyAnchor = 1'000'000;

// Denominator pairs (a, b) of the block intervals (N/a, N/b].
constexpr std::pair<std::int64_t, std::int64_t> kBlockDenoms[6] = {
    {48, 45}, {40, 36}, {32, 27}, {24, 12}, {9, 8}, {4, 1}};

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw std::invalid_argument("Rational: zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    std::int64_t g = std::gcd(n < 0 ? -n : n, d);
    if (g == 0) g = 1;
    num = n / g;
    den = d / g;
}

std::int64_t Rational::floor() const {
    std::int64_t q = num / den;
    if (num % den != 0 && num < 0) --q;
    return q;
}

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

bool operator<(const Rational& a, const Rational& b) {
    return static_cast<int128>(a.num) * b.den <
           static_cast<int128>(b.num) * a.den;
}

bool operator<=(const Rational& a, const Rational& b) {
    return static_cast<int128>(a.num) * b.den <=
           static_cast<int128>(b.num) * a.den;
}

namespace {

Rational from_int128(int128 n, int128 d) {
    if (d < 0) {
        n = -n;
        d = -d;
    }
    int128 a = n < 0 ? -n : n;
    int128 b = d;
    while (b != 0) {
        int128 t = a % b;
        a = b;
        b = t;
    }
    if (a == 0) a = 1;
    n /= a;
    d /= a;
    constexpr int128 max64 = std::numeric_limits<std::int64_t>::max();
    if (n > max64 || n < -max64 || d > max64)
        throw std::overflow_error("Rational: value exceeds 64-bit range");
    return Rational(static_cast<std::int64_t>(n),
                    static_cast<std::int64_t>(d));
}

}  // namespace

Rational operator+(const Rational& a, const Rational& b) {
    return from_int128(
        static_cast<int128>(a.num) * b.den + static_cast<int128>(b.num) * a.den,
        static_cast<int128>(a.den) * b.den);
}

Rational operator-(const Rational& a, const Rational& b) {
    return from_int128(
        static_cast<int128>(a.num) * b.den - static_cast<int128>(b.num) * a.den,
        static_cast<int128>(a.den) * b.den);
}

IntervalUnion s_block(std::uint64_t anchor) {
    if (anchor < 48)
        throw std::invalid_argument("s_block: anchor must be >= 48");
    if (anchor > kMaxBlockAnchor)
        throw std::domain_error("s_block: anchor exceeds 64-bit interval range");
    IntervalUnion u;
    u.anchor = anchor;
    const auto n = static_cast<std::int64_t>(anchor);
    for (const auto& [a, b] : kBlockDenoms)
        u.intervals.push_back({Rational(n, a), Rational(n, b)});
    return u;
}

mpz_class next_anchor(const mpz_class& n_prev, const mpz_class& n_1) {
    if (n_prev < 48 || n_1 < 48)
        throw std::invalid_argument("next_anchor: anchors must be >= 48");
    mpz_class numerator = 2304 * n_prev * n_prev;
    if (!mpz_divisible_p(numerator.get_mpz_t(), n_1.get_mpz_t()))
        throw std::domain_error("next_anchor: 48^2 * n_prev^2 not divisible by n_1");
    return numerator / n_1;
}

bool union_member(std::uint64_t n, const IntervalUnion& u) {
    if (n == 0) return false;
    for (const auto& iv : u.intervals) {
        // lo < n <= hi via cross multiplication.
        const auto nn = static_cast<int128>(n);
        if (nn * iv.lo.den > iv.lo.num && nn * iv.hi.den <= iv.hi.num)
            return true;
    }
    return false;
}

bool block_member(std::uint64_t n, std::uint64_t anchor) {
    return union_member(n, s_block(anchor));
}

std::uint64_t integer_count(const IntervalUnion& u) {
    std::uint64_t count = 0;
    for (const auto& iv : u.intervals) {
        std::int64_t hi = iv.hi.floor();
        std::int64_t lo = iv.lo.floor();
        if (hi > lo) count += static_cast<std::uint64_t>(hi - lo);
    }
    return count;
}

Rational measure_fraction(const IntervalUnion& u) {
    if (u.anchor == 0)
        throw std::invalid_argument("measure_fraction: anchor not set");
    const auto n = static_cast<std::int64_t>(u.anchor);
    Rational total(0, 1);
    for (const auto& iv : u.intervals) {
        // (hi - lo) / anchor, divided term-wise to keep numbers small.
        Rational hi = from_int128(iv.hi.num, static_cast<int128>(iv.hi.den) * n);
        Rational lo = from_int128(iv.lo.num, static_cast<int128>(iv.lo.den) * n);
        total = total + (hi - lo);
    }
    return total;
}

std::optional<GeometricTriple> find_geometric_progression(
    const IntervalUnion& u) {
    std::int64_t cap = 0;
    for (const auto& iv : u.intervals) cap = std::max(cap, iv.hi.floor());
    if (cap < 4) return std::nullopt;
    const auto max = static_cast<std::uint64_t>(cap);
    for (std::uint64_t r = 2; r * r <= max; ++r) {
        for (std::uint64_t a = 1; a * r * r <= max; ++a) {
            if (union_member(a, u) && union_member(a * r, u) &&
                union_member(a * r * r, u))
                return GeometricTriple{a, a * r, a * r * r};
        }
    }
    return std::nullopt;
}

std::optional<GeometricTriple> verify_block_free(std::uint64_t anchor) {
    if (anchor > kMaxVerifyAnchor)
        throw std::domain_error(
            "verify_block_free: anchor above brute-force bound 10^6");
    return find_geometric_progression(s_block(anchor));
}

IntervalUnion s_chain(std::uint64_t first_anchor, unsigned blocks) {
    if (blocks < 1 || blocks > 3)
        throw std::domain_error("s_chain: only 1..3 blocks fit in 64 bits");
    IntervalUnion u = s_block(first_anchor);
    mpz_class n1 = static_cast<unsigned long>(first_anchor);
    mpz_class current = n1;
    for (unsigned i = 1; i < blocks; ++i) {
        current = next_anchor(current, n1);
        if (!current.fits_ulong_p() ||
            current > static_cast<unsigned long>(kMaxBlockAnchor))
            throw std::domain_error("s_chain: anchor exceeds 64-bit range");
        IntervalUnion next = s_block(current.get_ui());
        for (const auto& iv : next.intervals) u.intervals.push_back(iv);
        u.anchor = next.anchor;
    }
    return u;
}

}  // namespace proglab
