#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace proglab {

// Exact fraction with positive denominator; all interval endpoint work is
// integer arithmetic, never floating point.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d);  // normalizes

    std::int64_t floor() const;
    std::string str() const;  // "n" or "n/d"

    friend bool operator==(const Rational&, const Rational&) = default;
};

bool operator<(const Rational& a, const Rational& b);
bool operator<=(const Rational& a, const Rational& b);
Rational operator+(const Rational& a, const Rational& b);
Rational operator-(const Rational& a, const Rational& b);

// Ordered disjoint union of half-open-on-left intervals (lo, hi].
struct RationalInterval {
    Rational lo;
    Rational hi;
};

struct IntervalUnion {
    std::vector<RationalInterval> intervals;
    std::uint64_t anchor = 0;
};

/// The six-interval geometric-progression-free block anchored at N >= 48:
/// (N/48, N/45] u (N/40, N/36] u (N/32, N/27] u (N/24, N/12] u
/// (N/9, N/8] u (N/4, N].
IntervalUnion s_block(std::uint64_t anchor);

/// Next anchor of the block recursion: 48^2 * n_prev^2 / n_1, exact;
/// throws when the quotient is not integral.
mpz_class next_anchor(const mpz_class& n_prev, const mpz_class& n_1);

bool union_member(std::uint64_t n, const IntervalUnion& u);
bool block_member(std::uint64_t n, std::uint64_t anchor);

/// Number of integers in the union.
std::uint64_t integer_count(const IntervalUnion& u);

/// Sum of interval lengths divided by the anchor, exact.
/// For any s_block this is 3523/4320.
Rational measure_fraction(const IntervalUnion& u);

struct GeometricTriple {
    std::uint64_t first = 0;
    std::uint64_t middle = 0;
    std::uint64_t last = 0;
    friend bool operator==(const GeometricTriple&,
                           const GeometricTriple&) = default;
};

/// Exhaustive search for a, a*r, a*r^2 (integer r >= 2) all in the union.
std::optional<GeometricTriple> find_geometric_progression(
    const IntervalUnion& u);

/// find_geometric_progression over s_block(anchor); anchor <= 10^6.
std::optional<GeometricTriple> verify_block_free(std::uint64_t anchor);

/// Union of the first `blocks` (1..3) blocks of the recursion started at
/// first_anchor; later anchors exceed 64 bits.
IntervalUnion s_chain(std::uint64_t first_anchor, unsigned blocks);

}  // namespace proglab
