#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

namespace proglab {

using Predicate = std::function<bool(std::uint64_t)>;

/// |{1 <= n <= n_max : pred(n)}|. Requires n_max >= 1.
std::uint64_t count_members(const Predicate& pred, std::uint64_t n_max);

// Extremes of |A intersect (start, start + window]| over window starts in
// [0, range_max - window], from one sliding pass.
struct WindowScanResult {
    std::uint64_t window = 0;
    std::uint64_t range_max = 0;
    std::uint64_t min_count = 0;
    std::uint64_t max_count = 0;
    std::uint64_t argmin_start = 0;
    std::uint64_t argmax_start = 0;
};

WindowScanResult uniform_scan(const Predicate& pred, std::uint64_t window,
                              std::uint64_t range_max);

/// log(count) / log(n_max). Requires count >= 1 and n_max >= 2.
double exponential_estimate(std::uint64_t count, std::uint64_t n_max);

struct DensityReport {
    std::string set;
    std::uint64_t n_max = 0;
    std::uint64_t count = 0;
    double asymptotic_estimate = 0.0;
    std::optional<double> exponential_estimate;  // empty when count == 0
};

DensityReport density_report(std::string set_id, const Predicate& pred,
                             std::uint64_t n_max);

// |{1 <= n <= n_max : n outside E3}| without scanning the range: every
// excluded integer has exponent gcd >= 4, so it is among the perfect powers
// b^k with b >= 2, k >= 4.
std::uint64_t excluded_e3_count(std::uint64_t n_max);

// Truncated analytic density with certified truncation data.
struct AnalyticDensity {
    double value = 0.0;
    double eps = 0.0;
    std::string route;
    std::uint64_t prime_bound = 0;    // Euler-product routes
    std::uint32_t factor_count = 0;   // zeta factors or excluded exponents
    double tail_bound = 0.0;
};

/// (1/zeta(2)) * prod_{i>=1} zeta(3^i)/zeta(2*3^i), within eps.
double analytic_density_g3(double eps);
AnalyticDensity analytic_density_g3_info(double eps);

/// Euler product over excluded exponents of the level-1 lower set,
/// within eps. Supported for levels 2..4.
double analytic_density_s(std::uint32_t level, double eps);
AnalyticDensity analytic_density_s_info(std::uint32_t level, double eps);

/// prod_{j<=i} (1 - sum_{b<=i, b not in A3} (p_j^-b - p_j^-b-1)).
double t_i_density(std::uint32_t i);

/// prod_{j<=i} (1 - 1/p_j + 1/p_j^2).
double r_i_density(std::uint32_t i);

/// 1/zeta(k) within eps; density of the k-free numbers.
double kfree_density(std::uint32_t k, double eps);

/// 1/zeta(m+1) - 1/zeta(m) within eps; density of numbers whose largest
/// exponent is exactly m. Positive for every m >= 2.
double b_m_density(std::uint32_t m, double eps);

}  // namespace proglab
