#include "proglab/density.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "proglab/families.hpp"
#include "proglab/numtheory.hpp"
#include "proglab/parallel.hpp"

namespace proglab {

namespace {

constexpr std::uint64_t kMaxScanRange = 1'000'000'000;
constexpr std::uint64_t kMaxWindowBuffer = 100'000'000;
constexpr std::uint64_t kMaxEulerPrimeBound = 200'000'000;

void check_eps(double eps) {
    if (!(eps > 0) || eps > 0.5)
        throw std::invalid_argument("eps must be in (0, 0.5]");
}

}  // namespace

std::uint64_t count_members(const Predicate& pred, std::uint64_t n_max) {
    if (n_max == 0)
        throw std::invalid_argument("count_members: n_max must be >= 1");
    if (n_max > kMaxScanRange)
        throw std::domain_error("count_members: n_max exceeds scan range");
    std::vector<std::uint64_t> partial(thread_budget(), 0);
    for_each_chunk(1, n_max, [&](unsigned chunk, std::uint64_t lo,
                                 std::uint64_t hi) {
        std::uint64_t c = 0;
        for (std::uint64_t n = lo; n <= hi; ++n)
            if (pred(n)) ++c;
        partial[chunk] = c;
    });
    std::uint64_t total = 0;
    for (std::uint64_t c : partial) total += c;
    return total;
}

WindowScanResult uniform_scan(const Predicate& pred, std::uint64_t window,
                              std::uint64_t range_max) {
    if (window == 0)
        throw std::invalid_argument("uniform_scan: window must be >= 1");
    if (range_max < window)
        throw std::invalid_argument("uniform_scan: range_max below window");
    if (range_max > kMaxWindowBuffer)
        throw std::domain_error("uniform_scan: range_max exceeds scan range");

    // One predicate evaluation per point, filled in parallel; the slide
    // itself is sequential and cheap.
    std::vector<std::uint8_t> in(range_max + 1, 0);
    for_each_chunk(1, range_max,
                   [&](unsigned, std::uint64_t lo, std::uint64_t hi) {
                       for (std::uint64_t n = lo; n <= hi; ++n)
                           in[n] = pred(n) ? 1 : 0;
                   });

    std::uint64_t count = 0;
    for (std::uint64_t n = 1; n <= window; ++n) count += in[n];
    WindowScanResult r;
    r.window = window;
    r.range_max = range_max;
    r.min_count = r.max_count = count;
    r.argmin_start = r.argmax_start = 0;
    for (std::uint64_t start = 1; start + window <= range_max; ++start) {
        count += in[start + window];
        count -= in[start];
        if (count < r.min_count) {
            r.min_count = count;
            r.argmin_start = start;
        }
        if (count > r.max_count) {
            r.max_count = count;
            r.argmax_start = start;
        }
    }
    return r;
}

double exponential_estimate(std::uint64_t count, std::uint64_t n_max) {
    if (count == 0)
        throw std::invalid_argument(
            "exponential_estimate: undefined for count 0");
    if (n_max < 2)
        throw std::invalid_argument("exponential_estimate: n_max must be >= 2");
    return std::log(static_cast<double>(count)) /
           std::log(static_cast<double>(n_max));
}

DensityReport density_report(std::string set_id, const Predicate& pred,
                             std::uint64_t n_max) {
    DensityReport rep;
    rep.set = std::move(set_id);
    rep.n_max = n_max;
    rep.count = count_members(pred, n_max);
    rep.asymptotic_estimate =
        static_cast<double>(rep.count) / static_cast<double>(n_max);
    if (rep.count >= 1 && n_max >= 2)
        rep.exponential_estimate = exponential_estimate(rep.count, n_max);
    return rep;
}

std::uint64_t excluded_e3_count(std::uint64_t n_max) {
    if (n_max == 0)
        throw std::invalid_argument("excluded_e3_count: n_max must be >= 1");
    std::vector<std::uint64_t> powers;
    for (std::uint64_t b = 2;; ++b) {
        auto fourth = checked_pow(b, 4, n_max);
        if (!fourth) break;
        powers.push_back(*fourth);
        for (std::uint32_t k = 5;; ++k) {
            auto v = checked_pow(b, k, n_max);
            if (!v) break;
            powers.push_back(*v);
        }
    }
    std::sort(powers.begin(), powers.end());
    powers.erase(std::unique(powers.begin(), powers.end()), powers.end());

    std::uint64_t excluded = 0;
    for (std::uint64_t v : powers) {
        // exponent gcd of a perfect power = largest k with v = base^k.
        auto roots = power_roots(v);
        std::uint64_t g = roots.back().k;
        if (!member_g3(g)) ++excluded;
    }
    return excluded;
}

AnalyticDensity analytic_density_g3_info(double eps) {
    check_eps(eps);
    AnalyticDensity result;
    result.eps = eps;
    result.route = "zeta-product";
    double product = 1.0 / zeta(2, eps / 8).value;
    std::uint32_t factors = 1;
    for (std::uint32_t e = 3;; e *= 3) {
        double f = zeta(e, eps / 8).value / zeta(2 * e, eps / 8).value;
        product *= f;
        ++factors;
        if (std::fabs(f - 1.0) < eps / 4) break;
        if (e > 100)
            throw std::logic_error("analytic_density_g3: no convergence");
    }
    result.value = product;
    result.factor_count = factors;
    result.tail_bound = eps / 4;
    return result;
}

double analytic_density_g3(double eps) {
    return analytic_density_g3_info(eps).value;
}

AnalyticDensity analytic_density_s_info(std::uint32_t level, double eps) {
    if (level < 2 || level > 4)
        throw std::domain_error(
            "analytic_density_s: only levels 2..4 are supported");
    check_eps(eps);

    // Exponents above 63 contribute below 1e-19 per prime; 64 is also all a
    // 64-bit integer can carry, so the two truncations coincide.
    const std::vector<std::uint64_t> excluded =
        excluded_exponents(level - 1, 64);
    const double e_min = static_cast<double>(excluded.front());

    // Tail over primes > P: each factor deficit is below 2 p^-e_min, so the
    // product loses at most T = 2 P^(1-e_min) / (e_min - 1).
    double p_needed =
        std::pow(4.0 / ((e_min - 1.0) * eps), 1.0 / (e_min - 1.0));
    std::uint64_t prime_bound =
        std::max<std::uint64_t>(100, static_cast<std::uint64_t>(p_needed) + 1);
    if (prime_bound > kMaxEulerPrimeBound)
        throw std::domain_error("analytic_density_s: eps too small");

    double product = 1.0;
    for (std::uint64_t p : primes_up_to(prime_bound)) {
        const double pd = static_cast<double>(p);
        double sum = 0.0;
        for (std::uint64_t b : excluded) {
            double term = std::pow(pd, -static_cast<double>(b));
            if (term < 1e-19) break;
            sum += term;
        }
        product *= 1.0 - (1.0 - 1.0 / pd) * sum;
    }
    const double tail =
        2.0 * std::pow(static_cast<double>(prime_bound), 1.0 - e_min) /
        (e_min - 1.0);

    AnalyticDensity result;
    result.eps = eps;
    result.route = "euler-product";
    result.prime_bound = prime_bound;
    result.factor_count = static_cast<std::uint32_t>(excluded.size());
    result.tail_bound = tail;
    result.value = product * (1.0 - tail / 2.0);
    return result;
}

double analytic_density_s(std::uint32_t level, double eps) {
    return analytic_density_s_info(level, eps).value;
}

double t_i_density(std::uint32_t i) {
    if (i == 0) throw std::invalid_argument("t_i_density: i must be >= 1");
    double product = 1.0;
    for (std::uint64_t p : nth_primes(i)) {
        const double pd = static_cast<double>(p);
        double sum = 0.0;
        for (std::uint64_t b = 2; b <= i; ++b) {
            if (member_a3(b)) continue;
            double pb = std::pow(pd, -static_cast<double>(b));
            if (pb < 1e-19) break;
            sum += pb - pb / pd;
        }
        product *= 1.0 - sum;
    }
    return product;
}

double r_i_density(std::uint32_t i) {
    if (i == 0) throw std::invalid_argument("r_i_density: i must be >= 1");
    double product = 1.0;
    for (std::uint64_t p : nth_primes(i)) {
        const double pd = static_cast<double>(p);
        product *= 1.0 - 1.0 / pd + 1.0 / (pd * pd);
    }
    return product;
}

double kfree_density(std::uint32_t k, double eps) {
    if (k < 2) throw std::invalid_argument("kfree_density: k must be >= 2");
    check_eps(eps);
    // |1/v - 1/zeta| = |zeta - v| / (v zeta) <= eps/2 since both exceed 1.
    return 1.0 / zeta(k, eps / 2).value;
}

double b_m_density(std::uint32_t m, double eps) {
    if (m < 2) throw std::invalid_argument("b_m_density: m must be >= 2");
    check_eps(eps);
    return 1.0 / zeta(m + 1, eps / 4).value - 1.0 / zeta(m, eps / 4).value;
}

}  // namespace proglab
