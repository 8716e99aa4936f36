// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion is self-contained and pins its tolerance in code.

#include <chrono>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <vector>

#include "proglab/crt.hpp"
#include "proglab/density.hpp"
#include "proglab/families.hpp"
#include "proglab/greedy.hpp"
#include "proglab/intervals.hpp"
#include "proglab/numtheory.hpp"

using namespace proglab;

namespace {

int failures = 0;

void report(int id, const char* name, bool pass, const char* detail = "") {
    std::printf("[%s] criterion %2d: %s%s%s\n", pass ? "PASS" : "FAIL", id,
                name, detail[0] ? " -- " : "", detail);
    if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
}

// 1. greedy_set equals the closed-form membership exactly on [start, 1e5].
void criterion_1() {
    auto start = std::chrono::steady_clock::now();
    const std::uint64_t limit = 100'000;
    bool ok = true;

    auto a = greedy_set(Progression::Translation, limit);
    for (std::uint64_t n = 0; n <= limit && ok; ++n)
        if (a.contains(n) != member_a3(n)) ok = false;

    auto g = greedy_set(Progression::Dilation, limit);
    for (std::uint64_t n = 1; n <= limit && ok; ++n)
        if (g.contains(n) != member_g3(n)) ok = false;

    auto e = greedy_set(Progression::Exponentiation, limit);
    for (std::uint64_t n = 1; n <= limit && ok; ++n)
        if (e.contains(n) != member_e3(n)) ok = false;

    char detail[96];
    std::snprintf(detail, sizeof detail, "three families at 1e5 in %.1fs",
                  seconds_since(start));
    report(1, "greedy oracle equivalence", ok, detail);
}

// 2. Table reproduction: 0.719745 / 0.957964 / 0.999992 within 1e-5, and
// the two G3 routes agree within 2e-6.
void criterion_2() {
    double s2 = analytic_density_s(2, 1e-5);
    double s3 = analytic_density_s(3, 1e-5);
    double s4 = analytic_density_s(4, 1e-5);
    double g3 = analytic_density_g3(1e-6);
    double s2_fine = analytic_density_s(2, 1e-6);
    bool ok = std::fabs(s2 - 0.719745) <= 1e-5 &&
              std::fabs(s3 - 0.957964) <= 1e-5 &&
              std::fabs(s4 - 0.999992) <= 1e-5 &&
              std::fabs(g3 - s2_fine) <= 2e-6;
    char detail[128];
    std::snprintf(detail, sizeof detail,
                  "s2=%.6f s3=%.6f s4=%.6f |g3-s2|=%.1e", s2, s3, s4,
                  std::fabs(g3 - s2_fine));
    report(2, "analytic density table", ok, detail);
}

// 3. Empirical counts at 1e6 against the analytic values, within 0.005.
void criterion_3() {
    const std::uint64_t N = 1'000'000;
    double g3 = static_cast<double>(count_members(
                    [](std::uint64_t n) { return member_g3(n); }, N)) / N;
    double s3 = static_cast<double>(count_members(
                    [](std::uint64_t n) { return member_s(n, 3); }, N)) / N;
    bool ok = std::fabs(g3 - 0.719745) <= 0.005 &&
              std::fabs(s3 - 0.957964) <= 0.005;
    char detail[96];
    std::snprintf(detail, sizeof detail, "g3=%.6f s3=%.6f", g3, s3);
    report(3, "empirical vs analytic at 1e6", ok, detail);
}

// 4. Window bound 7/8 for windows 8k, k = 1..10, and the 4 mod 8 exclusion.
void criterion_4() {
    const std::uint64_t N = 1'000'000;
    std::vector<bool> g3(N + 1, false);
    for (std::uint64_t n = 1; n <= N; ++n) g3[n] = member_g3(n);
    auto pred = [&g3](std::uint64_t n) { return g3[n]; };

    bool ok = true;
    double worst = 0.0;
    for (std::uint64_t k = 1; k <= 10; ++k) {
        auto scan = uniform_scan(pred, 8 * k, N);
        double ratio = static_cast<double>(scan.max_count) /
                       static_cast<double>(8 * k);
        worst = std::max(worst, ratio);
        if (ratio > 7.0 / 8.0) ok = false;
    }
    for (std::uint64_t n = 4; n <= N; n += 8)
        if (g3[n]) ok = false;
    char detail[96];
    std::snprintf(detail, sizeof detail, "max window ratio %.6f <= 0.875",
                  worst);
    report(4, "upper uniform bound 7/8", ok, detail);
}

// 5. T_i product: nonincreasing, and within 1e-3 of d(G3) at i = 30.
void criterion_5() {
    bool monotone = true;
    double previous = 1.0 + 1e-12;
    for (std::uint32_t i = 1; i <= 30; ++i) {
        double t = t_i_density(i);
        if (t > previous) monotone = false;
        previous = t;
    }
    double gap = t_i_density(30) - analytic_density_g3(1e-6);
    bool ok = monotone && gap >= 0.0 && gap < 1e-3;
    char detail[64];
    std::snprintf(detail, sizeof detail, "t30 - d = %.3e", gap);
    report(5, "T_i convergence to d(G3)", ok, detail);
}

// 6. R_i product strictly decreasing, below 0.2 at i = 100; squareful count
// at 1e6 is between 1 and 5 times sqrt(1e6).
void criterion_6() {
    bool decreasing = true;
    double previous = 1.0;
    for (std::uint32_t i = 1; i <= 100; ++i) {
        double r = r_i_density(i);
        if (r >= previous) decreasing = false;
        previous = r;
    }
    double r100 = r_i_density(100);
    std::uint64_t squareful = count_members(
        [](std::uint64_t n) { return is_squareful(n); }, 1'000'000);
    double normalized = static_cast<double>(squareful) / 1000.0;
    bool ok = decreasing && r100 < 0.2 && normalized >= 1.0 &&
              normalized <= 5.0;
    char detail[96];
    std::snprintf(detail, sizeof detail,
                  "r100=%.6f, squareful/sqrt(N)=%.3f", r100, normalized);
    report(6, "R_i decay and squareful count", ok, detail);
}

// 7. Exponential density of the E3 complement: estimate within 0.03 of 1/4
// at 1e8; closed-form enumeration matches the brute scan at 1e4.
void criterion_7() {
    std::uint64_t count8 = excluded_e3_count(100'000'000);
    double estimate = exponential_estimate(count8, 100'000'000);
    std::uint64_t brute = 0;
    for (std::uint64_t n = 1; n <= 10'000; ++n)
        if (!member_e3(n)) ++brute;
    bool ok = std::fabs(estimate - 0.25) <= 0.03 && brute == 8 &&
              excluded_e3_count(10'000) == 8;
    char detail[96];
    std::snprintf(detail, sizeof detail,
                  "count(1e8)=%" PRIu64 ", estimate=%.4f", count8, estimate);
    report(7, "exponential density 1/4", ok, detail);
}

// 8. Block S_N: 3523 integers at N = 4320, free at 4320 and 432000.
void criterion_8() {
    auto start = std::chrono::steady_clock::now();
    bool ok = integer_count(s_block(4320)) == 3523 &&
              !verify_block_free(4320).has_value() &&
              !verify_block_free(432'000).has_value();
    char detail[64];
    std::snprintf(detail, sizeof detail, "in %.1fs", seconds_since(start));
    report(8, "interval block count and freeness", ok, detail);
}

// 9. CRT witnesses: Rankin l = 1..12 verify, a = 116 at l = 2 matches the
// brute-force residue search, level-3 witness uses m = 4.
void criterion_9() {
    bool ok = true;
    for (std::uint32_t l = 1; l <= 12; ++l)
        if (!verify_witness(rankin_gap_witness(l))) ok = false;

    mpz_class brute = -1;
    for (int a = 0; a < 216; ++a)
        if (a % 8 == 4 && a % 27 == 8) {
            brute = a;
            break;
        }
    if (rankin_gap_witness(2).a != brute || brute != 116) ok = false;

    auto level3 = s_level_gap_witness(3, 3);
    if (level3.excluded_exponent != 4 || !verify_witness(level3)) ok = false;
    report(9, "CRT gap witnesses", ok, "rankin l=1..12, a(2)=116, m(3)=4");
}

// 10. Level-4 threshold: first exclusion at 65536, everything below is in.
void criterion_10() {
    bool ok = first_excluded(4) == 65536;
    for (std::uint64_t n = 1; n < 65536 && ok; ++n)
        if (!member_s(n, 4)) ok = false;
    report(10, "S4 threshold 65536", ok);
}

// 11. k-free and max-exponent densities: analytic values match 1e6 counts
// within 0.005; B_m positive through m = 20.
void criterion_11() {
    const std::uint64_t N = 1'000'000;
    // one factorization pass: largest exponent per n
    std::vector<std::uint32_t> max_exponent(N + 1, 0);
    for (std::uint64_t n = 2; n <= N; ++n) {
        std::uint32_t top = 0;
        for (const auto& pp : factorize(n))
            top = std::max(top, pp.exponent);
        max_exponent[n] = top;
    }
    bool ok = true;
    char detail[160];
    double worst = 0.0;
    for (std::uint32_t k = 2; k <= 4; ++k) {
        std::uint64_t count = 1;  // n = 1 is k-free
        for (std::uint64_t n = 2; n <= N; ++n)
            if (max_exponent[n] < k) ++count;
        double gap = std::fabs(static_cast<double>(count) / N -
                               kfree_density(k, 1e-9));
        worst = std::max(worst, gap);
        if (gap > 0.005) ok = false;
    }
    for (std::uint32_t m = 2; m <= 20; ++m)
        if (!(b_m_density(m, 1e-9) > 0.0)) ok = false;
    for (std::uint32_t m = 2; m <= 3; ++m) {
        std::uint64_t count = 0;
        for (std::uint64_t n = 2; n <= N; ++n)
            if (max_exponent[n] == m) ++count;
        double gap = std::fabs(static_cast<double>(count) / N -
                               b_m_density(m, 1e-9));
        worst = std::max(worst, gap);
        if (gap > 0.005) ok = false;
    }
    std::snprintf(detail, sizeof detail, "worst |empirical-analytic| = %.2e",
                  worst);
    report(11, "k-free and B_m densities", ok, detail);
}

}  // namespace

int main() {
    auto start = std::chrono::steady_clock::now();
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    std::printf("%d of 11 criteria passed in %.1fs\n", 11 - failures,
                seconds_since(start));
    return failures == 0 ? 0 : 1;
}
