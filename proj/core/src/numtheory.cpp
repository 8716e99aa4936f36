#include "proglab/numtheory.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace proglab {

namespace {

std::atomic<std::uint64_t> g_sieve_bound{10'000'000};
std::atomic<bool> g_sieve_built{false};

// Smallest prime factor for every n <= bound, built once, read-only after.
const std::vector<std::uint32_t>& spf_sieve() {
    static const std::vector<std::uint32_t> sieve = [] {
        g_sieve_built.store(true);
        const std::uint64_t bound = g_sieve_bound.load();
        std::vector<std::uint32_t> s(bound + 1, 0);
        for (std::uint64_t i = 2; i <= bound; ++i) {
            if (s[i] == 0) {
                for (std::uint64_t j = i; j <= bound; j += i)
                    if (s[j] == 0) s[j] = static_cast<std::uint32_t>(i);
            }
        }
        return s;
    }();
    return sieve;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

bool miller_rabin(std::uint64_t n, std::uint64_t a) {
    if (a % n == 0) return true;
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < r; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

// Brent's variant of Pollard rho; n must be odd composite, not a prime power
// guard is not needed because the caller retries with increasing c.
std::uint64_t pollard_brent(std::uint64_t n) {
    if (n % 2 == 0) return 2;
    for (std::uint64_t c = 1;; ++c) {
        auto f = [n, c](std::uint64_t x) {
            return (mulmod(x, x, n) + c) % n;
        };
        std::uint64_t x = 2, y = 2, d = 1;
        std::uint64_t power = 1, lam = 1;
        while (d == 1) {
            if (power == lam) {
                x = y;
                power *= 2;
                lam = 0;
            }
            y = f(y);
            ++lam;
            d = std::gcd(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
    }
}

void factor_large(std::uint64_t n, std::vector<std::uint64_t>& primes_out) {
    if (n == 1) return;
    if (is_prime(n)) {
        primes_out.push_back(n);
        return;
    }
    std::uint64_t d = pollard_brent(n);
    factor_large(d, primes_out);
    factor_large(n / d, primes_out);
}

}  // namespace

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
    std::vector<std::uint64_t> primes;
    if (bound < 2) return primes;
    std::vector<bool> composite(bound + 1, false);
    for (std::uint64_t i = 2; i * i <= bound; ++i) {
        if (!composite[i]) {
            for (std::uint64_t j = i * i; j <= bound; j += i)
                composite[j] = true;
        }
    }
    for (std::uint64_t i = 2; i <= bound; ++i)
        if (!composite[i]) primes.push_back(i);
    return primes;
}

std::vector<std::uint64_t> nth_primes(std::size_t k) {
    if (k == 0) return {};
    // p_k < k (ln k + ln ln k) for k >= 6.
    double bound = 15.0;
    if (k >= 6) {
        double lk = std::log(static_cast<double>(k));
        bound = static_cast<double>(k) * (lk + std::log(lk)) * 1.2;
    }
    for (;;) {
        auto primes = primes_up_to(static_cast<std::uint64_t>(bound));
        if (primes.size() >= k) {
            primes.resize(k);
            return primes;
        }
        bound *= 2;
    }
}

void configure_factor_sieve(std::uint64_t bound) {
    if (g_sieve_built.load())
        throw std::logic_error(
            "configure_factor_sieve: sieve already built");
    if (bound < 3 || bound > (1ull << 32))
        throw std::invalid_argument(
            "configure_factor_sieve: bound out of range");
    g_sieve_bound.store(bound);
}

std::uint64_t factor_sieve_bound() { return g_sieve_bound.load(); }

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                            19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    // Deterministic Miller-Rabin base set for the full 64-bit range.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                            19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (!miller_rabin(n, a)) return false;
    }
    return true;
}

Factorization factorize(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("factorize: n must be >= 1");
    Factorization out;
    if (n == 1) return out;

    const auto& spf = spf_sieve();
    if (n < spf.size()) {
        while (n > 1) {
            std::uint64_t p = spf[n];
            std::uint32_t e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            out.push_back({p, e});
        }
        return out;
    }

    // Strip small primes by trial division, then split the rough cofactor
    // with Miller-Rabin / Pollard rho (a 64-bit cofactor free of factors
    // <= 10^5 can still be a semiprime, which trial division cannot reach).
    for (std::uint64_t p = 2; p <= 100'000 && p * p <= n; p = (p == 2) ? 3 : p + 2) {
        if (n % p == 0) {
            std::uint32_t e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            out.push_back({p, e});
        }
    }
    if (n > 1) {
        std::vector<std::uint64_t> rough;
        factor_large(n, rough);
        std::sort(rough.begin(), rough.end());
        for (std::size_t i = 0; i < rough.size();) {
            std::size_t j = i;
            while (j < rough.size() && rough[j] == rough[i]) ++j;
            out.push_back({rough[i], static_cast<std::uint32_t>(j - i)});
            i = j;
        }
    }
    std::sort(out.begin(), out.end(),
              [](const PrimePower& a, const PrimePower& b) {
                  return a.prime < b.prime;
              });
    return out;
}

std::uint64_t factorization_value(const Factorization& f) {
    std::uint64_t n = 1;
    for (const auto& pp : f)
        for (std::uint32_t i = 0; i < pp.exponent; ++i) n *= pp.prime;
    return n;
}

std::vector<std::uint8_t> ternary_digits(std::uint64_t n) {
    if (n == 0) return {0};
    std::vector<std::uint8_t> digits;
    while (n > 0) {
        digits.push_back(static_cast<std::uint8_t>(n % 3));
        n /= 3;
    }
    return digits;
}

std::uint32_t exponent_gcd(std::uint64_t n) {
    if (n < 2)
        throw std::invalid_argument("exponent_gcd: n must be >= 2");
    std::uint32_t g = 0;
    for (const auto& pp : factorize(n)) g = std::gcd(g, pp.exponent);
    return g;
}

std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint32_t k,
                                         std::uint64_t limit) {
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        if (base != 0 && r > limit / base) return std::nullopt;
        r *= base;
        if (r > limit) return std::nullopt;
    }
    return r;
}

std::uint64_t iroot(std::uint64_t n, unsigned k) {
    if (k == 0) throw std::invalid_argument("iroot: k must be >= 1");
    if (k == 1 || n < 2) return n;
    if (k >= 64) return 1;
    auto r = static_cast<std::uint64_t>(
        std::pow(static_cast<double>(n), 1.0 / k));
    // std::pow is only an estimate; fix up by +-2.
    r = (r > 2) ? r - 2 : 1;
    while (checked_pow(r + 1, k, n).has_value()) ++r;
    return r;
}

std::vector<PowerRoot> power_roots(std::uint64_t n) {
    if (n < 2)
        throw std::invalid_argument("power_roots: n must be >= 2");
    std::vector<PowerRoot> roots;
    for (std::uint32_t k = 2; k < 64 && (1ull << k) <= n; ++k) {
        std::uint64_t r = iroot(n, k);
        if (r < 2) break;
        if (checked_pow(r, k, n) == n) roots.push_back({r, k});
    }
    return roots;
}

bool is_squareful(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("is_squareful: n must be >= 1");
    for (const auto& pp : factorize(n))
        if (pp.exponent < 2) return false;
    return true;
}

bool is_k_free(std::uint64_t n, std::uint32_t k) {
    if (n == 0) throw std::invalid_argument("is_k_free: n must be >= 1");
    if (k < 2) throw std::invalid_argument("is_k_free: k must be >= 2");
    for (const auto& pp : factorize(n))
        if (pp.exponent >= k) return false;
    return true;
}

ZetaValue zeta(std::uint32_t s, double eps) {
    if (s < 2) throw std::domain_error("zeta: s must be >= 2");
    if (!(eps > 0)) throw std::invalid_argument("zeta: eps must be > 0");
    if (eps < 1e-13)
        throw std::domain_error("zeta: eps below 1e-13 not certifiable in double");

    // Sum rounding: Kahan keeps the running compensation at a few ulps and
    // each pow() term is good to ~1 ulp, so 4e-15 absolute covers it.
    const double round_slop = 4e-15;
    const double target = eps - round_slop;
    const double sd = static_cast<double>(s);

    // Tail bracket width ~ K^-s, so K ~ (2*target)^(-1/s) up to slack.
    auto tail_half = [&](std::uint64_t K) {
        double up = std::pow(static_cast<double>(K), 1.0 - sd) / (sd - 1.0);
        double lo = std::pow(static_cast<double>(K + 1), 1.0 - sd) / (sd - 1.0);
        return (up - lo) / 2.0;
    };
    std::uint64_t K = std::max<std::uint64_t>(
        2, static_cast<std::uint64_t>(std::pow(2.0 * target, -1.0 / sd)) + 1);
    while (tail_half(K) > target) K += K / 8 + 1;
    if (K > 500'000'000)
        throw std::domain_error("zeta: eps too small for s");

    // Terms ascend in magnitude when summed from n = K down to 1.
    double sum = 0.0, comp = 0.0;
    for (std::uint64_t n = K; n >= 1; --n) {
        double term = std::pow(static_cast<double>(n), -sd);
        double y = term - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    double up = std::pow(static_cast<double>(K), 1.0 - sd) / (sd - 1.0);
    double lo = std::pow(static_cast<double>(K + 1), 1.0 - sd) / (sd - 1.0);
    ZetaValue z;
    z.s = s;
    z.value = sum + (up + lo) / 2.0;
    z.error_bound = (up - lo) / 2.0 + round_slop;
    z.terms = K;
    return z;
}

}  // namespace proglab
