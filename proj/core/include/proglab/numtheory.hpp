#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace proglab {

// One (prime, exponent) entry of a factorization, exponent >= 1.
struct PrimePower {
    std::uint64_t prime = 0;
    std::uint32_t exponent = 0;
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Prime factorization ordered by strictly increasing prime.
// The empty vector represents 1.
using Factorization = std::vector<PrimePower>;

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

/// First k primes, ascending.
std::vector<std::uint64_t> nth_primes(std::size_t k);

// Bound of the smallest-prime-factor sieve backing factorize().
// May only be changed before the sieve is first used. Default 10^7.
void configure_factor_sieve(std::uint64_t bound);
std::uint64_t factor_sieve_bound();

/// Factorize any 64-bit n >= 1. Throws std::invalid_argument for n = 0.
Factorization factorize(std::uint64_t n);

/// Product of prime^exponent; inverse of factorize on its image.
std::uint64_t factorization_value(const Factorization& f);

bool is_prime(std::uint64_t n);

/// Base-3 digits, least significant first. ternary_digits(0) == {0}.
std::vector<std::uint8_t> ternary_digits(std::uint64_t n);

/// gcd of the exponents of n's factorization. Requires n >= 2.
std::uint32_t exponent_gcd(std::uint64_t n);

/// floor(n^(1/k)) for k >= 1.
std::uint64_t iroot(std::uint64_t n, unsigned k);

/// base^k if it is <= limit, nullopt otherwise (overflow-safe).
std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint32_t k,
                                         std::uint64_t limit);

struct PowerRoot {
    std::uint64_t base = 0;  // >= 2
    std::uint32_t k = 0;     // >= 2, ascending in the result list
    friend bool operator==(const PowerRoot&, const PowerRoot&) = default;
};

/// All exact representations n = base^k with k >= 2, ordered by k.
/// Empty iff n is not a perfect power. Requires n >= 2.
std::vector<PowerRoot> power_roots(std::uint64_t n);

/// Every prime dividing n divides it at least twice. True for n = 1.
bool is_squareful(std::uint64_t n);

/// All exponents of n are < k. Requires k >= 2. True for n = 1.
bool is_k_free(std::uint64_t n, std::uint32_t k);

// zeta(s) bracketed by a partial sum of `terms` terms and the integral
// tail bound: value - error_bound <= zeta(s) <= value + error_bound.
struct ZetaValue {
    std::uint32_t s = 0;
    double value = 0.0;
    double error_bound = 0.0;
    std::uint64_t terms = 0;
};

/// Certified zeta evaluation for integer s >= 2 with error_bound <= eps.
/// eps below 1e-13 is refused (double precision floor).
ZetaValue zeta(std::uint32_t s, double eps = 1e-12);

}  // namespace proglab
