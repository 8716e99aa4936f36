#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace proglab {

struct Congruence {
    mpz_class residue;  // 0 <= residue < modulus
    mpz_class modulus;  // >= 2
};

// Moduli must be pairwise coprime (checked by crt_solve).
using CongruenceSystem = std::vector<Congruence>;

/// Least nonnegative solution of the system; throws std::invalid_argument
/// naming the offending pair when two moduli share a factor.
mpz_class crt_solve(const CongruenceSystem& system);

// A run of `length` consecutive integers a, a+1, ..., a+length-1, the j-th
// exactly divisible by p_{j+1}^m (1-based prime indexing, p_1 = 2), which
// excludes all of them from the level's set.
struct CrtWitness {
    mpz_class a;
    std::uint32_t length = 0;
    std::uint32_t level = 0;
    std::uint32_t excluded_exponent = 0;  // m
    mpz_class moduli_product;
    CongruenceSystem system;
};

/// Gap witness for Rankin's set: a + j == p_{j+1}^2 (mod p_{j+1}^3).
CrtWitness rankin_gap_witness(std::uint32_t length);

// Gap witness for the level's iterated set, with m the first excluded
// element one level down: a + j == p_{j+1}^m (mod p_{j+1}^(m+1)).
// Supported for levels 2..4 (level 5 would need m = 65536).
CrtWitness s_level_gap_witness(std::uint32_t level, std::uint32_t length);

// Checks p_{j+1}^m | (a + j) and p_{j+1}^(m+1) does not divide (a + j) for
// every j, by exact division only; a + j is never factorized.
bool verify_witness(const CrtWitness& witness);

}  // namespace proglab
