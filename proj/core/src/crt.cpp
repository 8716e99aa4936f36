#include "proglab/crt.hpp"

#include <stdexcept>
#include <string>

#include "proglab/families.hpp"
#include "proglab/numtheory.hpp"

namespace proglab {

namespace {

constexpr std::uint32_t kMaxGapLength = 4096;

mpz_class mpz_pow(const mpz_class& base, unsigned long exp) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

CrtWitness build_witness(std::uint32_t level, std::uint32_t m,
                         std::uint32_t length) {
    if (length == 0)
        throw std::invalid_argument("gap witness: length must be >= 1");
    if (length > kMaxGapLength)
        throw std::domain_error("gap witness: length exceeds working range");

    CrtWitness w;
    w.length = length;
    w.level = level;
    w.excluded_exponent = m;
    w.moduli_product = 1;

    const auto primes = nth_primes(length);
    for (std::uint32_t j = 0; j < length; ++j) {
        mpz_class p = static_cast<unsigned long>(primes[j]);
        mpz_class modulus = mpz_pow(p, m + 1);
        mpz_class residue = mpz_pow(p, m) - j;
        mpz_mod(residue.get_mpz_t(), residue.get_mpz_t(),
                modulus.get_mpz_t());
        w.system.push_back({residue, modulus});
        w.moduli_product *= modulus;
    }
    w.a = crt_solve(w.system);
    return w;
}

}  // namespace

mpz_class crt_solve(const CongruenceSystem& system) {
    if (system.empty())
        throw std::invalid_argument("crt_solve: empty system");
    for (std::size_t i = 0; i < system.size(); ++i) {
        if (system[i].modulus < 2)
            throw std::invalid_argument("crt_solve: modulus must be >= 2");
        if (system[i].residue < 0 || system[i].residue >= system[i].modulus)
            throw std::invalid_argument("crt_solve: residue out of range");
        for (std::size_t j = i + 1; j < system.size(); ++j) {
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), system[i].modulus.get_mpz_t(),
                    system[j].modulus.get_mpz_t());
            if (g != 1)
                throw std::invalid_argument(
                    "crt_solve: moduli not coprime at indices " +
                    std::to_string(i) + " and " + std::to_string(j) +
                    " (gcd " + g.get_str() + ")");
        }
    }

    mpz_class r = system[0].residue;
    mpz_class modulus = system[0].modulus;
    for (std::size_t i = 1; i < system.size(); ++i) {
        // r + modulus * t == residue_i (mod modulus_i)
        mpz_class inv;
        if (mpz_invert(inv.get_mpz_t(), modulus.get_mpz_t(),
                       system[i].modulus.get_mpz_t()) == 0)
            throw std::logic_error("crt_solve: inverse does not exist");
        mpz_class t = (system[i].residue - r) * inv;
        mpz_mod(t.get_mpz_t(), t.get_mpz_t(), system[i].modulus.get_mpz_t());
        r += modulus * t;
        modulus *= system[i].modulus;
    }
    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), modulus.get_mpz_t());
    return r;
}

CrtWitness rankin_gap_witness(std::uint32_t length) {
    return build_witness(2, 2, length);
}

CrtWitness s_level_gap_witness(std::uint32_t level, std::uint32_t length) {
    if (level < 2 || level > 4)
        throw std::domain_error(
            "s_level_gap_witness: only levels 2..4 are supported");
    const std::uint32_t m =
        static_cast<std::uint32_t>(first_excluded(level - 1));
    return build_witness(level, m, length);
}

bool verify_witness(const CrtWitness& witness) {
    if (witness.length == 0) return false;
    const auto primes = nth_primes(witness.length);
    for (std::uint32_t j = 0; j < witness.length; ++j) {
        mpz_class p = static_cast<unsigned long>(primes[j]);
        mpz_class pm = mpz_pow(p, witness.excluded_exponent);
        mpz_class value = witness.a + j;
        if (!mpz_divisible_p(value.get_mpz_t(), pm.get_mpz_t()))
            return false;
        pm *= p;
        if (mpz_divisible_p(value.get_mpz_t(), pm.get_mpz_t()))
            return false;
    }
    return true;
}

}  // namespace proglab
