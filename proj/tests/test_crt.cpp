#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>
#include <string>

#include "proglab/crt.hpp"
#include "proglab/families.hpp"
#include "proglab/numtheory.hpp"

using namespace proglab;

TEST_CASE("crt_solve examples") {
    CHECK(crt_solve({{4, 8}}) == 4);
    CHECK(crt_solve({{0, 3}, {0, 5}}) == 0);

    // brute-force oracle over residues 0..215
    mpz_class expected = -1;
    for (int a = 0; a < 216; ++a) {
        if (a % 8 == 4 && a % 27 == 8) {
            expected = a;
            break;
        }
    }
    REQUIRE(expected == 116);
    CHECK(crt_solve({{4, 8}, {8, 27}}) == expected);
}

TEST_CASE("crt_solve input validation") {
    CHECK_THROWS_AS(crt_solve({}), std::invalid_argument);
    CHECK_THROWS_AS(crt_solve({{9, 8}}), std::invalid_argument);
    CHECK_THROWS_AS(crt_solve({{0, 1}}), std::invalid_argument);
    try {
        crt_solve({{1, 6}, {2, 5}, {3, 9}});
        FAIL("expected non-coprime rejection");
    } catch (const std::invalid_argument& e) {
        std::string message = e.what();
        CHECK(message.find("0") != std::string::npos);
        CHECK(message.find("2") != std::string::npos);
    }
}

TEST_CASE("crt_solve solution is unique modulo the product") {
    CongruenceSystem system{{4, 8}, {8, 27}, {3, 5}};
    mpz_class a = crt_solve(system);
    mpz_class product = 8 * 27 * 5;
    CHECK(a < product);
    auto satisfies = [&](const mpz_class& value) {
        for (const auto& c : system) {
            mpz_class r;
            mpz_mod(r.get_mpz_t(), value.get_mpz_t(), c.modulus.get_mpz_t());
            if (r != c.residue) return false;
        }
        return true;
    };
    CHECK(satisfies(a));
    CHECK(satisfies(a + product));
    for (int delta = 1; delta <= 50; ++delta) {
        if (a - delta < 0) break;
        CHECK(!satisfies(a - delta));
    }
}

TEST_CASE("rankin_gap_witness") {
    auto w1 = rankin_gap_witness(1);
    CHECK(w1.a == 4);
    CHECK(w1.excluded_exponent == 2);
    CHECK(w1.level == 2);

    auto w2 = rankin_gap_witness(2);
    CHECK(w2.a == 116);
    CHECK(w2.moduli_product == 216);
    // 116 = 2^2 * 29 and 117 = 3^2 * 13: both excluded from Rankin's set
    CHECK(!member_g3(116));
    CHECK(!member_g3(117));

    for (std::uint32_t l = 1; l <= 12; ++l) {
        auto w = rankin_gap_witness(l);
        CHECK(verify_witness(w));
        CHECK(w.a > 0);
        CHECK(w.a < w.moduli_product);
        mpz_class cubes = 1;
        for (auto p : nth_primes(l)) {
            mpz_class pm(static_cast<unsigned long>(p));
            cubes *= pm * pm * pm;
        }
        CHECK(w.moduli_product == cubes);
    }
    CHECK_THROWS_AS(rankin_gap_witness(0), std::invalid_argument);
}

TEST_CASE("tampered witnesses fail verification") {
    auto w = rankin_gap_witness(2);
    w.a += 1;
    CHECK(!verify_witness(w));
    auto w2 = rankin_gap_witness(3);
    w2.a += w2.moduli_product / 2;
    CHECK(!verify_witness(w2));
}

TEST_CASE("s_level_gap_witness") {
    auto level2 = s_level_gap_witness(2, 2);
    CHECK(level2.a == rankin_gap_witness(2).a);
    CHECK(level2.excluded_exponent == 2);

    auto level3 = s_level_gap_witness(3, 1);
    CHECK(level3.excluded_exponent == 4);
    CHECK(level3.a == 16);  // least a with a == 2^4 (mod 2^5)

    auto level3_3 = s_level_gap_witness(3, 3);
    CHECK(level3_3.excluded_exponent == 4);
    CHECK(verify_witness(level3_3));

    auto level4 = s_level_gap_witness(4, 1);
    CHECK(level4.excluded_exponent == 16);
    CHECK(level4.a == 65536);
    CHECK(verify_witness(level4));

    CHECK_THROWS_AS(s_level_gap_witness(1, 2), std::domain_error);
    CHECK_THROWS_AS(s_level_gap_witness(5, 2), std::domain_error);
}

TEST_CASE("witness members are excluded from the target set") {
    // every integer exactly divisible by 2^4 fails level 3
    for (std::uint64_t n = 16; n <= 100'000; n += 16)
        if ((n / 16) % 2 != 0) REQUIRE(!member_s(n, 3));

    // small witnesses land inside the 64-bit range: check exclusion directly
    auto w = s_level_gap_witness(3, 2);
    REQUIRE(w.a.fits_ulong_p());
    std::uint64_t a = w.a.get_ui();
    CHECK(!member_s(a, 3));
    CHECK(!member_s(a + 1, 3));

    auto rankin3 = rankin_gap_witness(3);
    REQUIRE(rankin3.a.fits_ulong_p());
    std::uint64_t ra = rankin3.a.get_ui();
    for (std::uint64_t j = 0; j < 3; ++j) CHECK(!member_g3(ra + j));
}
