#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "proglab/families.hpp"
#include "proglab/greedy.hpp"
#include "proglab/numtheory.hpp"

using namespace proglab;

namespace {

std::vector<bool> bitmap_of(const std::vector<std::uint64_t>& members,
                            std::uint64_t limit) {
    std::vector<bool> bits(limit + 1, false);
    for (auto m : members) bits[m] = true;
    return bits;
}

}  // namespace

TEST_CASE("progression_start") {
    CHECK(progression_start(Progression::Translation) == 0);
    CHECK(progression_start(Progression::Dilation) == 1);
    CHECK(progression_start(Progression::Exponentiation) == 1);
}

TEST_CASE("completes_progression witnesses") {
    auto t = bitmap_of({0, 1}, 4);
    auto w = completes_progression(2, t, Progression::Translation);
    REQUIRE(w.has_value());
    CHECK(*w == ProgressionWitness{0, 1});

    auto d = bitmap_of({1, 2, 3}, 4);
    auto wd = completes_progression(4, d, Progression::Dilation);
    REQUIRE(wd.has_value());
    CHECK(*wd == ProgressionWitness{1, 2});

    std::vector<std::uint64_t> upto15;
    for (std::uint64_t n = 1; n <= 15; ++n) upto15.push_back(n);
    auto e = bitmap_of(upto15, 16);
    auto we = completes_progression(16, e, Progression::Exponentiation);
    REQUIRE(we.has_value());
    CHECK(*we == ProgressionWitness{2, 4});

    CHECK(!completes_progression(3, t, Progression::Translation));
    CHECK(!completes_progression(1, d, Progression::Dilation));
    CHECK(!completes_progression(1, e, Progression::Exponentiation));
}

TEST_CASE("greedy_set reproduces the listed prefixes") {
    CHECK(greedy_set(Progression::Translation, 10).members ==
          std::vector<std::uint64_t>{0, 1, 3, 4, 9, 10});
    CHECK(greedy_set(Progression::Dilation, 23).members ==
          std::vector<std::uint64_t>{1, 2, 3, 5, 6, 7, 8, 10, 11, 13, 14, 15,
                                     16, 17, 19, 21, 22, 23});
    std::vector<std::uint64_t> e3_expected;
    for (std::uint64_t n = 1; n <= 17; ++n)
        if (n != 16) e3_expected.push_back(n);
    CHECK(greedy_set(Progression::Exponentiation, 17).members == e3_expected);
}

TEST_CASE("greedy_set bitmap agrees with member list") {
    auto set = greedy_set(Progression::Dilation, 500);
    std::uint64_t count = 0;
    for (std::uint64_t n = 0; n <= set.limit; ++n) {
        if (set.bitmap[n]) ++count;
        CHECK(set.contains(n) == set.bitmap[n]);
    }
    CHECK(count == set.members.size());
    CHECK(!set.contains(501));
}

TEST_CASE("greedy_set argument errors") {
    CHECK_THROWS_AS(greedy_set(Progression::Dilation, 0),
                    std::invalid_argument);
    CHECK_THROWS_AS(greedy_set(Progression::Translation, 2'000'000'000ull),
                    std::domain_error);
}

TEST_CASE("verify_free finds planted progressions") {
    CHECK(!verify_free({0, 1, 3, 4}, Progression::Translation));
    auto d = verify_free({1, 2, 4}, Progression::Dilation);
    REQUIRE(d.has_value());
    CHECK(*d == ProgressionTriple{1, 2, 4});
    auto e = verify_free({2, 4, 16}, Progression::Exponentiation);
    REQUIRE(e.has_value());
    CHECK(*e == ProgressionTriple{2, 4, 16});
    auto t = verify_free({0, 5, 10}, Progression::Translation);
    REQUIRE(t.has_value());
    CHECK(*t == ProgressionTriple{0, 5, 10});
    CHECK(!verify_free({}, Progression::Translation));
}

TEST_CASE("greedy sets are free and maximal at 10^4") {
    for (auto family : {Progression::Translation, Progression::Dilation,
                        Progression::Exponentiation}) {
        auto set = greedy_set(family, 10'000);
        CHECK(!verify_free(set.members, family).has_value());
        CHECK(!verify_maximal(set).has_value());
    }
}

TEST_CASE("a planted gap breaks maximality") {
    GreedySet set;
    set.family = Progression::Translation;
    set.limit = 4;
    set.members = {0, 1};
    set.bitmap = bitmap_of(set.members, set.limit);
    auto counterexample = verify_maximal(set);
    REQUIRE(counterexample.has_value());
    CHECK(*counterexample == 3);
}

TEST_CASE("removing one member from a greedy set breaks maximality") {
    auto set = greedy_set(Progression::Dilation, 200);
    // drop 10: nothing among the remaining members blocks re-inserting it
    set.bitmap[10] = false;
    std::erase(set.members, 10);
    auto counterexample = verify_maximal(set);
    REQUIRE(counterexample.has_value());
    CHECK(*counterexample == 10);
}

TEST_CASE("oracle equivalence with closed forms at 10^4") {
    auto a = greedy_set(Progression::Translation, 10'000);
    for (std::uint64_t n = 0; n <= 10'000; ++n)
        REQUIRE(a.contains(n) == member_a3(n));
    auto g = greedy_set(Progression::Dilation, 10'000);
    for (std::uint64_t n = 1; n <= 10'000; ++n)
        REQUIRE(g.contains(n) == member_g3(n));
    auto e = greedy_set(Progression::Exponentiation, 10'000);
    for (std::uint64_t n = 1; n <= 10'000; ++n)
        REQUIRE(e.contains(n) == member_e3(n));
}

TEST_CASE("f_n(f_n(x)) > f_n(x) > x on nondegenerate grids") {
    for (std::uint64_t x = 0; x <= 100; ++x)
        for (std::uint64_t n = 1; n <= 100; ++n)
            CHECK(x + 2 * n > x + n);
    for (std::uint64_t x = 1; x <= 100; ++x)
        for (std::uint64_t n = 2; n <= 50; ++n) {
            CHECK(n * x > x);
            CHECK(n * n * x > n * x);
        }
    for (std::uint64_t x = 2; x <= 20; ++x)
        for (std::uint32_t n = 2; n <= 6; ++n) {
            auto mid = checked_pow(x, n, UINT64_MAX);
            auto last = checked_pow(x, n * n, UINT64_MAX);
            if (!mid || !last) continue;
            CHECK(*mid > x);
            CHECK(*last > *mid);
        }
}
