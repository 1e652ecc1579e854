#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support/generators.hpp"
#include "tamedeg/realize.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

using namespace tamedeg;

namespace {

// Independent brute-force oracle: nested loops in lexicographic coefficient
// order, so the first solution found is the lexicographically smallest.
// Deliberately unrelated to the DP implementation it checks.
bool oracle_search(std::int64_t remaining, std::span<const std::int64_t> gens,
                   std::vector<std::int64_t>& coeffs) {
    if (gens.empty()) {
        return remaining == 0;
    }
    for (std::int64_t k = 0; k * gens.front() <= remaining; ++k) {
        coeffs.push_back(k);
        if (oracle_search(remaining - k * gens.front(), gens.subspan(1), coeffs)) {
            return true;
        }
        coeffs.pop_back();
    }
    return false;
}

std::optional<std::vector<std::int64_t>> oracle_representation(std::int64_t target,
                                                               std::span<const std::int64_t> gens) {
    std::vector<std::int64_t> coeffs;
    if (oracle_search(target, gens, coeffs)) {
        return coeffs;
    }
    return std::nullopt;
}

std::optional<std::vector<std::int64_t>> dp_coeffs(std::int64_t target,
                                                   std::vector<std::int64_t> gens) {
    auto rep = semigroup_representation(target, gens);
    if (!rep) {
        return std::nullopt;
    }
    return rep->coeffs;
}

}  // namespace

TEST_CASE("semigroup representation: paper-fixed vectors") {
    CHECK(!dp_coeffs(5, {3, 4}).has_value());
    CHECK(dp_coeffs(13, {4, 5}) == std::vector<std::int64_t>{2, 1});
    CHECK(dp_coeffs(6, {3, 4}) == std::vector<std::int64_t>{2, 0});
    CHECK(dp_coeffs(9, {1}) == std::vector<std::int64_t>{9});
    CHECK(dp_coeffs(0, {3, 4}) == std::vector<std::int64_t>{0, 0});
    CHECK_THROWS_AS(semigroup_representation(5, std::vector<std::int64_t>{}),
                    std::invalid_argument);
    CHECK_THROWS_AS(semigroup_representation(5, std::vector<std::int64_t>{0, 3}),
                    std::invalid_argument);
}

TEST_CASE("semigroup representation agrees with the nested-loop oracle") {
    for (std::int64_t g1 = 2; g1 <= 9; ++g1) {
        for (std::int64_t g2 = 2; g2 <= 9; ++g2) {
            for (std::int64_t t = 0; t <= 120; ++t) {
                std::vector<std::int64_t> gens{g1, g2};
                CAPTURE(g1);
                CAPTURE(g2);
                CAPTURE(t);
                CHECK(dp_coeffs(t, gens) == oracle_representation(t, gens));
            }
        }
    }
    // A few three-generator spot checks.
    for (std::int64_t t : {7, 23, 41, 97}) {
        std::vector<std::int64_t> gens{4, 6, 9};
        CHECK(dp_coeffs(t, gens) == oracle_representation(t, gens));
    }
}

TEST_CASE("jung dimension-2 realization") {
    auto list26 = jung_realize_dim2(2, 6);
    REQUIRE(list26.has_value());
    PolyMap map = realize_factors(*list26);
    CHECK(multidegree(map) == std::vector<std::int64_t>{2, 6});
    // (x + y^2, y + (x + y^2)^3)
    CHECK(map.components[0] == Polynomial::parse("x1 + x2^2", 2));
    CHECK(map.components[1] ==
          Polynomial::parse("x2", 2) + Polynomial::parse("x1 + x2^2", 2).pow(3));

    auto trivial = jung_realize_dim2(1, 1);
    REQUIRE(trivial.has_value());
    CHECK(trivial->factors.empty());

    CHECK(!jung_realize_dim2(2, 3).has_value());
    CHECK(!jung_realize_dim2(4, 6).has_value());

    // Divisibility the other way around.
    auto list62 = jung_realize_dim2(6, 2);
    REQUIRE(list62.has_value());
    CHECK(multidegree(realize_factors(*list62)) == std::vector<std::int64_t>{6, 2});

    CHECK_THROWS_AS(jung_realize_dim2(0, 3), std::invalid_argument);
}

TEST_CASE("prop2 realization") {
    auto list = prop2_realize(DegreeTuple({3, 4, 7}));
    REQUIRE(list.has_value());
    CHECK(multidegree(realize_factors(*list)) == std::vector<std::int64_t>{3, 4, 7});

    CHECK(!prop2_realize(DegreeTuple({3, 4, 5})).has_value());

    auto ones = prop2_realize(DegreeTuple({1, 9, 17}));
    REQUIRE(ones.has_value());
    CHECK(multidegree(realize_factors(*ones)) == std::vector<std::int64_t>{1, 9, 17});

    // Ties representable as 1 * earlier degree.
    auto tie = prop2_realize(DegreeTuple({3, 3, 5}));
    REQUIRE(tie.has_value());
    CHECK(multidegree(realize_factors(*tie)) == std::vector<std::int64_t>{3, 3, 5});
}

TEST_CASE("embedding realization") {
    auto lifted = embed_realize(DegreeTuple({3, 4, 6}));
    REQUIRE(lifted.has_value());
    CHECK(multidegree(realize_factors(*lifted)) == std::vector<std::int64_t>{3, 4, 6});
    // Cross-check: the representation route also succeeds on this tuple.
    auto direct = prop2_realize(DegreeTuple({3, 4, 6}));
    REQUIRE(direct.has_value());
    CHECK(multidegree(realize_factors(*direct)) == std::vector<std::int64_t>{3, 4, 6});

    CHECK(!embed_realize(DegreeTuple({2, 3, 5})).has_value());  // no divisible pair
    CHECK(!embed_realize(DegreeTuple({5, 7, 11})).has_value());
}

TEST_CASE("realize: positive and negative cases") {
    for (std::vector<std::int64_t> degrees :
         {std::vector<std::int64_t>{2, 7, 9}, {3, 5, 8}, {2, 3, 5}, {1, 1, 1}, {4, 5, 12}}) {
        auto factors = realize(DegreeTuple(degrees));
        REQUIRE_MESSAGE(factors.has_value(), "expected realizable tuple");
        CHECK(multidegree(realize_factors(*factors)) == degrees);
        CHECK(verify_inverse_identity(*factors));
    }
    CHECK(!realize(DegreeTuple({4, 5, 11})).has_value());
    CHECK(!realize(DegreeTuple({3, 4, 5})).has_value());
    CHECK(realize(DegreeTuple({1})).has_value());
    CHECK(!realize(DegreeTuple({2})).has_value());
}

TEST_CASE("realize reproduces the three studied families") {
    for (std::int64_t d3 = 4; d3 <= 30; ++d3) {
        CHECK(realize(DegreeTuple({3, 4, d3})).has_value() == (d3 != 5));
    }
    for (std::int64_t d3 = 5; d3 <= 30; ++d3) {
        CHECK(realize(DegreeTuple({3, 5, d3})).has_value() == (d3 != 7));
    }
    for (std::int64_t d3 = 5; d3 <= 30; ++d3) {
        bool expected = d3 != 6 && d3 != 7 && d3 != 11;
        CHECK(realize(DegreeTuple({4, 5, d3})).has_value() == expected);
    }
}

TEST_CASE("pigeonhole completeness: d1 <= n - 1 always realizes") {
    for (std::int64_t d1 = 1; d1 <= 2; ++d1) {
        for (std::int64_t d2 = d1; d2 <= 30; ++d2) {
            for (std::int64_t d3 = d2; d3 <= 30; ++d3) {
                CAPTURE(d1);
                CAPTURE(d2);
                CAPTURE(d3);
                CHECK(realize(DegreeTuple({d1, d2, d3})).has_value());
            }
        }
    }
}

TEST_CASE("realize honors the requested order of an unsorted tuple") {
    SplitMix64 rng(0x9090ULL);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<std::int64_t> degrees{rng.range(1, 10), rng.range(1, 10), rng.range(1, 10)};
        std::vector<std::int64_t> sorted = degrees;
        std::sort(sorted.begin(), sorted.end());
        auto from_sorted = realize(DegreeTuple(sorted));
        auto from_original = realize(DegreeTuple(degrees));
        CHECK(from_sorted.has_value() == from_original.has_value());
        if (from_original) {
            CHECK(multidegree(realize_factors(*from_original)) == degrees);
        }
    }
}

TEST_CASE("degree tuple validation") {
    CHECK_THROWS_AS(DegreeTuple({}), std::invalid_argument);
    CHECK_THROWS_AS(DegreeTuple({3, 0, 2}), std::invalid_argument);
    DegreeTuple t({5, 1, 3});
    CHECK(t.sorted() == std::vector<std::int64_t>{1, 3, 5});
    CHECK(t.original() == std::vector<std::int64_t>{5, 1, 3});
    CHECK(!t.already_sorted());
}
