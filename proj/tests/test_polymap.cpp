#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support/generators.hpp"
#include "tamedeg/polymap.hpp"

#include <stdexcept>

using namespace tamedeg;

namespace {

Polynomial P(const char* text, int dimension) { return Polynomial::parse(text, dimension); }

}  // namespace

TEST_CASE("factor_to_map on shears and affine factors") {
    PolyMap phi1 = factor_to_map(ShearFactor(0, P("x2^2", 2)));
    CHECK(phi1.components[0] == P("x1 + x2^2", 2));
    CHECK(phi1.components[1] == P("x2", 2));

    CHECK(verify_identity(factor_to_map(AffineFactor::identity(3))));

    PolyMap shear3 = factor_to_map(ShearFactor(1, P("x1^3", 3)));
    CHECK(shear3.components[0] == P("x1", 3));
    CHECK(shear3.components[1] == P("x2 + x1^3", 3));
    CHECK(shear3.components[2] == P("x3", 3));
}

TEST_CASE("shear addend must avoid the target variable") {
    CHECK_THROWS_AS(ShearFactor(0, P("x1 + x2", 2)), std::invalid_argument);
    CHECK_NOTHROW(ShearFactor(0, Polynomial::constant(2, Rational(5))));
    // addend with zero partial in the target is exactly "does not involve it"
    CHECK(!ShearFactor(0, P("x2^3", 2)).addend().depends_on(0));
}

TEST_CASE("affine invertibility is checked exactly") {
    AffineFactor singular({{Rational(1), Rational(2)}, {Rational(2), Rational(4)}},
                          {Rational(0), Rational(0)});
    CHECK(singular.determinant() == 0);
    CHECK_THROWS_AS(singular.inverse(), std::domain_error);

    AffineFactor invertible({{Rational(1), Rational(1, 2)}, {Rational(0), Rational(1)}},
                            {Rational(3), Rational(-1)});
    AffineFactor inverse = invertible.inverse();
    FactorList list{2, {invertible, inverse}};
    CHECK(verify_identity(realize_factors(list)));
}

TEST_CASE("two-shear composition realizes multidegree (2,4)") {
    FactorList list{2, {ShearFactor(0, P("x2^2", 2)), ShearFactor(1, P("x1^2", 2))}};
    PolyMap map = realize_factors(list);
    CHECK(multidegree(map) == std::vector<std::int64_t>{2, 4});
    CHECK(map.components[1] == P("x2", 2) + P("x1 + x2^2", 2).pow(2));
}

TEST_CASE("compose with the identity is neutral") {
    SplitMix64 rng(0x1234ULL);
    FactorList list = testgen::random_factor_list(rng, 3, 4, 2);
    PolyMap f = realize_factors(list);
    PolyMap id = PolyMap::identity(3);
    CHECK(compose_maps(id, f).components == f.components);
    CHECK(compose_maps(f, id).components == f.components);
}

TEST_CASE("the h-then-g construction for (3,4,7) composes to multidegree (3,4,7)") {
    // h adds pure x3-powers to the first two coordinates, g adds x1*x2 to x3;
    // 7 = 1*3 + 1*4.
    FactorList list{3,
                    {ShearFactor(0, P("x3^3", 3)), ShearFactor(1, P("x3^4", 3)),
                     ShearFactor(2, P("x1*x2", 3))}};
    PolyMap g_after_h = realize_factors(list);
    CHECK(multidegree(g_after_h) == std::vector<std::int64_t>{3, 4, 7});
    // The same map via explicit compose_maps of the two stages.
    FactorList h{3, {ShearFactor(0, P("x3^3", 3)), ShearFactor(1, P("x3^4", 3))}};
    PolyMap composed = compose_maps(factor_to_map(ShearFactor(2, P("x1*x2", 3))), realize_factors(h));
    CHECK(composed.components == g_after_h.components);
}

TEST_CASE("realize_factors folds exactly like pairwise compose_maps") {
    SplitMix64 rng(0xfeedULL);
    for (int trial = 0; trial < 10; ++trial) {
        FactorList list = testgen::random_factor_list(rng, 3, 4, 2);
        PolyMap folded = realize_factors(list);
        PolyMap manual = PolyMap::identity(3);
        for (const auto& factor : list.factors) {
            manual = compose_maps(factor_to_map(factor), manual);
        }
        CHECK(folded.components == manual.components);
    }
    CHECK(verify_identity(realize_factors(FactorList::empty(4))));
}

TEST_CASE("multidegree basics and errors") {
    CHECK(multidegree(PolyMap::identity(3)) == std::vector<std::int64_t>{1, 1, 1});
    PolyMap phi1 = factor_to_map(ShearFactor(0, P("x2^2", 2)));
    CHECK(multidegree(phi1) == std::vector<std::int64_t>{2, 1});
    PolyMap broken = PolyMap::identity(2);
    broken.components[0] = Polynomial(2);
    CHECK_THROWS_AS(multidegree(broken), std::domain_error);
}

TEST_CASE("factor inversion") {
    FactorList single{2, {ShearFactor(0, P("x2^2", 2))}};
    FactorList inverted = invert_factors(single);
    REQUIRE(inverted.factors.size() == 1);
    CHECK(std::get<ShearFactor>(inverted.factors[0]).addend() == P("-x2^2", 2));

    CHECK(invert_factors(FactorList::empty(3)).factors.empty());
}

TEST_CASE("inverse composition yields the identity on random factor lists") {
    SplitMix64 rng(0xbeefULL);
    for (int trial = 0; trial < 25; ++trial) {
        FactorList list = testgen::random_factor_list(rng, 3, 5, 2);
        CHECK(verify_inverse_identity(list));
    }
    for (int trial = 0; trial < 10; ++trial) {
        FactorList list = testgen::random_factor_list(rng, 2, 5, 3);
        CHECK(verify_inverse_identity(list));
    }
}

TEST_CASE("verify_identity demands exact equality with the variables") {
    CHECK(verify_identity(PolyMap::identity(5)));
    CHECK(!verify_identity(factor_to_map(ShearFactor(0, P("x2^2", 2)))));
    PolyMap scaled = PolyMap::identity(2);
    scaled.components[0] = scaled.components[0].scaled(Rational(2));
    CHECK(!verify_identity(scaled));
}

TEST_CASE("poisson bracket degree") {
    CHECK(poisson_bracket_degree(P("x1", 2), P("x2", 2)) == 2);
    CHECK(poisson_bracket_degree(P("x1", 2), P("x1^2", 2)) == 0);
    CHECK(poisson_bracket_degree(P("x1", 3), P("x2 + x1^3", 3)) == 2);
    // Constants are dependent with everything.
    CHECK(poisson_bracket_degree(Polynomial::constant(2, Rational(3)), P("x1", 2)) == 0);
    CHECK_THROWS_AS(poisson_bracket_degree(P("x1", 1), P("x1", 1)), std::invalid_argument);
}

TEST_CASE("poisson bracket degree laws on random pairs") {
    SplitMix64 rng(0xa5a5a5ULL);
    for (int trial = 0; trial < 60; ++trial) {
        Polynomial f = testgen::random_nonzero_polynomial(rng, 3, 4, 4);
        Polynomial g = testgen::random_nonzero_polynomial(rng, 3, 4, 4);
        std::int64_t bracket = poisson_bracket_degree(f, g);
        CHECK((bracket == 0 || bracket >= 2));
        if (bracket != 0) {
            CHECK(Degree::finite(bracket) <= f.total_degree() + g.total_degree());
        }
    }
}

TEST_CASE("compose_maps is associative") {
    SplitMix64 rng(0x13579ULL);
    for (int trial = 0; trial < 8; ++trial) {
        PolyMap a = realize_factors(testgen::random_factor_list(rng, 2, 3, 2));
        PolyMap b = realize_factors(testgen::random_factor_list(rng, 2, 3, 2));
        PolyMap c = realize_factors(testgen::random_factor_list(rng, 2, 3, 2));
        CHECK(compose_maps(compose_maps(a, b), c).components ==
              compose_maps(a, compose_maps(b, c)).components);
    }
}

TEST_CASE("capped realization discards blowups and keeps small maps") {
    FactorList growing{2, {ShearFactor(0, P("x2^3", 2)), ShearFactor(1, P("x1^3", 2)),
                           ShearFactor(0, P("x2^3", 2))}};
    CHECK(!realize_factors_capped(growing, 10).has_value());
    auto ok = realize_factors_capped(growing, 100);
    REQUIRE(ok.has_value());
    for (std::int64_t d : multidegree(*ok)) {
        CHECK(d <= 100);
    }
    CHECK(realize_factors_capped(FactorList::empty(2), 1).has_value());
    CHECK(!realize_factors_capped(FactorList::empty(2), 0).has_value());
}
