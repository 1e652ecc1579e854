#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support/theorem2.hpp"
#include "tamedeg/obstruction.hpp"

#include <stdexcept>

using namespace tamedeg;

TEST_CASE("degree-estimate lower bound values") {
    CHECK(su_lower_bound(BoundParams{3, 4, 3, 1, 0, 2}) == 7);
    CHECK(su_lower_bound(BoundParams{3, 4, 3, 0, 1, 2}) == 4);
    CHECK(su_lower_bound(BoundParams{3, 5, 3, 1, 0, 2}) == 9);
    CHECK(su_lower_bound(BoundParams{4, 5, 4, 1, 0, 2}) == 13);
}

TEST_CASE("bound parameter construction and validation") {
    BoundParams p = BoundParams::for_pair(3, 4, 3);
    CHECK(p.p == 3);
    CHECK(p.q == 1);
    CHECK(p.r == 0);
    BoundParams q = BoundParams::for_pair(4, 6, 5);
    CHECK(q.p == 2);  // 4 / gcd(4, 6)
    CHECK(q.q == 2);
    CHECK(q.r == 1);
    CHECK_THROWS_AS(BoundParams::for_pair(5, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(su_lower_bound(BoundParams{3, 4, 3, 1, 3, 2}), std::invalid_argument);
    CHECK_THROWS_AS(su_lower_bound(BoundParams{3, 4, 3, 1, 0, 1}), std::invalid_argument);
}

TEST_CASE("bound is monotone in q, r and the bracket bound") {
    for (std::int64_t n = 2; n <= 6; ++n) {
        for (std::int64_t m = n + 1; m <= 8; ++m) {
            if (!pair_precondition(n, m)) {
                continue;
            }
            std::int64_t p = BoundParams::for_pair(n, m, 0).p;
            for (std::int64_t q = 0; q <= 3; ++q) {
                for (std::int64_t r = 0; r < p; ++r) {
                    for (std::int64_t lb = 2; lb <= 5; ++lb) {
                        std::int64_t here = su_lower_bound(BoundParams{n, m, p, q, r, lb});
                        CHECK(su_lower_bound(BoundParams{n, m, p, q + 1, r, lb}) >= here);
                        if (r + 1 < p) {
                            CHECK(su_lower_bound(BoundParams{n, m, p, q, r + 1, lb}) >= here);
                        }
                        CHECK(su_lower_bound(BoundParams{n, m, p, q, r, lb + 1}) >= here);
                    }
                }
            }
        }
    }
}

TEST_CASE("pair precondition") {
    CHECK(pair_precondition(3, 4));
    CHECK(pair_precondition(4, 5));
    CHECK(!pair_precondition(3, 6));
    CHECK(!pair_precondition(6, 3));
    CHECK(!pair_precondition(4, 4));
    CHECK(!pair_precondition(1, 5));
    CHECK(pair_precondition(4, 6));
    CHECK_THROWS_AS(pair_precondition(0, 3), std::invalid_argument);
}

TEST_CASE("elementary reachability: the paper's three coordinate cases") {
    ReachabilityReport r1 = elementary_reachable(3, 4, 5);
    CHECK(!r1.reachable);
    CHECK(r1.witnesses.empty());
    CHECK(!r1.cancellation_regime);
    CHECK(r1.cancellation_threshold == 7);

    CHECK(!elementary_reachable(3, 5, 4).reachable);
    CHECK(!elementary_reachable(4, 5, 3).reachable);

    ReachabilityReport r2 = elementary_reachable(3, 4, 6);
    CHECK(r2.reachable);
    REQUIRE(!r2.witnesses.empty());
    CHECK(r2.witnesses.front() == std::pair<std::int64_t, std::int64_t>{2, 0});
}

TEST_CASE("elementary reachability: multiples of n are always reachable") {
    for (std::int64_t n = 2; n <= 7; ++n) {
        for (std::int64_t m = n + 1; m <= 9; ++m) {
            if (!pair_precondition(n, m)) {
                continue;
            }
            for (std::int64_t a = 1; a <= 8; ++a) {
                CAPTURE(n);
                CAPTURE(m);
                CAPTURE(a);
                CHECK(elementary_reachable(n, m, a * n).reachable);
            }
        }
    }
}

TEST_CASE("elementary reachability: cancellation regime forbids exclusion") {
    // Degrees (6, 8): deg G(f,g) = 19 is attainable through leading-form
    // cancellation (f = x^6 + y, g = x^8 + x, G = x^4 - y^3) even though 19
    // is not a nonnegative combination of 6 and 8. Degree arithmetic must
    // not certify such targets.
    ReachabilityReport report = elementary_reachable(6, 8, 19);
    CHECK(report.cancellation_threshold == 12);  // q = 1 bound: 3*8 - 8 - 6 + 2
    CHECK(report.cancellation_regime);
    CHECK(report.witnesses.empty());
    CHECK(report.reachable);

    CHECK(elementary_reachable(4, 6, 9).reachable);
    // Below the threshold the forced q = 0 shape argument applies.
    CHECK(!elementary_reachable(6, 8, 5).reachable);
}

TEST_CASE("elementary reachability rejects invalid inputs") {
    CHECK_THROWS_AS(elementary_reachable(4, 3, 5), std::invalid_argument);
    CHECK_THROWS_AS(elementary_reachable(3, 6, 5), std::invalid_argument);
    CHECK_THROWS_AS(elementary_reachable(3, 4, 0), std::invalid_argument);
}

TEST_CASE("the cancellation example is real polynomial algebra") {
    // Recompute the (6, 8, 19) witness pair exactly.
    Polynomial f = Polynomial::parse("x1^6 + x2", 2);
    Polynomial g = Polynomial::parse("x1^8 + x1", 2);
    Polynomial big_g = Polynomial::parse("x1^4 - x2^3", 2);
    std::vector<Polynomial> args{f, g};
    Polynomial value = big_g.compose(args);
    CHECK(value.total_degree() == Degree::finite(19));
    std::int64_t bracket = poisson_bracket_degree(f, g);
    CHECK(bracket == 9);
    BoundParams params = BoundParams::for_pair(6, 8, 3, bracket);
    CHECK(su_lower_bound(params) == 19);
}

TEST_CASE("type I/II exclusion") {
    auto e345 = type_I_II_excluded({3, 4, 5});
    REQUIRE(e345.has_value());
    CHECK(!e345->no_even_entry);
    CHECK(e345->checks.size() == 2);  // even entry 4 against partners 3 and 5

    CHECK(!type_I_II_excluded({4, 5, 6}).has_value());  // 4 = 2*2, 6 = 2*3

    auto e357 = type_I_II_excluded({3, 5, 7});
    REQUIRE(e357.has_value());
    CHECK(e357->no_even_entry);
    CHECK(e357->checks.empty());

    auto e4511 = type_I_II_excluded({4, 5, 11});
    REQUIRE(e4511.has_value());

    CHECK(!type_I_II_excluded({2, 3, 3}).has_value());  // 2 = 2*1, 3 = 1*3
    CHECK_THROWS_AS(type_I_II_excluded({4, 3, 5}), std::invalid_argument);
}

TEST_CASE("type III/IV exclusion") {
    auto e345 = type_III_IV_excluded({3, 4, 5});
    REQUIRE(e345.has_value());
    CHECK(e345->checks.size() == 2);

    auto e456 = type_III_IV_excluded({4, 5, 6});
    REQUIRE(e456.has_value());
    CHECK(e456->checks.size() == 4);  // two even entries, two assignments each

    auto e233 = type_III_IV_excluded({2, 3, 3});
    REQUIRE(e233.has_value());

    auto e357 = type_III_IV_excluded({3, 5, 7});
    REQUIRE(e357.has_value());
    CHECK(e357->no_even_entry);

    // A matching pattern: (2, 3, 3) matches neither row, but (4, 6, 3)...
    // sorted (3, 4, 6): n = 2 from 4: row 1 wants 6 = 3n with 2 < d <= 3,
    // assigned third degree 3: matches.
    CHECK(!type_III_IV_excluded({3, 4, 6}).has_value());
}

TEST_CASE("not_tame_check emits certificates exactly where the paper does") {
    for (auto degrees : {std::array<std::int64_t, 3>{3, 4, 5}, {3, 5, 7}, {4, 5, 7}, {4, 5, 11}}) {
        CAPTURE(degrees[0]);
        CAPTURE(degrees[1]);
        CAPTURE(degrees[2]);
        auto certificate = not_tame_check(degrees);
        REQUIRE(certificate.has_value());
        CHECK(certificate->degrees ==
              std::vector<std::int64_t>(degrees.begin(), degrees.end()));
        CHECK(certificate->elementary.size() == 3);
        for (const auto& report : certificate->elementary) {
            CHECK(!report.reachable);
        }
        CHECK(verify_certificate(*certificate).ok);
    }
    CHECK(!not_tame_check({4, 5, 6}).has_value());
}

TEST_CASE("analyze_not_tame reports the first failing branch") {
    ObstructionOutcome pattern = analyze_not_tame({4, 5, 6});
    CHECK(!pattern.certificate.has_value());
    CHECK(pattern.failure == UnknownReason::pattern_match_I_II);

    ObstructionOutcome reachable = analyze_not_tame({6, 8, 19});
    CHECK(reachable.failure == UnknownReason::reachable_coordinate);

    // A divisible pair never reaches the exclusion machinery.
    ObstructionOutcome divisible = analyze_not_tame({3, 6, 7});
    CHECK(divisible.failure == UnknownReason::precondition_failed);
}

TEST_CASE("the method also closes out-of-family triples like (5,6,7)") {
    auto certificate = not_tame_check({5, 6, 7});
    REQUIRE(certificate.has_value());
    CHECK(verify_certificate(*certificate).ok);
}

TEST_CASE("dimension-2 certificates") {
    NotTameCertificate cert = dim2_certificate(2, 3);
    CHECK(cert.is_dimension2());
    CHECK(verify_certificate(cert).ok);
    CHECK_THROWS_AS(dim2_certificate(2, 4), std::invalid_argument);
    CHECK_THROWS_AS(dim2_certificate(5, 5), std::invalid_argument);
}

TEST_CASE("certificate verification rejects tampering") {
    auto certificate = not_tame_check({3, 4, 5});
    REQUIRE(certificate.has_value());

    NotTameCertificate wrong_degrees = *certificate;
    wrong_degrees.degrees = {3, 4, 6};
    CHECK(!verify_certificate(wrong_degrees).ok);

    NotTameCertificate flipped = *certificate;
    flipped.elementary[2].reachable = true;
    flipped.elementary[2].witnesses.emplace_back(1, 1);
    CHECK(!verify_certificate(flipped).ok);

    NotTameCertificate forged_pair = *certificate;
    forged_pair.pair_preconditions[0].low_divides_high = true;
    CHECK(!verify_certificate(forged_pair).ok);

    NotTameCertificate missing_check = *certificate;
    missing_check.type_one_two.checks.clear();
    CHECK(!verify_certificate(missing_check).ok);
}

TEST_CASE("degree estimate holds empirically on random pairs") {
    testgen::Theorem2Stats stats = testgen::run_theorem2_trials(0xc0ffee11ULL, 60);
    CHECK(stats.trials == 60);
    CHECK(stats.violations == 0);
}
