// Shared driver for the degree-estimate empirical validation: random pairs
// (f, g) in three variables with non-multiple degrees, a random G(x, y), and
// the exact check deg G(f, g) >= su_lower_bound with the true Poisson
// bracket degree.

#pragma once

#include "generators.hpp"
#include "tamedeg/obstruction.hpp"
#include "tamedeg/polymap.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace tamedeg::testgen {

struct Theorem2Stats {
    int trials = 0;
    int violations = 0;
};

/// Runs `count` seeded trials; each trial draws degrees (n, m) with n < m <= 6
/// and pair_precondition(n, m), polynomials f, g of exactly those degrees
/// (resampled until algebraically independent), and a sparse G with
/// deg_y G <= 6, then checks the exact composition degree against the bound.
inline Theorem2Stats run_theorem2_trials(std::uint64_t seed, int count) {
    static const std::vector<std::pair<std::int64_t, std::int64_t>> degree_pairs = {
        {2, 3}, {2, 5}, {3, 4}, {3, 5}, {4, 5}, {4, 6}, {5, 6}};
    SplitMix64 rng(seed);
    Theorem2Stats stats;
    while (stats.trials < count) {
        auto [n, m] = degree_pairs[static_cast<std::size_t>(rng.below(degree_pairs.size()))];
        Polynomial f = random_polynomial_of_degree(rng, 3, n, 3);
        Polynomial g = random_polynomial_of_degree(rng, 3, m, 3);
        std::int64_t bracket = poisson_bracket_degree(f, g);
        if (bracket == 0) {
            continue;  // dependent pair: outside the theorem's hypotheses
        }
        // Sparse random G(x, y) with deg_y G <= 6.
        std::vector<Polynomial::Term> g_terms;
        int term_count = 1 + static_cast<int>(rng.below(4));
        for (int t = 0; t < term_count; ++t) {
            std::int64_t i = rng.range(0, 6);
            std::int64_t j = rng.range(0, 6);
            g_terms.push_back({Monomial::from_exponents({i, j}),
                               random_rational(rng, 3, /*allow_zero=*/false)});
        }
        Polynomial big_g = Polynomial::from_terms(2, std::move(g_terms));
        if (big_g.is_zero()) {
            continue;
        }
        std::int64_t deg_y = 0;
        for (const auto& term : big_g.terms()) {
            deg_y = std::max(deg_y, term.monomial.exponent(1));
        }
        std::vector<Polynomial> args{f, g};
        Polynomial value = big_g.compose(args);
        // f, g independent and G nonzero force G(f, g) != 0.
        Degree actual = value.total_degree();
        BoundParams params = BoundParams::for_pair(n, m, deg_y, bracket);
        std::int64_t bound = su_lower_bound(params);
        ++stats.trials;
        if (!actual.is_finite() || actual.value() < bound) {
            ++stats.violations;
        }
    }
    return stats;
}

}  // namespace tamedeg::testgen
