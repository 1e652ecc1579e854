#include "tamedeg/search.hpp"

#include "tamedeg/rng.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace tamedeg {

void SearchParams::validate() const {
    if (dimension < 1) {
        throw std::invalid_argument("search dimension must be positive");
    }
    if (factor_count_max < 0 || shear_degree_max < 0 || sample_count < 0 || max_retries < 1) {
        throw std::invalid_argument("search bounds must be nonnegative (retries positive)");
    }
    if (degree_cap < 1) {
        throw std::invalid_argument("degree cap must be positive");
    }
    if (coefficient_pool.empty()) {
        throw std::invalid_argument("coefficient pool must be nonempty");
    }
    for (std::int64_t c : coefficient_pool) {
        if (c == 0) {
            throw std::invalid_argument("coefficient pool must not contain zero");
        }
    }
}

namespace {

std::int64_t pool_pick(SplitMix64& rng, const std::vector<std::int64_t>& pool) {
    return pool[static_cast<std::size_t>(rng.below(pool.size()))];
}

ShearFactor random_shear(SplitMix64& rng, const SearchParams& params) {
    int n = params.dimension;
    int target = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    std::vector<Polynomial::Term> terms;
    std::uint64_t term_count = 1 + rng.below(3);
    for (std::uint64_t t = 0; t < term_count; ++t) {
        std::vector<std::int64_t> exps(static_cast<std::size_t>(n), 0);
        std::int64_t budget = params.shear_degree_max;
        for (int var = 0; var < n; ++var) {
            if (var == target || budget == 0) {
                continue;
            }
            std::int64_t e = rng.range(0, budget);
            exps[static_cast<std::size_t>(var)] = e;
            budget -= e;
        }
        terms.push_back({Monomial::from_exponents(std::move(exps)),
                         Rational(pool_pick(rng, params.coefficient_pool))});
    }
    return ShearFactor(target, Polynomial::from_terms(n, std::move(terms)));
}

AffineFactor random_affine(SplitMix64& rng, const SearchParams& params) {
    int n = params.dimension;
    std::vector<std::vector<Rational>> m(static_cast<std::size_t>(n),
                                         std::vector<Rational>(static_cast<std::size_t>(n), Rational(0)));
    for (int i = 0; i < n; ++i) {
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    }
    // Unimodular by construction: elementary row operations on the identity.
    std::uint64_t ops = 1 + rng.below(static_cast<std::uint64_t>(2 * n));
    for (std::uint64_t op = 0; op < ops; ++op) {
        switch (rng.below(3)) {
            case 0: {
                if (n < 2) {
                    break;
                }
                int i = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
                int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1)));
                if (j >= i) {
                    ++j;
                }
                Rational c(pool_pick(rng, params.coefficient_pool));
                for (int col = 0; col < n; ++col) {
                    m[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] +=
                        c * m[static_cast<std::size_t>(j)][static_cast<std::size_t>(col)];
                }
                break;
            }
            case 1: {
                if (n < 2) {
                    break;
                }
                int i = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
                int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1)));
                if (j >= i) {
                    ++j;
                }
                std::swap(m[static_cast<std::size_t>(i)], m[static_cast<std::size_t>(j)]);
                break;
            }
            default: {
                int i = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
                for (int col = 0; col < n; ++col) {
                    auto& cell = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)];
                    cell = -cell;
                }
                break;
            }
        }
    }
    std::vector<Rational> shift(static_cast<std::size_t>(n), Rational(0));
    for (int i = 0; i < n; ++i) {
        if (rng.below(2) == 0) {
            shift[static_cast<std::size_t>(i)] = Rational(pool_pick(rng, params.coefficient_pool));
        }
    }
    return AffineFactor(std::move(m), std::move(shift));
}

FactorList draw_factor_list(SplitMix64& rng, const SearchParams& params) {
    FactorList list{params.dimension, {}};
    std::uint64_t count = rng.below(static_cast<std::uint64_t>(params.factor_count_max) + 1);
    for (std::uint64_t i = 0; i < count; ++i) {
        if (rng.below(4) == 0 || params.dimension < 2) {
            list.factors.push_back(random_affine(rng, params));
        } else {
            list.factors.push_back(random_shear(rng, params));
        }
    }
    return list;
}

struct Sample {
    FactorList factors;
    PolyMap map;
};

Sample sample_with_map(const SearchParams& params, std::int64_t index) {
    for (int attempt = 0; attempt < params.max_retries; ++attempt) {
        SplitMix64 rng(substream_seed(params.seed, static_cast<std::uint64_t>(index),
                                      static_cast<std::uint64_t>(attempt)));
        FactorList list = draw_factor_list(rng, params);
        if (auto map = realize_factors_capped(list, params.degree_cap)) {
            return {std::move(list), std::move(*map)};
        }
    }
    // Retries exhausted: fall back to the identity sample.
    return {FactorList::empty(params.dimension), PolyMap::identity(params.dimension)};
}

}  // namespace

FactorList sample_tame(const SearchParams& params, std::int64_t index) {
    params.validate();
    if (index < 0 || index >= params.sample_count) {
        throw std::invalid_argument("sample index out of range");
    }
    return sample_with_map(params, index).factors;
}

Census census(const SearchParams& params) {
    params.validate();
    Census result;
    result.params = params;
    result.total = params.sample_count;
    std::map<std::vector<std::int64_t>, std::pair<std::int64_t, std::int64_t>> counts;
    for (std::int64_t index = 0; index < params.sample_count; ++index) {
        Sample sample = sample_with_map(params, index);
        std::vector<std::int64_t> degrees = multidegree(sample.map);
        std::sort(degrees.begin(), degrees.end());
        auto [it, inserted] = counts.try_emplace(std::move(degrees), 0, index);
        it->second.first += 1;
    }
    result.entries.reserve(counts.size());
    for (auto& [degrees, data] : counts) {
        result.entries.push_back({degrees, data.first, data.second});
    }
    return result;
}

}  // namespace tamedeg
