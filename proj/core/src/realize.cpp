#include "tamedeg/realize.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace tamedeg {

namespace {

// Representation search is dynamic programming over 0..target; cap the table
// size so a degenerate request cannot exhaust memory.
constexpr std::int64_t kMaxRepresentationTarget = 1'000'000;

Polynomial power_of_variable(int dimension, int var, std::int64_t exponent) {
    return Polynomial::monomial(
        Monomial::from_exponents([&] {
            std::vector<std::int64_t> exps(static_cast<std::size_t>(dimension), 0);
            exps[static_cast<std::size_t>(var)] = exponent;
            return exps;
        }()),
        Rational(1));
}

}  // namespace

DegreeTuple::DegreeTuple(std::vector<std::int64_t> degrees) : original_(std::move(degrees)) {
    if (original_.empty()) {
        throw std::invalid_argument("degree tuple must be nonempty");
    }
    for (std::int64_t d : original_) {
        if (d < 1) {
            throw std::invalid_argument("degrees must be positive");
        }
    }
    sorted_ = original_;
    std::sort(sorted_.begin(), sorted_.end());
    // Stable matching of original entries to sorted slots.
    permutation_.assign(original_.size(), -1);
    std::vector<bool> used(sorted_.size(), false);
    for (std::size_t i = 0; i < original_.size(); ++i) {
        for (std::size_t j = 0; j < sorted_.size(); ++j) {
            if (!used[j] && sorted_[j] == original_[i]) {
                permutation_[i] = static_cast<int>(j);
                used[j] = true;
                break;
            }
        }
    }
}

bool DegreeTuple::already_sorted() const { return original_ == sorted_; }

std::optional<Representation> semigroup_representation(std::int64_t target,
                                                       std::span<const std::int64_t> generators) {
    if (generators.empty()) {
        throw std::invalid_argument("representation search needs at least one generator");
    }
    for (std::int64_t g : generators) {
        if (g < 1) {
            throw std::invalid_argument("generators must be positive");
        }
    }
    if (target < 0) {
        return std::nullopt;
    }
    if (target > kMaxRepresentationTarget) {
        throw std::invalid_argument("representation target too large");
    }
    std::size_t count = generators.size();
    std::size_t width = static_cast<std::size_t>(target) + 1;
    // feasible[j][v]: v is representable using generators j..count-1.
    std::vector<std::vector<char>> feasible(count + 1, std::vector<char>(width, 0));
    feasible[count][0] = 1;
    for (std::size_t j = count; j-- > 0;) {
        std::int64_t g = generators[j];
        for (std::int64_t v = 0; v <= target; ++v) {
            feasible[j][static_cast<std::size_t>(v)] =
                feasible[j + 1][static_cast<std::size_t>(v)] ||
                (v >= g && feasible[j][static_cast<std::size_t>(v - g)]);
        }
    }
    if (!feasible[0][static_cast<std::size_t>(target)]) {
        return std::nullopt;
    }
    // Greedy descent yields the lexicographically smallest coefficients.
    Representation rep{static_cast<int>(count), {}};
    rep.coeffs.reserve(count);
    std::int64_t remaining = target;
    for (std::size_t j = 0; j < count; ++j) {
        std::int64_t k = 0;
        while (!feasible[j + 1][static_cast<std::size_t>(remaining - k * generators[j])]) {
            ++k;
        }
        rep.coeffs.push_back(k);
        remaining -= k * generators[j];
    }
    return rep;
}

std::optional<FactorList> jung_realize_dim2(std::int64_t d1, std::int64_t d2) {
    if (d1 < 1 || d2 < 1) {
        throw std::invalid_argument("degrees must be positive");
    }
    if (d1 == 1 && d2 == 1) {
        return FactorList::empty(2);
    }
    FactorList list{2, {}};
    if (d2 % d1 == 0) {
        list.factors.push_back(ShearFactor(0, power_of_variable(2, 1, d1)));
        list.factors.push_back(ShearFactor(1, power_of_variable(2, 0, d2 / d1)));
        return list;
    }
    if (d1 % d2 == 0) {
        list.factors.push_back(ShearFactor(1, power_of_variable(2, 0, d2)));
        list.factors.push_back(ShearFactor(0, power_of_variable(2, 1, d1 / d2)));
        return list;
    }
    return std::nullopt;
}

std::optional<FactorList> prop2_realize(const DegreeTuple& degrees) {
    const auto& d = degrees.sorted();
    int n = degrees.size();
    for (int i = 1; i < n; ++i) {
        auto rep = semigroup_representation(
            d[static_cast<std::size_t>(i)],
            std::span<const std::int64_t>(d.data(), static_cast<std::size_t>(i)));
        if (!rep) {
            continue;
        }
        FactorList list{n, {}};
        // h: every coordinate except i gains a pure power of x_i.
        for (int k = 0; k < n; ++k) {
            if (k != i) {
                list.factors.push_back(ShearFactor(k, power_of_variable(n, i, d[static_cast<std::size_t>(k)])));
            }
        }
        // g: coordinate i gains the representation monomial in the earlier
        // coordinates.
        std::vector<std::int64_t> exps(static_cast<std::size_t>(n), 0);
        for (int j = 0; j < i; ++j) {
            exps[static_cast<std::size_t>(j)] = rep->coeffs[static_cast<std::size_t>(j)];
        }
        list.factors.push_back(
            ShearFactor(i, Polynomial::monomial(Monomial::from_exponents(std::move(exps)), Rational(1))));
        return list;
    }
    return std::nullopt;
}

std::optional<FactorList> embed_realize(const DegreeTuple& degrees) {
    const auto& d = degrees.sorted();
    int n = degrees.size();
    if (n <= 2) {
        return std::nullopt;  // only proper two-element sub-tuples are lifted
    }
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            auto base = jung_realize_dim2(d[static_cast<std::size_t>(a)], d[static_cast<std::size_t>(b)]);
            if (!base) {
                continue;
            }
            FactorList list{n, {}};
            for (int k = 0; k < n; ++k) {
                if (k != a && k != b) {
                    list.factors.push_back(
                        ShearFactor(k, power_of_variable(n, a, d[static_cast<std::size_t>(k)])));
                }
            }
            // Re-embed the two-variable factors on coordinates (a, b).
            for (const ElementaryFactor& factor : base->factors) {
                const auto& shear = std::get<ShearFactor>(factor);
                int target = shear.target() == 0 ? a : b;
                int other = shear.target() == 0 ? b : a;
                Polynomial addend(n);
                for (const auto& term : shear.addend().terms()) {
                    std::vector<std::int64_t> exps(static_cast<std::size_t>(n), 0);
                    exps[static_cast<std::size_t>(other)] =
                        term.monomial.exponent(shear.target() == 0 ? 1 : 0);
                    addend = addend + Polynomial::monomial(Monomial::from_exponents(std::move(exps)),
                                                           term.coefficient);
                }
                list.factors.push_back(ShearFactor(target, std::move(addend)));
            }
            return list;
        }
    }
    return std::nullopt;
}

std::optional<FactorList> realize(const DegreeTuple& degrees) {
    int n = degrees.size();
    std::optional<FactorList> factors;
    if (n == 1) {
        if (degrees.sorted()[0] == 1) {
            factors = FactorList::empty(1);
        }
    } else {
        factors = prop2_realize(degrees);
        if (!factors) {
            factors = embed_realize(degrees);
        }
    }
    if (!factors) {
        return std::nullopt;
    }
    if (!degrees.already_sorted()) {
        // Conjugate by the coordinate permutation so the realized map carries
        // the degrees in their requested order.
        const auto& pi = degrees.permutation();
        AffineFactor forward = AffineFactor::permutation(pi);
        FactorList conjugated{n, {}};
        conjugated.factors.push_back(forward.inverse());
        conjugated.factors.insert(conjugated.factors.end(), factors->factors.begin(),
                                  factors->factors.end());
        conjugated.factors.push_back(forward);
        factors = std::move(conjugated);
    }
    PolyMap realized = realize_factors(*factors);
    if (multidegree(realized) != degrees.original() || !verify_inverse_identity(*factors)) {
        throw std::logic_error("realize produced a factorization that fails verification");
    }
    return factors;
}

}  // namespace tamedeg
