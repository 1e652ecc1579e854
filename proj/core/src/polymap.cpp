#include "tamedeg/polymap.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace tamedeg {

namespace {

void require_dimension_match(int a, int b, const char* what) {
    if (a != b) {
        throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                    std::to_string(a) + " vs " + std::to_string(b) + ")");
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// PolyMap

PolyMap PolyMap::identity(int dimension) {
    PolyMap map{dimension, {}};
    map.components.reserve(static_cast<std::size_t>(dimension));
    for (int i = 0; i < dimension; ++i) {
        map.components.push_back(Polynomial::variable(dimension, i));
    }
    return map;
}

void PolyMap::validate() const {
    if (dimension <= 0) {
        throw std::invalid_argument("map dimension must be positive");
    }
    if (static_cast<int>(components.size()) != dimension) {
        throw std::invalid_argument("map must have one component per variable");
    }
    for (const Polynomial& c : components) {
        require_dimension_match(c.dimension(), dimension, "map component");
    }
}

// ---------------------------------------------------------------------------
// Factors

ShearFactor::ShearFactor(int target, Polynomial addend)
    : target_(target), addend_(std::move(addend)) {
    if (target_ < 0 || target_ >= addend_.dimension()) {
        throw std::invalid_argument("shear target out of range");
    }
    if (addend_.depends_on(target_)) {
        throw std::invalid_argument("shear addend must not involve the target variable");
    }
}

AffineFactor::AffineFactor(std::vector<std::vector<Rational>> matrix, std::vector<Rational> shift)
    : matrix_(std::move(matrix)), shift_(std::move(shift)) {
    std::size_t n = matrix_.size();
    if (n == 0) {
        throw std::invalid_argument("affine factor dimension must be positive");
    }
    for (const auto& row : matrix_) {
        if (row.size() != n) {
            throw std::invalid_argument("affine matrix must be square");
        }
    }
    if (shift_.size() != n) {
        throw std::invalid_argument("affine shift length must match the matrix");
    }
}

AffineFactor AffineFactor::identity(int dimension) {
    if (dimension <= 0) {
        throw std::invalid_argument("affine factor dimension must be positive");
    }
    std::vector<std::vector<Rational>> m(static_cast<std::size_t>(dimension),
                                         std::vector<Rational>(static_cast<std::size_t>(dimension), Rational(0)));
    for (int i = 0; i < dimension; ++i) {
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    }
    return AffineFactor(std::move(m), std::vector<Rational>(static_cast<std::size_t>(dimension), Rational(0)));
}

AffineFactor AffineFactor::permutation(const std::vector<int>& perm) {
    std::size_t n = perm.size();
    std::vector<bool> seen(n, false);
    for (int p : perm) {
        if (p < 0 || static_cast<std::size_t>(p) >= n || seen[static_cast<std::size_t>(p)]) {
            throw std::invalid_argument("invalid permutation");
        }
        seen[static_cast<std::size_t>(p)] = true;
    }
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        m[i][static_cast<std::size_t>(perm[i])] = 1;
    }
    return AffineFactor(std::move(m), std::vector<Rational>(n, Rational(0)));
}

namespace {

// Gauss-Jordan over the rationals; returns {determinant, inverse}.
// The inverse is meaningful only when the determinant is nonzero.
std::pair<Rational, std::vector<std::vector<Rational>>> eliminate(
    std::vector<std::vector<Rational>> m) {
    std::size_t n = m.size();
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        inv[i][i] = 1;
    }
    Rational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) {
            ++pivot;
        }
        if (pivot == n) {
            return {Rational(0), inv};
        }
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            std::swap(inv[pivot], inv[col]);
            det = -det;
        }
        det *= m[col][col];
        Rational scale = Rational(1) / m[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            m[col][j] *= scale;
            inv[col][j] *= scale;
        }
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || m[row][col] == 0) {
                continue;
            }
            Rational factor = m[row][col];
            for (std::size_t j = 0; j < n; ++j) {
                m[row][j] -= factor * m[col][j];
                inv[row][j] -= factor * inv[col][j];
            }
        }
    }
    return {det, inv};
}

}  // namespace

Rational AffineFactor::determinant() const {
    return eliminate(matrix_).first;
}

AffineFactor AffineFactor::inverse() const {
    auto [det, inv] = eliminate(matrix_);
    if (det == 0) {
        throw std::domain_error("affine factor is singular");
    }
    // x = M^{-1} y - M^{-1} b
    std::size_t n = matrix_.size();
    std::vector<Rational> shift(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            shift[i] -= inv[i][j] * shift_[j];
        }
    }
    return AffineFactor(std::move(inv), std::move(shift));
}

int factor_dimension(const ElementaryFactor& factor) {
    return std::visit([](const auto& f) { return f.dimension(); }, factor);
}

ElementaryFactor invert_factor(const ElementaryFactor& factor) {
    return std::visit([](const auto& f) -> ElementaryFactor { return f.inverse(); }, factor);
}

void FactorList::validate() const {
    if (dimension <= 0) {
        throw std::invalid_argument("factor list dimension must be positive");
    }
    for (const ElementaryFactor& f : factors) {
        require_dimension_match(factor_dimension(f), dimension, "factor");
    }
}

// ---------------------------------------------------------------------------
// Realization

PolyMap factor_to_map(const ElementaryFactor& factor) {
    return apply_factor(factor, PolyMap::identity(factor_dimension(factor)));
}

PolyMap compose_maps(const PolyMap& outer, const PolyMap& inner) {
    outer.validate();
    inner.validate();
    require_dimension_match(outer.dimension, inner.dimension, "map composition");
    PolyMap result{outer.dimension, {}};
    result.components.reserve(outer.components.size());
    for (const Polynomial& component : outer.components) {
        result.components.push_back(component.compose(inner.components));
    }
    return result;
}

PolyMap apply_factor(const ElementaryFactor& factor, const PolyMap& inner) {
    inner.validate();
    require_dimension_match(factor_dimension(factor), inner.dimension, "factor application");
    if (const auto* shear = std::get_if<ShearFactor>(&factor)) {
        PolyMap result = inner;
        result.components[static_cast<std::size_t>(shear->target())] =
            inner.components[static_cast<std::size_t>(shear->target())] +
            shear->addend().compose(inner.components);
        return result;
    }
    const auto& affine = std::get<AffineFactor>(factor);
    std::size_t n = inner.components.size();
    PolyMap result{inner.dimension, {}};
    result.components.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Polynomial acc = Polynomial::constant(inner.dimension, affine.shift()[i]);
        for (std::size_t j = 0; j < n; ++j) {
            if (affine.matrix()[i][j] != 0) {
                acc = acc + inner.components[j].scaled(affine.matrix()[i][j]);
            }
        }
        result.components.push_back(std::move(acc));
    }
    return result;
}

PolyMap realize_factors(const FactorList& list) {
    list.validate();
    PolyMap map = PolyMap::identity(list.dimension);
    for (const ElementaryFactor& factor : list.factors) {
        map = apply_factor(factor, map);
    }
    return map;
}

namespace {

// Upper bound on deg(addend ∘ components) without expanding: substitute
// component degrees into each addend monomial.
Degree substitution_degree_bound(const Polynomial& addend, const PolyMap& map) {
    Degree bound = Degree::minus_infinity();
    for (const auto& term : addend.terms()) {
        Degree term_degree = Degree::finite(0);
        for (int var = 0; var < addend.dimension(); ++var) {
            std::int64_t e = term.monomial.exponent(var);
            if (e == 0) {
                continue;
            }
            Degree d = map.components[static_cast<std::size_t>(var)].total_degree();
            for (std::int64_t k = 0; k < e; ++k) {
                term_degree = term_degree + d;
            }
        }
        bound = max(bound, term_degree);
    }
    return bound;
}

}  // namespace

std::optional<PolyMap> realize_factors_capped(const FactorList& list, std::int64_t cap) {
    list.validate();
    PolyMap map = PolyMap::identity(list.dimension);
    if (cap < 1) {
        return std::nullopt;  // even the identity has degree 1
    }
    for (const ElementaryFactor& factor : list.factors) {
        if (const auto* shear = std::get_if<ShearFactor>(&factor)) {
            Degree bound = substitution_degree_bound(shear->addend(), map);
            if (bound.is_finite() && bound.value() > cap) {
                return std::nullopt;
            }
        }
        map = apply_factor(factor, map);
        for (const Polynomial& component : map.components) {
            Degree d = component.total_degree();
            if (d.is_finite() && d.value() > cap) {
                return std::nullopt;
            }
        }
    }
    return map;
}

std::vector<std::int64_t> multidegree(const PolyMap& map) {
    map.validate();
    std::vector<std::int64_t> degrees;
    degrees.reserve(map.components.size());
    for (const Polynomial& component : map.components) {
        Degree d = component.total_degree();
        if (!d.is_finite()) {
            throw std::domain_error("multidegree undefined: zero component");
        }
        degrees.push_back(d.value());
    }
    return degrees;
}

FactorList invert_factors(const FactorList& list) {
    list.validate();
    FactorList out{list.dimension, {}};
    out.factors.reserve(list.factors.size());
    for (auto it = list.factors.rbegin(); it != list.factors.rend(); ++it) {
        out.factors.push_back(invert_factor(*it));
    }
    return out;
}

bool verify_identity(const PolyMap& map) {
    map.validate();
    for (int i = 0; i < map.dimension; ++i) {
        if (map.components[static_cast<std::size_t>(i)] != Polynomial::variable(map.dimension, i)) {
            return false;
        }
    }
    return true;
}

bool verify_inverse_identity(const FactorList& list) {
    FactorList round_trip = list;
    FactorList inverse = invert_factors(list);
    round_trip.factors.insert(round_trip.factors.end(), inverse.factors.begin(), inverse.factors.end());
    return verify_identity(realize_factors(round_trip));
}

std::int64_t poisson_bracket_degree(const Polynomial& f, const Polynomial& g) {
    require_dimension_match(f.dimension(), g.dimension(), "poisson bracket");
    int n = f.dimension();
    if (n < 2) {
        throw std::invalid_argument("poisson bracket needs at least two variables");
    }
    std::vector<Polynomial> df, dg;
    df.reserve(static_cast<std::size_t>(n));
    dg.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        df.push_back(f.partial(i));
        dg.push_back(g.partial(i));
    }
    Degree best = Degree::minus_infinity();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            Polynomial minor = df[static_cast<std::size_t>(i)] * dg[static_cast<std::size_t>(j)] -
                               df[static_cast<std::size_t>(j)] * dg[static_cast<std::size_t>(i)];
            best = max(best, minor.total_degree());
        }
    }
    if (!best.is_finite()) {
        return 0;  // algebraically dependent pair
    }
    return 2 + best.value();
}

}  // namespace tamedeg
