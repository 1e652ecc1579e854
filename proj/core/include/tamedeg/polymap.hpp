// Polynomial endomorphisms of affine n-space and their invertible building
// blocks: exact affine maps and shears (one coordinate shifted by a
// polynomial in the remaining variables). Tame factorizations are lists of
// such factors applied left to right; inversion works on factorizations,
// never on raw maps.

#pragma once

#include "tamedeg/polynomial.hpp"

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

namespace tamedeg {

struct PolyMap {
    int dimension;
    std::vector<Polynomial> components;  // length == dimension, each of that dimension

    static PolyMap identity(int dimension);
    void validate() const;
};

/// x_target ^= x_target + addend, where the addend must not involve the
/// target variable (equivalently, its partial derivative in the target
/// vanishes). Inverse is the sign-flipped shear.
class ShearFactor {
public:
    ShearFactor(int target, Polynomial addend);

    int target() const { return target_; }
    const Polynomial& addend() const { return addend_; }
    int dimension() const { return addend_.dimension(); }

    ShearFactor inverse() const { return ShearFactor(target_, -addend_); }

private:
    int target_;
    Polynomial addend_;
};

/// x ^= M x + shift with an exactly invertible rational matrix.
class AffineFactor {
public:
    AffineFactor(std::vector<std::vector<Rational>> matrix, std::vector<Rational> shift);

    static AffineFactor identity(int dimension);
    /// Coordinate permutation: x_i ^= x_{perm[i]}.
    static AffineFactor permutation(const std::vector<int>& perm);

    int dimension() const { return static_cast<int>(matrix_.size()); }
    const std::vector<std::vector<Rational>>& matrix() const { return matrix_; }
    const std::vector<Rational>& shift() const { return shift_; }

    Rational determinant() const;
    /// Throws std::domain_error when the matrix is singular.
    AffineFactor inverse() const;

private:
    std::vector<std::vector<Rational>> matrix_;
    std::vector<Rational> shift_;
};

using ElementaryFactor = std::variant<AffineFactor, ShearFactor>;

int factor_dimension(const ElementaryFactor& factor);
ElementaryFactor invert_factor(const ElementaryFactor& factor);

struct FactorList {
    int dimension;
    std::vector<ElementaryFactor> factors;  // applied left to right

    static FactorList empty(int dimension) { return FactorList{dimension, {}}; }
    void validate() const;
};

/// The map realized by a single factor.
PolyMap factor_to_map(const ElementaryFactor& factor);

/// Componentwise substitution: result_i = outer_i(inner_1, ..., inner_n).
PolyMap compose_maps(const PolyMap& outer, const PolyMap& inner);

/// compose_maps(factor_to_map(factor), inner), computed without expanding
/// the untouched components.
PolyMap apply_factor(const ElementaryFactor& factor, const PolyMap& inner);

/// Left-to-right composition: [f1, f2, ..., fk] realizes fk ∘ ... ∘ f1.
/// The empty list realizes the identity.
PolyMap realize_factors(const FactorList& list);

/// realize_factors with a per-step degree-bound cutoff: returns nullopt as
/// soon as any intermediate component's degree bound would exceed `cap`.
/// Every map returned has all component degrees <= cap.
std::optional<PolyMap> realize_factors_capped(const FactorList& list, std::int64_t cap);

/// Componentwise total degrees; throws std::domain_error if any component is
/// the zero polynomial.
std::vector<std::int64_t> multidegree(const PolyMap& map);

/// Reversed list of inverted factors, so that realizing `list` and then the
/// result composes to the identity.
FactorList invert_factors(const FactorList& list);

/// True iff every component is exactly the corresponding variable.
bool verify_identity(const PolyMap& map);

/// Realizes list followed by invert_factors(list) and checks the identity.
bool verify_inverse_identity(const FactorList& list);

/// Degree of the Poisson bracket: 2 plus the maximal total degree of the
/// 2x2 Jacobian minors of (f, g), or 0 when every minor vanishes (the pair
/// is algebraically dependent over a field of characteristic zero).
/// Requires at least two variables.
std::int64_t poisson_bracket_degree(const Polynomial& f, const Polynomial& g);

}  // namespace tamedeg
