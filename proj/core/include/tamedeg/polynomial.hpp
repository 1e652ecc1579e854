// Exact sparse multivariate polynomials over the rationals.
//
// Terms are kept in descending graded-lexicographic order with no zero
// coefficients stored, so equal polynomials have equal representations and
// the text form is canonical. Values are immutable after construction and
// every operation is a pure function; sharing across threads is safe.

#pragma once

#include "tamedeg/degree.hpp"
#include "tamedeg/rational.hpp"

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tamedeg {

/// Exponent vector x1^e1 * ... * xn^en. Length equals the ambient dimension;
/// exponent sums are overflow-checked.
class Monomial {
public:
    explicit Monomial(int dimension);
    Monomial(std::initializer_list<std::int64_t> exponents);
    static Monomial unit(int dimension) { return Monomial(dimension); }
    static Monomial variable(int dimension, int var);
    static Monomial from_exponents(std::vector<std::int64_t> exponents);

    int dimension() const { return static_cast<int>(exponents_.size()); }
    std::int64_t exponent(int var) const { return exponents_.at(static_cast<std::size_t>(var)); }
    const std::vector<std::int64_t>& exponents() const { return exponents_; }

    std::int64_t total_degree() const;
    bool is_unit() const;

    /// Componentwise (checked) exponent sum.
    Monomial times(const Monomial& other) const;

    /// Graded-lexicographic comparison: total degree first, then earlier
    /// variables weigh more (x1 > x2 > ... > xn).
    static std::strong_ordering grlex(const Monomial& a, const Monomial& b);

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<std::int64_t> exponents_;
};

class Polynomial {
public:
    struct Term {
        Monomial monomial;
        Rational coefficient;

        friend bool operator==(const Term&, const Term&) = default;
    };

    /// The zero polynomial in `dimension` variables.
    explicit Polynomial(int dimension);

    static Polynomial constant(int dimension, Rational value);
    static Polynomial variable(int dimension, int var);
    static Polynomial monomial(Monomial m, Rational coefficient);
    /// Normalizes arbitrary (monomial, coefficient) pairs: merges duplicates,
    /// drops zeros, sorts.
    static Polynomial from_terms(int dimension, std::vector<Term> terms);

    int dimension() const { return dimension_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;

    Degree total_degree() const;
    Rational coefficient(const Monomial& m) const;
    bool depends_on(int var) const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial scaled(const Rational& factor) const;
    Polynomial pow(std::int64_t exponent) const;

    /// Formal partial derivative with respect to variable `var`.
    Polynomial partial(int var) const;

    /// Substitutes args[i] for variable i and expands. Arity must equal this
    /// polynomial's dimension; all args must share one common dimension,
    /// which becomes the result's dimension.
    Polynomial compose(std::span<const Polynomial> args) const;

    /// Canonical text form, e.g. `3*x1^2*x3 - 1/2*x2`; `0` for zero.
    std::string to_string() const;
    /// Parses the same grammar produced by to_string.
    /// Throws std::invalid_argument on syntax errors or variables beyond
    /// `dimension`.
    static Polynomial parse(std::string_view text, int dimension);

    /// Representation invariant: sorted descending grlex, no zero
    /// coefficients, all monomials of the ambient dimension.
    bool well_formed() const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    // Adopts terms already in canonical form (descending grlex, zero-free).
    static Polynomial adopt(int dimension, std::vector<Term> sorted_terms);
    static Polynomial merged(const Polynomial& a, const Polynomial& b, int sign);

    int dimension_;
    std::vector<Term> terms_;  // descending grlex
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p.scaled(c); }
inline Polynomial operator*(const Polynomial& p, const Rational& c) { return p.scaled(c); }

}  // namespace tamedeg
