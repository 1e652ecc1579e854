// Constructive realizability of degree tuples.
//
// Three construction routes, in the order realize() tries them:
//   - a numerical-semigroup representation of one degree over the earlier
//     ones, turned into an explicit two-stage shear factorization,
//   - the two-variable divisibility construction, and
//   - embedding a realizable two-variable sub-tuple into full dimension.
// A returned factorization always realizes the requested multidegree and
// passes inverse-composition verification; realize throws std::logic_error
// if its own output fails that check.

#pragma once

#include "tamedeg/polymap.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace tamedeg {

/// Positive degrees, kept sorted ascending with the original order retained.
class DegreeTuple {
public:
    explicit DegreeTuple(std::vector<std::int64_t> degrees);

    int size() const { return static_cast<int>(original_.size()); }
    const std::vector<std::int64_t>& sorted() const { return sorted_; }
    const std::vector<std::int64_t>& original() const { return original_; }

    /// A permutation pi with sorted[pi[i]] == original[i] (stable on ties).
    const std::vector<int>& permutation() const { return permutation_; }
    bool already_sorted() const;

private:
    std::vector<std::int64_t> original_;
    std::vector<std::int64_t> sorted_;
    std::vector<int> permutation_;
};

/// Nonnegative coefficients expressing one degree in the monoid generated by
/// the earlier ones: sum(coeffs[j] * generators[j]) == target.
struct Representation {
    int target_index;                   // index the target would occupy, 0-based
    std::vector<std::int64_t> coeffs;   // one per generator

    friend bool operator==(const Representation&, const Representation&) = default;
};

/// Lexicographically smallest coefficient vector with
/// sum(coeffs[j] * generators[j]) == target, or nullopt when none exists.
/// Generators must be positive; target must be nonnegative.
std::optional<Representation> semigroup_representation(std::int64_t target,
                                                       std::span<const std::int64_t> generators);

/// Two-variable construction: a two-shear factorization with multidegree
/// (d1, d2) whenever one degree divides the other (by Jung-van der Kulk no
/// automorphism exists otherwise); (1, 1) yields the empty factorization.
std::optional<FactorList> jung_realize_dim2(std::int64_t d1, std::int64_t d2);

/// Representation-based construction over the sorted tuple: picks the
/// smallest index whose degree is representable over the earlier ones and
/// builds the h-then-g shear factorization.
std::optional<FactorList> prop2_realize(const DegreeTuple& degrees);

/// Embedding construction over the sorted tuple: finds a two-element
/// sub-tuple realizable by jung_realize_dim2 and lifts it to full dimension
/// with power shears on the remaining coordinates.
std::optional<FactorList> embed_realize(const DegreeTuple& degrees);

/// Tries prop2_realize, then embed_realize. The result realizes the tuple in
/// its *original* order (a permutation conjugation is appended when the
/// input was unsorted) and is verified before being returned.
std::optional<FactorList> realize(const DegreeTuple& degrees);

}  // namespace tamedeg
