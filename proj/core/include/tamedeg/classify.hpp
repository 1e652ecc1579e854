// Three-valued classification of degree tuples: an explicit verified
// factorization, a re-checked impossibility certificate, or an honest
// UNKNOWN with the first branch of the analysis that could not be excluded.
//
// Dimension 2 is total (divisibility settles every pair); dimension 3
// combines the realizer with the obstruction analysis. Higher dimensions
// are rejected here; the constructive side alone handles them through
// realize().

#pragma once

#include "tamedeg/obstruction.hpp"
#include "tamedeg/realize.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace tamedeg {

enum class VerdictKind { realizable, not_tame, unknown };
const char* to_string(VerdictKind kind);

struct Verdict {
    VerdictKind kind = VerdictKind::unknown;
    std::vector<std::int64_t> sorted_degrees;
    std::optional<FactorList> factors;              // realizable
    std::optional<NotTameCertificate> certificate;  // not_tame
    std::optional<UnknownReason> reason;            // unknown
};

/// Sorts the input and classifies it. Verdicts are permutation-invariant;
/// the factorization attached to a realizable verdict realizes the sorted
/// tuple. Requires 2 or 3 positive entries.
Verdict classify(const std::vector<std::int64_t>& degrees);

struct TableRow {
    std::vector<std::int64_t> degrees;
    Verdict verdict;
};

/// Verdicts for the families (2, d2, d3), (3, 4, d3), (3, 5, d3) and
/// (4, 5, d3) with d3 up to max_d3 (>= 5), each family in ascending order.
std::vector<TableRow> summary_table(std::int64_t max_d3);

}  // namespace tamedeg
