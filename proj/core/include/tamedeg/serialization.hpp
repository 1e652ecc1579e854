// Stable JSON document formats for factorizations, certificates, verdicts,
// censuses and tables, plus the re-verification entry point used by the CLI.
//
// Every document carries `schema_version` and `kind`. Polynomials travel in
// the canonical text grammar (`3*x1^2*x3 - 1/2*x2`), rationals as exact
// `p` / `p/q` strings, variable and target indices 1-based to match the
// x1..xn naming. Round-trips are exact.

#pragma once

#include "tamedeg/classify.hpp"
#include "tamedeg/obstruction.hpp"
#include "tamedeg/polymap.hpp"
#include "tamedeg/search.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace tamedeg {

inline constexpr int kSchemaVersion = 1;

/// indent < 0 renders compact single-line JSON.
std::string factor_list_to_json(const FactorList& factors, int indent = -1);
FactorList factor_list_from_json(const std::string& text);

/// Factorization document: requested degrees, factors, the fully expanded
/// map and its multidegree.
std::string factorization_document(const std::vector<std::int64_t>& degrees,
                                   const FactorList& factors, int indent = 2);

std::string certificate_document(const NotTameCertificate& certificate, int indent = 2);
NotTameCertificate certificate_from_json(const std::string& text);

/// Verdict document; embeds the factorization or certificate payload.
/// `requested` is the degree tuple as given (possibly unsorted).
std::string verdict_document(const std::vector<std::int64_t>& requested, const Verdict& verdict,
                             int indent = 2);

std::string census_document(const Census& census, int indent = 2);

std::string table_document(std::int64_t max_d3, const std::vector<TableRow>& rows, int indent = 2);

struct VerifyReport {
    bool ok = false;
    bool malformed = false;  // input was not a checkable document at all
    std::string document_kind;
    std::vector<std::string> notes;     // what was checked
    std::vector<std::string> problems;  // empty iff ok
};

/// Re-checks a serialized document: factorizations are recomposed and tested
/// against the recorded map, multidegree and inverse identity; certificates
/// are recomputed from the degrees; verdict documents check their payload
/// (an unknown verdict is re-classified and compared).
VerifyReport verify_document(const std::string& json_text);

}  // namespace tamedeg
