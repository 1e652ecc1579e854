#include "tamedeg/classify.hpp"

#include <stdexcept>

namespace tamedeg {

const char* to_string(VerdictKind kind) {
    switch (kind) {
        case VerdictKind::realizable:
            return "realizable";
        case VerdictKind::not_tame:
            return "not_tame";
        case VerdictKind::unknown:
            return "unknown";
    }
    return "unknown";
}

Verdict classify(const std::vector<std::int64_t>& degrees) {
    if (degrees.size() != 2 && degrees.size() != 3) {
        throw std::invalid_argument("classification covers dimensions 2 and 3 only");
    }
    DegreeTuple tuple(degrees);
    DegreeTuple canonical(tuple.sorted());

    Verdict verdict;
    verdict.sorted_degrees = canonical.sorted();
    if (auto factors = realize(canonical)) {
        verdict.kind = VerdictKind::realizable;
        verdict.factors = std::move(*factors);
        return verdict;
    }
    if (degrees.size() == 2) {
        // Divisibility failed (otherwise realize would have succeeded), so by
        // Jung-van der Kulk no automorphism at all carries this pair.
        verdict.kind = VerdictKind::not_tame;
        verdict.certificate = dim2_certificate(verdict.sorted_degrees[0], verdict.sorted_degrees[1]);
        return verdict;
    }
    std::array<std::int64_t, 3> sorted{verdict.sorted_degrees[0], verdict.sorted_degrees[1],
                                       verdict.sorted_degrees[2]};
    ObstructionOutcome outcome = analyze_not_tame(sorted);
    if (outcome.certificate) {
        CertificateCheck check = verify_certificate(*outcome.certificate);
        if (!check.ok) {
            throw std::logic_error("freshly produced certificate failed re-verification");
        }
        verdict.kind = VerdictKind::not_tame;
        verdict.certificate = std::move(outcome.certificate);
        return verdict;
    }
    verdict.kind = VerdictKind::unknown;
    verdict.reason = outcome.failure;
    return verdict;
}

std::vector<TableRow> summary_table(std::int64_t max_d3) {
    if (max_d3 < 5) {
        throw std::invalid_argument("summary table needs max_d3 >= 5");
    }
    std::vector<TableRow> rows;
    for (std::int64_t d2 = 2; d2 <= max_d3; ++d2) {
        for (std::int64_t d3 = d2; d3 <= max_d3; ++d3) {
            rows.push_back({{2, d2, d3}, classify({2, d2, d3})});
        }
    }
    for (std::int64_t d3 = 4; d3 <= max_d3; ++d3) {
        rows.push_back({{3, 4, d3}, classify({3, 4, d3})});
    }
    for (std::int64_t d3 = 5; d3 <= max_d3; ++d3) {
        rows.push_back({{3, 5, d3}, classify({3, 5, d3})});
    }
    for (std::int64_t d3 = 5; d3 <= max_d3; ++d3) {
        rows.push_back({{4, 5, d3}, classify({4, 5, d3})});
    }
    return rows;
}

}  // namespace tamedeg
