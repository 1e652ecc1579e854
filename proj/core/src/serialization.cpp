#include "tamedeg/serialization.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace tamedeg {

using nlohmann::json;

namespace {

std::string dump(const json& j, int indent) {
    return indent < 0 ? j.dump() : j.dump(indent);
}

json factor_to_json_obj(const ElementaryFactor& factor) {
    json out;
    if (const auto* shear = std::get_if<ShearFactor>(&factor)) {
        out["kind"] = "shear";
        out["target"] = shear->target() + 1;  // 1-based, matching x1..xn
        out["addend"] = shear->addend().to_string();
        return out;
    }
    const auto& affine = std::get<AffineFactor>(factor);
    out["kind"] = "affine";
    json matrix = json::array();
    for (const auto& row : affine.matrix()) {
        json jrow = json::array();
        for (const Rational& cell : row) {
            jrow.push_back(to_string(cell));
        }
        matrix.push_back(std::move(jrow));
    }
    out["matrix"] = std::move(matrix);
    json shift = json::array();
    for (const Rational& cell : affine.shift()) {
        shift.push_back(to_string(cell));
    }
    out["shift"] = std::move(shift);
    return out;
}

ElementaryFactor factor_from_json_obj(const json& obj, int dimension) {
    const std::string kind = obj.at("kind").get<std::string>();
    if (kind == "shear") {
        int target = obj.at("target").get<int>();
        if (target < 1 || target > dimension) {
            throw std::invalid_argument("shear target out of range in document");
        }
        Polynomial addend = Polynomial::parse(obj.at("addend").get<std::string>(), dimension);
        return ShearFactor(target - 1, std::move(addend));
    }
    if (kind == "affine") {
        std::vector<std::vector<Rational>> matrix;
        for (const auto& jrow : obj.at("matrix")) {
            std::vector<Rational> row;
            for (const auto& cell : jrow) {
                row.push_back(rational_from_string(cell.get<std::string>()));
            }
            matrix.push_back(std::move(row));
        }
        std::vector<Rational> shift;
        for (const auto& cell : obj.at("shift")) {
            shift.push_back(rational_from_string(cell.get<std::string>()));
        }
        if (static_cast<int>(matrix.size()) != dimension) {
            throw std::invalid_argument("affine factor dimension mismatch in document");
        }
        return AffineFactor(std::move(matrix), std::move(shift));
    }
    throw std::invalid_argument("unknown factor kind: " + kind);
}

json factor_list_to_json_obj(const FactorList& factors) {
    json out;
    out["dimension"] = factors.dimension;
    json list = json::array();
    for (const ElementaryFactor& factor : factors.factors) {
        list.push_back(factor_to_json_obj(factor));
    }
    out["factors"] = std::move(list);
    return out;
}

FactorList factor_list_from_json_obj(const json& obj) {
    int dimension = obj.at("dimension").get<int>();
    FactorList out{dimension, {}};
    for (const auto& jfactor : obj.at("factors")) {
        out.factors.push_back(factor_from_json_obj(jfactor, dimension));
    }
    out.validate();
    return out;
}

json polymap_to_json_obj(const PolyMap& map) {
    json components = json::array();
    for (const Polynomial& component : map.components) {
        components.push_back(component.to_string());
    }
    return components;
}

json factorization_payload(const std::vector<std::int64_t>& degrees, const FactorList& factors) {
    PolyMap realized = realize_factors(factors);
    json out;
    out["schema_version"] = kSchemaVersion;
    out["kind"] = "factorization";
    out["degrees"] = degrees;
    out["dimension"] = factors.dimension;
    out["factorization"] = factor_list_to_json_obj(factors);
    out["map"] = polymap_to_json_obj(realized);
    out["multidegree"] = multidegree(realized);
    return out;
}

json reachability_to_json_obj(const ReachabilityReport& report) {
    json out;
    out["target_degree"] = report.t;
    out["pair"] = {report.n, report.m};
    out["p"] = report.p;
    out["cancellation_threshold"] = report.cancellation_threshold;
    out["cancellation_regime"] = report.cancellation_regime;
    json witnesses = json::array();
    for (const auto& [a, b] : report.witnesses) {
        witnesses.push_back({a, b});
    }
    out["witnesses"] = std::move(witnesses);
    out["reachable"] = report.reachable;
    if (!report.reachable) {
        out["exclusion_reason"] = report.exclusion_reason;
    }
    return out;
}

ReachabilityReport reachability_from_json_obj(const json& obj) {
    ReachabilityReport report;
    report.t = obj.at("target_degree").get<std::int64_t>();
    report.n = obj.at("pair").at(0).get<std::int64_t>();
    report.m = obj.at("pair").at(1).get<std::int64_t>();
    report.p = obj.at("p").get<std::int64_t>();
    report.cancellation_threshold = obj.at("cancellation_threshold").get<std::int64_t>();
    report.cancellation_regime = obj.at("cancellation_regime").get<bool>();
    for (const auto& w : obj.at("witnesses")) {
        report.witnesses.emplace_back(w.at(0).get<std::int64_t>(), w.at(1).get<std::int64_t>());
    }
    report.reachable = obj.at("reachable").get<bool>();
    if (obj.contains("exclusion_reason")) {
        report.exclusion_reason = obj.at("exclusion_reason").get<std::string>();
    }
    return report;
}

json certificate_payload(const NotTameCertificate& certificate) {
    json out;
    out["schema_version"] = kSchemaVersion;
    out["kind"] = "certificate";
    out["family"] =
        certificate.is_dimension2() ? "dimension2_divisibility" : "dimension3_reduction_exclusion";
    out["degrees"] = certificate.degrees;
    json pairs = json::array();
    for (const PairFact& fact : certificate.pair_preconditions) {
        pairs.push_back({{"low", fact.low},
                         {"high", fact.high},
                         {"low_divides_high", fact.low_divides_high},
                         {"high_divides_low", fact.high_divides_low}});
    }
    out["pair_preconditions"] = std::move(pairs);
    if (certificate.is_dimension2()) {
        return out;
    }
    json one_two;
    one_two["no_even_entry"] = certificate.type_one_two.no_even_entry;
    json checks = json::array();
    for (const TypeOneTwoCheck& check : certificate.type_one_two.checks) {
        checks.push_back({{"even_degree", check.even_degree},
                          {"half", check.half},
                          {"partner", check.partner},
                          {"failure", to_string(check.failure)}});
    }
    one_two["checks"] = std::move(checks);
    out["type_I_II_excluded"] = std::move(one_two);

    json three_four;
    three_four["no_even_entry"] = certificate.type_three_four.no_even_entry;
    json checks34 = json::array();
    for (const TypeThreeFourCheck& check : certificate.type_three_four.checks) {
        checks34.push_back({{"even_degree", check.even_degree},
                            {"half", check.half},
                            {"second", check.second},
                            {"third", check.third},
                            {"row1_matches", check.row1_matches},
                            {"row2_matches", check.row2_matches},
                            {"row1_reason", check.row1_reason},
                            {"row2_reason", check.row2_reason}});
    }
    three_four["checks"] = std::move(checks34);
    out["type_III_IV_excluded"] = std::move(three_four);

    json elementary = json::array();
    for (const ReachabilityReport& report : certificate.elementary) {
        elementary.push_back(reachability_to_json_obj(report));
    }
    out["elementary_excluded"] = std::move(elementary);
    return out;
}

DegreePatternFail pattern_fail_from_string(const std::string& text) {
    if (text == "not_divisible") {
        return DegreePatternFail::not_divisible;
    }
    if (text == "quotient_even") {
        return DegreePatternFail::quotient_even;
    }
    if (text == "quotient_below_three") {
        return DegreePatternFail::quotient_below_three;
    }
    throw std::invalid_argument("unknown pattern failure: " + text);
}

NotTameCertificate certificate_from_json_obj(const json& obj) {
    NotTameCertificate certificate;
    certificate.degrees = obj.at("degrees").get<std::vector<std::int64_t>>();
    for (const auto& jp : obj.at("pair_preconditions")) {
        certificate.pair_preconditions.push_back(PairFact{jp.at("low").get<std::int64_t>(),
                                                          jp.at("high").get<std::int64_t>(),
                                                          jp.at("low_divides_high").get<bool>(),
                                                          jp.at("high_divides_low").get<bool>()});
    }
    if (certificate.is_dimension2()) {
        return certificate;
    }
    const json& one_two = obj.at("type_I_II_excluded");
    certificate.type_one_two.no_even_entry = one_two.at("no_even_entry").get<bool>();
    for (const auto& jc : one_two.at("checks")) {
        certificate.type_one_two.checks.push_back(
            TypeOneTwoCheck{jc.at("even_degree").get<std::int64_t>(), jc.at("half").get<std::int64_t>(),
                            jc.at("partner").get<std::int64_t>(),
                            pattern_fail_from_string(jc.at("failure").get<std::string>())});
    }
    const json& three_four = obj.at("type_III_IV_excluded");
    certificate.type_three_four.no_even_entry = three_four.at("no_even_entry").get<bool>();
    for (const auto& jc : three_four.at("checks")) {
        TypeThreeFourCheck check;
        check.even_degree = jc.at("even_degree").get<std::int64_t>();
        check.half = jc.at("half").get<std::int64_t>();
        check.second = jc.at("second").get<std::int64_t>();
        check.third = jc.at("third").get<std::int64_t>();
        check.row1_matches = jc.at("row1_matches").get<bool>();
        check.row2_matches = jc.at("row2_matches").get<bool>();
        check.row1_reason = jc.at("row1_reason").get<std::string>();
        check.row2_reason = jc.at("row2_reason").get<std::string>();
        certificate.type_three_four.checks.push_back(std::move(check));
    }
    for (const auto& jr : obj.at("elementary_excluded")) {
        certificate.elementary.push_back(reachability_from_json_obj(jr));
    }
    return certificate;
}

json verdict_payload(const std::vector<std::int64_t>& requested, const Verdict& verdict) {
    json out;
    out["schema_version"] = kSchemaVersion;
    out["kind"] = "verdict";
    out["degrees"] = requested;
    out["sorted_degrees"] = verdict.sorted_degrees;
    out["verdict"] = to_string(verdict.kind);
    switch (verdict.kind) {
        case VerdictKind::realizable:
            out["factorization_document"] =
                factorization_payload(verdict.sorted_degrees, *verdict.factors);
            break;
        case VerdictKind::not_tame:
            out["certificate_document"] = certificate_payload(*verdict.certificate);
            break;
        case VerdictKind::unknown:
            out["reason"] = to_string(*verdict.reason);
            break;
    }
    return out;
}

// --- verification helpers ---------------------------------------------------

void verify_factorization_payload(const json& doc, VerifyReport& report) {
    FactorList factors = factor_list_from_json_obj(doc.at("factorization"));
    PolyMap realized = realize_factors(factors);
    auto degrees = doc.at("degrees").get<std::vector<std::int64_t>>();
    auto recorded_multidegree = doc.at("multidegree").get<std::vector<std::int64_t>>();
    std::vector<std::int64_t> actual = multidegree(realized);
    if (actual != recorded_multidegree) {
        report.problems.push_back("recomposed multidegree differs from the recorded one");
    }
    if (actual != degrees) {
        report.problems.push_back("realized multidegree differs from the requested degrees");
    }
    const json& recorded_map = doc.at("map");
    if (recorded_map.size() != realized.components.size()) {
        report.problems.push_back("recorded map has the wrong number of components");
    } else {
        for (std::size_t i = 0; i < realized.components.size(); ++i) {
            Polynomial recorded =
                Polynomial::parse(recorded_map.at(i).get<std::string>(), factors.dimension);
            if (recorded != realized.components[i]) {
                report.problems.push_back("component " + std::to_string(i + 1) +
                                          " differs from the recomposed map");
            }
        }
    }
    if (!verify_inverse_identity(factors)) {
        report.problems.push_back("factor list composed with its inverse is not the identity");
    }
    report.notes.push_back("recomposed " + std::to_string(factors.factors.size()) +
                           " factors and checked map, multidegree and inverse identity");
}

void verify_certificate_payload(const json& doc, VerifyReport& report) {
    NotTameCertificate certificate = certificate_from_json_obj(doc);
    CertificateCheck check = verify_certificate(certificate);
    for (const std::string& problem : check.problems) {
        report.problems.push_back(problem);
    }
    report.notes.push_back("recomputed certificate evidence from the degrees");
}

void verify_verdict_payload(const json& doc, VerifyReport& report) {
    const std::string verdict = doc.at("verdict").get<std::string>();
    auto degrees = doc.at("degrees").get<std::vector<std::int64_t>>();
    if (verdict == "realizable") {
        verify_factorization_payload(doc.at("factorization_document"), report);
    } else if (verdict == "not_tame") {
        verify_certificate_payload(doc.at("certificate_document"), report);
    } else if (verdict == "unknown") {
        Verdict fresh = classify(degrees);
        if (fresh.kind != VerdictKind::unknown) {
            report.problems.push_back("re-classification no longer yields unknown");
        } else if (doc.contains("reason") &&
                   doc.at("reason").get<std::string>() != to_string(*fresh.reason)) {
            report.problems.push_back("re-classification yields a different unknown reason");
        }
        report.notes.push_back("re-classified the tuple");
    } else {
        report.problems.push_back("unknown verdict value: " + verdict);
    }
}

}  // namespace

std::string factor_list_to_json(const FactorList& factors, int indent) {
    return dump(factor_list_to_json_obj(factors), indent);
}

FactorList factor_list_from_json(const std::string& text) {
    return factor_list_from_json_obj(json::parse(text));
}

std::string factorization_document(const std::vector<std::int64_t>& degrees,
                                   const FactorList& factors, int indent) {
    return dump(factorization_payload(degrees, factors), indent);
}

std::string certificate_document(const NotTameCertificate& certificate, int indent) {
    return dump(certificate_payload(certificate), indent);
}

NotTameCertificate certificate_from_json(const std::string& text) {
    return certificate_from_json_obj(json::parse(text));
}

std::string verdict_document(const std::vector<std::int64_t>& requested, const Verdict& verdict,
                             int indent) {
    return dump(verdict_payload(requested, verdict), indent);
}

std::string census_document(const Census& census, int indent) {
    json out;
    out["schema_version"] = kSchemaVersion;
    out["kind"] = "census";
    json params;
    params["dimension"] = census.params.dimension;
    params["factor_count_max"] = census.params.factor_count_max;
    params["shear_degree_max"] = census.params.shear_degree_max;
    params["coefficient_pool"] = census.params.coefficient_pool;
    params["sample_count"] = census.params.sample_count;
    params["seed"] = census.params.seed;
    params["degree_cap"] = census.params.degree_cap;
    params["max_retries"] = census.params.max_retries;
    out["params"] = std::move(params);
    out["total_samples"] = census.total;
    out["distinct_tuples"] = census.entries.size();
    json entries = json::array();
    for (const CensusEntry& entry : census.entries) {
        entries.push_back({{"degrees", entry.degrees},
                           {"count", entry.count},
                           {"example_index", entry.example_index}});
    }
    out["entries"] = std::move(entries);
    return dump(out, indent);
}

std::string table_document(std::int64_t max_d3, const std::vector<TableRow>& rows, int indent) {
    json out;
    out["schema_version"] = kSchemaVersion;
    out["kind"] = "table";
    out["max_d3"] = max_d3;
    json jrows = json::array();
    for (const TableRow& row : rows) {
        json jrow;
        jrow["degrees"] = row.degrees;
        jrow["verdict"] = to_string(row.verdict.kind);
        if (row.verdict.kind == VerdictKind::unknown) {
            jrow["reason"] = to_string(*row.verdict.reason);
        }
        jrows.push_back(std::move(jrow));
    }
    out["rows"] = std::move(jrows);
    return dump(out, indent);
}

VerifyReport verify_document(const std::string& json_text) {
    VerifyReport report;
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        report.malformed = true;
        report.problems.push_back(std::string("not valid JSON: ") + e.what());
        return report;
    }
    try {
        if (!doc.contains("kind")) {
            report.malformed = true;
            report.problems.push_back("document has no 'kind' field");
            return report;
        }
        report.document_kind = doc.at("kind").get<std::string>();
        if (doc.contains("schema_version") && doc.at("schema_version").get<int>() != kSchemaVersion) {
            report.malformed = true;
            report.problems.push_back("unsupported schema_version");
            return report;
        }
        if (report.document_kind == "factorization") {
            verify_factorization_payload(doc, report);
        } else if (report.document_kind == "certificate") {
            verify_certificate_payload(doc, report);
        } else if (report.document_kind == "verdict") {
            verify_verdict_payload(doc, report);
        } else {
            report.malformed = true;
            report.problems.push_back("unverifiable document kind: " + report.document_kind);
        }
    } catch (const std::exception& e) {
        report.malformed = true;
        report.problems.push_back(std::string("malformed document: ") + e.what());
    }
    report.ok = report.problems.empty();
    return report;
}

}  // namespace tamedeg
