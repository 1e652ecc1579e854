// mdeg: decide whether a degree tuple is the multidegree of a tame
// automorphism of affine space.
//
// Subcommands:
//   classify   three-valued verdict with certificate or factorization
//   construct  explicit tame factorization and the expanded map
//   verify     re-check a serialized factorization / certificate / verdict
//   search     seeded census of random tame automorphism multidegrees
//   table      verdict table for the 2-, (3,4)-, (3,5)- and (4,5)-families
//
// Exit codes: 0 realizable/verified, 10 not tame, 20 unknown,
//             1 usage or input error, 2 internal verification failure.

#include "tamedeg/classify.hpp"
#include "tamedeg/search.hpp"
#include "tamedeg/serialization.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitRealizable = 0;
constexpr int kExitNotTame = 10;
constexpr int kExitUnknown = 20;
constexpr int kExitUsage = 1;
constexpr int kExitInternal = 2;

constexpr std::int64_t kMaxDegree = 100000;

void check_degrees(const std::vector<std::int64_t>& degrees) {
    for (std::int64_t d : degrees) {
        if (d < 1) {
            throw CLI::ValidationError("degrees", "degrees must be positive");
        }
        if (d > kMaxDegree) {
            throw CLI::ValidationError("degrees", "degrees above " + std::to_string(kMaxDegree) +
                                                      " are not supported");
        }
    }
}

std::string join_degrees(const std::vector<std::int64_t>& degrees) {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        out << (i ? "," : "") << degrees[i];
    }
    out << ")";
    return out.str();
}

void print_factor(const tamedeg::ElementaryFactor& factor, std::ostream& out) {
    if (const auto* shear = std::get_if<tamedeg::ShearFactor>(&factor)) {
        out << "  shear   x" << shear->target() + 1 << " += " << shear->addend().to_string() << "\n";
        return;
    }
    const auto& affine = std::get<tamedeg::AffineFactor>(factor);
    out << "  affine  x <- M*x + b, rows:";
    for (std::size_t i = 0; i < affine.matrix().size(); ++i) {
        out << (i ? " | " : " ");
        for (std::size_t j = 0; j < affine.matrix()[i].size(); ++j) {
            out << (j ? " " : "") << tamedeg::to_string(affine.matrix()[i][j]);
        }
        out << " ; " << tamedeg::to_string(affine.shift()[i]);
    }
    out << "\n";
}

void print_factorization(const tamedeg::FactorList& factors, std::ostream& out) {
    if (factors.factors.empty()) {
        out << "  (empty factorization: the identity map)\n";
    }
    for (const auto& factor : factors.factors) {
        print_factor(factor, out);
    }
    tamedeg::PolyMap map = tamedeg::realize_factors(factors);
    out << "expanded map:\n";
    for (std::size_t i = 0; i < map.components.size(); ++i) {
        out << "  F" << i + 1 << " = " << map.components[i].to_string() << "\n";
    }
}

void print_certificate_summary(const tamedeg::NotTameCertificate& cert, std::ostream& out) {
    if (cert.is_dimension2()) {
        const auto& fact = cert.pair_preconditions.front();
        out << "  " << fact.low << " does not divide " << fact.high << " and " << fact.high
            << " does not divide " << fact.low << " (Jung-van der Kulk)\n";
        return;
    }
    out << "  pair degrees are pairwise non-multiples\n";
    if (cert.type_one_two.no_even_entry) {
        out << "  type I/II: no even degree, pattern impossible\n";
    } else {
        out << "  type I/II: no entry pairs as (2n, n*odd>=3); " << cert.type_one_two.checks.size()
            << " candidate(s) refuted\n";
    }
    out << "  type III/IV: no (2n, 3n, 3n/2) window fits; " << cert.type_three_four.checks.size()
        << " assignment(s) refuted\n";
    for (const auto& report : cert.elementary) {
        out << "  coordinate of degree " << report.t << ": no elementary reduction via pair ("
            << report.n << "," << report.m << ") -- " << report.exclusion_reason << "\n";
    }
}

int run_classify(const std::vector<std::int64_t>& degrees, bool as_json) {
    check_degrees(degrees);
    if (degrees.size() != 2 && degrees.size() != 3) {
        std::cerr << "error: classify needs 2 or 3 degrees (the obstruction analysis is "
                     "dimension-3 specific; use construct for other dimensions)\n";
        return kExitUsage;
    }
    tamedeg::Verdict verdict = tamedeg::classify(degrees);
    if (as_json) {
        std::cout << tamedeg::verdict_document(degrees, verdict) << "\n";
    } else {
        std::cout << "degrees: " << join_degrees(degrees) << " sorted "
                  << join_degrees(verdict.sorted_degrees) << "\n";
        switch (verdict.kind) {
            case tamedeg::VerdictKind::realizable:
                std::cout << "verdict: REALIZABLE (tame factorization found)\n";
                print_factorization(*verdict.factors, std::cout);
                break;
            case tamedeg::VerdictKind::not_tame:
                std::cout << "verdict: NOT_TAME\n";
                print_certificate_summary(*verdict.certificate, std::cout);
                break;
            case tamedeg::VerdictKind::unknown:
                std::cout << "verdict: UNKNOWN (" << tamedeg::to_string(*verdict.reason) << ")\n";
                break;
        }
    }
    switch (verdict.kind) {
        case tamedeg::VerdictKind::realizable:
            return kExitRealizable;
        case tamedeg::VerdictKind::not_tame:
            return kExitNotTame;
        case tamedeg::VerdictKind::unknown:
            return kExitUnknown;
    }
    return kExitInternal;
}

int run_construct(const std::vector<std::int64_t>& degrees, bool as_json) {
    check_degrees(degrees);
    tamedeg::DegreeTuple tuple(degrees);
    auto factors = tamedeg::realize(tuple);
    if (factors) {
        if (as_json) {
            std::cout << tamedeg::factorization_document(degrees, *factors) << "\n";
        } else {
            std::cout << "degrees: " << join_degrees(degrees) << "\n";
            std::cout << "factorization (applied left to right):\n";
            print_factorization(*factors, std::cout);
        }
        return kExitRealizable;
    }
    if (degrees.size() == 2 || degrees.size() == 3) {
        tamedeg::Verdict verdict = tamedeg::classify(degrees);
        if (verdict.kind == tamedeg::VerdictKind::not_tame) {
            std::cerr << "no construction: " << join_degrees(degrees)
                      << " is not the multidegree of any tame automorphism\n";
            return kExitNotTame;
        }
        std::cerr << "no construction found for " << join_degrees(degrees)
                  << "; realizability is unresolved ("
                  << tamedeg::to_string(*verdict.reason) << ")\n";
        return kExitUnknown;
    }
    std::cerr << "no construction found for " << join_degrees(degrees)
              << "; the obstruction analysis does not cover dimension " << degrees.size() << "\n";
    return kExitUnknown;
}

int run_verify(const std::string& path, bool as_json) {
    std::string text;
    if (path.empty() || path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        text = buffer.str();
    } else {
        std::ifstream in(path);
        if (!in) {
            std::cerr << "error: cannot read " << path << "\n";
            return kExitUsage;
        }
        std::ostringstream buffer;
        buffer << in.rdbuf();
        text = buffer.str();
    }
    tamedeg::VerifyReport report = tamedeg::verify_document(text);
    if (as_json) {
        std::ostringstream out;
        out << "{\"kind\":\"verify_report\",\"document_kind\":\"" << report.document_kind
            << "\",\"ok\":" << (report.ok ? "true" : "false") << "}";
        std::cout << out.str() << "\n";
    } else {
        std::cout << "document kind: "
                  << (report.document_kind.empty() ? "?" : report.document_kind) << "\n";
        for (const auto& note : report.notes) {
            std::cout << "  " << note << "\n";
        }
        for (const auto& problem : report.problems) {
            std::cout << "  problem: " << problem << "\n";
        }
        std::cout << (report.ok ? "VERIFIED" : "VERIFICATION FAILED") << "\n";
    }
    if (report.ok) {
        return kExitRealizable;
    }
    return report.malformed ? kExitUsage : kExitInternal;
}

int run_search(const tamedeg::SearchParams& params, bool as_json) {
    tamedeg::Census census = tamedeg::census(params);
    if (as_json) {
        std::cout << tamedeg::census_document(census) << "\n";
    } else {
        std::cout << "census: " << census.total << " samples, " << census.entries.size()
                  << " distinct sorted multidegrees (seed " << params.seed << ")\n";
        for (const auto& entry : census.entries) {
            std::cout << "  " << join_degrees(entry.degrees) << "  x" << entry.count
                      << "  (first at index " << entry.example_index << ")\n";
        }
    }
    return kExitRealizable;
}

int run_table(std::int64_t max_d3, bool as_json) {
    auto rows = tamedeg::summary_table(max_d3);
    if (as_json) {
        std::cout << tamedeg::table_document(max_d3, rows) << "\n";
    } else {
        for (const auto& row : rows) {
            std::cout << join_degrees(row.degrees) << "  " << tamedeg::to_string(row.verdict.kind);
            if (row.verdict.kind == tamedeg::VerdictKind::unknown) {
                std::cout << " (" << tamedeg::to_string(*row.verdict.reason) << ")";
            }
            std::cout << "\n";
        }
    }
    return kExitRealizable;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tame automorphism multidegree classifier"};
    app.require_subcommand(1);

    std::vector<std::int64_t> classify_degrees;
    bool classify_json = false;
    auto* classify_cmd = app.add_subcommand("classify", "classify a degree tuple (dimension 2 or 3)");
    classify_cmd->add_option("degrees", classify_degrees, "degree tuple, e.g. 3 4 5")
        ->required()
        ->expected(-1);
    classify_cmd->add_flag("--json", classify_json, "emit a verdict document");

    std::vector<std::int64_t> construct_degrees;
    bool construct_json = false;
    auto* construct_cmd =
        app.add_subcommand("construct", "build an explicit tame factorization for a degree tuple");
    construct_cmd->add_option("degrees", construct_degrees, "degree tuple (any dimension)")
        ->required()
        ->expected(-1);
    construct_cmd->add_flag("--json", construct_json, "emit a factorization document");

    std::string verify_path;
    bool verify_json = false;
    auto* verify_cmd =
        app.add_subcommand("verify", "re-check a serialized factorization/certificate/verdict");
    verify_cmd->add_option("file", verify_path, "JSON document path ('-' or omitted for stdin)");
    verify_cmd->add_flag("--json", verify_json, "emit a machine-readable report");

    tamedeg::SearchParams params;
    std::int64_t coeff_bound = 3;
    bool search_json = false;
    auto* search_cmd =
        app.add_subcommand("search", "seeded census of random tame automorphism multidegrees");
    search_cmd->add_option("--seed", params.seed, "stream seed (required, no wall-clock default)")
        ->required();
    search_cmd->add_option("--samples", params.sample_count, "number of samples")
        ->check(CLI::Range(std::int64_t{0}, std::int64_t{10000000}))
        ->capture_default_str();
    search_cmd->add_option("--dim", params.dimension, "ambient dimension")
        ->check(CLI::Range(1, 6))
        ->capture_default_str();
    search_cmd->add_option("--max-factors", params.factor_count_max, "factors per sample")
        ->check(CLI::Range(0, 64))
        ->capture_default_str();
    search_cmd->add_option("--max-shear-degree", params.shear_degree_max, "shear addend degree cap")
        ->check(CLI::Range(std::int64_t{0}, std::int64_t{16}))
        ->capture_default_str();
    search_cmd->add_option("--degree-cap", params.degree_cap, "composed map degree cap")
        ->check(CLI::Range(std::int64_t{1}, std::int64_t{200}))
        ->capture_default_str();
    search_cmd->add_option("--coeff-bound", coeff_bound, "coefficients drawn from +-1..bound")
        ->check(CLI::Range(std::int64_t{1}, std::int64_t{100}))
        ->capture_default_str();
    search_cmd->add_option("--retries", params.max_retries, "resampling attempts per index")
        ->check(CLI::Range(1, 1000))
        ->capture_default_str();
    search_cmd->add_flag("--json", search_json, "emit a census document");

    std::int64_t max_d3 = 30;
    bool table_json = false;
    auto* table_cmd = app.add_subcommand("table", "verdicts for the studied degree families");
    table_cmd->add_option("--max", max_d3, "largest d3")
        ->check(CLI::Range(std::int64_t{5}, std::int64_t{500}))
        ->capture_default_str();
    table_cmd->add_flag("--json", table_json, "emit a table document");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (classify_cmd->parsed()) {
            return run_classify(classify_degrees, classify_json);
        }
        if (construct_cmd->parsed()) {
            return run_construct(construct_degrees, construct_json);
        }
        if (verify_cmd->parsed()) {
            return run_verify(verify_path, verify_json);
        }
        if (search_cmd->parsed()) {
            params.coefficient_pool.clear();
            for (std::int64_t c = 1; c <= coeff_bound; ++c) {
                params.coefficient_pool.push_back(-c);
                params.coefficient_pool.push_back(c);
            }
            std::sort(params.coefficient_pool.begin(), params.coefficient_pool.end());
            return run_search(params, search_json);
        }
        if (table_cmd->parsed()) {
            return run_table(max_d3, table_json);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::logic_error& e) {
        std::cerr << "internal verification failure: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
