#include "tamedeg/obstruction.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tamedeg {

BoundParams BoundParams::for_pair(std::int64_t n, std::int64_t m, std::int64_t deg_y,
                                  std::int64_t bracket_lb) {
    if (n < 1 || m < n) {
        throw std::invalid_argument("bound parameters need 1 <= n <= m");
    }
    if (deg_y < 0) {
        throw std::invalid_argument("deg_y must be nonnegative");
    }
    std::int64_t p = n / std::gcd(n, m);
    BoundParams params{n, m, p, deg_y / p, deg_y % p, bracket_lb};
    params.validate();
    return params;
}

void BoundParams::validate() const {
    if (n < 1 || m < n) {
        throw std::invalid_argument("bound parameters need 1 <= n <= m");
    }
    if (p < 1 || q < 0 || r < 0 || r >= p) {
        throw std::invalid_argument("bound parameters need p >= 1, q >= 0, 0 <= r < p");
    }
    if (bracket_lb < 2) {
        throw std::invalid_argument("bracket lower bound must be at least 2");
    }
}

std::int64_t su_lower_bound(const BoundParams& params) {
    params.validate();
    return params.q * (params.p * params.m - params.m - params.n + params.bracket_lb) +
           params.r * params.m;
}

bool pair_precondition(std::int64_t da, std::int64_t db) {
    if (da < 1 || db < 1) {
        throw std::invalid_argument("degrees must be positive");
    }
    return da % db != 0 && db % da != 0;
}

ReachabilityReport elementary_reachable(std::int64_t n, std::int64_t m, std::int64_t t) {
    if (n > m) {
        throw std::invalid_argument("elementary_reachable needs n <= m");
    }
    if (!pair_precondition(n, m)) {
        throw std::invalid_argument("elementary_reachable needs the pair precondition");
    }
    if (t < 1) {
        throw std::invalid_argument("target degree must be positive");
    }
    ReachabilityReport report;
    report.n = n;
    report.m = m;
    report.t = t;
    report.p = n / std::gcd(n, m);
    report.cancellation_threshold =
        su_lower_bound(BoundParams{n, m, report.p, 1, 0, 2});
    report.cancellation_regime = t >= report.cancellation_threshold;
    for (std::int64_t b = 0; b * m <= t; ++b) {
        std::int64_t rem = t - b * m;
        if (rem % n != 0) {
            continue;
        }
        BoundParams params{n, m, report.p, b / report.p, b % report.p, 2};
        if (su_lower_bound(params) <= t) {
            report.witnesses.emplace_back(rem / n, b);
        }
    }
    report.reachable = !report.witnesses.empty() || report.cancellation_regime;
    if (!report.reachable) {
        std::ostringstream reason;
        reason << "no a, b >= 0 with a*" << n << " + b*" << m << " = " << t
               << " admitted by the degree bound, and " << t << " < " << report.cancellation_threshold
               << " forces deg_y G < " << report.p << " (no leading-form cancellation)";
        report.exclusion_reason = reason.str();
    }
    return report;
}

const char* to_string(DegreePatternFail fail) {
    switch (fail) {
        case DegreePatternFail::not_divisible:
            return "not_divisible";
        case DegreePatternFail::quotient_even:
            return "quotient_even";
        case DegreePatternFail::quotient_below_three:
            return "quotient_below_three";
    }
    return "unknown";
}

namespace {

void require_sorted_triple(const std::array<std::int64_t, 3>& d) {
    if (d[0] < 1 || d[0] > d[1] || d[1] > d[2]) {
        throw std::invalid_argument("expected a sorted triple of positive degrees");
    }
}

}  // namespace

std::optional<TypeOneTwoEvidence> type_I_II_excluded(const std::array<std::int64_t, 3>& sorted) {
    require_sorted_triple(sorted);
    TypeOneTwoEvidence evidence;
    bool any_even = false;
    for (int u = 0; u < 3; ++u) {
        if (sorted[static_cast<std::size_t>(u)] % 2 != 0) {
            continue;
        }
        any_even = true;
        std::int64_t half = sorted[static_cast<std::size_t>(u)] / 2;
        for (int v = 0; v < 3; ++v) {
            if (v == u) {
                continue;
            }
            std::int64_t partner = sorted[static_cast<std::size_t>(v)];
            TypeOneTwoCheck check{sorted[static_cast<std::size_t>(u)], half, partner,
                                  DegreePatternFail::not_divisible};
            if (partner % half != 0) {
                check.failure = DegreePatternFail::not_divisible;
            } else {
                std::int64_t s = partner / half;
                if (s % 2 == 0) {
                    check.failure = DegreePatternFail::quotient_even;
                } else if (s < 3) {
                    check.failure = DegreePatternFail::quotient_below_three;
                } else {
                    return std::nullopt;  // pattern matches: 2n alongside n*s, s >= 3 odd
                }
            }
            evidence.checks.push_back(check);
        }
    }
    evidence.no_even_entry = !any_even;
    return evidence;
}

std::optional<TypeThreeFourEvidence> type_III_IV_excluded(const std::array<std::int64_t, 3>& sorted) {
    require_sorted_triple(sorted);
    TypeThreeFourEvidence evidence;
    bool any_even = false;
    for (int u = 0; u < 3; ++u) {
        if (sorted[static_cast<std::size_t>(u)] % 2 != 0) {
            continue;
        }
        any_even = true;
        std::int64_t n = sorted[static_cast<std::size_t>(u)] / 2;
        int rest[2];
        int w = 0;
        for (int v = 0; v < 3; ++v) {
            if (v != u) {
                rest[w++] = v;
            }
        }
        for (int assignment = 0; assignment < 2; ++assignment) {
            std::int64_t second = sorted[static_cast<std::size_t>(rest[assignment])];
            std::int64_t third = sorted[static_cast<std::size_t>(rest[1 - assignment])];
            TypeThreeFourCheck check;
            check.even_degree = sorted[static_cast<std::size_t>(u)];
            check.half = n;
            check.second = second;
            check.third = third;
            // Row 1: second == 3n and n < third <= 3n/2.
            if (second != 3 * n) {
                check.row1_reason = "second != 3n";
            } else if (third <= n) {
                check.row1_reason = "third <= n";
            } else if (2 * third > 3 * n) {
                check.row1_reason = "third > 3n/2";
            } else {
                check.row1_matches = true;
            }
            // Row 2: 5n/2 < second <= 3n and third == 3n/2.
            if (2 * second <= 5 * n) {
                check.row2_reason = "second <= 5n/2";
            } else if (second > 3 * n) {
                check.row2_reason = "second > 3n";
            } else if (2 * third != 3 * n) {
                check.row2_reason = "third != 3n/2";
            } else {
                check.row2_matches = true;
            }
            if (check.row1_matches || check.row2_matches) {
                return std::nullopt;
            }
            evidence.checks.push_back(std::move(check));
        }
    }
    evidence.no_even_entry = !any_even;
    return evidence;
}

const char* to_string(UnknownReason reason) {
    switch (reason) {
        case UnknownReason::precondition_failed:
            return "precondition_failed";
        case UnknownReason::pattern_match_I_II:
            return "pattern_match_I_II";
        case UnknownReason::pattern_match_III_IV:
            return "pattern_match_III_IV";
        case UnknownReason::reachable_coordinate:
            return "reachable_coordinate";
    }
    return "unknown";
}

namespace {

PairFact make_pair_fact(std::int64_t low, std::int64_t high) {
    return PairFact{low, high, high % low == 0, low % high == 0};
}

}  // namespace

ObstructionOutcome analyze_not_tame(const std::array<std::int64_t, 3>& sorted) {
    require_sorted_triple(sorted);
    ObstructionOutcome outcome;
    NotTameCertificate certificate;
    certificate.degrees.assign(sorted.begin(), sorted.end());
    constexpr int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    for (const auto& pair : pairs) {
        PairFact fact = make_pair_fact(sorted[static_cast<std::size_t>(pair[0])],
                                       sorted[static_cast<std::size_t>(pair[1])]);
        certificate.pair_preconditions.push_back(fact);
        if (fact.low_divides_high || fact.high_divides_low) {
            outcome.failure = UnknownReason::precondition_failed;
            return outcome;
        }
    }
    auto one_two = type_I_II_excluded(sorted);
    if (!one_two) {
        outcome.failure = UnknownReason::pattern_match_I_II;
        return outcome;
    }
    certificate.type_one_two = std::move(*one_two);
    auto three_four = type_III_IV_excluded(sorted);
    if (!three_four) {
        outcome.failure = UnknownReason::pattern_match_III_IV;
        return outcome;
    }
    certificate.type_three_four = std::move(*three_four);
    for (int i = 0; i < 3; ++i) {
        std::int64_t others[2];
        int w = 0;
        for (int v = 0; v < 3; ++v) {
            if (v != i) {
                others[w++] = sorted[static_cast<std::size_t>(v)];
            }
        }
        std::int64_t lo = std::min(others[0], others[1]);
        std::int64_t hi = std::max(others[0], others[1]);
        ReachabilityReport report = elementary_reachable(lo, hi, sorted[static_cast<std::size_t>(i)]);
        if (report.reachable) {
            outcome.failure = UnknownReason::reachable_coordinate;
            return outcome;
        }
        certificate.elementary.push_back(std::move(report));
    }
    outcome.certificate = std::move(certificate);
    return outcome;
}

std::optional<NotTameCertificate> not_tame_check(const std::array<std::int64_t, 3>& sorted) {
    return analyze_not_tame(sorted).certificate;
}

NotTameCertificate dim2_certificate(std::int64_t d1, std::int64_t d2) {
    std::int64_t lo = std::min(d1, d2);
    std::int64_t hi = std::max(d1, d2);
    if (lo < 1) {
        throw std::invalid_argument("degrees must be positive");
    }
    PairFact fact = make_pair_fact(lo, hi);
    if (fact.low_divides_high || fact.high_divides_low) {
        throw std::invalid_argument("a divisible pair is realizable; no certificate exists");
    }
    NotTameCertificate certificate;
    certificate.degrees = {lo, hi};
    certificate.pair_preconditions.push_back(fact);
    return certificate;
}

CertificateCheck verify_certificate(const NotTameCertificate& certificate) {
    CertificateCheck check;
    auto problem = [&](const std::string& message) { check.problems.push_back(message); };
    const auto& d = certificate.degrees;
    if (d.size() == 2) {
        if (d[0] < 1 || d[0] > d[1]) {
            problem("degrees are not a sorted pair of positive integers");
            return check;
        }
        NotTameCertificate expected;
        try {
            expected = dim2_certificate(d[0], d[1]);
        } catch (const std::invalid_argument& e) {
            problem(e.what());
            return check;
        }
        if (certificate != expected) {
            problem("divisibility facts do not match the degrees");
        }
        check.ok = check.problems.empty();
        return check;
    }
    if (d.size() != 3) {
        problem("certificate must cover a pair or a triple of degrees");
        return check;
    }
    std::array<std::int64_t, 3> sorted{d[0], d[1], d[2]};
    if (d[0] < 1 || d[0] > d[1] || d[1] > d[2]) {
        problem("degrees are not a sorted triple of positive integers");
        return check;
    }
    ObstructionOutcome expected = analyze_not_tame(sorted);
    if (!expected.certificate) {
        problem(std::string("re-analysis does not certify this triple: ") +
                to_string(*expected.failure));
        return check;
    }
    if (certificate.pair_preconditions != expected.certificate->pair_preconditions) {
        problem("pair precondition facts do not match the degrees");
    }
    if (certificate.type_one_two != expected.certificate->type_one_two) {
        problem("type I/II evidence does not match the degrees");
    }
    if (certificate.type_three_four != expected.certificate->type_three_four) {
        problem("type III/IV evidence does not match the degrees");
    }
    if (certificate.elementary != expected.certificate->elementary) {
        problem("elementary reachability reports do not match the degrees");
    }
    for (const ReachabilityReport& report : certificate.elementary) {
        if (report.reachable) {
            problem("certificate contains a reachable coordinate");
        }
    }
    check.ok = check.problems.empty();
    return check;
}

}  // namespace tamedeg
