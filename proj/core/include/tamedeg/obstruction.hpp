// Impossibility certificates for degree triples.
//
// Mechanizes the degree-estimate proof pattern: a lower bound on deg G(f,g)
// for pairs with non-multiple degrees, the type I/II and III/IV degree
// pattern exclusions, and a per-coordinate reachability analysis showing no
// elementary reduction can exist. A certificate is emitted only when every
// branch of the dichotomy is excluded; each certificate is self-contained
// and re-checkable from the degrees alone.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tamedeg {

/// Input to the degree estimate: a pair with degrees n <= m, p = n / gcd(n,m),
/// the decomposition deg_y G = p*q + r with 0 <= r < p, and a lower bound on
/// the Poisson bracket degree (2 is the universally valid choice for
/// component pairs of an automorphism).
struct BoundParams {
    std::int64_t n = 1;
    std::int64_t m = 1;
    std::int64_t p = 1;
    std::int64_t q = 0;
    std::int64_t r = 0;
    std::int64_t bracket_lb = 2;

    static BoundParams for_pair(std::int64_t n, std::int64_t m, std::int64_t deg_y,
                                std::int64_t bracket_lb = 2);
    void validate() const;
};

/// q * (p*m - m - n + bracket_lb) + r * m.
std::int64_t su_lower_bound(const BoundParams& params);

/// True iff neither degree is a positive multiple of the other. This is the
/// degree-level guarantee that the leading form of one component cannot be a
/// polynomial in the other's.
bool pair_precondition(std::int64_t da, std::int64_t db);

/// Can deg G(f, g) == t occur for some polynomial G when deg f == n,
/// deg g == m? Unreachability is certified in two regimes:
///  - every value t = a*n + b*m admitted by the degree bound is enumerated
///    as a witness (none exists), and
///  - t lies below the q = 1 bound (`cancellation_threshold`), so the shape
///    of G is forced to deg_y G < p where distinct y-powers occupy distinct
///    residues mod n and no leading-form cancellation can reach a
///    non-combination degree.
/// A t at or above the threshold is always reported reachable: degree
/// arithmetic alone cannot exclude it.
struct ReachabilityReport {
    std::int64_t n = 0;
    std::int64_t m = 0;
    std::int64_t t = 0;
    std::int64_t p = 1;
    std::int64_t cancellation_threshold = 0;
    bool cancellation_regime = false;
    std::vector<std::pair<std::int64_t, std::int64_t>> witnesses;
    bool reachable = false;
    std::string exclusion_reason;  // set iff !reachable

    friend bool operator==(const ReachabilityReport&, const ReachabilityReport&) = default;
};

/// Requires n <= m, pair_precondition(n, m) and t >= 1; throws
/// std::invalid_argument otherwise (callers must treat that as UNKNOWN,
/// never as exclusion).
ReachabilityReport elementary_reachable(std::int64_t n, std::int64_t m, std::int64_t t);

enum class DegreePatternFail {
    not_divisible,        // partner is not a multiple of half
    quotient_even,        // partner / half is even
    quotient_below_three  // partner / half is 1
};
const char* to_string(DegreePatternFail fail);

struct TypeOneTwoCheck {
    std::int64_t even_degree = 0;  // the candidate 2n entry
    std::int64_t half = 0;         // n
    std::int64_t partner = 0;      // candidate n*s entry
    DegreePatternFail failure = DegreePatternFail::not_divisible;

    friend bool operator==(const TypeOneTwoCheck&, const TypeOneTwoCheck&) = default;
};

struct TypeOneTwoEvidence {
    bool no_even_entry = false;
    std::vector<TypeOneTwoCheck> checks;

    friend bool operator==(const TypeOneTwoEvidence&, const TypeOneTwoEvidence&) = default;
};

/// Exclusion of the type I/II degree pattern (2n paired with n*s, s >= 3
/// odd): evidence when no entry choice matches, nullopt when some does.
std::optional<TypeOneTwoEvidence> type_I_II_excluded(const std::array<std::int64_t, 3>& sorted);

struct TypeThreeFourCheck {
    std::int64_t even_degree = 0;  // 2n
    std::int64_t half = 0;         // n
    std::int64_t second = 0;       // assigned deg F_sigma(2)
    std::int64_t third = 0;        // assigned deg F_sigma(3)
    bool row1_matches = false;     // second == 3n and n < third <= 3n/2
    bool row2_matches = false;     // 5n/2 < second <= 3n and third == 3n/2
    std::string row1_reason;
    std::string row2_reason;

    friend bool operator==(const TypeThreeFourCheck&, const TypeThreeFourCheck&) = default;
};

struct TypeThreeFourEvidence {
    bool no_even_entry = false;
    std::vector<TypeThreeFourCheck> checks;

    friend bool operator==(const TypeThreeFourEvidence&, const TypeThreeFourEvidence&) = default;
};

/// Exclusion of the type III/IV degree patterns; comparisons against 3n/2
/// and 5n/2 are exact (cross-multiplied), never truncated.
std::optional<TypeThreeFourEvidence> type_III_IV_excluded(const std::array<std::int64_t, 3>& sorted);

struct PairFact {
    std::int64_t low = 0;
    std::int64_t high = 0;
    bool low_divides_high = false;
    bool high_divides_low = false;

    friend bool operator==(const PairFact&, const PairFact&) = default;
};

/// Everything a checker needs to re-derive the NOT-TAME verdict. For degree
/// pairs (dimension 2) only the divisibility facts are populated; for
/// triples every branch of the reduction dichotomy is recorded.
struct NotTameCertificate {
    std::vector<std::int64_t> degrees;  // sorted ascending; size 2 or 3
    std::vector<PairFact> pair_preconditions;
    TypeOneTwoEvidence type_one_two;
    TypeThreeFourEvidence type_three_four;
    std::vector<ReachabilityReport> elementary;  // one per coordinate, ascending

    bool is_dimension2() const { return degrees.size() == 2; }

    friend bool operator==(const NotTameCertificate&, const NotTameCertificate&) = default;
};

enum class UnknownReason {
    precondition_failed,
    pattern_match_I_II,
    pattern_match_III_IV,
    reachable_coordinate
};
const char* to_string(UnknownReason reason);

struct ObstructionOutcome {
    std::optional<NotTameCertificate> certificate;
    std::optional<UnknownReason> failure;  // set iff certificate is absent
};

/// Runs the full exclusion analysis on a sorted triple. The caller is
/// responsible for having ruled out constructive realizability first.
ObstructionOutcome analyze_not_tame(const std::array<std::int64_t, 3>& sorted);

std::optional<NotTameCertificate> not_tame_check(const std::array<std::int64_t, 3>& sorted);

/// Divisibility-failure certificate for a two-variable tuple. Throws
/// std::invalid_argument if one degree divides the other (such tuples are
/// realizable).
NotTameCertificate dim2_certificate(std::int64_t d1, std::int64_t d2);

struct CertificateCheck {
    bool ok = false;
    std::vector<std::string> problems;
};

/// Recomputes every certificate field from the degrees alone and compares.
CertificateCheck verify_certificate(const NotTameCertificate& certificate);

}  // namespace tamedeg
