#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lucasian/candidate.hpp"
#include "lucasian/sun_criterion.hpp"

namespace lucasian {

// Independent ground truth. Nothing here touches the Lucas sequence code;
// cross_check is the only function that calls into both sides.

enum class OracleOutcome { Prime, Composite, ProbablePrime };
enum class OracleMethod { TrialDivision, StrongProbablePrime };

std::string_view oracle_outcome_name(OracleOutcome o);
std::string_view oracle_method_name(OracleMethod m);

struct OracleVerdict {
    OracleOutcome outcome = OracleOutcome::Composite;
    OracleMethod method = OracleMethod::TrialDivision;
    std::optional<Natural> factor;        // 1 < factor < N, factor | N
    std::optional<Natural> witness_base;  // strong-probable-prime witness
};

inline constexpr std::uint64_t kTrialDivisionBound = 1'000'000'000'000ULL;

/// Divides by 2 and then odd d up to sqrt(N). Requires 2 <= N <= bound.
OracleVerdict trial_division(const Natural& n, std::uint64_t bound = kTrialDivisionBound);

/// Strong probable-prime test. Below 2^64 the first twelve primes are used as
/// bases and the answer is exact; above, `rounds` pseudo-random bases from a
/// fixed seed and the result is ProbablePrime at best.
OracleVerdict probable_prime(const Natural& n, unsigned rounds = 25);

/// Trial division within its bound, strong probable-prime test beyond.
OracleVerdict oracle_verdict(const Natural& n);

enum class CrossCheckMode { ClassRules, Generic };

struct CrossCheckOptions {
    std::uint64_t m_min = 3;
    std::uint64_t m_max = 3;
    std::vector<Sign> signs{Sign::Minus, Sign::Plus};
    CrossCheckMode mode = CrossCheckMode::ClassRules;
    unsigned b_max = 20;  // generic mode parameter search
    unsigned c_max = 3;
    unsigned threads = 0;  // 0: hardware concurrency
};

struct Disagreement {
    Natural k;
    std::uint64_t m = 0;
    Sign sign = Sign::Minus;
    std::string rule;
    Outcome lucasian = Outcome::NotApplicable;
    std::optional<OracleOutcome> oracle;  // absent for rule-vs-rule or generic-vs-class mismatches
    std::string against;                  // "oracle", "class-rules"
};

struct RuleTally {
    std::uint64_t cases = 0;
    std::uint64_t primes = 0;
    std::uint64_t composites = 0;
};

struct CrossCheckReport {
    CrossCheckOptions options;
    std::uint64_t cases = 0;
    std::uint64_t primes = 0;
    std::uint64_t composites = 0;
    std::uint64_t class_comparisons = 0;  // generic mode: candidates also covered by a class rule
    std::map<std::string, RuleTally> per_rule;
    std::vector<Disagreement> disagreements;

    bool clean() const { return disagreements.empty(); }
    void merge(const CrossCheckReport& other);
};

/// Every odd k < 2^m, m in [m_min, m_max], each requested sign, that a class
/// rule covers (or, in generic mode, for which find_params succeeds) is tested
/// and compared with oracle_verdict. Requires 3 <= m_min <= m_max and N within
/// the trial-division bound.
CrossCheckReport cross_check(const CrossCheckOptions& options);

}  // namespace lucasian
