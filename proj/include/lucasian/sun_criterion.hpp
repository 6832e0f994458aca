#pragma once

#include <optional>
#include <string>

#include "lucasian/candidate.hpp"
#include "lucasian/lucas.hpp"

namespace lucasian {

/// The (b, c) pair driving the general criterion; seed x = c^{-k} V_k(b, c^2).
struct SunParams {
    Integer b;
    Integer c;

    bool operator==(const SunParams&) const = default;
};

enum class Outcome { Prime, Composite, NotApplicable };

std::string_view outcome_name(Outcome o);

struct Verdict {
    Outcome outcome = Outcome::NotApplicable;
    std::string rule;
    std::optional<SunParams> params;
    std::optional<SIterationTrace> trace;
    std::string reason;
    // Nontrivial factor of N found while checking preconditions; such a
    // Composite carries no trace.
    std::optional<Natural> witness;

    bool operator==(const Verdict&) const = default;
};

struct SunConditions {
    bool holds = false;
    Natural gcd_n_c;
    JacobiValue plus_symbol = JacobiValue::Zero;   // ((2c + b) / N)
    JacobiValue minus_symbol = JacobiValue::Zero;  // ((2c - b) / N)
    JacobiValue c_symbol = JacobiValue::Zero;      // (c / N)
    std::string detail;
};

/// True iff gcd(N, c) = 1 and ((2c+b)/N) = ((2c-b)/N) = -(c/N) != 0, all as Jacobi symbols.
SunConditions check_sun_conditions(const Candidate& cand, const SunParams& params);

/// x = c^{-k} V_k(b, c^2) mod N. Throws NotInvertible if gcd(c, N) != 1.
Natural sun_seed(const Candidate& cand, const SunParams& params);

/// Runs the criterion with m - 2 squarings. NotApplicable when the candidate is
/// structurally invalid (m >= min_exponent) or the symbol conditions fail;
/// Composite without a trace when a precondition exposes a factor of N.
Verdict sun_test(const Candidate& cand, const SunParams& params,
                 std::uint64_t min_exponent = kGenericMinExponent);

/// Smallest (c, b), c-major, with 1 <= c <= c_max, 1 <= b <= b_max, b != 2c,
/// that passes check_sun_conditions.
std::optional<SunParams> find_params(const Candidate& cand, unsigned b_max, unsigned c_max);

std::string sun_rule_name(const SunParams& params);

}  // namespace lucasian
