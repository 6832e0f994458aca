#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "lucasian/sun_criterion.hpp"

namespace lucasian {

enum class RuleId { T3_1, T3_2, T3_3, T3_4 };

/// "T3.1" .. "T3.4".
std::string_view rule_name(RuleId id);

/// value mod modulus lies in residues.
struct Congruence {
    unsigned modulus = 1;
    std::vector<unsigned> residues;

    bool holds(const Natural& value) const;
    bool holds(std::uint64_t value) const;
};

/// Conjunction: every k congruence and the m congruence must hold.
struct RuleBranch {
    std::vector<Congruence> k_conditions;
    Congruence m_condition;
};

/// One class test: candidates of the given sign, optionally with
/// k_divisor | k, that match any branch are decided by the general
/// criterion with (b, c = 1).
struct ClassRule {
    RuleId id = RuleId::T3_1;
    Sign sign = Sign::Minus;
    int b = 0;
    std::optional<unsigned> k_divisor;
    std::vector<RuleBranch> branches;

    std::string name() const { return std::string(rule_name(id)); }
    /// Index of the first branch matching (k, m), ignoring sign and structure.
    std::optional<std::size_t> matching_branch(const Natural& k, std::uint64_t m) const;
};

/// The four rules in id order.
std::span<const ClassRule> rule_table();

struct RuleMatch {
    std::reference_wrapper<const ClassRule> rule;
    std::size_t branch = 0;
};

/// All rules covering `cand`, in id order. Throws InvalidCandidate when the
/// candidate is structurally invalid (k even or nonpositive, m <= 2, k >= 2^m).
std::vector<RuleMatch> applicable_rules(const Candidate& cand);
std::vector<RuleMatch> applicable_rules(const Candidate& cand, std::span<const ClassRule> rules);

enum class DispatchMode {
    FirstRule,   // report the lowest-id applicable rule
    VerifyAll,   // also run every other applicable rule and require agreement
};

/// Thrown in VerifyAll mode when two applicable rules disagree.
class RuleDisagreement : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Class-test dispatch. NotApplicable (never an exception) for invalid or uncovered candidates.
Verdict class_test(const Candidate& cand, DispatchMode mode = DispatchMode::FirstRule);

struct ConsistencyViolation {
    std::uint64_t k = 0;
    std::uint64_t m = 0;
    std::uint64_t n = 0;
    JacobiValue plus_symbol = JacobiValue::Zero;   // ((2 + b) / N)
    JacobiValue minus_symbol = JacobiValue::Zero;  // ((2 - b) / N)
};

struct ConsistencyReport {
    std::string rule;
    unsigned k_lattice = 1;
    unsigned m_lattice = 1;
    std::uint64_t residue_classes = 0;  // matching (k mod Lk, m mod Lm) classes
    std::uint64_t witnesses = 0;
    std::vector<ConsistencyViolation> violations;
    std::set<unsigned> n_mod_24;
    std::set<unsigned> n_mod_40;

    bool clean() const { return violations.empty(); }
};

/// Instantiates every matching residue class of the rule's (k, m) lattice with
/// its two smallest valid witnesses and checks ((2+b)/N) = ((2-b)/N) = -1.
ConsistencyReport verify_rule_consistency(const ClassRule& rule);

}  // namespace lucasian
