#include "lucasian/class_rules.hpp"

#include <algorithm>
#include <numeric>

namespace lucasian {

namespace {

Congruence mod(unsigned modulus, std::vector<unsigned> residues) { return {modulus, std::move(residues)}; }

RuleBranch row(Congruence k, Congruence m) { return {{std::move(k)}, std::move(m)}; }

RuleBranch row(Congruence k1, Congruence k2, Congruence m) { return {{std::move(k1), std::move(k2)}, std::move(m)}; }

// Each branch pairs k congruences with one m congruence.
const std::vector<ClassRule>& rules() {
    static const std::vector<ClassRule> table = {
        {RuleId::T3_1, Sign::Minus, 3, 3u,
         {
             row(mod(10, {1}), mod(4, {2, 3})),
             row(mod(10, {3}), mod(4, {0, 3})),
             row(mod(10, {7}), mod(4, {1, 2})),
             row(mod(10, {9}), mod(4, {0, 1})),
         }},
        {RuleId::T3_2, Sign::Minus, 5, 3u,
         {
             row(mod(42, {3}), mod(3, {0, 2})),
             row(mod(42, {9}), mod(3, {0})),
             row(mod(42, {15}), mod(3, {1})),
             row(mod(42, {27}), mod(3, {1, 2})),
             row(mod(42, {33}), mod(3, {0, 1})),
             row(mod(42, {39}), mod(3, {2})),
         }},
        {RuleId::T3_3, Sign::Plus, 5, std::nullopt,
         {
             row(mod(42, {1}), mod(6, {2, 4})),
             row(mod(42, {5}), mod(6, {3})),
             row(mod(42, {11}), mod(6, {3, 5})),
             row(mod(42, {13}), mod(6, {4})),
             row(mod(42, {17}), mod(6, {5})),
             row(mod(42, {19}), mod(6, {0})),
             row(mod(42, {23}), mod(6, {1, 3})),
             row(mod(42, {25}), mod(6, {0, 2})),
             row(mod(42, {29}), mod(6, {1, 5})),
             row(mod(42, {31}), mod(6, {2})),
             row(mod(42, {37}), mod(6, {0, 4})),
             row(mod(42, {41}), mod(6, {1})),
         }},
        {RuleId::T3_4, Sign::Plus, 8, std::nullopt,
         {
             row(mod(6, {1}), mod(10, {1, 7}), mod(4, {0})),
             row(mod(6, {5}), mod(10, {1, 3}), mod(4, {1})),
             row(mod(6, {1}), mod(10, {3, 9}), mod(4, {2})),
             row(mod(6, {5}), mod(10, {7, 9}), mod(4, {3})),
         }},
    };
    return table;
}

bool contains(const std::vector<unsigned>& residues, unsigned r) {
    return std::find(residues.begin(), residues.end(), r) != residues.end();
}

}  // namespace

std::string_view rule_name(RuleId id) {
    switch (id) {
        case RuleId::T3_1: return "T3.1";
        case RuleId::T3_2: return "T3.2";
        case RuleId::T3_3: return "T3.3";
        case RuleId::T3_4: return "T3.4";
    }
    return "T?";
}

bool Congruence::holds(const Natural& value) const {
    return contains(residues, static_cast<unsigned>(mpz_fdiv_ui(value.get_mpz_t(), modulus)));
}

bool Congruence::holds(std::uint64_t value) const {
    return contains(residues, static_cast<unsigned>(value % modulus));
}

std::optional<std::size_t> ClassRule::matching_branch(const Natural& k, std::uint64_t m) const {
    if (k_divisor && mpz_fdiv_ui(k.get_mpz_t(), *k_divisor) != 0) return std::nullopt;
    for (std::size_t i = 0; i < branches.size(); ++i) {
        const RuleBranch& br = branches[i];
        const bool k_ok =
            std::all_of(br.k_conditions.begin(), br.k_conditions.end(), [&](const Congruence& c) { return c.holds(k); });
        if (k_ok && br.m_condition.holds(m)) return i;
    }
    return std::nullopt;
}

std::span<const ClassRule> rule_table() { return rules(); }

std::vector<RuleMatch> applicable_rules(const Candidate& cand) { return applicable_rules(cand, rule_table()); }

std::vector<RuleMatch> applicable_rules(const Candidate& cand, std::span<const ClassRule> table) {
    if (auto defect = candidate_defect(cand, kClassMinExponent)) {
        throw InvalidCandidate(*defect);
    }
    std::vector<RuleMatch> out;
    for (const ClassRule& rule : table) {
        if (rule.sign != cand.sign) continue;
        if (auto branch = rule.matching_branch(cand.k, cand.m)) {
            out.push_back({std::cref(rule), *branch});
        }
    }
    return out;
}

Verdict class_test(const Candidate& cand, DispatchMode mode) {
    Verdict v;
    if (auto defect = candidate_defect(cand, kClassMinExponent)) {
        v.reason = *defect;
        return v;
    }
    const auto matches = applicable_rules(cand);
    if (matches.empty()) {
        v.reason = "no class rule covers this candidate";
        return v;
    }
    const ClassRule& chosen = matches.front().rule.get();
    v = sun_test(cand, {Integer(chosen.b), Integer(1)}, kClassMinExponent);
    v.rule = chosen.name();
    if (mode == DispatchMode::VerifyAll) {
        for (std::size_t i = 1; i < matches.size(); ++i) {
            const ClassRule& other = matches[i].rule.get();
            const Verdict alt = sun_test(cand, {Integer(other.b), Integer(1)}, kClassMinExponent);
            if (alt.outcome != v.outcome) {
                throw RuleDisagreement(chosen.name() + " and " + other.name() + " disagree on k=" + cand.k.get_str() +
                                       ", m=" + std::to_string(cand.m));
            }
        }
    }
    return v;
}

ConsistencyReport verify_rule_consistency(const ClassRule& rule) {
    ConsistencyReport report;
    report.rule = rule.name();

    unsigned k_lattice = 2;
    if (rule.k_divisor) k_lattice = std::lcm(k_lattice, *rule.k_divisor);
    unsigned m_lattice = 1;
    for (const RuleBranch& br : rule.branches) {
        for (const Congruence& c : br.k_conditions) k_lattice = std::lcm(k_lattice, c.modulus);
        m_lattice = std::lcm(m_lattice, br.m_condition.modulus);
    }
    report.k_lattice = k_lattice;
    report.m_lattice = m_lattice;

    const bool plus = rule.sign == Sign::Plus;
    const long b = rule.b;
    // Exponents stay small enough that N fits comfortably in 64 bits.
    const std::uint64_t m_ceiling = kClassMinExponent + 8 * std::uint64_t(m_lattice) + 8;

    for (unsigned kr = 1; kr < k_lattice; kr += 2) {
        for (unsigned mr = 0; mr < m_lattice; ++mr) {
            if (!rule.matching_branch(from_u64(kr), mr)) continue;
            ++report.residue_classes;

            int found = 0;
            std::uint64_t m = kClassMinExponent;
            while (m % m_lattice != mr) ++m;
            for (; m < m_ceiling && found < 2; m += m_lattice) {
                for (std::uint64_t k = kr; k < (std::uint64_t(1) << m) && found < 2; k += k_lattice) {
                    const Candidate cand{from_u64(k), m, rule.sign};
                    if (candidate_defect(cand, kClassMinExponent)) continue;
                    ++found;
                    ++report.witnesses;
                    const std::uint64_t n = plus ? (k << m) + 1 : (k << m) - 1;
                    const Natural big_n = from_u64(n);
                    report.n_mod_24.insert(static_cast<unsigned>(n % 24));
                    report.n_mod_40.insert(static_cast<unsigned>(n % 40));
                    const JacobiValue hi = jacobi(2 + b, big_n);
                    const JacobiValue lo = jacobi(2 - b, big_n);
                    if (hi != JacobiValue::Minus || lo != JacobiValue::Minus) {
                        report.violations.push_back({k, m, n, hi, lo});
                    }
                }
            }
        }
    }
    return report;
}

}  // namespace lucasian
