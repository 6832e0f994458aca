#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "lucasian/class_rules.hpp"
#include "lucasian/json_io.hpp"
#include "test_support.hpp"

using namespace lucasian;
using namespace lucasian::testing;

namespace {

Candidate cand(unsigned long k, std::uint64_t m, Sign s) { return {Natural(k), m, s}; }

const ClassRule& rule(RuleId id) {
    for (const ClassRule& r : rule_table()) {
        if (r.id == id) return r;
    }
    throw std::logic_error("missing rule");
}

bool has_branch(const ClassRule& r, std::vector<Congruence> ks, Congruence m) {
    return std::any_of(r.branches.begin(), r.branches.end(), [&](const RuleBranch& br) {
        if (br.k_conditions.size() != ks.size()) return false;
        for (std::size_t i = 0; i < ks.size(); ++i) {
            if (br.k_conditions[i].modulus != ks[i].modulus || br.k_conditions[i].residues != ks[i].residues)
                return false;
        }
        return br.m_condition.modulus == m.modulus && br.m_condition.residues == m.residues;
    });
}

}  // namespace

TEST_CASE("rule table shape") {
    const auto table = rule_table();
    REQUIRE(table.size() == 4);
    CHECK(table[0].id == RuleId::T3_1);
    CHECK(table[3].id == RuleId::T3_4);

    CHECK(rule(RuleId::T3_1).b == 3);
    CHECK(rule(RuleId::T3_2).b == 5);
    CHECK(rule(RuleId::T3_3).b == 5);
    CHECK(rule(RuleId::T3_4).b == 8);

    CHECK(rule(RuleId::T3_1).sign == Sign::Minus);
    CHECK(rule(RuleId::T3_2).sign == Sign::Minus);
    CHECK(rule(RuleId::T3_3).sign == Sign::Plus);
    CHECK(rule(RuleId::T3_4).sign == Sign::Plus);

    CHECK(rule(RuleId::T3_1).k_divisor == 3u);
    CHECK(rule(RuleId::T3_2).k_divisor == 3u);
    CHECK_FALSE(rule(RuleId::T3_3).k_divisor);
    CHECK_FALSE(rule(RuleId::T3_4).k_divisor);

    CHECK(rule(RuleId::T3_1).branches.size() == 4);
    CHECK(rule(RuleId::T3_2).branches.size() == 6);
    CHECK(rule(RuleId::T3_3).branches.size() == 12);
    CHECK(rule(RuleId::T3_4).branches.size() == 4);
}

TEST_CASE("rule table rows") {
    CHECK(has_branch(rule(RuleId::T3_1), {{10, {3}}}, {4, {0, 3}}));
    CHECK(has_branch(rule(RuleId::T3_1), {{10, {9}}}, {4, {0, 1}}));
    CHECK(has_branch(rule(RuleId::T3_2), {{42, {39}}}, {3, {2}}));
    CHECK(has_branch(rule(RuleId::T3_3), {{42, {19}}}, {6, {0}}));
    CHECK(has_branch(rule(RuleId::T3_3), {{42, {41}}}, {6, {1}}));
    CHECK(has_branch(rule(RuleId::T3_4), {{6, {1}}, {10, {3, 9}}}, {4, {2}}));
    CHECK(has_branch(rule(RuleId::T3_4), {{6, {5}}, {10, {1, 3}}}, {4, {1}}));
}

TEST_CASE("every listed k residue is odd") {
    for (const ClassRule& r : rule_table()) {
        for (const RuleBranch& br : r.branches) {
            for (const Congruence& c : br.k_conditions) {
                if (c.modulus % 2 != 0) continue;
                for (unsigned res : c.residues) CHECK(res % 2 == 1);
            }
        }
    }
}

TEST_CASE("applicable_rules: documented cases") {
    const auto m33 = applicable_rules(cand(3, 3, Sign::Minus));
    REQUIRE(m33.size() == 2);
    CHECK(m33[0].rule.get().id == RuleId::T3_1);
    CHECK(m33[0].branch == 1);
    CHECK(m33[1].rule.get().id == RuleId::T3_2);
    CHECK(m33[1].branch == 0);

    CHECK(applicable_rules(cand(5, 4, Sign::Minus)).empty());

    const auto m74 = applicable_rules(cand(7, 4, Sign::Plus));
    REQUIRE(m74.size() == 1);
    CHECK(m74[0].rule.get().id == RuleId::T3_4);
    CHECK(m74[0].branch == 0);
}

TEST_CASE("applicable_rules: structural errors are exceptions") {
    CHECK_THROWS_AS(applicable_rules(cand(4, 5, Sign::Minus)), InvalidCandidate);
    CHECK_THROWS_AS(applicable_rules(cand(3, 2, Sign::Minus)), InvalidCandidate);
    CHECK_THROWS_AS(applicable_rules(cand(9, 3, Sign::Minus)), InvalidCandidate);
    CHECK_THROWS_AS(applicable_rules(cand(0, 3, Sign::Minus)), InvalidCandidate);
}

TEST_CASE("class_test: documented verdicts") {
    const Verdict v47 = class_test(cand(3, 4, Sign::Minus));
    CHECK(v47.outcome == Outcome::Prime);
    CHECK(v47.rule == "T3.1");
    REQUIRE(v47.trace);
    CHECK(v47.trace->steps == 2);

    const Verdict v143 = class_test(cand(9, 4, Sign::Minus));
    CHECK(v143.outcome == Outcome::Composite);
    CHECK(v143.rule == "T3.1");

    const Verdict v113 = class_test(cand(7, 4, Sign::Plus));
    CHECK(v113.outcome == Outcome::Prime);
    CHECK(v113.rule == "T3.4");
    REQUIRE(v113.trace);
    CHECK(v113.trace->initial == 105);

    const Verdict v23 = class_test(cand(3, 3, Sign::Minus), DispatchMode::VerifyAll);
    CHECK(v23.outcome == Outcome::Prime);
    CHECK(v23.rule == "T3.1");
}

TEST_CASE("class_test: not applicable cases carry a reason") {
    const Verdict none = class_test(cand(5, 4, Sign::Minus));
    CHECK(none.outcome == Outcome::NotApplicable);
    CHECK(none.reason == "no class rule covers this candidate");
    CHECK(class_test(cand(4, 5, Sign::Minus)).reason == "k must be odd");
    CHECK(class_test(cand(3, 2, Sign::Minus)).outcome == Outcome::NotApplicable);
}

TEST_CASE("class_test is sun_test with the selected rule's b and c = 1") {
    for (std::uint64_t m = 3; m <= 12; ++m) {
        for (unsigned long k = 1; k < (1ul << m); k += 2) {
            for (Sign s : {Sign::Minus, Sign::Plus}) {
                const Candidate c = cand(k, m, s);
                const auto matches = applicable_rules(c);
                if (matches.empty()) continue;
                const ClassRule& r = matches.front().rule.get();
                Verdict direct = sun_test(c, {Integer(r.b), Integer(1)});
                direct.rule = r.name();
                REQUIRE(class_test(c) == direct);
            }
        }
    }
}

TEST_CASE("multi-rule coherence and oracle soundness, m <= 13") {
    std::uint64_t overlapping = 0;
    for (std::uint64_t m = 3; m <= 13; ++m) {
        for (unsigned long k = 1; k < (1ul << m); k += 2) {
            for (Sign s : {Sign::Minus, Sign::Plus}) {
                const Candidate c = cand(k, m, s);
                const auto matches = applicable_rules(c);
                if (matches.empty()) continue;
                if (matches.size() > 1) ++overlapping;
                const Verdict v = class_test(c, DispatchMode::VerifyAll);
                REQUIRE((v.outcome == Outcome::Prime) == is_prime_naive(mpz_get_ui(c.value().get_mpz_t())));
            }
        }
    }
    CHECK(overlapping > 0);
}

TEST_CASE("verify_rule_consistency: every rule is clean") {
    for (const ClassRule& r : rule_table()) {
        const auto report = verify_rule_consistency(r);
        CHECK_MESSAGE(report.clean(), r.name());
        CHECK(report.residue_classes > 0);
        CHECK(report.witnesses == 2 * report.residue_classes);
    }
}

TEST_CASE("verify_rule_consistency: congruences of N asserted by the proofs") {
    const auto t1 = verify_rule_consistency(rule(RuleId::T3_1));
    // N = 3 (mod 4) and N = 2, 3 (mod 5)
    for (unsigned r : t1.n_mod_40) {
        CHECK(r % 4 == 3);
        CHECK((r % 5 == 2 || r % 5 == 3));
    }
    const auto t2 = verify_rule_consistency(rule(RuleId::T3_2));
    for (unsigned r : t2.n_mod_24) CHECK(r % 12 == 11);
    const auto t3 = verify_rule_consistency(rule(RuleId::T3_3));
    for (unsigned r : t3.n_mod_24) CHECK(r % 12 == 5);
    const auto t4 = verify_rule_consistency(rule(RuleId::T3_4));
    CHECK(t4.n_mod_24 == std::set<unsigned>{17});
    for (unsigned r : t4.n_mod_40) CHECK((r == 17 || r == 33));
}

TEST_CASE("verify_rule_consistency: a flipped m residue is detected") {
    ClassRule mutated = rule(RuleId::T3_1);
    // k = 1 (mod 10) with m = 2, 3 (mod 4)  ->  m = 2, 0 (mod 4)
    mutated.branches[0].m_condition.residues = {2, 0};
    const auto report = verify_rule_consistency(mutated);
    CHECK_FALSE(report.clean());

    // Sweep every single-residue flip of every rule; most flips must be caught.
    std::size_t flips = 0, caught = 0;
    for (const ClassRule& original : rule_table()) {
        for (std::size_t b = 0; b < original.branches.size(); ++b) {
            const auto& residues = original.branches[b].m_condition.residues;
            for (std::size_t i = 0; i < residues.size(); ++i) {
                for (unsigned alt = 0; alt < original.branches[b].m_condition.modulus; ++alt) {
                    if (std::find(residues.begin(), residues.end(), alt) != residues.end()) continue;
                    ClassRule copy = original;
                    copy.branches[b].m_condition.residues[i] = alt;
                    ++flips;
                    if (!verify_rule_consistency(copy).clean()) ++caught;
                }
            }
        }
    }
    CHECK(flips > 0);
    CHECK(caught == flips);
}

TEST_CASE("rule table JSON export") {
    const Json j = rule_table_json();
    REQUIRE(j.size() == 4);
    CHECK(j[0]["id"] == "T3.1");
    CHECK(j[0]["b"] == 3);
    CHECK(j[0]["k_divisor"] == 3);
    CHECK(j[3]["branches"][2]["k"][1]["residues"] == Json::array({3, 9}));
    CHECK(j[2]["k_divisor"].is_null());
}
