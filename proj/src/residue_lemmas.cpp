#include "lucasian/residue_lemmas.hpp"

#include <algorithm>
#include <array>

namespace lucasian {

namespace {

// Fields: numerator, then cases {n mod 4 or any, modulus, residues giving +1, 0, -1}.
const std::vector<ResidueTable>& tables() {
    static const std::vector<ResidueTable> t = {
        {-1, {{std::nullopt, 4, {1}, {}, {3}}}},
        {2, {{std::nullopt, 8, {1, 7}, {}, {3, 5}}}},
        {3,
         {{1u, 3, {1}, {0}, {2}},  //
          {3u, 3, {2}, {0}, {1}}}},
        {5, {{std::nullopt, 5, {1, 4}, {0}, {2, 3}}}},
        {-3,
         {{1u, 12, {1, 11}, {3, 9}, {5, 7}},  //
          {3u, 12, {5, 7}, {3, 9}, {1, 11}}}},
        {7,
         {{1u, 7, {1, 2, 4}, {0}, {3, 5, 6}},  //
          {3u, 7, {3, 5, 6}, {0}, {1, 2, 4}}}},
        {-6,
         {{1u, 24, {1, 5, 19, 23}, {3, 9, 15, 21}, {7, 11, 13, 17}},  //
          {3u, 24, {7, 11, 13, 17}, {3, 9, 15, 21}, {1, 5, 19, 23}}}},
        {10, {{std::nullopt, 40, {1, 3, 9, 13, 27, 31, 37, 39}, {5, 15, 25, 35}, {7, 11, 17, 19, 21, 23, 29, 33}}}},
    };
    return t;
}

bool contains(const std::vector<unsigned>& set, unsigned r) {
    return std::find(set.begin(), set.end(), r) != set.end();
}

const ResidueTable& table_for(int numerator) {
    for (const auto& t : tables()) {
        if (t.numerator == numerator) return t;
    }
    throw InvalidArgument("no closed-form table for numerator " + std::to_string(numerator));
}

JacobiValue lookup(const ResidueTable& table, unsigned n_mod_4, auto residue_of) {
    for (const auto& c : table.cases) {
        if (c.n_mod_4 && *c.n_mod_4 != n_mod_4) continue;
        const unsigned r = residue_of(c.modulus);
        if (contains(c.plus, r)) return JacobiValue::Plus;
        if (contains(c.zero, r)) return JacobiValue::Zero;
        if (contains(c.minus, r)) return JacobiValue::Minus;
        throw std::logic_error("residue table for " + std::to_string(table.numerator) + " has no row for " +
                               std::to_string(r) + " mod " + std::to_string(c.modulus));
    }
    throw std::logic_error("residue table for " + std::to_string(table.numerator) + " has no case for n = " +
                           std::to_string(n_mod_4) + " mod 4");
}

}  // namespace

std::span<const ResidueTable> lemma_tables() { return tables(); }

std::vector<int> supported_numerators() {
    std::vector<int> out;
    for (const auto& t : tables()) out.push_back(t.numerator);
    return out;
}

JacobiValue jacobi_closed_form(int numerator, const Natural& n) {
    const ResidueTable& table = table_for(numerator);
    if (sgn(n) <= 0 || mpz_even_p(n.get_mpz_t())) {
        throw InvalidArgument("jacobi_closed_form: n must be odd and positive, got " + n.get_str());
    }
    if (n == 1) return JacobiValue::Plus;
    const auto n_mod_4 = static_cast<unsigned>(mpz_fdiv_ui(n.get_mpz_t(), 4));
    return lookup(table, n_mod_4,
                  [&](unsigned modulus) { return static_cast<unsigned>(mpz_fdiv_ui(n.get_mpz_t(), modulus)); });
}

JacobiValue jacobi_closed_form(int numerator, std::uint64_t n) {
    const ResidueTable& table = table_for(numerator);
    if (n == 0 || n % 2 == 0) {
        throw InvalidArgument("jacobi_closed_form: n must be odd and positive, got " + std::to_string(n));
    }
    if (n == 1) return JacobiValue::Plus;
    return lookup(table, static_cast<unsigned>(n % 4),
                  [&](unsigned modulus) { return static_cast<unsigned>(n % modulus); });
}

std::vector<std::string> partition_defects(const ResidueTable& table) {
    std::vector<std::string> defects;
    for (const auto& c : table.cases) {
        const auto where = [&](unsigned r) {
            return std::string("numerator ") + std::to_string(table.numerator) + ", residue " + std::to_string(r) +
                   " mod " + std::to_string(c.modulus);
        };
        for (const auto* set : {&c.plus, &c.zero, &c.minus}) {
            for (unsigned r : *set) {
                if (r >= c.modulus) defects.push_back(where(r) + ": out of range");
            }
        }
        for (unsigned r = 0; r < c.modulus; ++r) {
            // r is reachable by some odd n unless both r and the modulus are even
            const bool reachable = (c.modulus % 2 == 1) || (r % 2 == 1);
            const int hits = int(contains(c.plus, r)) + int(contains(c.zero, r)) + int(contains(c.minus, r));
            if (reachable && hits != 1) {
                defects.push_back(where(r) + ": appears in " + std::to_string(hits) + " sets");
            }
            if (!reachable && hits != 0) {
                defects.push_back(where(r) + ": even residue listed for odd n");
            }
        }
    }
    return defects;
}

VerificationReport verify_lemma_tables(std::uint64_t limit) {
    VerificationReport report;
    report.limit = limit;
    report.numerators = supported_numerators();
    if (limit < 40) {
        report.note = "limit below 40 does not cover a full period of every table";
    }
    Natural big_n;
    for (std::uint64_t n = 1; n <= limit; n += 2) {
        ++report.odd_values;
        big_n = from_u64(n);
        for (int a : report.numerators) {
            const JacobiValue expected = jacobi(a, big_n);
            const JacobiValue got = jacobi_closed_form(a, n);
            ++report.comparisons;
            if (expected != got) report.mismatches.push_back({a, n, expected, got});
        }
    }
    return report;
}

}  // namespace lucasian
