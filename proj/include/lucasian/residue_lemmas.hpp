#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lucasian/modular.hpp"

namespace lucasian {

/// One row group of a closed-form Jacobi table: applies when n mod 4 equals
/// `n_mod_4` (or unconditionally), and maps n mod `modulus` to a symbol value.
struct ResidueCase {
    std::optional<unsigned> n_mod_4;
    unsigned modulus = 1;
    std::vector<unsigned> plus;
    std::vector<unsigned> zero;
    std::vector<unsigned> minus;
};

/// Closed-form evaluation of (numerator / n) for odd n.
struct ResidueTable {
    int numerator = 0;
    std::vector<ResidueCase> cases;
};

/// The eight supported tables, numerators -1, 2, 3, 5, -3, 7, -6, 10 in that order.
std::span<const ResidueTable> lemma_tables();

/// Numerators covered by lemma_tables(), in table order.
std::vector<int> supported_numerators();

/// Table lookup. Throws InvalidArgument for an unsupported numerator or an
/// even/nonpositive n. Every numerator gives +1 at n = 1.
JacobiValue jacobi_closed_form(int numerator, const Natural& n);
JacobiValue jacobi_closed_form(int numerator, std::uint64_t n);

/// Residues of `table` whose placement breaks the partition invariant: each
/// residue reachable by an odd n inside a case must sit in exactly one of the
/// three sets. Empty means the table is well formed.
std::vector<std::string> partition_defects(const ResidueTable& table);

struct LemmaMismatch {
    int numerator = 0;
    std::uint64_t n = 0;
    JacobiValue expected = JacobiValue::Zero;  // generic algorithm
    JacobiValue got = JacobiValue::Zero;       // closed form
};

struct VerificationReport {
    std::uint64_t limit = 0;
    std::uint64_t odd_values = 0;
    std::uint64_t comparisons = 0;
    std::vector<int> numerators;
    std::vector<LemmaMismatch> mismatches;
    std::string note;

    bool clean() const { return mismatches.empty(); }
};

/// Compares every table against the generic binary Jacobi algorithm for all odd n <= limit.
VerificationReport verify_lemma_tables(std::uint64_t limit);

}  // namespace lucasian
