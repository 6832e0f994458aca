#pragma once

#include <cstdint>

#include "lucasian/modular.hpp"

namespace lucasian {

/// Parameters of the companion Lucas sequence V_n(P, Q).
struct LucasParams {
    Integer p;
    Integer q;

    /// D = P^2 - 4Q, always recomputed.
    Integer discriminant() const { return p * p - 4 * q; }
};

/// Result of iterating x -> x^2 - 2 modulo some N.
struct SIterationTrace {
    Natural initial;
    std::uint64_t steps = 0;
    Natural final;

    bool operator==(const SIterationTrace&) const = default;
};

/// V_n(P, Q) mod `modulus` by index doubling over the pair (V_j, V_{j+1}).
/// The modulus must be odd and >= 3; the result lies in [0, modulus).
Natural lucas_v_mod(const LucasParams& params, const Natural& n, const Natural& modulus);

/// Exact V_n(P, Q) from the defining recurrence. Oracle use only; intended for n <= 10^4.
Integer lucas_v_naive(const LucasParams& params, std::uint64_t n);

/// Exact V_n(P, Q) from the binomial sum
///   sum_{r=0}^{floor(n/2)} n/(n-r) * C(n-r, r) * P^(n-2r) * (-Q)^r,
/// each coefficient n*C(n-r,r)/(n-r) taken by exact division. V_0 = 2.
Integer lucas_v_sum(const LucasParams& params, std::uint64_t n);

/// Applies x -> x^2 - 2 (mod modulus) `iterations` times. Requires 0 <= x < modulus.
SIterationTrace s_iterate(const Natural& x, std::uint64_t iterations, const Natural& modulus);

/// Same iteration using the shift-and-fold reduction of k * 2^m +- 1.
SIterationTrace s_iterate(const Natural& x, std::uint64_t iterations, const ShiftFormModulus& modulus);

}  // namespace lucasian
