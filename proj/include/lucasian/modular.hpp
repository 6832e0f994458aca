#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "lucasian/errors.hpp"

namespace lucasian {

// Arbitrary-precision integers. Natural carries a nonnegativity precondition
// wherever it appears in a signature; Integer may be negative.
using Natural = mpz_class;
using Integer = mpz_class;

/// Value of a Jacobi symbol.
enum class JacobiValue : int { Minus = -1, Zero = 0, Plus = 1 };

constexpr int to_int(JacobiValue v) noexcept { return static_cast<int>(v); }

constexpr JacobiValue operator*(JacobiValue a, JacobiValue b) noexcept {
    return static_cast<JacobiValue>(to_int(a) * to_int(b));
}

constexpr JacobiValue operator-(JacobiValue v) noexcept {
    return static_cast<JacobiValue>(-to_int(v));
}

/// Throws InvalidArgument unless v is in {-1, 0, 1}.
JacobiValue jacobi_value_from_int(int v);

/// Jacobi symbol (a/n) for odd n >= 1, by the binary algorithm (no factoring).
/// Negative a is split as (-1/n) * (|a|/n).
JacobiValue jacobi(const Integer& a, const Natural& n);
JacobiValue jacobi(long a, const Natural& n);

/// base^exponent mod modulus, result in [0, modulus). modulus >= 2.
Natural mod_pow(const Integer& base, const Natural& exponent, const Natural& modulus);

/// u in [0, modulus) with a*u == 1 (mod modulus). Throws NotInvertible if
/// gcd(a, modulus) != 1.
Natural mod_inverse(const Integer& a, const Natural& modulus);

/// gcd(|a|, |b|); gcd(0, b) = |b|.
Natural gcd(const Integer& a, const Integer& b);

/// Least nonnegative residue of a modulo a positive modulus.
Natural mod_floor(const Integer& a, const Natural& modulus);

/// N = k * 2^m + 1 or k * 2^m - 1, built by shifting.
Natural shifted_form(const Natural& k, std::uint64_t m, bool plus);

/// Modulus N = k * 2^m + 1 or k * 2^m - 1 with a reduction that exploits the
/// shape: k * 2^m == -+1 (mod N) folds the high part back with shifts and one
/// division by k. When k does not fit a machine word it falls back to plain
/// division.
class ShiftFormModulus {
public:
    ShiftFormModulus(Natural k, std::uint64_t m, bool plus);

    const Natural& value() const { return n_; }

    /// Reduces t in place to [0, N). Requires 0 <= t < N^2 (any t for the fallback).
    void reduce(mpz_class& t) const;

private:
    Natural k_;
    std::uint64_t m_;
    bool plus_;
    Natural n_;
    bool word_k_;
    unsigned long k_word_ = 0;
    mutable mpz_class high_, quot_;
};

/// Exact decimal digit count of n (n >= 1).
std::size_t decimal_digits(const Natural& n);

/// Fits in an unsigned 64-bit word.
bool fits_u64(const Natural& n);
std::uint64_t to_u64(const Natural& n);
Natural from_u64(std::uint64_t v);

/// Parse a decimal integer; throws InvalidArgument on malformed text.
Integer parse_integer(const std::string& text);

}  // namespace lucasian
