#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "lucasian/modular.hpp"

namespace lucasian {

enum class Sign { Minus, Plus };

/// "+" or "-".
std::string_view sign_symbol(Sign s);

/// Accepts "+", "-", "plus", "minus".
std::optional<Sign> parse_sign(std::string_view text);

/// N = k * 2^m + 1 (Plus) or k * 2^m - 1 (Minus).
struct Candidate {
    Natural k;
    std::uint64_t m = 0;
    Sign sign = Sign::Minus;

    Natural value() const { return shifted_form(k, m, sign == Sign::Plus); }

    bool operator==(const Candidate&) const = default;
};

/// Smallest exponent accepted by the generic engine and by the class tests.
inline constexpr std::uint64_t kGenericMinExponent = 2;
inline constexpr std::uint64_t kClassMinExponent = 3;

/// First structural defect of `cand`, if any: k must be positive and odd,
/// m >= min_exponent, and k < 2^m.
std::optional<std::string> candidate_defect(const Candidate& cand, std::uint64_t min_exponent);

}  // namespace lucasian
