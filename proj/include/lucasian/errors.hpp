#pragma once

#include <stdexcept>
#include <string>

namespace lucasian {

/// Raised when a documented precondition on an argument is violated.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised by mod_inverse when gcd(a, modulus) != 1.
class NotInvertible : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A (k, m, sign) triple that breaks the structural invariants of the form k*2^m +- 1.
class InvalidCandidate : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Input outside the exact regime of an oracle.
class OutOfRange : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

}  // namespace lucasian
