#pragma once

// Exact arithmetic primitives shared across the library: arbitrary-precision
// integers and rationals (GMP) plus the assertion helpers used by the
// identity checks.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace motzkin {

using Integer = mpz_class;
using Rational = mpq_class;

// Raised when an exact computation violates an invariant the mathematics
// guarantees (a sum that must be an integer is not, a required divisibility
// fails, ...). Signals a bug or a broken hypothesis, never bad user input.
struct arithmetic_fault : std::logic_error {
    using std::logic_error::logic_error;
};

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) {
        throw std::invalid_argument("make_rational: zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline Integer require_integer(const Rational& q, const std::string& what) {
    if (!is_integer(q)) {
        throw arithmetic_fault(what + ": expected an integer, got " + q.get_str());
    }
    return q.get_num();
}

inline Integer require_half(const Integer& v, const std::string& what) {
    if (v % 2 != 0) {
        throw arithmetic_fault(what + ": expected an even value, got " + v.get_str());
    }
    return v / 2;
}

inline Integer require_divisible(const Integer& v, const Integer& d, const std::string& what) {
    if (d == 0 || v % d != 0) {
        throw arithmetic_fault(what + ": " + d.get_str() + " does not divide " + v.get_str());
    }
    return v / d;
}

}  // namespace motzkin
