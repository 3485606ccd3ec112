#pragma once

// Exact evaluation and cross-checking of the triangle identities.
//
// Every sum is accumulated in exact rationals; whenever a result is claimed
// to be an integer the denominator is checked, never rounded away. Checks
// return a VerificationReport carrying all compared values so a failing
// sweep can show its counterexample.

#include "motzkin/numeric.hpp"
#include "motzkin/triangles.hpp"

#include <string>
#include <utility>
#include <vector>

namespace motzkin {

struct VerificationReport {
    std::string identity;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<std::pair<std::string, std::string>> values;  // the compared quantities
    bool equal = false;

    std::string to_string() const {
        std::string s = identity;
        for (const auto& [k, v] : params) s += " " + k + "=" + v;
        s += ":";
        for (const auto& [k, v] : values) s += " " + k + "=" + v;
        s += equal ? " -> equal" : " -> NOT EQUAL";
        return s;
    }
};

namespace detail {

inline bool all_values_equal(const std::vector<std::pair<std::string, std::string>>& values) {
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (values[i].second != values[0].second) return false;
    }
    return true;
}

}  // namespace detail

// sum_{k=0..n} T(n,k) T(n,k+1).
inline Integer motzkin_adjacent_sum(long n) {
    if (n < 0) throw std::invalid_argument("motzkin_adjacent_sum: negative n");
    Integer total = 0;
    for (long k = 0; k <= n; ++k) {
        total += motzkin_entry(n, k) * motzkin_entry(n, k + 1);
    }
    return total;
}

// The same quantity as a binomial sum: sum_{k=0..n} C(2n,2k+1) C(2k+1,k) / (k+2).
// The total is provably an integer; the accumulation checks it.
inline Integer motzkin_adjacent_sum_binomials(long n) {
    if (n < 0) throw std::invalid_argument("motzkin_adjacent_sum_binomials: negative n");
    Rational acc = 0;
    for (long k = 0; k <= n; ++k) {
        acc += make_rational(binomial(2 * n, 2 * k + 1) * binomial(2 * k + 1, k), k + 2);
    }
    return require_integer(acc, "motzkin_adjacent_sum_binomials");
}

// Three-way check: adjacent-pair sum == binomial sum == T(2n,2n-1)/2.
inline VerificationReport check_theorem1(long n) {
    const Integer pair_sum = motzkin_adjacent_sum(n);
    const Integer binomial_sum = motzkin_adjacent_sum_binomials(n);
    const Integer half_entry = require_half(motzkin_entry(2 * n, 2 * n - 1), "check_theorem1");
    VerificationReport r;
    r.identity = "theorem1";
    r.params = {{"n", std::to_string(n)}};
    r.values = {{"pair_sum", pair_sum.get_str()},
                {"binomial_sum", binomial_sum.get_str()},
                {"half_entry", half_entry.get_str()}};
    r.equal = detail::all_values_equal(r.values);
    return r;
}

// sum_{k=0..floor(s/2)} C(s+d-1,2k+d-1) C(2k+d-1,k) / (k+d), exact rational.
// Integral whenever gcd(s,d)=1; not always otherwise (s=2, d=2 gives 5/2).
inline Rational theorem2_sum(long s, long d) {
    if (s < 1 || d < 1) throw std::invalid_argument("theorem2_sum: need s >= 1 and d >= 1");
    Rational acc = 0;
    for (long k = 0; 2 * k <= s; ++k) {
        acc += make_rational(binomial(s + d - 1, 2 * k + d - 1) * binomial(2 * k + d - 1, k),
                             k + d);
    }
    return acc;
}

inline Integer theorem2_lhs(long s, long d) {
    return require_integer(theorem2_sum(s, d), "theorem2_lhs");
}

// Verifies theorem2_sum(s,d) = T(s+d-1,s)/d as exact rationals. Both sides
// are reported; they are integers exactly when d | T(s+d-1,s).
inline VerificationReport check_theorem2(long s, long d) {
    const Rational sum = theorem2_sum(s, d);
    const Rational scaled = make_rational(motzkin_entry(s + d - 1, s), d);
    VerificationReport r;
    r.identity = "theorem2";
    r.params = {{"s", std::to_string(s)}, {"d", std::to_string(d)}};
    r.values = {{"sum", sum.get_str()}, {"scaled_entry", scaled.get_str()}};
    r.equal = detail::all_values_equal(r.values);
    return r;
}

// sum_{k=0..floor(s/2)} C(s+d-1,2k+d-1) C(2k+d,k) / (2k+d), exact rational.
// Equals theorem2_sum(s,d) termwise (see check_term_bridge).
inline Rational conjecture_sum_rational(long s, long d) {
    if (s < 1 || d < 1) throw std::invalid_argument("conjecture_sum_rational: need s >= 1 and d >= 1");
    Rational acc = 0;
    for (long k = 0; 2 * k <= s; ++k) {
        acc += make_rational(binomial(s + d - 1, 2 * k + d - 1) * binomial(2 * k + d, k),
                             2 * k + d);
    }
    return acc;
}

inline Integer conjecture_sum(long s, long d) {
    return require_integer(conjecture_sum_rational(s, d), "conjecture_sum");
}

// The exact rational equality C(2k+d,k)/(2k+d) = C(2k+d-1,k)/(k+d) that makes
// the two sum forms match term by term.
inline VerificationReport check_term_bridge(long k, long d) {
    if (k < 0 || d < 1) throw std::invalid_argument("check_term_bridge: need k >= 0 and d >= 1");
    const Rational lhs = make_rational(binomial(2 * k + d, k), 2 * k + d);
    const Rational rhs = make_rational(binomial(2 * k + d - 1, k), k + d);
    VerificationReport r;
    r.identity = "term-bridge";
    r.params = {{"k", std::to_string(k)}, {"d", std::to_string(d)}};
    r.values = {{"lhs", lhs.get_str()}, {"rhs", rhs.get_str()}};
    r.equal = detail::all_values_equal(r.values);
    return r;
}

// Pascal counterpart: sum_{k=0..n} C(n,k) C(n,k+1) = C(2n, n+1).
inline VerificationReport check_pascal_analogy(long n) {
    if (n < 0) throw std::invalid_argument("check_pascal_analogy: negative n");
    Integer sum = 0;
    for (long k = 0; k <= n; ++k) {
        sum += binomial(n, k) * binomial(n, k + 1);
    }
    const Integer rhs = binomial(2 * n, n + 1);
    VerificationReport r;
    r.identity = "pascal-analogy";
    r.params = {{"n", std::to_string(n)}};
    r.values = {{"sum", sum.get_str()}, {"binomial", rhs.get_str()}};
    r.equal = detail::all_values_equal(r.values);
    return r;
}

// General palindromic triangle: sum_{k=0..dn/2} A(n,k) A(n,k+1) = A(2n,dn-1)/2,
// with the skew-symmetry spot checks A(2n,dn+1) = 0 and A(2n,dn+3) = -A(2n,dn-1)
// asserted along the way.
inline VerificationReport check_general_identity(const TriangleSpec& spec, long n) {
    if (n < 0) throw std::invalid_argument("check_general_identity: negative n");
    const long d = spec.degree();
    const LaurentPolynomial row_n = triangle_row_polynomial(spec, n);
    const LaurentPolynomial row_2n = triangle_row_polynomial(spec, 2 * n);

    Integer pair_sum = 0;
    for (long k = 0; k <= d * n / 2; ++k) {
        pair_sum += row_n.coefficient(k) * row_n.coefficient(k + 1);
    }

    const Integer a = row_2n.coefficient(d * n - 1);
    if (row_2n.coefficient(d * n + 1) != 0) {
        throw arithmetic_fault("check_general_identity: A(2n, dn+1) != 0");
    }
    if (row_2n.coefficient(d * n + 3) != -a) {
        throw arithmetic_fault("check_general_identity: A(2n, dn+3) != -A(2n, dn-1)");
    }
    const Integer half_entry = require_half(a, "check_general_identity");

    VerificationReport r;
    r.identity = "general";
    r.params = {{"coeffs", spec.to_string()}, {"n", std::to_string(n)}};
    r.values = {{"pair_sum", pair_sum.get_str()}, {"half_entry", half_entry.get_str()}};
    r.equal = detail::all_values_equal(r.values);
    return r;
}

}  // namespace motzkin
