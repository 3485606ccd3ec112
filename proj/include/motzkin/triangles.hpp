#pragma once

// The Motzkin triangle and its relatives.
//
// Three independent routes to the same numbers are provided and kept apart
// on purpose so they can be checked against each other:
//   * motzkin_entry    — the row recurrence T(n,k) = T(n-1,k-2)+T(n-1,k-1)+T(n-1,k)
//                        with T(n,0)=1 and T(n,k)=0 outside 0..n,
//   * motzkin_extended — the skew-symmetric extension T(n,k) = -T(n,2n-k+2)
//                        on the window 0..2n+2,
//   * motzkin_ct       — coefficient extraction from (1+x+x^2)^n (1-x^2).
//
// TriangleSpec generalizes the construction to any palindromic P(x) of even
// degree: triangle_entry(spec,n,k) is the coefficient of x^k in P(x)^n (1-x^2).

#include "motzkin/laurent.hpp"
#include "motzkin/numeric.hpp"

#include <deque>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace motzkin {

// Palindromic coefficient vector (a_0, ..., a_d): a_j = a_{d-j}, d even, a_0 != 0.
class TriangleSpec {
public:
    explicit TriangleSpec(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty() || coeffs_.size() % 2 == 0) {
            throw std::invalid_argument("TriangleSpec: degree must be even (odd coefficient count)");
        }
        if (coeffs_.front() == 0) {
            throw std::invalid_argument("TriangleSpec: leading/trailing coefficient must be nonzero");
        }
        for (std::size_t j = 0; j < coeffs_.size(); ++j) {
            if (coeffs_[j] != coeffs_[coeffs_.size() - 1 - j]) {
                throw std::invalid_argument("TriangleSpec: coefficients must be palindromic");
            }
        }
    }

    static TriangleSpec motzkin() { return TriangleSpec({1, 1, 1}); }

    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

    const std::vector<Integer>& coefficients() const { return coeffs_; }

    LaurentPolynomial polynomial() const {
        return LaurentPolynomial::from_coefficients(coeffs_);
    }

    std::string to_string() const {
        std::string s;
        for (const auto& c : coeffs_) {
            if (!s.empty()) s += ",";
            s += c.get_str();
        }
        return s;
    }

private:
    std::vector<Integer> coeffs_;
};

namespace detail {

// Row cache for the recurrence route. Rows are immutable once built; the
// deque never invalidates references to finished rows, so callers may hold
// on to them while the cache grows. Guarded for concurrent readers.
class MotzkinRowCache {
public:
    const std::vector<Integer>& row(long n) {
        std::lock_guard<std::mutex> lock(mutex_);
        while (static_cast<long>(rows_.size()) <= n) {
            const std::vector<Integer>& prev = rows_.back();
            const long m = static_cast<long>(rows_.size());  // row being built
            std::vector<Integer> next(static_cast<std::size_t>(m) + 1);
            next[0] = 1;
            for (long k = 1; k <= m; ++k) {
                Integer v;
                if (k - 2 >= 0 && k - 2 <= m - 1) v += prev[k - 2];
                if (k - 1 <= m - 1) v += prev[k - 1];
                if (k <= m - 1) v += prev[k];
                next[k] = v;
            }
            rows_.push_back(std::move(next));
        }
        return rows_[static_cast<std::size_t>(n)];
    }

private:
    std::mutex mutex_;
    std::deque<std::vector<Integer>> rows_{{Integer(1)}};
};

inline MotzkinRowCache& motzkin_rows() {
    static MotzkinRowCache cache;
    return cache;
}

}  // namespace detail

// Row n of the Motzkin triangle, entries k = 0..n.
inline const std::vector<Integer>& motzkin_row(long n) {
    if (n < 0) throw std::invalid_argument("motzkin_row: negative row");
    return detail::motzkin_rows().row(n);
}

inline Integer motzkin_entry(long n, long k) {
    if (n < 0) throw std::invalid_argument("motzkin_entry: negative row");
    if (k < 0 || k > n) return 0;
    return motzkin_row(n)[static_cast<std::size_t>(k)];
}

// Skew-symmetric extension on the window 0..2n+2: equal to the recurrence
// value up to k = n, zero at k = n+1, and -T(n, 2n-k+2) beyond.
inline Integer motzkin_extended(long n, long k) {
    if (n < 0) throw std::invalid_argument("motzkin_extended: negative row");
    if (k < 0 || k > 2 * n + 2) {
        throw std::out_of_range("motzkin_extended: k must lie in 0..2n+2");
    }
    if (k <= n) return motzkin_entry(n, k);
    if (k == n + 1) return 0;
    return -motzkin_entry(n, 2 * n - k + 2);
}

// (1+x+x^2)^n (1-x^2); its coefficients are the extended row n.
inline LaurentPolynomial motzkin_row_polynomial(long n) {
    if (n < 0) throw std::invalid_argument("motzkin_row_polynomial: negative row");
    const LaurentPolynomial base{{0, 1}, {1, 1}, {2, 1}};
    const LaurentPolynomial q{{0, 1}, {2, -1}};
    return pow(base, static_cast<unsigned long>(n)) * q;
}

// Constant-term route: coefficient of x^k in (1+x+x^2)^n (1-x^2); total in k.
inline Integer motzkin_ct(long n, long k) {
    return motzkin_row_polynomial(n).coefficient(k);
}

// P(x)^n (1-x^2) for a palindromic spec.
inline LaurentPolynomial triangle_row_polynomial(const TriangleSpec& spec, long n) {
    if (n < 0) throw std::invalid_argument("triangle_row_polynomial: negative row");
    const LaurentPolynomial q{{0, 1}, {2, -1}};
    return pow(spec.polynomial(), static_cast<unsigned long>(n)) * q;
}

// Coefficient of x^k in P(x)^n (1-x^2); zero outside 0..dn+2.
inline Integer triangle_entry(const TriangleSpec& spec, long n, long k) {
    return triangle_row_polynomial(spec, n).coefficient(k);
}

// C(n,k) by the multiplicative formula (GMP); zero for k < 0 or k > n.
inline Integer binomial(long n, long k) {
    if (n < 0) throw std::invalid_argument("binomial: negative n");
    if (k < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

// C(n,k) as the coefficient of x^k in (1+x)^n; must agree with binomial().
inline Integer binomial_ct(long n, long k) {
    if (n < 0) throw std::invalid_argument("binomial_ct: negative n");
    const LaurentPolynomial base{{0, 1}, {1, 1}};
    return pow(base, static_cast<unsigned long>(n)).coefficient(k);
}

// Coefficient of x^k in (1+x)^n (1-x); support 0..n+1.
inline Integer catalan_variant(long n, long k) {
    if (n < 0) throw std::invalid_argument("catalan_variant: negative n");
    const LaurentPolynomial base{{0, 1}, {1, 1}};
    const LaurentPolynomial q{{0, 1}, {1, -1}};
    return (pow(base, static_cast<unsigned long>(n)) * q).coefficient(k);
}

// Coefficient of x^k in (1+x+x^2)^n; support 0..2n.
inline Integer trinomial(long n, long k) {
    if (n < 0) throw std::invalid_argument("trinomial: negative n");
    const LaurentPolynomial base{{0, 1}, {1, 1}, {2, 1}};
    return pow(base, static_cast<unsigned long>(n)).coefficient(k);
}

// Same number through (1+x+x^2)^n = ((1+x) + x^2)^n: sum_j C(n,j) C(n-j, k-2j).
inline Integer trinomial_binomial_sum(long n, long k) {
    if (n < 0) throw std::invalid_argument("trinomial_binomial_sum: negative n");
    Integer total = 0;
    for (long j = 0; 2 * j <= k && j <= n; ++j) {
        total += binomial(n, j) * binomial(n - j, k - 2 * j);
    }
    return total;
}

}  // namespace motzkin
