#pragma once

// Sparse Laurent polynomials over arbitrary-precision integers.
//
// A polynomial is a map exponent -> coefficient with signed exponents, kept
// in canonical form (no zero coefficients are ever stored). This is the
// carrier of the constant-term calculus used throughout: row generating
// polynomials such as (1+x+x^2)^n (1-x^2) live here, and triangle entries
// are read off with coefficient() / constant_term().

#include "motzkin/numeric.hpp"

#include <initializer_list>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace motzkin {

class LaurentPolynomial {
public:
    using Exponent = long;
    using TermMap = std::map<Exponent, Integer>;

    LaurentPolynomial() = default;

    LaurentPolynomial(const Integer& constant) {  // NOLINT: implicit by design
        if (constant != 0) terms_[0] = constant;
    }

    LaurentPolynomial(long constant) : LaurentPolynomial(Integer(constant)) {}

    LaurentPolynomial(std::initializer_list<std::pair<Exponent, Integer>> terms) {
        for (const auto& [e, c] : terms) {
            add_term(e, c);
        }
    }

    static LaurentPolynomial monomial(Exponent e, const Integer& c = 1) {
        LaurentPolynomial p;
        if (c != 0) p.terms_[e] = c;
        return p;
    }

    // Coefficient list c_0..c_n of an ordinary polynomial.
    static LaurentPolynomial from_coefficients(const std::vector<Integer>& coeffs,
                                               Exponent start = 0) {
        LaurentPolynomial p;
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            p.add_term(start + static_cast<Exponent>(i), coeffs[i]);
        }
        return p;
    }

    bool is_zero() const { return terms_.empty(); }

    const TermMap& terms() const { return terms_; }

    // Coefficient of x^e; zero when e is outside the support.
    Integer coefficient(Exponent e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Integer(0) : it->second;
    }

    Integer constant_term() const { return coefficient(0); }

    Exponent min_exponent() const {
        if (terms_.empty()) throw std::logic_error("min_exponent: zero polynomial");
        return terms_.begin()->first;
    }

    Exponent max_exponent() const {
        if (terms_.empty()) throw std::logic_error("max_exponent: zero polynomial");
        return terms_.rbegin()->first;
    }

    bool operator==(const LaurentPolynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPolynomial& o) const { return !(*this == o); }

    LaurentPolynomial operator-() const {
        LaurentPolynomial r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    LaurentPolynomial& operator+=(const LaurentPolynomial& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }

    LaurentPolynomial& operator-=(const LaurentPolynomial& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) {
        a += b;
        return a;
    }

    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) {
        a -= b;
        return a;
    }

    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        LaurentPolynomial r;
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                r.add_term(ea + eb, ca * cb);
            }
        }
        return r;
    }

    LaurentPolynomial& operator*=(const LaurentPolynomial& o) { return *this = *this * o; }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) os << (c < 0 ? " - " : " + ");
            else if (c < 0) os << "-";
            first = false;
            Integer a = abs(c);
            if (e == 0) {
                os << a.get_str();
            } else {
                if (a != 1) os << a.get_str() << "*";
                os << "x";
                if (e != 1) os << "^" << e;
            }
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const LaurentPolynomial& p) {
        return os << p.to_string();
    }

private:
    void add_term(Exponent e, const Integer& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    TermMap terms_;
};

// p(1/x): negates every exponent. An involution and a ring homomorphism.
inline LaurentPolynomial substitute_reciprocal(const LaurentPolynomial& p) {
    LaurentPolynomial r;
    for (const auto& [e, c] : p.terms()) {
        r += LaurentPolynomial::monomial(-e, c);
    }
    return r;
}

// p^n by repeated squaring; pow(p, 0) = 1 for every p (empty product).
inline LaurentPolynomial pow(const LaurentPolynomial& p, unsigned long n) {
    LaurentPolynomial result(1);
    LaurentPolynomial base = p;
    while (n > 0) {
        if (n & 1UL) result *= base;
        n >>= 1UL;
        if (n > 0) base *= base;
    }
    return result;
}

}  // namespace motzkin
