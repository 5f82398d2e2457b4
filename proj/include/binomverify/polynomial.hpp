#pragma once

// Dense univariate polynomials with rational coefficients, stored
// constant-term first. Canonical form: no trailing zero coefficients,
// so the zero polynomial is the empty list and degree() == -1 for it.

#include "binomial.hpp"
#include "rational.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace binomverify {

class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
        normalize();
    }
    Polynomial(const Rational& constant) : Polynomial(std::vector<Rational>{constant}) {}

    static Polynomial zero() { return Polynomial(); }
    // The monomial x.
    static Polynomial identity() { return Polynomial({Rational(0), Rational(1)}); }

    const std::vector<Rational>& coefficients() const { return coeffs_; }

    // -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

    bool is_zero() const { return coeffs_.empty(); }

    Rational coefficient(std::size_t k) const {
        return k < coeffs_.size() ? coeffs_[k] : Rational(0);
    }

    Rational evaluate(const Rational& x) const {
        Rational acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    friend Polynomial operator-(const Polynomial& p) {
        std::vector<Rational> out;
        out.reserve(p.coeffs_.size());
        for (const auto& c : p.coeffs_) out.push_back(-c);
        return Polynomial(std::move(out));
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i] = a.coefficient(i) + b.coefficient(i);
        return Polynomial(std::move(out));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Polynomial(std::move(out));
    }

    friend Polynomial operator*(const Rational& s, const Polynomial& p) {
        std::vector<Rational> out;
        out.reserve(p.coeffs_.size());
        for (const auto& c : p.coeffs_) out.push_back(s * c);
        return Polynomial(std::move(out));
    }

    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    // "[c0, c1, ..., cd]" with canonical rational entries; "[]" for zero.
    std::string to_string() const {
        std::string out = "[";
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (i) out += ", ";
            out += coeffs_[i].to_string();
        }
        out += "]";
        return out;
    }

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

// C(a*x + b, k) as a polynomial in x: the falling-factorial product
// (a x + b)(a x + b - 1)...(a x + b - k + 1) / k!. Degree is exactly k
// when a != 0, constant when a == 0. Requires k >= 0.
inline Polynomial binom_affine_poly(const Rational& a, const Rational& b, const Int& k) {
    if (k < 0) throw std::invalid_argument("binom_affine_poly: negative lower index");
    Polynomial acc{Rational(1)};
    for (Int m = 0; m < k; ++m)
        acc *= Polynomial({b - Rational(m), a});
    return Rational(1) / Rational(factorial(k)) * acc;
}

}  // namespace binomverify
