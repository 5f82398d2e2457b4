#pragma once

// Truncated formal power series over the rationals. A series of order N
// carries exactly the coefficients of x^0 .. x^{N-1}; arithmetic never
// invents precision, so combining two series requires equal orders.

#include "binomial.hpp"
#include "errors.hpp"
#include "rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace binomverify {

class Series {
public:
    explicit Series(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
        if (coeffs_.empty())
            throw std::invalid_argument("Series: order must be at least 1");
    }

    // Number of coefficients carried (truncation order).
    std::size_t order() const { return coeffs_.size(); }

    const std::vector<Rational>& coefficients() const { return coeffs_; }

    const Rational& coefficient(std::size_t n) const {
        if (n >= coeffs_.size())
            throw std::out_of_range("Series: coefficient index " + std::to_string(n) +
                                    " out of range for order " + std::to_string(coeffs_.size()));
        return coeffs_[n];
    }

    friend Series operator+(const Series& a, const Series& b) {
        check_orders(a, b);
        std::vector<Rational> out(a.coeffs_.size());
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeffs_[i] + b.coeffs_[i];
        return Series(std::move(out));
    }

    // Cauchy product, truncated to the common order.
    friend Series operator*(const Series& a, const Series& b) {
        check_orders(a, b);
        std::vector<Rational> out(a.coeffs_.size(), Rational(0));
        for (std::size_t n = 0; n < out.size(); ++n)
            for (std::size_t i = 0; i <= n; ++i)
                out[n] += a.coeffs_[i] * b.coeffs_[n - i];
        return Series(std::move(out));
    }

    friend bool operator==(const Series& a, const Series& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

private:
    static void check_orders(const Series& a, const Series& b) {
        if (a.coeffs_.size() != b.coeffs_.size())
            throw order_mismatch_error("series order mismatch: " +
                                       std::to_string(a.coeffs_.size()) + " vs " +
                                       std::to_string(b.coeffs_.size()));
    }

    std::vector<Rational> coeffs_;
};

// (1 + a x)^alpha expanded by the generalized binomial theorem:
// coefficient of x^n is C(alpha, n) a^n. Exact for any rational alpha.
inline Series newton_binomial_series(const Rational& alpha, const Rational& a,
                                     std::size_t order) {
    if (order < 1) throw std::invalid_argument("newton_binomial_series: order must be >= 1");
    std::vector<Rational> out;
    out.reserve(order);
    Rational a_pow(1);
    for (std::size_t n = 0; n < order; ++n) {
        out.push_back(binom_rational(alpha, Int(n)) * a_pow);
        a_pow *= a;
    }
    return Series(std::move(out));
}

// The series whose n-th coefficient is the central binomial C(2n, n),
// built directly from the coefficients. That this equals
// newton_binomial_series(-1/2, -4, order) is a theorem the tests check,
// not something this constructor assumes.
inline Series central_binomial_series(std::size_t order) {
    if (order < 1) throw std::invalid_argument("central_binomial_series: order must be >= 1");
    std::vector<Rational> out;
    out.reserve(order);
    for (std::size_t n = 0; n < order; ++n)
        out.push_back(Rational(binom_integer(Int(2 * n), Int(n))));
    return Series(std::move(out));
}

}  // namespace binomverify
