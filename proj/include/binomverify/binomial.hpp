#pragma once

// Generalized binomial coefficients over the rationals, plus the small
// integer helpers (factorial, powers of four) the identities lean on.
//
// Convention used everywhere: C(x, k) = 0 whenever k < 0. The upper
// argument may be any rational; integrality of the result is a theorem
// for integer x, never an assumption of the code.

#include "rational.hpp"

#include <stdexcept>

namespace binomverify {

inline Int factorial(const Int& n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    Int acc = 1;
    for (Int i = 2; i <= n; ++i) acc *= i;
    return acc;
}

// x (x-1) (x-2) ... (x-k+1), the product of k consecutive descending
// terms. Empty product (k == 0) is 1. Requires k >= 0.
inline Rational falling_factorial(const Rational& x, const Int& k) {
    if (k < 0) throw std::invalid_argument("falling_factorial: negative length");
    Rational acc(1);
    Rational term = x;
    for (Int i = 0; i < k; ++i) {
        acc *= term;
        term -= Rational(1);
    }
    return acc;
}

// C(x, k) = x(x-1)...(x-k+1) / k! for rational x; zero when k < 0.
inline Rational binom_rational(const Rational& x, const Int& k) {
    if (k < 0) return Rational(0);
    return falling_factorial(x, k) / Rational(factorial(k));
}

// Integer-argument form; the quotient is exact by construction.
inline Int binom_integer(const Int& n, const Int& k) {
    return binom_rational(Rational(n), k).to_integer();
}

// 4^n as an exact integer. Requires n >= 0.
inline Int pow4(const Int& n) {
    if (n < 0) throw std::invalid_argument("pow4: negative exponent");
    Int acc = 1;
    for (Int i = 0; i < n; ++i) acc *= 4;
    return acc;
}

}  // namespace binomverify
