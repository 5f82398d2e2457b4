#pragma once

// Exact scalar arithmetic: arbitrary-precision integers and reduced
// rationals. Nothing in this library is ever rounded; every quantity is
// one of these two types.

#include <boost/multiprecision/cpp_int.hpp>

#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace binomverify {

using Int = boost::multiprecision::cpp_int;

// A rational number in lowest terms.
//
// Invariants: gcd(|numerator|, denominator) == 1, denominator > 0, and
// zero is 0/1. Equality is therefore plain structural equality.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(Int n) : num_(std::move(n)), den_(1) {}  // NOLINT: implicit by design
    Rational(int n) : num_(n), den_(1) {}             // NOLINT: implicit by design
    Rational(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }

    const Int& numerator() const { return num_; }
    const Int& denominator() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    bool is_negative() const { return num_ < 0; }

    // Requires is_integer().
    const Int& to_integer() const {
        if (den_ != 1)
            throw std::domain_error("Rational: " + to_string() + " is not an integer");
        return num_;
    }

    friend Rational operator-(const Rational& a) { return Rational(-a.num_, a.den_, raw_tag{}); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    // Canonical text form: "p/q" in lowest terms with q > 0, or "p" when q == 1.
    std::string to_string() const {
        if (den_ == 1) return num_.str();
        return num_.str() + "/" + den_.str();
    }

    // Accepts "p", "p/q", optional sign on either part, surrounding blanks.
    static Rational from_string(std::string_view text);

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.to_string();
    }

private:
    struct raw_tag {};
    // Already-reduced fast path (negation cannot break the invariants).
    Rational(Int n, Int d, raw_tag) : num_(std::move(n)), den_(std::move(d)) {}

    void reduce() {
        if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        Int g = boost::multiprecision::gcd(num_, den_);
        num_ /= g;
        den_ /= g;
    }

    Int num_;  // carries the sign
    Int den_;  // always > 0
};

namespace detail {

inline Int parse_signed_integer(std::string_view text, std::string_view whole) {
    auto fail = [&] {
        throw std::invalid_argument("invalid rational literal: '" + std::string(whole) + "'");
    };
    bool negative = false;
    if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    if (text.empty()) fail();
    for (char c : text)
        if (c < '0' || c > '9') fail();
    Int value{std::string(text)};
    return negative ? Int(-value) : value;
}

}  // namespace detail

inline Rational Rational::from_string(std::string_view text) {
    const std::string_view whole = text;
    const auto first = text.find_first_not_of(" \t");
    if (first == std::string_view::npos)
        throw std::invalid_argument("invalid rational literal: '" + std::string(whole) + "'");
    const auto last = text.find_last_not_of(" \t");
    text = text.substr(first, last - first + 1);

    const auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(detail::parse_signed_integer(text, whole));
    if (text.find('/', slash + 1) != std::string_view::npos)
        throw std::invalid_argument("invalid rational literal: '" + std::string(whole) + "'");
    Int num = detail::parse_signed_integer(text.substr(0, slash), whole);
    Int den = detail::parse_signed_integer(text.substr(slash + 1), whole);
    if (den == 0)
        throw std::invalid_argument("invalid rational literal: '" + std::string(whole) +
                                    "' (zero denominator)");
    return Rational(std::move(num), std::move(den));
}

inline Rational abs(const Rational& r) { return r.is_negative() ? -r : r; }

// base^exponent for a nonnegative integer exponent, by binary exponentiation.
inline Rational pow(Rational base, Int exponent) {
    if (exponent < 0) throw std::invalid_argument("pow: negative exponent");
    Rational acc(1);
    while (exponent > 0) {
        if ((exponent & 1) != 0) acc *= base;
        base *= base;
        exponent >>= 1;
    }
    return acc;
}

}  // namespace binomverify
