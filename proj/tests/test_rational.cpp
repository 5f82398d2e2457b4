#include <binomverify/binomial.hpp>
#include <binomverify/rational.hpp>

#include <catch2/catch_amalgamated.hpp>

#include "support/oracles.hpp"

#include <random>
#include <stdexcept>
#include <vector>

using binomverify::Int;
using binomverify::Rational;

namespace {

Rational R(long long p, long long q = 1) { return Rational(Int(p), Int(q)); }

const std::vector<Rational> kGrid = {R(-6),     R(-5, 2), R(-1), R(0),  R(1, 3),
                                     R(1),      R(2),     R(7, 2), R(10), R(17, 5),
                                     R(-9, 4)};

}  // namespace

TEST_CASE("rationals reduce eagerly and carry the sign in the numerator") {
    CHECK(Rational(Int(6), Int(4)) == R(3, 2));
    CHECK(Rational(Int(1), Int(-2)) == R(-1, 2));
    CHECK(Rational(Int(-4), Int(-6)) == R(2, 3));
    CHECK(Rational(Int(0), Int(17)) == R(0));
    CHECK(Rational(Int(0), Int(-5)).denominator() == 1);
    CHECK(R(-1, 2).numerator() == -1);
    CHECK(R(-1, 2).denominator() == 2);
    CHECK_THROWS_AS(Rational(Int(1), Int(0)), std::invalid_argument);
}

TEST_CASE("rational arithmetic matches hand values") {
    CHECK(R(1, 2) + R(1, 3) == R(5, 6));
    CHECK(R(1, 2) - R(1, 3) == R(1, 6));
    CHECK(R(2, 3) * R(9, 4) == R(3, 2));
    CHECK(R(2, 3) / R(4, 3) == R(1, 2));
    CHECK(-R(3, 7) == R(-3, 7));
    CHECK_THROWS_AS(R(1) / R(0), std::domain_error);
    CHECK(R(1, 2) < R(2, 3));
    CHECK(R(-1, 2) < R(1, 3));
    CHECK(R(7, 2) > R(10, 3));
    CHECK(R(3, 6) <= R(1, 2));
    CHECK(R(3, 6) >= R(1, 2));
}

TEST_CASE("every arithmetic result is in lowest terms with positive denominator") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> num(-60, 60);
    std::uniform_int_distribution<int> den(1, 40);
    for (int round = 0; round < 500; ++round) {
        const Rational a = R(num(rng), den(rng));
        const Rational b = R(num(rng), den(rng));
        for (const Rational& r : {a + b, a - b, a * b}) {
            CHECK(r.denominator() > 0);
            CHECK(boost::multiprecision::gcd(Int(boost::multiprecision::abs(r.numerator())),
                                             r.denominator()) == 1);
        }
        if (!b.is_zero()) {
            const Rational q = a / b;
            CHECK(q.denominator() > 0);
            CHECK(boost::multiprecision::gcd(Int(boost::multiprecision::abs(q.numerator())),
                                             q.denominator()) == 1);
        }
    }
}

TEST_CASE("canonical serialization round-trips") {
    CHECK(R(-1, 8).to_string() == "-1/8");
    CHECK(R(6).to_string() == "6");
    CHECK(R(0).to_string() == "0");
    CHECK(Rational::from_string("-1/8") == R(-1, 8));
    CHECK(Rational::from_string("6") == R(6));
    CHECK(Rational::from_string(" +3/6 ") == R(1, 2));
    CHECK(Rational::from_string("4/-6") == R(-2, 3));
    for (const Rational& r : kGrid) CHECK(Rational::from_string(r.to_string()) == r);

    CHECK_THROWS_AS(Rational::from_string(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string("1/2/3"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string("x"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string("1/"), std::invalid_argument);
}

TEST_CASE("integers up to 4^64 survive a string round-trip") {
    const Int big = binomverify::pow4(64);
    CHECK(big == Int("340282366920938463463374607431768211456"));
    const Rational r(big);
    CHECK(Rational::from_string(r.to_string()) == r);
    CHECK(Rational(big, Int(3)) * R(3) == r);
}

TEST_CASE("rational power uses exact binary exponentiation") {
    CHECK(pow(R(2, 3), Int(5)) == R(32, 243));
    CHECK(pow(R(-2), Int(3)) == R(-8));
    CHECK(pow(R(7, 9), Int(0)) == R(1));
    CHECK(pow(R(0), Int(4)) == R(0));
    CHECK_THROWS_AS(pow(R(2), Int(-1)), std::invalid_argument);
}

TEST_CASE("falling factorial on the documented values") {
    CHECK(binomverify::falling_factorial(R(5), 0) == R(1));
    CHECK(binomverify::falling_factorial(R(5), 3) == R(60));
    CHECK(binomverify::falling_factorial(R(1, 2), 2) == R(-1, 4));
    CHECK_THROWS_AS(binomverify::falling_factorial(R(5), -1), std::invalid_argument);
}

TEST_CASE("generalized binomial coefficients on the documented values") {
    CHECK(binomverify::binom_rational(R(5), 2) == R(10));
    CHECK(binomverify::binom_rational(R(1, 2), 2) == R(-1, 8));
    CHECK(binomverify::binom_rational(R(-3), 2) == R(6));
    CHECK(binomverify::binom_rational(R(7), -1) == R(0));
    CHECK(binomverify::binom_rational(R(17, 5), -3) == R(0));

    CHECK(binomverify::binom_integer(0, 0) == 1);
    CHECK(binomverify::binom_integer(4, 2) == 6);
    CHECK(binomverify::binom_integer(-1, 1) == -1);
    CHECK(binomverify::binom_integer(9, -2) == 0);
}

TEST_CASE("powers of four on the documented values") {
    CHECK(binomverify::pow4(0) == 1);
    CHECK(binomverify::pow4(1) == 4);
    CHECK(binomverify::pow4(5) == 1024);
    CHECK_THROWS_AS(binomverify::pow4(-1), std::invalid_argument);
}

TEST_CASE("integer binomials count subsets") {
    for (int n = 0; n <= 20; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(binomverify::binom_integer(n, k) ==
                  Int(testsupport::count_subsets_brute(n, k)));
}

TEST_CASE("integer binomials agree with a division-free Pascal triangle") {
    for (int n = 0; n <= 24; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(binomverify::binom_integer(n, k) == testsupport::pascal_binomial(n, k));
}

TEST_CASE("upper negation property on a rational grid") {
    for (const Rational& x : kGrid)
        for (Int k = 0; k <= 10; ++k) {
            const Rational lhs = binomverify::binom_rational(x, k);
            Rational rhs = binomverify::binom_rational(Rational(k) - x - 1, k);
            if (k % 2 != 0) rhs = -rhs;
            CHECK(lhs == rhs);
        }
}

TEST_CASE("Pascal recurrence on a rational grid") {
    for (const Rational& x : kGrid)
        for (Int k = 1; k <= 10; ++k)
            CHECK(binomverify::binom_rational(x, k) ==
                  binomverify::binom_rational(x - 1, k) +
                      binomverify::binom_rational(x - 1, k - 1));
}

TEST_CASE("symmetry of integer binomials") {
    for (Int n = 0; n <= 20; ++n)
        for (Int k = 0; k <= n; ++k)
            CHECK(binomverify::binom_integer(n, k) == binomverify::binom_integer(n, n - k));
}
