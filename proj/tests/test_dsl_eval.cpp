#include <binomverify/dsl/eval.hpp>
#include <binomverify/dsl/parser.hpp>
#include <binomverify/errors.hpp>
#include <binomverify/identities.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

using namespace binomverify;
using namespace binomverify::dsl;

namespace {

Rational R(long long p, long long q = 1) { return Rational(Int(p), Int(q)); }

Rational eval_text(const std::string& text, const Env& env) {
    return eval_expr(parse_expression(text), env);
}

const std::string kTheoremLhs = "sum(i+j=n) C(2*i-l,i)*C(2*j+l,j)";
const std::string kAuxLhs = "sum(i=0..p) (-1)^i*C(l-i,p)*C(p,i)";

}  // namespace

TEST_CASE("evaluation of the documented examples") {
    CHECK(eval_text("C(2*i,i)", {{"i", R(2)}}) == R(6));
    CHECK(eval_text(kAuxLhs, {{"p", R(2)}, {"l", R(7)}}) == R(1));
    CHECK(eval_text(kTheoremLhs, {{"n", R(1)}, {"l", R(1, 2)}}) == R(4));
}

TEST_CASE("evaluation follows the value conventions") {
    CHECK(eval_text("0^0", {}) == R(1));
    CHECK(eval_text("C(5,-1)", {}) == R(0));
    CHECK(eval_text("C(-1,2)", {}) == R(1));
    CHECK(eval_text("C(l,2)", {{"l", R(1, 2)}}) == R(-1, 8));
    CHECK(eval_text("(-1)^i", {{"i", R(7)}}) == R(-1));
    CHECK(eval_text("2^10-4^5+1", {}) == R(1));
}

TEST_CASE("empty summations evaluate to zero") {
    CHECK(eval_text("sum(i=0..n) C(n,i)", {{"n", R(-1)}}) == R(0));
    CHECK(eval_text("sum(i=3..2) i", {}) == R(0));
    CHECK(eval_text("sum(i+j=n) 1", {{"n", R(0)}}) == R(1));
}

TEST_CASE("binders shadow the environment and unwind afterwards") {
    CHECK(eval_text("sum(i=0..2) i", {{"i", R(100)}}) == R(3));
    CHECK(eval_text("i+sum(i=0..2) i", {{"i", R(100)}}) == R(103));
    CHECK(eval_text("sum(i=0..1) sum(j=0..i) 10^j", {}) == R(12));
    CHECK(eval_text("sum(i+j=2) (i*10+j)", {}) == R(33));
    // the +j below lands outside the sum body, where the binder is gone
    CHECK_THROWS_AS(eval_text("sum(i+j=2) i*10+j", {}), eval_error);
}

TEST_CASE("evaluation errors name the offending construct") {
    CHECK_THROWS_AS(eval_text("x", {}), eval_error);
    CHECK_THROWS_AS(eval_text("C(5,l)", {{"l", R(1, 2)}}), eval_error);
    CHECK_THROWS_AS(eval_text("2^i", {{"i", R(-1)}}), eval_error);
    CHECK_THROWS_AS(eval_text("2^i", {{"i", R(1, 2)}}), eval_error);
    CHECK_THROWS_AS(eval_text("sum(i=0..n) 1", {{"n", R(1, 2)}}), eval_error);
    CHECK_THROWS_AS(eval_text("sum(i=5..2) 1", {}), eval_error);
    CHECK_THROWS_AS(eval_text("sum(i+j=n) 1", {{"n", R(-1)}}), eval_error);
    CHECK_THROWS_MATCHES(eval_text("x+1", {}), eval_error,
                         Catch::Matchers::Message("unbound variable 'x'"));
    CHECK_THROWS_MATCHES(
        eval_text("sum(i=5..2) 1", {}), eval_error,
        Catch::Matchers::Message("summation range 5..2 runs backwards"));
}

TEST_CASE("oversized summations are refused up front") {
    CHECK_THROWS_AS(eval_text("sum(i=0..2000000) 1", {}), eval_error);
    CHECK_THROWS_AS(eval_text("sum(i+j=n) 1", {{"n", R(2'000'000)}}), eval_error);
    CHECK_NOTHROW(eval_text("sum(i=0..100) 1", {}));
}

TEST_CASE("degree bounds on the documented examples") {
    CHECK(degree_bound(parse_expression("4^n"), "l", {{"n", R(5)}}) == 0);
    CHECK(degree_bound(parse_expression(kTheoremLhs), "l", {{"n", R(2)}}) == 2);
    CHECK(degree_bound(parse_expression(kAuxLhs), "l", {{"p", R(3)}}) == 3);
}

TEST_CASE("degree bounds follow the structural rules") {
    const Env none;
    CHECK(degree_bound(parse_expression("7"), "l", none) == 0);
    CHECK(degree_bound(parse_expression("l"), "l", none) == 1);
    CHECK(degree_bound(parse_expression("l*l+l"), "l", none) == 2);
    CHECK(degree_bound(parse_expression("(l+1)^4"), "l", none) == 4);
    CHECK(degree_bound(parse_expression("C(2*l+1,3)"), "l", none) == 3);
    CHECK(degree_bound(parse_expression("C(l,-1)"), "l", none) == 0);
    CHECK(degree_bound(parse_expression("-l^2"), "l", none) == 2);
    // binders that reuse the symbol shadow it
    CHECK(degree_bound(parse_expression("sum(l=0..3) l"), "l", none) == 0);
    CHECK(degree_bound(parse_expression("l+sum(l=0..3) l*l"), "l", none) == 1);
    // the bound is per unrolled instance, maximized
    CHECK(degree_bound(parse_expression("sum(i=0..3) C(l,i)"), "l", none) == 3);
    CHECK(degree_bound(parse_expression("sum(i+j=n) C(l,i)*C(l,j)"), "l", {{"n", R(4)}}) == 4);
}

TEST_CASE("degree bounds reject structures that are not polynomial in the symbol") {
    const Env none;
    CHECK_THROWS_AS(degree_bound(parse_expression("C(2,l)"), "l", none), eval_error);
    CHECK_THROWS_AS(degree_bound(parse_expression("2^l"), "l", none), eval_error);
    CHECK_THROWS_AS(degree_bound(parse_expression("sum(i=0..l) 1"), "l", none), eval_error);
    CHECK_THROWS_AS(degree_bound(parse_expression("sum(i+j=l) 1"), "l", none), eval_error);
    CHECK_THROWS_AS(degree_bound(parse_expression("l"), "l", {{"l", R(1)}}), eval_error);
    CHECK_THROWS_AS(degree_bound(parse_expression("m+l"), "l", none), eval_error);
    CHECK_THROWS_AS(degree_bound(parse_expression("C(l,2000000)"), "l", none), eval_error);
    CHECK_THROWS_MATCHES(degree_bound(parse_expression("C(2,l)"), "l", none), eval_error,
                         Catch::Matchers::Message(
                             "binomial lower index depends on the free symbol 'l'; "
                             "C(x, l) is not a polynomial in l"));
}

TEST_CASE("the evaluator agrees with the dedicated convolution routines") {
    const ExprPtr theorem = parse_expression(kTheoremLhs);
    const ExprPtr aux = parse_expression(kAuxLhs);
    const std::vector<Rational> grid = {R(-6), R(-5, 2), R(-1), R(0), R(1, 3),
                                        R(1),  R(2),     R(7, 2), R(10)};
    for (int n = 0; n <= 8; ++n)
        for (const Rational& ell : grid)
            CHECK(eval_expr(theorem, {{"n", R(n)}, {"l", ell}}) ==
                  generalized_convolution_at(n, ell));
    for (int p = 0; p <= 8; ++p)
        for (const Rational& ell : grid)
            CHECK(eval_expr(aux, {{"p", R(p)}, {"l", ell}}) == aux_sum_at(p, ell));
}
