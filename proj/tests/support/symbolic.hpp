#pragma once

// Reference compiler from identity ASTs to explicit polynomials in one
// symbol. The poly-mode verifier never builds polynomials (it works by
// point evaluation); this compiler does, so the two can cross-check:
// the analyzer's degree bound must dominate the compiled degree, and a
// verdict of "verified" must coincide with a zero difference.

#include <binomverify/dsl/ast.hpp>
#include <binomverify/dsl/eval.hpp>
#include <binomverify/polynomial.hpp>
#include <binomverify/rational.hpp>

#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace testsupport {

using binomverify::Int;
using binomverify::Polynomial;
using binomverify::Rational;
namespace dsl = binomverify::dsl;

namespace detail {

struct PolyScope {
    const dsl::Env* env;
    std::string symbol;
    std::vector<std::pair<std::string, Rational>> binders;

    const Rational* find(const std::string& name) const {
        for (auto it = binders.rbegin(); it != binders.rend(); ++it)
            if (it->first == name) return &it->second;
        if (auto it = env->find(name); it != env->end()) return &it->second;
        return nullptr;
    }
};

inline Polynomial compile(const dsl::ExprPtr& e, PolyScope& scope);

// Sub-expressions used as exponents, binomial lower indices, or bounds
// must come out constant.
inline Int constant_integer(const dsl::ExprPtr& e, PolyScope& scope, const std::string& what) {
    const Polynomial p = compile(e, scope);
    if (p.degree() > 0) throw std::runtime_error(what + " depends on the symbol");
    const Rational value = p.coefficient(0);
    if (!value.is_integer()) throw std::runtime_error(what + " is not an integer");
    return value.to_integer();
}

inline Polynomial compile(const dsl::ExprPtr& e, PolyScope& scope) {
    using namespace binomverify::dsl;
    return std::visit(
        [&scope](const auto& x) -> Polynomial {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, IntegerLiteral>) {
                return Polynomial(Rational(x.value));
            } else if constexpr (std::is_same_v<T, Variable>) {
                if (const Rational* v = scope.find(x.name)) return Polynomial(*v);
                if (x.name == scope.symbol) return Polynomial::identity();
                throw std::runtime_error("unbound variable '" + x.name + "'");
            } else if constexpr (std::is_same_v<T, Negate>) {
                return -compile(x.operand, scope);
            } else if constexpr (std::is_same_v<T, Add>) {
                return compile(x.lhs, scope) + compile(x.rhs, scope);
            } else if constexpr (std::is_same_v<T, Subtract>) {
                return compile(x.lhs, scope) - compile(x.rhs, scope);
            } else if constexpr (std::is_same_v<T, Multiply>) {
                return compile(x.lhs, scope) * compile(x.rhs, scope);
            } else if constexpr (std::is_same_v<T, Power>) {
                const Int e0 = constant_integer(x.exponent, scope, "power exponent");
                if (e0 < 0) throw std::runtime_error("negative power exponent");
                Polynomial base = compile(x.base, scope);
                Polynomial acc{Rational(1)};
                for (Int i = 0; i < e0; ++i) acc *= base;
                return acc;
            } else if constexpr (std::is_same_v<T, Binomial>) {
                const Int k0 = constant_integer(x.lower, scope, "binomial lower index");
                if (k0 < 0) return Polynomial::zero();
                const Polynomial upper = compile(x.upper, scope);
                Polynomial acc{Rational(1)};
                for (Int m = 0; m < k0; ++m) acc *= upper - Polynomial(Rational(m));
                return Rational(1) / Rational(binomverify::factorial(k0)) * acc;
            } else if constexpr (std::is_same_v<T, SumRange>) {
                const Int lo = constant_integer(x.lower, scope, "summation bound");
                const Int hi = constant_integer(x.upper, scope, "summation bound");
                Polynomial acc;
                scope.binders.emplace_back(x.var, Rational(0));
                for (Int v = lo; v <= hi; ++v) {
                    scope.binders.back().second = Rational(v);
                    acc += compile(x.body, scope);
                }
                scope.binders.pop_back();
                return acc;
            } else {
                static_assert(std::is_same_v<T, SumPair>);
                const Int total = constant_integer(x.total, scope, "pair-summation total");
                Polynomial acc;
                scope.binders.emplace_back(x.var1, Rational(0));
                scope.binders.emplace_back(x.var2, Rational(0));
                for (Int v = 0; v <= total; ++v) {
                    scope.binders[scope.binders.size() - 2].second = Rational(v);
                    scope.binders[scope.binders.size() - 1].second = Rational(total - v);
                    acc += compile(x.body, scope);
                }
                scope.binders.pop_back();
                scope.binders.pop_back();
                return acc;
            }
        },
        e->node);
}

}  // namespace detail

// Expression as an explicit polynomial in `symbol` with every other
// parameter fixed by env.
inline Polynomial compile_poly(const dsl::ExprPtr& e, const std::string& symbol,
                               const dsl::Env& env) {
    detail::PolyScope scope{&env, symbol, {}};
    return detail::compile(e, scope);
}

}  // namespace testsupport
