#pragma once

// Exact evaluation of identity expressions, and the structural
// degree-bound analyzer that powers poly-mode verification.

#include "../binomial.hpp"
#include "../errors.hpp"
#include "../rational.hpp"
#include "ast.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace binomverify::dsl {

using Env = std::map<std::string, Rational>;

// Summations and degree bounds larger than this are refused rather than
// ground through; identities at that scale are outside desk scale.
inline constexpr long long kMaxSummationTerms = 1'000'000;
inline constexpr long long kMaxDegreeBound = 1'000'000;

namespace detail {

// Name lookup through the binder stack, innermost first, then the
// caller-provided environment.
class Scope {
public:
    explicit Scope(const Env& base) : base_(&base) {}

    const Rational* find(const std::string& name) const {
        for (auto it = locals_.rbegin(); it != locals_.rend(); ++it)
            if (it->first == name) return &it->second;
        if (auto it = base_->find(name); it != base_->end()) return &it->second;
        return nullptr;
    }

    void push(std::string name) { locals_.emplace_back(std::move(name), Rational(0)); }
    void pop() { locals_.pop_back(); }

    // Value slot of the from_top-th innermost binder.
    Rational& slot(std::size_t from_top = 0) {
        return locals_[locals_.size() - 1 - from_top].second;
    }

private:
    const Env* base_;
    std::vector<std::pair<std::string, Rational>> locals_;
};

inline Int require_integer(const Rational& v, const std::string& what) {
    if (!v.is_integer())
        throw eval_error(what + " must be an integer, got " + v.to_string());
    return v.to_integer();
}

inline void check_term_count(const Int& count, const std::string& what) {
    if (count > kMaxSummationTerms)
        throw eval_error(what + " has " + count.str() + " terms, more than the supported " +
                         std::to_string(kMaxSummationTerms));
}

inline Rational eval(const ExprPtr& e, Scope& scope) {
    return std::visit(
        [&scope](const auto& x) -> Rational {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, IntegerLiteral>) {
                return Rational(x.value);
            } else if constexpr (std::is_same_v<T, Variable>) {
                if (const Rational* v = scope.find(x.name)) return *v;
                throw eval_error("unbound variable '" + x.name + "'");
            } else if constexpr (std::is_same_v<T, Negate>) {
                return -eval(x.operand, scope);
            } else if constexpr (std::is_same_v<T, Add>) {
                return eval(x.lhs, scope) + eval(x.rhs, scope);
            } else if constexpr (std::is_same_v<T, Subtract>) {
                return eval(x.lhs, scope) - eval(x.rhs, scope);
            } else if constexpr (std::is_same_v<T, Multiply>) {
                return eval(x.lhs, scope) * eval(x.rhs, scope);
            } else if constexpr (std::is_same_v<T, Power>) {
                const Rational base = eval(x.base, scope);
                const Rational exponent = eval(x.exponent, scope);
                const Int e0 = require_integer(exponent, "power exponent");
                if (e0 < 0)
                    throw eval_error("power exponent must be nonnegative, got " + e0.str());
                return pow(base, e0);
            } else if constexpr (std::is_same_v<T, Binomial>) {
                const Rational upper = eval(x.upper, scope);
                const Rational lower = eval(x.lower, scope);
                // Negative lower index gives 0 by convention, but a
                // non-integer one is a modelling mistake, not a value.
                return binom_rational(upper, require_integer(lower, "binomial lower index"));
            } else if constexpr (std::is_same_v<T, SumRange>) {
                const Int lo = require_integer(eval(x.lower, scope), "summation bound");
                const Int hi = require_integer(eval(x.upper, scope), "summation bound");
                if (lo > hi + 1)
                    throw eval_error("summation range " + lo.str() + ".." + hi.str() +
                                     " runs backwards");
                check_term_count(hi - lo + 1, "summation over '" + x.var + "'");
                Rational acc(0);
                scope.push(x.var);
                for (Int v = lo; v <= hi; ++v) {
                    scope.slot() = Rational(v);
                    acc += eval(x.body, scope);
                }
                scope.pop();
                return acc;
            } else {
                static_assert(std::is_same_v<T, SumPair>);
                const Int total = require_integer(eval(x.total, scope), "pair-summation total");
                if (total < 0)
                    throw eval_error("pair-summation total must be nonnegative, got " +
                                     total.str());
                check_term_count(total + 1, "summation over '" + x.var1 + "+" + x.var2 + "'");
                Rational acc(0);
                scope.push(x.var1);
                scope.push(x.var2);
                for (Int v = 0; v <= total; ++v) {
                    scope.slot(1) = Rational(v);
                    scope.slot(0) = Rational(total - v);
                    acc += eval(x.body, scope);
                }
                scope.pop();
                scope.pop();
                return acc;
            }
        },
        e->node);
}

// Does the expression use `symbol` as a free variable? Binders that
// reuse the name shadow it.
inline bool mentions(const ExprPtr& e, const std::string& symbol,
                     std::vector<std::string>& shadows) {
    return std::visit(
        [&](const auto& x) -> bool {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, IntegerLiteral>) {
                return false;
            } else if constexpr (std::is_same_v<T, Variable>) {
                if (x.name != symbol) return false;
                for (const auto& s : shadows)
                    if (s == symbol) return false;
                return true;
            } else if constexpr (std::is_same_v<T, Negate>) {
                return mentions(x.operand, symbol, shadows);
            } else if constexpr (std::is_same_v<T, Add> || std::is_same_v<T, Subtract> ||
                                 std::is_same_v<T, Multiply>) {
                return mentions(x.lhs, symbol, shadows) || mentions(x.rhs, symbol, shadows);
            } else if constexpr (std::is_same_v<T, Power>) {
                return mentions(x.base, symbol, shadows) || mentions(x.exponent, symbol, shadows);
            } else if constexpr (std::is_same_v<T, Binomial>) {
                return mentions(x.upper, symbol, shadows) || mentions(x.lower, symbol, shadows);
            } else if constexpr (std::is_same_v<T, SumRange>) {
                if (mentions(x.lower, symbol, shadows) || mentions(x.upper, symbol, shadows))
                    return true;
                shadows.push_back(x.var);
                const bool hit = mentions(x.body, symbol, shadows);
                shadows.pop_back();
                return hit;
            } else {
                static_assert(std::is_same_v<T, SumPair>);
                if (mentions(x.total, symbol, shadows)) return true;
                shadows.push_back(x.var1);
                shadows.push_back(x.var2);
                const bool hit = mentions(x.body, symbol, shadows);
                shadows.pop_back();
                shadows.pop_back();
                return hit;
            }
        },
        e->node);
}

inline bool mentions(const ExprPtr& e, const std::string& symbol) {
    std::vector<std::string> shadows;
    return mentions(e, symbol, shadows);
}

// Degree of e as a polynomial in `symbol`, bounded from above by
// structure: binders are unrolled concretely, so their bounds (and
// every binomial lower index and power exponent) must not involve the
// symbol.
inline Int bound_degree(const ExprPtr& e, const std::string& symbol, Scope& scope) {
    return std::visit(
        [&](const auto& x) -> Int {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, IntegerLiteral>) {
                return 0;
            } else if constexpr (std::is_same_v<T, Variable>) {
                if (scope.find(x.name)) return 0;  // parameter or binder
                if (x.name == symbol) return 1;
                throw eval_error("unbound variable '" + x.name + "'");
            } else if constexpr (std::is_same_v<T, Negate>) {
                return bound_degree(x.operand, symbol, scope);
            } else if constexpr (std::is_same_v<T, Add> || std::is_same_v<T, Subtract>) {
                const Int l = bound_degree(x.lhs, symbol, scope);
                const Int r = bound_degree(x.rhs, symbol, scope);
                return l > r ? l : r;
            } else if constexpr (std::is_same_v<T, Multiply>) {
                return bound_degree(x.lhs, symbol, scope) + bound_degree(x.rhs, symbol, scope);
            } else if constexpr (std::is_same_v<T, Power>) {
                if (mentions(x.exponent, symbol))
                    throw eval_error("power exponent depends on the free symbol '" + symbol +
                                     "'");
                const Int e0 = require_integer(eval(x.exponent, scope), "power exponent");
                if (e0 < 0)
                    throw eval_error("power exponent must be nonnegative, got " + e0.str());
                return e0 * bound_degree(x.base, symbol, scope);
            } else if constexpr (std::is_same_v<T, Binomial>) {
                if (mentions(x.lower, symbol))
                    throw eval_error("binomial lower index depends on the free symbol '" +
                                     symbol + "'; C(x, " + symbol +
                                     ") is not a polynomial in " + symbol);
                const Int k0 = require_integer(eval(x.lower, scope), "binomial lower index");
                if (k0 < 0) return 0;
                return k0 * bound_degree(x.upper, symbol, scope);
            } else if constexpr (std::is_same_v<T, SumRange>) {
                if (mentions(x.lower, symbol) || mentions(x.upper, symbol))
                    throw eval_error("summation bound depends on the free symbol '" + symbol +
                                     "'");
                const Int lo = require_integer(eval(x.lower, scope), "summation bound");
                const Int hi = require_integer(eval(x.upper, scope), "summation bound");
                if (lo > hi + 1)
                    throw eval_error("summation range " + lo.str() + ".." + hi.str() +
                                     " runs backwards");
                check_term_count(hi - lo + 1, "summation over '" + x.var + "'");
                Int best = 0;
                scope.push(x.var);
                for (Int v = lo; v <= hi; ++v) {
                    scope.slot() = Rational(v);
                    const Int d = bound_degree(x.body, symbol, scope);
                    if (d > best) best = d;
                }
                scope.pop();
                return best;
            } else {
                static_assert(std::is_same_v<T, SumPair>);
                if (mentions(x.total, symbol))
                    throw eval_error("pair-summation total depends on the free symbol '" +
                                     symbol + "'");
                const Int total = require_integer(eval(x.total, scope), "pair-summation total");
                if (total < 0)
                    throw eval_error("pair-summation total must be nonnegative, got " +
                                     total.str());
                check_term_count(total + 1, "summation over '" + x.var1 + "+" + x.var2 + "'");
                Int best = 0;
                scope.push(x.var1);
                scope.push(x.var2);
                for (Int v = 0; v <= total; ++v) {
                    scope.slot(1) = Rational(v);
                    scope.slot(0) = Rational(total - v);
                    const Int d = bound_degree(x.body, symbol, scope);
                    if (d > best) best = d;
                }
                scope.pop();
                scope.pop();
                return best;
            }
        },
        e->node);
}

}  // namespace detail

// Evaluates an expression exactly. Every free variable must be bound in
// env; violations and domain errors surface as eval_error.
inline Rational eval_expr(const ExprPtr& e, const Env& env) {
    detail::Scope scope(env);
    return detail::eval(e, scope);
}

// Upper bound on the degree of e viewed as a polynomial in `symbol`,
// with all other parameters fixed by env. The bound is syntactic:
// literal 0, the symbol itself 1, max over '+'/'-', sum over '*',
// multiplied through powers and binomial upper arguments, max over
// concretely unrolled summation instances.
inline long long degree_bound(const ExprPtr& e, const std::string& symbol, const Env& env) {
    if (env.count(symbol))
        throw eval_error("free symbol '" + symbol + "' must not also be assigned");
    detail::Scope scope(env);
    const Int d = detail::bound_degree(e, symbol, scope);
    if (d > kMaxDegreeBound)
        throw eval_error("degree bound " + d.str() + " exceeds the supported " +
                         std::to_string(kMaxDegreeBound));
    return d.convert_to<long long>();
}

}  // namespace binomverify::dsl
