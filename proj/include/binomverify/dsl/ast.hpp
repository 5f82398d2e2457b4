#pragma once

// Expression trees for binomial-sum identities, plus the canonical
// pretty-printer. The printer and the parser are inverse on every tree
// the parser can produce: parse(render(ast)) == ast.

#include "../rational.hpp"

#include <memory>
#include <string>
#include <utility>
#include <variant>

namespace binomverify::dsl {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct IntegerLiteral {
    Int value;
};
struct Variable {
    std::string name;
};
struct Negate {
    ExprPtr operand;
};
struct Add {
    ExprPtr lhs, rhs;
};
struct Subtract {
    ExprPtr lhs, rhs;
};
struct Multiply {
    ExprPtr lhs, rhs;
};
struct Power {
    ExprPtr base, exponent;
};
struct Binomial {
    ExprPtr upper, lower;
};
// sum(var = lower .. upper) body, inclusive integer bounds
struct SumRange {
    std::string var;
    ExprPtr lower, upper;
    ExprPtr body;
};
// sum(var1 + var2 = total) body: var1 runs 0..total, var2 = total - var1
struct SumPair {
    std::string var1, var2;
    ExprPtr total;
    ExprPtr body;
};

struct Expr {
    std::variant<IntegerLiteral, Variable, Negate, Add, Subtract, Multiply, Power, Binomial,
                 SumRange, SumPair>
        node;
};

struct Identity {
    ExprPtr lhs;
    ExprPtr rhs;
    std::string source;  // the text this identity was parsed from (or rendered to)
};

inline ExprPtr lit(Int value) {
    return std::make_shared<Expr>(Expr{IntegerLiteral{std::move(value)}});
}
inline ExprPtr var(std::string name) {
    return std::make_shared<Expr>(Expr{Variable{std::move(name)}});
}
inline ExprPtr neg(ExprPtr e) { return std::make_shared<Expr>(Expr{Negate{std::move(e)}}); }
inline ExprPtr add(ExprPtr l, ExprPtr r) {
    return std::make_shared<Expr>(Expr{Add{std::move(l), std::move(r)}});
}
inline ExprPtr sub(ExprPtr l, ExprPtr r) {
    return std::make_shared<Expr>(Expr{Subtract{std::move(l), std::move(r)}});
}
inline ExprPtr mul(ExprPtr l, ExprPtr r) {
    return std::make_shared<Expr>(Expr{Multiply{std::move(l), std::move(r)}});
}
inline ExprPtr pow_expr(ExprPtr base, ExprPtr exponent) {
    return std::make_shared<Expr>(Expr{Power{std::move(base), std::move(exponent)}});
}
inline ExprPtr binom(ExprPtr upper, ExprPtr lower) {
    return std::make_shared<Expr>(Expr{Binomial{std::move(upper), std::move(lower)}});
}
inline ExprPtr sum_range(std::string v, ExprPtr lower, ExprPtr upper, ExprPtr body) {
    return std::make_shared<Expr>(
        Expr{SumRange{std::move(v), std::move(lower), std::move(upper), std::move(body)}});
}
inline ExprPtr sum_pair(std::string v1, std::string v2, ExprPtr total, ExprPtr body) {
    return std::make_shared<Expr>(
        Expr{SumPair{std::move(v1), std::move(v2), std::move(total), std::move(body)}});
}

// Deep structural equality.
inline bool equal(const ExprPtr& a, const ExprPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->node.index() != b->node.index()) return false;
    return std::visit(
        [&b](const auto& x) -> bool {
            using T = std::decay_t<decltype(x)>;
            const auto& y = std::get<T>(b->node);
            if constexpr (std::is_same_v<T, IntegerLiteral>) {
                return x.value == y.value;
            } else if constexpr (std::is_same_v<T, Variable>) {
                return x.name == y.name;
            } else if constexpr (std::is_same_v<T, Negate>) {
                return equal(x.operand, y.operand);
            } else if constexpr (std::is_same_v<T, Add> || std::is_same_v<T, Subtract> ||
                                 std::is_same_v<T, Multiply>) {
                return equal(x.lhs, y.lhs) && equal(x.rhs, y.rhs);
            } else if constexpr (std::is_same_v<T, Power>) {
                return equal(x.base, y.base) && equal(x.exponent, y.exponent);
            } else if constexpr (std::is_same_v<T, Binomial>) {
                return equal(x.upper, y.upper) && equal(x.lower, y.lower);
            } else if constexpr (std::is_same_v<T, SumRange>) {
                return x.var == y.var && equal(x.lower, y.lower) && equal(x.upper, y.upper) &&
                       equal(x.body, y.body);
            } else {
                static_assert(std::is_same_v<T, SumPair>);
                return x.var1 == y.var1 && x.var2 == y.var2 && equal(x.total, y.total) &&
                       equal(x.body, y.body);
            }
        },
        a->node);
}

namespace detail {

// Grammar levels, loosest first. A node may be printed bare in a
// context iff its own level is at least the context's.
enum Level { kExpr = 0, kTerm = 1, kFactor = 2, kAtom = 3 };

// `tail` is true when the next token after this subexpression cannot
// extend a term ('+', '-', ')', ',', '..', '==', end of input). A sum
// printed bare swallows the rest of the enclosing term as its body, so
// it may only appear bare in tail position.
std::string render_at(const ExprPtr& e, Level level, bool tail);

inline std::string parenthesize(const std::string& s) { return "(" + s + ")"; }

inline std::string render_node(const ExprPtr& e, bool tail) {
    return std::visit(
        [tail](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, IntegerLiteral>) {
                return x.value.str();
            } else if constexpr (std::is_same_v<T, Variable>) {
                return x.name;
            } else if constexpr (std::is_same_v<T, Negate>) {
                std::string inner = render_at(x.operand, kFactor, tail);
                // "--x" does not lex; fence a leading minus off.
                if (!inner.empty() && inner.front() == '-')
                    inner = parenthesize(render_at(x.operand, kExpr, true));
                return "-" + inner;
            } else if constexpr (std::is_same_v<T, Add>) {
                return render_at(x.lhs, kExpr, true) + "+" + render_at(x.rhs, kTerm, tail);
            } else if constexpr (std::is_same_v<T, Subtract>) {
                return render_at(x.lhs, kExpr, true) + "-" + render_at(x.rhs, kTerm, tail);
            } else if constexpr (std::is_same_v<T, Multiply>) {
                return render_at(x.lhs, kTerm, false) + "*" + render_at(x.rhs, kFactor, tail);
            } else if constexpr (std::is_same_v<T, Power>) {
                return render_at(x.base, kAtom, false) + "^" + render_at(x.exponent, kAtom, tail);
            } else if constexpr (std::is_same_v<T, Binomial>) {
                return "C(" + render_at(x.upper, kExpr, true) + "," +
                       render_at(x.lower, kExpr, true) + ")";
            } else if constexpr (std::is_same_v<T, SumRange>) {
                return "sum(" + x.var + "=" + render_at(x.lower, kExpr, true) + ".." +
                       render_at(x.upper, kExpr, true) + ") " + render_at(x.body, kTerm, true);
            } else {
                static_assert(std::is_same_v<T, SumPair>);
                return "sum(" + x.var1 + "+" + x.var2 + "=" + render_at(x.total, kExpr, true) +
                       ") " + render_at(x.body, kTerm, true);
            }
        },
        e->node);
}

inline Level natural_level(const ExprPtr& e) {
    return std::visit(
        [](const auto& x) -> Level {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, IntegerLiteral>) {
                return x.value < 0 ? kFactor : kAtom;  // "-5" reads as a negated factor
            } else if constexpr (std::is_same_v<T, Variable> || std::is_same_v<T, Binomial>) {
                return kAtom;
            } else if constexpr (std::is_same_v<T, Negate> || std::is_same_v<T, Power>) {
                return kFactor;
            } else if constexpr (std::is_same_v<T, Multiply>) {
                return kTerm;
            } else if constexpr (std::is_same_v<T, SumRange> || std::is_same_v<T, SumPair>) {
                return kTerm;  // body extent; bare placement also needs tail position
            } else {
                return kExpr;  // Add, Subtract
            }
        },
        e->node);
}

inline bool is_sum(const ExprPtr& e) {
    return std::holds_alternative<SumRange>(e->node) || std::holds_alternative<SumPair>(e->node);
}

inline std::string render_at(const ExprPtr& e, Level level, bool tail) {
    if (is_sum(e)) {
        // A sum's body runs to the end of the term, so outside tail
        // position it must be fenced off; inside parentheses it is in
        // tail position again.
        if (!tail) return parenthesize(render_node(e, true));
        return render_node(e, true);
    }
    if (natural_level(e) < level) return parenthesize(render_node(e, true));
    return render_node(e, tail);
}

}  // namespace detail

// Canonical text for an expression; parses back to the same tree.
inline std::string render(const ExprPtr& e) { return detail::render_at(e, detail::kExpr, true); }

inline std::string render(const Identity& id) { return render(id.lhs) + " == " + render(id.rhs); }

}  // namespace binomverify::dsl
