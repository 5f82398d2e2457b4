#pragma once

// The two verification modes over parsed identities.
//
// numeric: evaluate both sides at one full assignment and compare.
// poly:    one symbol stays free; both sides are evaluated at the
//          degree_bound+1 points 0, 1, ..., d. Agreement there proves
//          the identity for every real value of the symbol, because two
//          polynomials of degree at most d that agree at d+1 distinct
//          points are identical.

#include "../rational.hpp"
#include "ast.hpp"
#include "eval.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace binomverify::dsl {

enum class Mode { numeric, poly };
enum class Status { verified, failed, error };

inline const char* to_string(Mode m) { return m == Mode::numeric ? "numeric" : "poly"; }
inline const char* to_string(Status s) {
    switch (s) {
        case Status::verified: return "verified";
        case Status::failed: return "failed";
        default: return "error";
    }
}

struct Counterexample {
    Env assignment;  // full assignment, including the free symbol in poly mode
    Rational lhs;
    Rational rhs;
};

struct VerificationReport {
    std::string identity;  // source text of the identity
    Mode mode = Mode::numeric;
    Env assignments;
    std::optional<std::string> free_symbol;
    std::optional<long long> degree_bound;
    std::vector<Rational> points;      // poly mode: the evaluation points
    std::vector<Rational> lhs_values;  // one entry in numeric mode, one per point in poly mode
    std::vector<Rational> rhs_values;
    Status status = Status::error;
    std::optional<Counterexample> counterexample;
    std::optional<std::string> error_message;
};

inline VerificationReport verify_numeric(const Identity& identity, const Env& env) {
    VerificationReport report;
    report.identity = identity.source;
    report.mode = Mode::numeric;
    report.assignments = env;
    try {
        const Rational lhs = eval_expr(identity.lhs, env);
        const Rational rhs = eval_expr(identity.rhs, env);
        report.lhs_values.push_back(lhs);
        report.rhs_values.push_back(rhs);
        if (lhs == rhs) {
            report.status = Status::verified;
        } else {
            report.status = Status::failed;
            report.counterexample = Counterexample{env, lhs, rhs};
        }
    } catch (const eval_error& e) {
        report.status = Status::error;
        report.error_message = e.what();
    }
    return report;
}

inline VerificationReport verify_poly(const Identity& identity, const std::string& free_symbol,
                                      const Env& env) {
    VerificationReport report;
    report.identity = identity.source;
    report.mode = Mode::poly;
    report.assignments = env;
    report.free_symbol = free_symbol;
    try {
        const long long d_lhs = degree_bound(identity.lhs, free_symbol, env);
        const long long d_rhs = degree_bound(identity.rhs, free_symbol, env);
        const long long d = d_lhs > d_rhs ? d_lhs : d_rhs;
        report.degree_bound = d;

        report.status = Status::verified;
        for (long long point = 0; point <= d; ++point) {
            Env instance = env;
            instance[free_symbol] = Rational(point);
            const Rational lhs = eval_expr(identity.lhs, instance);
            const Rational rhs = eval_expr(identity.rhs, instance);
            report.points.emplace_back(point);
            report.lhs_values.push_back(lhs);
            report.rhs_values.push_back(rhs);
            if (lhs != rhs && report.status == Status::verified) {
                report.status = Status::failed;
                report.counterexample = Counterexample{instance, lhs, rhs};
            }
        }
    } catch (const eval_error& e) {
        report.status = Status::error;
        report.error_message = e.what();
    }
    return report;
}

namespace detail {

inline std::string join_rationals(const std::vector<Rational>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ", ";
        out += values[i].to_string();
    }
    return out;
}

inline std::string join_env(const Env& env) {
    std::string out;
    for (const auto& [name, value] : env) {
        if (!out.empty()) out += ", ";
        out += name + "=" + value.to_string();
    }
    return out;
}

}  // namespace detail

// Fixed multi-line text form of a report. Field order and punctuation
// are part of the interface; golden tests pin them byte for byte.
inline std::string report_text(const VerificationReport& report) {
    std::string out;
    out += "identity: " + report.identity + "\n";
    out += "mode: ";
    out += to_string(report.mode);
    out += "\n";
    out += "assignments: " +
           (report.assignments.empty() ? std::string("(none)")
                                       : detail::join_env(report.assignments)) +
           "\n";
    if (report.free_symbol) out += "free symbol: " + *report.free_symbol + "\n";
    if (report.degree_bound) out += "degree bound: " + std::to_string(*report.degree_bound) + "\n";
    if (!report.points.empty()) out += "points: " + detail::join_rationals(report.points) + "\n";
    if (!report.lhs_values.empty()) {
        out += "lhs: " + detail::join_rationals(report.lhs_values) + "\n";
        out += "rhs: " + detail::join_rationals(report.rhs_values) + "\n";
    }
    out += "status: ";
    out += to_string(report.status);
    out += "\n";
    if (report.counterexample) {
        const auto& ce = *report.counterexample;
        out += "counterexample: ";
        if (!ce.assignment.empty()) out += "at " + detail::join_env(ce.assignment) + ", ";
        out += "lhs=" + ce.lhs.to_string() + ", rhs=" + ce.rhs.to_string() + "\n";
    }
    if (report.error_message) out += "error: " + *report.error_message + "\n";
    return out;
}

}  // namespace binomverify::dsl
