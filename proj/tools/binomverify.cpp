// Command-line frontend: identity verification, derivation tracing,
// series expansion, and the subset-enumeration oracle. Text and JSON
// output are both deterministic; exit codes are 0 (everything checked
// out), 1 (a mathematical claim failed), 2 (usage, parse, or resource
// error).

#include <binomverify/binomverify.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstddef>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

using json = nlohmann::ordered_json;
using namespace binomverify;

namespace {

// Bad flag values and inconsistent flag combinations; always exit 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Rational rational_flag(const std::string& text, const std::string& flag) {
    try {
        return Rational::from_string(text);
    } catch (const std::invalid_argument&) {
        throw UsageError(flag + ": expected an integer or fraction p/q, got '" + text + "'");
    }
}

long long integer_flag(const std::string& text, const std::string& flag) {
    try {
        std::size_t used = 0;
        const long long value = std::stoll(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return value;
    } catch (const std::exception&) {
        throw UsageError(flag + ": expected an integer, got '" + text + "'");
    }
}

Int enumeration_cap_from_env() {
    const char* raw = std::getenv("BINOMVERIFY_ENUM_CAP");
    if (!raw) return Int(kDefaultEnumerationCap);
    try {
        const Int cap{std::string(raw)};
        if (cap < 1) throw std::runtime_error("");
        return cap;
    } catch (const std::exception&) {
        throw UsageError("BINOMVERIFY_ENUM_CAP must be a positive integer, got '" +
                         std::string(raw) + "'");
    }
}

json env_to_json(const dsl::Env& env) {
    json out = json::object();
    for (const auto& [name, value] : env) out[name] = value.to_string();
    return out;
}

json rationals_to_json(const std::vector<Rational>& values) {
    json out = json::array();
    for (const auto& v : values) out.push_back(v.to_string());
    return out;
}

json report_to_json(const dsl::VerificationReport& report) {
    json out;
    out["identity"] = report.identity;
    out["mode"] = dsl::to_string(report.mode);
    out["assignments"] = env_to_json(report.assignments);
    out["free_symbol"] = report.free_symbol ? json(*report.free_symbol) : json(nullptr);
    out["degree_bound"] = report.degree_bound ? json(*report.degree_bound) : json(nullptr);
    if (report.mode == dsl::Mode::poly) {
        out["points"] = rationals_to_json(report.points);
        out["lhs"] = rationals_to_json(report.lhs_values);
        out["rhs"] = rationals_to_json(report.rhs_values);
    } else {
        out["points"] = nullptr;
        out["lhs"] = report.lhs_values.empty() ? json(nullptr)
                                               : json(report.lhs_values.front().to_string());
        out["rhs"] = report.rhs_values.empty() ? json(nullptr)
                                               : json(report.rhs_values.front().to_string());
    }
    out["status"] = dsl::to_string(report.status);
    if (report.counterexample) {
        out["counterexample"] = {{"assignment", env_to_json(report.counterexample->assignment)},
                                 {"lhs", report.counterexample->lhs.to_string()},
                                 {"rhs", report.counterexample->rhs.to_string()}};
    } else {
        out["counterexample"] = nullptr;
    }
    out["error"] = report.error_message ? json(*report.error_message) : json(nullptr);
    return out;
}

void emit_document(json document) { std::cout << document.dump(2) << "\n"; }

// ---------------------------------------------------------------- verify

struct Sweep {
    std::string name;
    long long lo = 0;
    long long hi = 0;
};

struct VerifyArgs {
    std::string expr;
    std::string file;
    std::string mode = "numeric";
    std::string free_symbol;
    std::vector<std::string> assigns;
    std::vector<std::string> ranges;
    bool json_out = false;
};

int run_verify(const VerifyArgs& args) {
    if (args.expr.empty() == args.file.empty())
        throw UsageError("exactly one of --expr or --file is required");
    if (args.mode != "numeric" && args.mode != "poly")
        throw UsageError("--mode must be 'numeric' or 'poly', got '" + args.mode + "'");
    const bool poly = args.mode == "poly";
    if (poly && args.free_symbol.empty())
        throw UsageError("poly mode needs --free NAME for the symbol left free");
    if (!poly && !args.free_symbol.empty())
        throw UsageError("--free only applies to poly mode");

    dsl::Env base;
    for (const auto& item : args.assigns) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            throw UsageError("--assign expects NAME=VALUE, got '" + item + "'");
        const std::string name = item.substr(0, eq);
        if (base.count(name)) throw UsageError("duplicate assignment for '" + name + "'");
        base[name] = rational_flag(item.substr(eq + 1), "--assign " + name);
    }

    std::vector<Sweep> sweeps;
    for (const auto& item : args.ranges) {
        const auto eq = item.find('=');
        const auto dots = item.find("..");
        if (eq == std::string::npos || eq == 0 || dots == std::string::npos || dots < eq)
            throw UsageError("--range expects NAME=LO..HI, got '" + item + "'");
        Sweep sweep;
        sweep.name = item.substr(0, eq);
        sweep.lo = integer_flag(item.substr(eq + 1, dots - eq - 1), "--range " + sweep.name);
        sweep.hi = integer_flag(item.substr(dots + 2), "--range " + sweep.name);
        if (sweep.lo > sweep.hi)
            throw UsageError("--range " + sweep.name + ": bounds must be ascending");
        if (base.count(sweep.name))
            throw UsageError("'" + sweep.name + "' is both assigned and swept");
        for (const auto& other : sweeps)
            if (other.name == sweep.name)
                throw UsageError("duplicate range for '" + sweep.name + "'");
        sweeps.push_back(std::move(sweep));
    }
    if (poly && (base.count(args.free_symbol) ||
                 std::any_of(sweeps.begin(), sweeps.end(),
                             [&](const Sweep& s) { return s.name == args.free_symbol; })))
        throw UsageError("the free symbol '" + args.free_symbol +
                         "' must not be assigned or swept");

    std::vector<dsl::Identity> identities;
    if (!args.expr.empty()) {
        identities.push_back(dsl::parse_identity(args.expr));
    } else {
        std::ifstream in(args.file);
        if (!in) throw UsageError("cannot open identity file '" + args.file + "'");
        std::ostringstream buffer;
        buffer << in.rdbuf();
        identities = dsl::parse_identity_lines(buffer.str());
        if (identities.empty())
            throw UsageError("identity file '" + args.file + "' contains no identities");
    }

    bool any_failed = false;
    bool any_error = false;
    json report_array = json::array();
    bool first = true;

    // Sweeps nest left to right, outermost first; the last range
    // advances fastest. Every report lands in ascending order.
    std::vector<long long> at(sweeps.size());
    for (const auto& identity : identities) {
        for (std::size_t i = 0; i < sweeps.size(); ++i) at[i] = sweeps[i].lo;
        while (true) {
            dsl::Env env = base;
            for (std::size_t i = 0; i < sweeps.size(); ++i)
                env[sweeps[i].name] = Rational(Int(at[i]));

            const dsl::VerificationReport report =
                poly ? dsl::verify_poly(identity, args.free_symbol, env)
                     : dsl::verify_numeric(identity, env);
            any_failed = any_failed || report.status == dsl::Status::failed;
            any_error = any_error || report.status == dsl::Status::error;
            if (args.json_out) {
                report_array.push_back(report_to_json(report));
            } else {
                if (!first) std::cout << "\n";
                std::cout << dsl::report_text(report);
                first = false;
            }

            bool rolled_over = sweeps.empty();
            for (std::size_t wheel = sweeps.size(); wheel-- > 0;) {
                if (++at[wheel] <= sweeps[wheel].hi) break;
                at[wheel] = sweeps[wheel].lo;
                rolled_over = wheel == 0;
            }
            if (rolled_over) break;
        }
    }

    if (args.json_out) {
        json inputs;
        inputs["expr"] = args.expr.empty() ? json(nullptr) : json(args.expr);
        inputs["file"] = args.file.empty() ? json(nullptr) : json(args.file);
        inputs["mode"] = args.mode;
        inputs["assignments"] = env_to_json(base);
        inputs["free_symbol"] = args.free_symbol.empty() ? json(nullptr) : json(args.free_symbol);
        json range_list = json::array();
        for (const auto& s : sweeps)
            range_list.push_back(s.name + "=" + std::to_string(s.lo) + ".." +
                                 std::to_string(s.hi));
        inputs["ranges"] = range_list;
        emit_document({{"command", "verify"}, {"inputs", inputs}, {"reports", report_array}});
    }
    if (any_error) return 2;
    return any_failed ? 1 : 0;
}

// ----------------------------------------------------------------- trace

int run_trace(long long n, const std::string& ell_text, bool json_out) {
    if (n < 0) throw UsageError("--n must be nonnegative");
    const Rational ell = rational_flag(ell_text, "--ell");
    const ProofTrace trace = proof_chain_trace(Int(n), ell);

    if (json_out) {
        json lines = json::array();
        for (const auto& line : trace.lines)
            lines.push_back({{"label", line.label}, {"value", line.value.to_string()}});
        json report = {{"n", trace.n.str()},
                       {"ell", trace.ell.to_string()},
                       {"lines", lines},
                       {"valid", trace.valid}};
        emit_document({{"command", "trace"},
                       {"inputs", {{"n", std::to_string(n)}, {"ell", ell.to_string()}}},
                       {"reports", json::array({report})}});
    } else {
        std::cout << "proof trace: n=" << n << ", ell=" << ell.to_string() << "\n";
        std::size_t width = 0;
        for (const auto& line : trace.lines) width = std::max(width, line.label.size());
        for (std::size_t i = 0; i < trace.lines.size(); ++i) {
            const auto& line = trace.lines[i];
            std::cout << "[" << i + 1 << "] " << line.label
                      << std::string(width - line.label.size(), ' ') << " = "
                      << line.value.to_string() << "\n";
        }
        std::cout << (trace.valid ? "VALID" : "INVALID") << "\n";
    }
    return trace.valid ? 0 : 1;
}

// ---------------------------------------------------------------- series

int run_series(const std::string& alpha_text, const std::string& a_text, long long terms,
               bool square, bool json_out) {
    if (terms < 1) throw UsageError("--terms must be at least 1");
    const Rational alpha = rational_flag(alpha_text, "--alpha");
    const Rational a = rational_flag(a_text, "--a");

    Series series = newton_binomial_series(alpha, a, static_cast<std::size_t>(terms));
    if (square) series = series * series;

    if (json_out) {
        json report = {{"order", terms},
                       {"coefficients", rationals_to_json(series.coefficients())}};
        json inputs = {{"alpha", alpha.to_string()},
                       {"a", a.to_string()},
                       {"terms", terms},
                       {"square", square}};
        emit_document(
            {{"command", "series"}, {"inputs", inputs}, {"reports", json::array({report})}});
    } else {
        for (std::size_t i = 0; i < series.order(); ++i)
            std::cout << i << ": " << series.coefficient(i).to_string() << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------- oracle

int run_oracle(long long ell, std::optional<long long> p, bool all, bool json_out) {
    if (ell < 1) throw UsageError("--ell must be a positive integer");
    if (p.has_value() == all) throw UsageError("exactly one of --p or --all is required");
    if (p && (*p < 0 || *p > ell)) throw UsageError("--p must satisfy 0 <= p <= ell");
    const Int cap = enumeration_cap_from_env();

    long long p_lo = all ? 0 : *p;
    long long p_hi = all ? ell : *p;

    bool all_match = true;
    json rows = json::array();
    if (!json_out) std::cout << "ell p enum formula expected match\n";
    for (long long pv = p_lo; pv <= p_hi; ++pv) {
        const IexInstance inst{Int(ell), Int(pv)};
        const Int by_enum = iex_union_count_enum(inst, cap);
        const Int by_formula = iex_union_count_formula(inst);
        const Int expected = binom_integer(inst.ell, inst.p) - 1;
        const bool match = by_enum == by_formula && by_formula == expected;
        all_match = all_match && match;
        if (json_out) {
            rows.push_back({{"ell", inst.ell.str()},
                            {"p", inst.p.str()},
                            {"enum", by_enum.str()},
                            {"formula", by_formula.str()},
                            {"expected", expected.str()},
                            {"match", match}});
        } else {
            std::cout << ell << " " << pv << " " << by_enum.str() << " " << by_formula.str()
                      << " " << expected.str() << " " << (match ? "yes" : "no") << "\n";
        }
    }
    if (json_out) {
        json inputs = {{"ell", std::to_string(ell)},
                       {"p", p ? json(std::to_string(*p)) : json(nullptr)},
                       {"all", all}};
        emit_document({{"command", "oracle"}, {"inputs", inputs}, {"reports", rows}});
    }
    return all_match ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verifier for generalized central-binomial convolution identities"};
    app.require_subcommand(1);

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand("verify", "verify identities numerically or for all "
                                                    "real values of one free symbol");
    verify->add_option("--expr", verify_args.expr, "identity text, e.g. 'C(0,0) == 1'");
    verify->add_option("--file", verify_args.file, "file with one identity per line");
    verify->add_option("--mode", verify_args.mode, "numeric (default) or poly");
    verify->add_option("--assign", verify_args.assigns, "parameter binding NAME=VALUE")
        ->take_all();
    verify->add_option("--free", verify_args.free_symbol, "free symbol for poly mode");
    verify->add_option("--range", verify_args.ranges, "parameter sweep NAME=LO..HI")->take_all();
    verify->add_flag("--json", verify_args.json_out, "emit one JSON document");

    long long trace_n = 0;
    std::string trace_ell;
    bool trace_json = false;
    CLI::App* trace = app.add_subcommand("trace", "evaluate the six-line derivation at (n, ell)");
    trace->add_option("--n", trace_n, "convolution index, n >= 0")->required();
    trace->add_option("--ell", trace_ell, "rational shift parameter")->required();
    trace->add_flag("--json", trace_json, "emit one JSON document");

    std::string series_alpha, series_a;
    long long series_terms = 0;
    bool series_square = false, series_json = false;
    CLI::App* series = app.add_subcommand("series", "expand (1+a*x)^alpha to a given order");
    series->add_option("--alpha", series_alpha, "exponent, rational")->required();
    series->add_option("--a", series_a, "coefficient of x, rational")->required();
    series->add_option("--terms", series_terms, "number of coefficients, >= 1")->required();
    series->add_flag("--square", series_square, "print the Cauchy square instead");
    series->add_flag("--json", series_json, "emit one JSON document");

    long long oracle_ell = 0;
    long long oracle_p_value = 0;
    bool oracle_all = false, oracle_json = false;
    CLI::App* oracle =
        app.add_subcommand("oracle", "compare subset enumeration against the alternating sum");
    oracle->add_option("--ell", oracle_ell, "ground-set size, >= 1")->required();
    CLI::Option* oracle_p_opt = oracle->add_option("--p", oracle_p_value, "subfamily count");
    oracle->add_flag("--all", oracle_all, "sweep p = 0..ell");
    oracle->add_flag("--json", oracle_json, "emit one JSON document");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (verify->parsed()) return run_verify(verify_args);
        if (trace->parsed()) return run_trace(trace_n, trace_ell, trace_json);
        if (series->parsed())
            return run_series(series_alpha, series_a, series_terms, series_square, series_json);
        if (oracle->parsed()) {
            std::optional<long long> p;
            if (oracle_p_opt->count() > 0) p = oracle_p_value;
            return run_oracle(oracle_ell, p, oracle_all, oracle_json);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const enumeration_cap_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
