// Command-line interface: normalize expressions, evaluate traces, print
// trace tables over the canonical basis, and run the verification suites.

#include "CLI11.hpp"

#include "hecke/element.hpp"
#include "hecke/expr.hpp"
#include "hecke/markov.hpp"
#include "hecke/verify.hpp"

#include <nlohmann/json.hpp>

#include <cstdlib>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace hecke;
using nlohmann::ordered_json;

const std::vector<std::string> kKinds = {"normalized", "raw", "non-normalized",
                                         "canonical0", "bk01", "direct-bk"};

TraceKind parse_kind(const std::string& s) {
    if (s == "normalized") return TraceKind::Normalized;
    if (s == "raw" || s == "non-normalized") return TraceKind::NonNormalized;
    if (s == "canonical0") return TraceKind::Canonical0;
    if (s == "bk01") return TraceKind::BK01;
    return TraceKind::DirectBK;
}

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

Rational parse_rational(const std::string& s) {
    const auto slash = s.find('/');
    using boost::multiprecision::cpp_int;
    if (slash == std::string::npos) return Rational(cpp_int(s));
    cpp_int den(trim(s.substr(slash + 1)));
    if (den == 0) throw std::invalid_argument("zero denominator in --bind");
    return Rational(cpp_int(trim(s.substr(0, slash))), den);
}

// Parses "z=0,y1=1" style bindings against the variable table for m.
std::map<int, Rational> parse_bindings(int m, const std::string& text) {
    std::map<int, Rational> out;
    if (trim(text).empty()) return out;
    VarTable vt{m};
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("expected name=value in --bind near '" +
                                        item + "'");
        const std::string name = trim(item.substr(0, eq));
        const auto idx = vt.index_of(name);
        if (!idx)
            throw std::invalid_argument("unknown variable '" + name +
                                        "' in --bind");
        out[*idx] = parse_rational(trim(item.substr(eq + 1)));
    }
    return out;
}

std::string perm_cell(const Permutation& w) {
    std::string s;
    for (int i = 1; i <= w.n(); ++i) {
        if (i > 1) s += ' ';
        s += std::to_string(w(i));
    }
    return s;
}

std::vector<Exponents> exponent_vectors(int m, int n) {
    std::vector<Exponents> out;
    Exponents cur(n, 0);
    while (true) {
        out.push_back(cur);
        int i = 0;
        while (i < n && cur[i] == m - 1) {
            cur[i] = 0;
            ++i;
        }
        if (i == n) break;
        ++cur[i];
    }
    return out;
}

int cmd_normalize(int m, int n, const std::string& expr,
                  const std::string& output) {
    Element x = parse_expr(m, n, expr);
    if (output == "json") {
        std::cout << element_to_json(x) << "\n";
    } else if (output == "csv") {
        for (int i = 1; i <= n; ++i) std::cout << "a_" << i << ",";
        std::cout << "perm,coeff\n";
        for (const auto& [mono, coeff] : x.terms()) {
            for (int e : mono.jexp) std::cout << e << ",";
            std::cout << perm_cell(mono.perm) << "," << to_string(coeff)
                      << "\n";
        }
    } else {
        std::cout << to_string(x) << "\n";
    }
    return 0;
}

int cmd_trace(int m, int n, const std::string& expr, const std::string& kind,
              const std::string& bind, const std::string& output) {
    Element x = parse_expr(m, n, expr);
    Polynomial value = specialize_trace(parse_kind(kind), x);
    value = substitute(value, parse_bindings(m, bind));
    if (output == "json") {
        ordered_json j;
        j["m"] = m;
        j["n"] = n;
        j["kind"] = kind;
        j["expr"] = expr;
        j["value"] = to_string(value);
        std::cout << j.dump() << "\n";
    } else if (output == "csv") {
        std::cout << "value\n" << to_string(value) << "\n";
    } else {
        std::cout << to_string(value) << "\n";
    }
    return 0;
}

int cmd_table(int m, int n, const std::string& kind, const std::string& bind,
              const std::string& output) {
    const TraceKind tk = parse_kind(kind);
    const auto bindings = parse_bindings(m, bind);
    struct Row {
        Exponents exp;
        Permutation perm;
        Element elt;
        Polynomial value;
    };
    std::vector<Row> rows;
    const auto perms = all_permutations(n);
    for (const auto& e : exponent_vectors(m, n))
        for (const auto& w : perms) {
            Element x =
                Element::monomial(m, n, e, w, Polynomial::constant(m, 1));
            Polynomial v = substitute(specialize_trace(tk, x), bindings);
            rows.push_back({e, w, x, v});
        }
    if (output == "json") {
        ordered_json j;
        j["m"] = m;
        j["n"] = n;
        j["kind"] = kind;
        j["rows"] = ordered_json::array();
        for (const auto& r : rows) {
            ordered_json row;
            row["exp"] = r.exp;
            row["perm"] = r.perm.one_line();
            row["value"] = to_string(r.value);
            j["rows"].push_back(row);
        }
        std::cout << j.dump() << "\n";
    } else if (output == "text") {
        for (const auto& r : rows)
            std::cout << to_string(r.elt) << " -> " << to_string(r.value)
                      << "\n";
    } else {
        for (int i = 1; i <= n; ++i) std::cout << "a_" << i << ",";
        std::cout << "perm,value\n";
        for (const auto& r : rows) {
            for (int e : r.exp) std::cout << e << ",";
            std::cout << perm_cell(r.perm) << "," << to_string(r.value)
                      << "\n";
        }
    }
    return 0;
}

int cmd_verify(int m, int n, const std::string& suite, std::uint64_t seed,
               const std::string& output) {
    Report rep = run_suite(suite, m, n, seed);
    if (output == "text") {
        std::cout << "suite " << rep.suite << " (m=" << rep.m
                  << ", n=" << rep.n << ", seed=" << rep.seed
                  << "): " << rep.checks << " checks, "
                  << rep.violations.size() << " violations => "
                  << (rep.ok() ? "PASS" : "FAIL") << "\n";
        for (const auto& v : rep.violations)
            std::cout << "  " << v.description << " at " << v.inputs
                      << "\n    lhs = " << v.lhs << "\n    rhs = " << v.rhs
                      << "\n";
    } else if (output == "csv") {
        std::cout << "suite,m,n,seed,checks,violations\n"
                  << rep.suite << "," << rep.m << "," << rep.n << ","
                  << rep.seed << "," << rep.checks << ","
                  << rep.violations.size() << "\n";
    } else {
        std::cout << rep.to_json() << "\n";
    }
    return rep.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact algebra tools for the cyclotomic degenerate tower"};
    app.require_subcommand(1);

    int m = 1, n = 1;
    std::string expr, kind = "normalized", bind, suite = "all";
    std::uint64_t seed = 0;

    auto add_mn = [&](CLI::App* cmd) {
        cmd->add_option("--m", m, "cyclotomic degree (>= 1)")
            ->required()
            ->check(CLI::PositiveNumber);
        cmd->add_option("--n", n, "number of strands (>= 1)")
            ->required()
            ->check(CLI::PositiveNumber);
    };
    auto add_kind = [&](CLI::App* cmd) {
        cmd->add_option("--kind", kind, "trace family")
            ->check(CLI::IsMember(kKinds));
        cmd->add_option("--bind", bind,
                        "comma-separated variable bindings, e.g. z=0,y1=1 "
                        "(applied after the kind's presets)");
    };

    CLI::App* normalize =
        app.add_subcommand("normalize", "normalize an expression to the "
                                        "canonical basis");
    add_mn(normalize);
    normalize->add_option("--expr", expr, "expression to normalize")
        ->required();

    CLI::App* trace =
        app.add_subcommand("trace", "evaluate a trace of an expression");
    add_mn(trace);
    trace->add_option("--expr", expr, "expression to evaluate")->required();
    add_kind(trace);

    CLI::App* table = app.add_subcommand(
        "table", "trace values over the whole canonical basis");
    add_mn(table);
    add_kind(table);

    CLI::App* verify =
        app.add_subcommand("verify", "run a verification suite");
    add_mn(verify);
    verify->add_option("--suite", suite, "suite name (see docs); 'all' runs "
                                         "everything");
    CLI::Option* seed_opt =
        verify->add_option("--seed", seed, "seed for randomized batteries");

    // Formats: normalize/trace default to text, table to csv, verify to json.
    std::string norm_out = "text", trace_out = "text", table_out = "csv",
                verify_out = "json";
    normalize->add_option("--output", norm_out, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    trace->add_option("--output", trace_out, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    table->add_option("--output", table_out, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    verify->add_option("--output", verify_out, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(normalize))
            return cmd_normalize(m, n, expr, norm_out);
        if (app.got_subcommand(trace))
            return cmd_trace(m, n, expr, kind, bind, trace_out);
        if (app.got_subcommand(table))
            return cmd_table(m, n, kind, bind, table_out);
        if (app.got_subcommand(verify)) {
            if (seed_opt->count() == 0) {
                if (const char* env = std::getenv("HECKE_SEED"))
                    seed = std::strtoull(env, nullptr, 10);
            }
            return cmd_verify(m, n, suite, seed, verify_out);
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << " (at position " << e.position
                  << ")\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
