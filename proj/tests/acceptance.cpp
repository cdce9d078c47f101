// Acceptance harness: one pass/fail line per criterion, exact comparisons
// throughout, wall-clock budgets enforced. Exit status 0 only if every
// criterion passes.

#include "hecke/element.hpp"
#include "hecke/expr.hpp"
#include "hecke/inductive.hpp"
#include "hecke/markov.hpp"
#include "hecke/verify.hpp"

#include <chrono>
#include <cstdio>
#include <map>
#include <string>
#include <utility>
#include <vector>

using namespace hecke;

namespace {

constexpr std::uint64_t kSeed = 20260823;

int g_failures = 0;

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

void criterion_line(int idx, const std::string& title, bool pass, double secs,
                    double budget) {
    bool in_budget = budget <= 0.0 || secs < budget;
    bool overall = pass && in_budget;
    std::printf("[%s] criterion %d: %s (%.2fs", overall ? "PASS" : "FAIL",
                idx, title.c_str(), secs);
    if (budget > 0.0) std::printf(" / budget %.0fs", budget);
    std::printf(")\n");
    if (!pass) std::printf("       -> checks failed\n");
    if (!in_budget) std::printf("       -> budget exceeded\n");
    if (!overall) ++g_failures;
}

// All canonical basis monomials of the rank-n algebra.
std::vector<Element> basis_monomials(int m, int n) {
    std::vector<Element> out;
    std::vector<Exponents> exps{Exponents(n, 0)};
    for (int i = 0; i < n; ++i) {
        std::vector<Exponents> next;
        for (const Exponents& e : exps)
            for (int v = 0; v < m; ++v) {
                Exponents e2 = e;
                e2[i] = v;
                next.push_back(e2);
            }
        exps = std::move(next);
    }
    for (const Exponents& e : exps)
        for (const Permutation& w : all_permutations(n))
            out.push_back(
                Element::monomial(m, n, e, w, Polynomial::constant(m, 1)));
    return out;
}

const std::vector<std::pair<int, int>> kGrid{{2, 2}, {2, 3}, {3, 2}, {3, 3}};

// ---------------------------------------------------------------------------

void criterion1_relations() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    for (auto [m, n] : kGrid) {
        Report r = check_relations(m, n);
        if (!r.ok() || r.checks == 0) ok = false;
    }
    criterion_line(1, "defining relations normalize to zero", ok,
                   seconds_since(t0), 5.0);
}

void criterion2_dimension() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    // Census only here (the budget is census-scale); the random-product
    // canonical-form invariants run with samples in criterion 9's full-suite
    // passes and in the unit tests.
    for (auto [m, n] : kGrid) {
        Report r = dimension_check(m, n, kSeed, 0);
        if (!r.ok()) ok = false;
    }
    // Degenerate column: at m = 1 the algebra is the group algebra of S_n.
    if (!dimension_check(1, 3, kSeed, 0).ok()) ok = false;
    criterion_line(2, "basis census m^n * n!", ok, seconds_since(t0), 1.0);
}

void criterion3_lemmas() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n) {
            Report r = run_suite("lemmas-2", m, n, kSeed);
            if (!r.ok()) {
                ok = false;
                std::printf("       lemmas-2 (m=%d, n=%d): %zu violations\n",
                            m, n, r.violations.size());
            }
        }
    criterion_line(3, "identity batteries, exhaustive m <= 3, n <= 3", ok,
                   seconds_since(t0), 60.0);
}

void criterion4_decompositions() {
    auto t0 = std::chrono::steady_clock::now();
    // Rank 3 at m = 2 is exhaustive inside the suite (48 monomials); rank 4
    // adds 25 sampled monomials of the 384-dimensional algebra, both checked
    // against the independent linear-solve oracle.
    bool ok = run_suite("inductive", 2, 3, kSeed).ok() &&
              run_suite("inductive", 2, 4, kSeed).ok();
    criterion_line(4, "module decompositions and oracle round-trips", ok,
                   seconds_since(t0), 300.0);
}

void criterion5_tr() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = run_suite("tr-rules", 2, 2, kSeed).ok() &&
              run_suite("tr-rules", 2, 3, kSeed).ok();
    // Full exhaustive symmetry scan over all ordered pairs of the 48 basis
    // monomials of the rank-3 algebra at m = 2.
    std::vector<Element> basis = basis_monomials(2, 3);
    long pairs = 0, bad = 0;
    for (const Element& a : basis)
        for (const Element& b : basis) {
            ++pairs;
            if (tr_symbolic(mul(a, b)) != tr_symbolic(mul(b, a))) ++bad;
        }
    if (bad != 0 || pairs != 48 * 48) ok = false;
    std::printf("       tr symmetry: %ld/%ld ordered pairs symmetric\n",
                pairs - bad, pairs);
    criterion_line(5, "normalized trace rules + exhaustive 48x48 symmetry",
                   ok, seconds_since(t0), 600.0);
}

void criterion6_Tr() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    for (auto [m, n] : kGrid)
        if (!run_suite("Tr-rules", m, n, kSeed).ok()) ok = false;
    // The rank-2 pair scan is exhaustive (8 x 8) and must be clean.
    if (!run_suite("Tr-symmetry", 2, 2, kSeed).ok()) ok = false;
    // The rank-3 scan samples 500 pairs; the raw family is rank-sensitive
    // and not symmetric at this size, so the scan's contract is to emit
    // every violation it finds as a well-formed minimal counterexample.
    Report scan = run_suite("Tr-symmetry", 2, 3, kSeed);
    std::printf("       raw-trace scan (m=2, n=3): %ld checks, %zu "
                "counterexamples reported\n",
                scan.checks, scan.violations.size());
    for (std::size_t i = 0; i < scan.violations.size() && i < 3; ++i) {
        const Violation& v = scan.violations[i];
        std::printf("       e.g. %s: inputs=%s\n            lhs=%s rhs=%s\n",
                    v.description.c_str(), v.inputs.c_str(), v.lhs.c_str(),
                    v.rhs.c_str());
    }
    for (const Violation& v : scan.violations)
        if (v.description.empty() || v.inputs.empty() || v.lhs.empty() ||
            v.rhs.empty() || v.lhs == v.rhs)
            ok = false;
    criterion_line(6,
                   "raw trace rules + symmetry scans with counterexample "
                   "reporting",
                   ok, seconds_since(t0), 600.0);
}

void criterion7_specialized_points() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    for (int m = 2; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n) {
            // tr at z = 0, y = 0 is the indicator of the trivial monomial on
            // the full torus-conjugate basis.
            std::vector<Exponents> exps{Exponents(n, 0)};
            for (int i = 0; i < n; ++i) {
                std::vector<Exponents> next;
                for (const Exponents& e : exps)
                    for (int v = 0; v < m; ++v) {
                        Exponents e2 = e;
                        e2[i] = v;
                        next.push_back(e2);
                    }
                exps = std::move(next);
            }
            for (const Exponents& e : exps)
                for (const Permutation& w : all_permutations(n)) {
                    Element x = from_T_monomial(m, n, TMonomial{e, w});
                    bool trivial =
                        w.is_identity() &&
                        e == Exponents(n, 0);
                    if (tr0(x) !=
                        Polynomial::constant(m, trivial ? 1 : 0))
                        ok = false;
                }
            // The raw trace at z = 0, y_{m-1} = 1 is the top-coefficient
            // functional on the full canonical basis.
            TraceParams bk = TraceParams::bk01(m);
            for (const Element& x : basis_monomials(m, n))
                if (Tr_eval(x, bk) != tau_bk(x)) ok = false;
        }
    criterion_line(7, "z = 0 specializations: indicator and top coefficient",
                   ok, seconds_since(t0), 60.0);
}

void criterion8_factorization() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    for (int m = 2; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n) {
            VarTable vt{m};
            std::map<int, Rational> z0{{vt.z_index(), Rational(0)}};
            // Every positive exponent vector a in [1, m-1]^n.
            std::vector<Exponents> exps{Exponents(n, 1)};
            for (int i = 0; i < n; ++i) {
                std::vector<Exponents> next;
                for (const Exponents& e : exps)
                    for (int v = 1; v < m; ++v) {
                        Exponents e2 = e;
                        e2[i] = v;
                        next.push_back(e2);
                    }
                exps = std::move(next);
            }
            for (const Exponents& a : exps) {
                Element x = Element::monomial(m, n, a,
                                              Permutation::identity(n),
                                              Polynomial::constant(m, 1));
                Polynomial lhs = substitute(Tr_symbolic(x), z0);
                Polynomial rhs = Polynomial::constant(m, 1);
                for (int i = 1; i <= n; ++i)
                    rhs *= substitute(TrJ_moment(m, i, a[i - 1]), z0);
                if (lhs != rhs) ok = false;
            }
        }
    criterion_line(8, "raw trace factorizes over the moments at z = 0", ok,
                   seconds_since(t0), 60.0);
}

void criterion9_determinism() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    for (const std::string& suite : suite_names()) {
        std::string a = run_suite(suite, 2, 3, kSeed).to_json();
        std::string b = run_suite(suite, 2, 3, kSeed).to_json();
        if (a != b) {
            ok = false;
            std::printf("       non-deterministic report: %s\n",
                        suite.c_str());
        }
    }
    criterion_line(9, "byte-identical reports under a fixed seed", ok,
                   seconds_since(t0), 0.0);
}

}  // namespace

int main() {
    std::printf("acceptance: exact checks, seed %llu\n",
                static_cast<unsigned long long>(kSeed));
    criterion1_relations();
    criterion2_dimension();
    criterion3_lemmas();
    criterion4_decompositions();
    criterion5_tr();
    criterion6_Tr();
    criterion7_specialized_points();
    criterion8_factorization();
    criterion9_determinism();
    if (g_failures == 0) {
        std::printf("acceptance: all 9 criteria PASS\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) FAILED\n", g_failures);
    return 1;
}
