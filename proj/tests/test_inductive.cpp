// Tower-module tests: the m*N label families, constructive decompositions
// over the previous rank, and the conversion between the JM basis and the
// torus-conjugate basis.

#include "hecke/inductive.hpp"
#include "hecke/expr.hpp"
#include "hecke/verify.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

#include <random>
#include <set>

using namespace hecke;

namespace {

constexpr int kIterations = 40;

Element random_element(int m, int n, std::mt19937_64& rng) {
    Element x = Element::zero(m, n);
    auto perms = all_permutations(n);
    int nterms = 1 + static_cast<int>(rng() % 3);
    for (int t = 0; t < nterms; ++t) {
        Exponents jexp(n, 0);
        for (int i = 0; i < n; ++i) jexp[i] = static_cast<int>(rng() % m);
        Rational c = Rational(1 + static_cast<long>(rng() % 3));
        if (rng() % 2) c = -c;
        x += Element::monomial(m, n, jexp, perms[rng() % perms.size()],
                               Polynomial::constant(m, c));
    }
    return x;
}

bool decomp_equal(const Decomposition& a, const Decomposition& b) {
    if (a.m != b.m || a.N != b.N || a.family != b.family) return false;
    std::set<ModuleBasisLabel> keys;
    for (const auto& [l, c] : a.coeffs)
        if (!c.is_zero()) keys.insert(l);
    for (const auto& [l, c] : b.coeffs)
        if (!c.is_zero()) keys.insert(l);
    for (const auto& l : keys) {
        Element ca = Element::zero(a.m, a.N - 1);
        Element cb = ca;
        if (auto it = a.coeffs.find(l); it != a.coeffs.end()) ca = it->second;
        if (auto it = b.coeffs.find(l); it != b.coeffs.end()) cb = it->second;
        if (ca != cb) return false;
    }
    return true;
}

}  // namespace

// ============================================================================
// Labels
// ============================================================================

TEST_CASE("label census: m*N labels in each family") {
    for (int m = 1; m <= 3; ++m)
        for (int N = 2; N <= 4; ++N)
            for (LabelFamily fam : {LabelFamily::J, LabelFamily::T}) {
                auto labels = label_set(m, N, fam);
                CHECK(static_cast<int>(labels.size()) == m * N);
                std::set<ModuleBasisLabel> uniq(labels.begin(), labels.end());
                CHECK(uniq.size() == labels.size());
            }
}

TEST_CASE("degenerate labels collapse") {
    CHECK(ModuleBasisLabel::tail_j(2, 0) == ModuleBasisLabel::tail(2));
    CHECK(ModuleBasisLabel::top_j(0) == ModuleBasisLabel::unit());
    CHECK(ModuleBasisLabel::tail_t(3, 0) == ModuleBasisLabel::tail(3));
    CHECK(ModuleBasisLabel::top_t(0) == ModuleBasisLabel::unit());
}

TEST_CASE("label elements: pinned words") {
    // Unit.
    CHECK(label_element(2, 3, ModuleBasisLabel::unit()) ==
          Element::unit(2, 3));
    // Tail(1) at N = 3 is s2*s1.
    CHECK(label_element(2, 3, ModuleBasisLabel::tail(1)) ==
          parse_expr(2, 3, "s2*s1"));
    // TailJ(i, k) = s_{N-1}...s_i * J_i^k.
    CHECK(label_element(2, 3, ModuleBasisLabel::tail_j(2, 1)) ==
          parse_expr(2, 3, "s2*J2"));
    // TopJ(k) = J_N^k.
    CHECK(label_element(2, 3, ModuleBasisLabel::top_j(1)) ==
          parse_expr(2, 3, "J3"));
    // TailT / TopT use the torus conjugates.
    CHECK(label_element(2, 3, ModuleBasisLabel::tail_t(2, 1)) ==
          parse_expr(2, 3, "s2*T2"));
    CHECK(label_element(2, 3, ModuleBasisLabel::top_t(1)) ==
          parse_expr(2, 3, "T3"));
}

// ============================================================================
// Decompositions
// ============================================================================

TEST_CASE("decompose_J: round-trip and coefficients one rank down") {
    std::mt19937_64 rng(101);
    for (int m = 2; m <= 3; ++m)
        for (int N = 2; N <= 3; ++N)
            for (int it = 0; it < kIterations; ++it) {
                Element x = random_element(m, N, rng);
                Decomposition d = decompose_J(x);
                CHECK(d.N == N);
                CHECK(d.family == LabelFamily::J);
                for (const auto& [label, c] : d.coeffs) {
                    // Property: every coefficient lies in the previous rank.
                    CHECK(c.supported_on(N - 1));
                }
                // Property: recompose(decompose_J(x)) == x.
                CHECK(recompose(d) == x);
            }
}

TEST_CASE("decompose_T: round-trip and coefficients one rank down") {
    std::mt19937_64 rng(103);
    for (int m = 2; m <= 3; ++m)
        for (int N = 2; N <= 3; ++N)
            for (int it = 0; it < kIterations; ++it) {
                Element x = random_element(m, N, rng);
                Decomposition d = decompose_T(x);
                CHECK(d.family == LabelFamily::T);
                for (const auto& [label, c] : d.coeffs)
                    CHECK(c.supported_on(N - 1));
                CHECK(recompose(d) == x);
            }
}

TEST_CASE("decompositions agree with the linear-solve oracle") {
    std::mt19937_64 rng(107);
    for (int it = 0; it < kIterations; ++it) {
        Element x = random_element(2, 3, rng);
        CHECK(decomp_equal(decompose_J(x), oracle_decompose(x, LabelFamily::J)));
        CHECK(decomp_equal(decompose_T(x), oracle_decompose(x, LabelFamily::T)));
    }
}

TEST_CASE("exhaustive decomposition of the rank-2 basis (m = 2)") {
    // All 8 canonical monomials of the m = 2, n = 2 algebra.
    for (int a1 = 0; a1 < 2; ++a1)
        for (int a2 = 0; a2 < 2; ++a2)
            for (const Permutation& w : all_permutations(2)) {
                Element x = Element::monomial(2, 2, {a1, a2}, w,
                                              Polynomial::constant(2, 1));
                Decomposition dj = decompose_J(x);
                CHECK(recompose(dj) == x);
                CHECK(decomp_equal(dj, oracle_decompose(x, LabelFamily::J)));
                Decomposition dt = decompose_T(x);
                CHECK(recompose(dt) == x);
                CHECK(decomp_equal(dt, oracle_decompose(x, LabelFamily::T)));
            }
}

TEST_CASE("decomposition JSON shape") {
    Element x = parse_expr(2, 2, "J2 + s1");
    auto doc = nlohmann::json::parse(decomposition_to_json(decompose_J(x)));
    CHECK(doc["m"] == 2);
    CHECK(doc["n"] == 2);
    CHECK(doc["family"] == "J");
    REQUIRE(doc["labels"].is_array());
    for (const auto& row : doc["labels"]) {
        CHECK(row.contains("label"));
        CHECK(row.contains("coeff"));
    }
}

// ============================================================================
// Torus-conjugate basis conversions
// ============================================================================

TEST_CASE("t-basis monomials expand unitriangularly") {
    // Property: to_T_basis(from_T_monomial(mono)) == {mono: 1}.
    for (int m = 2; m <= 3; ++m)
        for (int b1 = 0; b1 < m; ++b1)
            for (int b2 = 0; b2 < m; ++b2)
                for (const Permutation& w : all_permutations(2)) {
                    TMonomial mono{{b1, b2}, w};
                    Element x = from_T_monomial(m, 2, mono);
                    auto coords = to_T_basis(x);
                    REQUIRE(coords.size() == 1);
                    CHECK(coords.begin()->first == mono);
                    CHECK(coords.begin()->second ==
                          Polynomial::constant(m, 1));
                }
}

TEST_CASE("to_T_basis / from_T_basis round-trips") {
    std::mt19937_64 rng(109);
    for (int m = 2; m <= 3; ++m)
        for (int it = 0; it < kIterations; ++it) {
            Element x = random_element(m, 3, rng);
            // Property: from(to(x)) == x.
            CHECK(from_T_basis(m, 3, to_T_basis(x)) == x);
        }
}

TEST_CASE("pinned conversions at rank 2") {
    // J_1 = t_1 and J_2 = t_2 + (1,2).
    auto c1 = to_T_basis(parse_expr(2, 2, "J1"));
    REQUIRE(c1.size() == 1);
    CHECK(c1.begin()->first == TMonomial{{1, 0}, Permutation::identity(2)});
    auto c2 = to_T_basis(parse_expr(2, 2, "J2"));
    CHECK(c2.size() == 2);
    CHECK(c2.count(TMonomial{{0, 1}, Permutation::identity(2)}) == 1);
    CHECK(c2.count(TMonomial{{0, 0}, Permutation::adjacent(2, 1)}) == 1);
}
