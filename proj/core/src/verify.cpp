#include "hecke/verify.hpp"

#include "hecke/markov.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace hecke {

namespace {

using nlohmann::ordered_json;

constexpr int kMaxViolations = 100;
constexpr int kSamples = 50;  // default randomized sample count per battery

// ---------------------------------------------------------------------------
// Report plumbing

struct Ctx {
    Report rep;

    void record(const std::string& desc, const ordered_json& inputs,
                const std::string& lhs, const std::string& rhs) {
        if (static_cast<int>(rep.violations.size()) < kMaxViolations)
            rep.violations.push_back({desc, inputs.dump(), lhs, rhs});
    }
    void check_elem(const std::string& desc, const ordered_json& inputs,
                    const Element& lhs, const Element& rhs) {
        ++rep.checks;
        if (!(lhs == rhs)) record(desc, inputs, to_string(lhs), to_string(rhs));
    }
    void check_poly(const std::string& desc, const ordered_json& inputs,
                    const Polynomial& lhs, const Polynomial& rhs) {
        ++rep.checks;
        if (!(lhs == rhs)) record(desc, inputs, to_string(lhs), to_string(rhs));
    }
    void check_true(const std::string& desc, const ordered_json& inputs,
                    bool ok, const std::string& lhs, const std::string& rhs) {
        ++rep.checks;
        if (!ok) record(desc, inputs, lhs, rhs);
    }
};

ordered_json in_mn(int m, int n) { return ordered_json{{"m", m}, {"n", n}}; }

// ---------------------------------------------------------------------------
// Enumeration and randomness helpers

std::vector<Exponents> exponent_vectors(int m, int n, int lo = 0) {
    std::vector<Exponents> out;
    Exponents cur(n, lo);
    if (lo > m - 1) return out;
    while (true) {
        out.push_back(cur);
        int i = 0;
        while (i < n && cur[i] == m - 1) {
            cur[i] = lo;
            ++i;
        }
        if (i == n) break;
        ++cur[i];
    }
    return out;
}

std::vector<StandardMonomial> basis_monomials(int m, int n) {
    std::vector<StandardMonomial> out;
    const auto perms = all_permutations(n);
    for (const auto& e : exponent_vectors(m, n))
        for (const auto& w : perms) out.push_back({e, w});
    return out;
}

using Rng = std::mt19937_64;

int pick(Rng& rng, int k) { return static_cast<int>(rng() % static_cast<std::uint64_t>(k)); }

Polynomial random_coeff(Rng& rng, int m) {
    switch (pick(rng, 6)) {
        case 0: return Polynomial::constant(m, 1);
        case 1: return Polynomial::constant(m, -1);
        case 2: return Polynomial::constant(m, 2);
        case 3: return Polynomial::constant(m, Rational(1, 2));
        case 4: return Polynomial::u(m, 1);
        default:
            return Polynomial::u(m, 1) + Polynomial::constant(m, 1);
    }
}

StandardMonomial random_monomial(Rng& rng, int m, int n,
                                 const std::vector<Permutation>& perms) {
    Exponents e(n);
    for (int& v : e) v = pick(rng, m);
    return {e, perms[pick(rng, static_cast<int>(perms.size()))]};
}

Element random_element(Rng& rng, int m, int n,
                       const std::vector<Permutation>& perms) {
    Element x = Element::zero(m, n);
    const int terms = 1 + pick(rng, 3);
    for (int i = 0; i < terms; ++i) {
        auto mono = random_monomial(rng, m, n, perms);
        x.add_term(mono, random_coeff(rng, m));
    }
    return x;
}

ordered_json in_elem(int m, int n, const char* key, const Element& x) {
    ordered_json j = in_mn(m, n);
    j[key] = to_string(x);
    return j;
}

Polynomial at_z0(const Polynomial& p) {
    VarTable vt{p.m()};
    return substitute(p, std::map<int, Rational>{{vt.z_index(), Rational(0)}});
}

// Tail word s_{N-1} s_{N-2} ... s_i as a permutation of {1..N}.
Permutation tail_perm(int N, int i) {
    std::vector<int> letters;
    for (int j = N - 1; j >= i; --j) letters.push_back(j);
    return evaluate_word(N, letters);
}

}  // namespace

// ---------------------------------------------------------------------------
// Report

std::string Report::to_json() const {
    ordered_json j;
    j["suite"] = suite;
    j["m"] = m;
    j["n"] = n;
    j["seed"] = seed;
    j["checks"] = checks;
    ordered_json arr = ordered_json::array();
    for (const auto& v : violations) {
        ordered_json e;
        e["description"] = v.description;
        e["inputs"] = ordered_json::parse(v.inputs, nullptr, false);
        e["lhs"] = v.lhs;
        e["rhs"] = v.rhs;
        arr.push_back(e);
    }
    j["violations"] = arr;
    return j.dump(2);
}

void Report::merge(const Report& other) {
    checks += other.checks;
    for (const auto& v : other.violations) {
        if (static_cast<int>(violations.size()) >= kMaxViolations) break;
        violations.push_back(v);
    }
}

// ---------------------------------------------------------------------------
// Defining relations

Report check_relations(int m, int n) {
    Ctx c;
    c.rep.suite = "relations";
    c.rep.m = m;
    c.rep.n = n;

    const Element one = Element::unit(m, n);
    const Element zero = Element::zero(m, n);
    const Element t = jm(m, n, 1);
    auto s = [&](int i) {
        return Element::perm_elt(m, n, Permutation::adjacent(n, i));
    };

    // Family 1: the degree-m cyclotomic polynomial annihilates t.
    {
        Element prod = one;
        for (int i = 1; i <= m; ++i)
            prod = mul(prod, t - one * Polynomial::u(m, i));
        c.check_elem("cyclotomic relation for t", in_mn(m, n), prod, zero);
    }
    // Family 2: the mixed braid relation between t and s_1.
    if (n >= 2) {
        const Element b = mul(mul(s(1), t), s(1)) + s(1);  // s1 t s1 + s1
        c.check_elem("mixed braid relation between t and s1", in_mn(m, n),
                     mul(t, b), mul(b, t));
    }
    // Family 3: t commutes with the transpositions away from strand 1.
    for (int i = 2; i <= n - 1; ++i) {
        ordered_json j = in_mn(m, n);
        j["i"] = i;
        c.check_elem("t commutes with distant transpositions", j,
                     mul(t, s(i)), mul(s(i), t));
    }
    // Family 4: transpositions are involutions.
    for (int i = 1; i <= n - 1; ++i) {
        ordered_json j = in_mn(m, n);
        j["i"] = i;
        c.check_elem("involution relation", j, mul(s(i), s(i)), one);
    }
    // Family 5: adjacent braid relation.
    for (int i = 1; i <= n - 2; ++i) {
        ordered_json j = in_mn(m, n);
        j["i"] = i;
        c.check_elem("braid relation", j, mul(mul(s(i), s(i + 1)), s(i)),
                     mul(mul(s(i + 1), s(i)), s(i + 1)));
    }
    // Family 6: distant transpositions commute.
    for (int i = 1; i <= n - 1; ++i)
        for (int j2 = i + 2; j2 <= n - 1; ++j2) {
            ordered_json j = in_mn(m, n);
            j["i"] = i;
            j["j"] = j2;
            c.check_elem("distant commutation", j, mul(s(i), s(j2)),
                         mul(s(j2), s(i)));
        }
    return c.rep;
}

// ---------------------------------------------------------------------------
// Dimension census

Report dimension_check(int m, int n, std::uint64_t seed, int samples) {
    Ctx c;
    c.rep.suite = "dimension";
    c.rep.m = m;
    c.rep.n = n;
    c.rep.seed = seed;

    long long expected = 1;
    for (int i = 1; i <= n; ++i) expected *= i;
    for (int i = 0; i < n; ++i) expected *= m;

    const auto basis = basis_monomials(m, n);
    c.check_true("basis census m^n * n!", in_mn(m, n),
                 static_cast<long long>(basis.size()) == expected,
                 std::to_string(basis.size()), std::to_string(expected));

    auto canonical_ok = [&](const Element& x) {
        for (const auto& [mono, coeff] : x.terms()) {
            if (static_cast<int>(mono.jexp.size()) != n) return false;
            for (int e : mono.jexp)
                if (e < 0 || e >= m) return false;
            if (mono.perm.n() != n) return false;
            if (coeff.is_zero()) return false;
        }
        return true;
    };

    Rng rng(seed);
    const auto perms = all_permutations(n);
    for (int i = 0; i < samples; ++i) {
        Element a = random_element(rng, m, n, perms);
        Element b = random_element(rng, m, n, perms);
        Element ab = mul(a, b);
        c.check_true("products stay canonical",
                     in_elem(m, n, "a", a), canonical_ok(ab), to_string(ab),
                     "canonical form");
        if (i % 3 == 0) {
            Element d = random_element(rng, m, n, perms);
            c.check_elem("associativity of the product",
                         in_elem(m, n, "a", a), mul(ab, d), mul(a, mul(b, d)));
        }
    }
    return c.rep;
}

// ---------------------------------------------------------------------------
// Decomposition oracle

namespace {

int total_degree(const StandardMonomial& mono) {
    int d = 0;
    for (int e : mono.jexp) d += e;
    return d;
}

// Strict total order with larger total degree first; any fixed tiebreak works
// because every non-leading term of an oracle column has strictly smaller
// degree than the column's leading term.
struct DominanceGreater {
    bool operator()(const StandardMonomial& a, const StandardMonomial& b) const {
        const int da = total_degree(a), db = total_degree(b);
        if (da != db) return da > db;
        if (a.jexp != b.jexp) return a.jexp < b.jexp;
        return a.perm < b.perm;
    }
};

struct OracleColumn {
    StandardMonomial gen;  // basis monomial of the coefficient algebra H_{N-1}
    ModuleBasisLabel label;
    std::map<StandardMonomial, Polynomial> expansion;  // of gen * label in H_N
};

struct OracleTable {
    std::map<StandardMonomial, OracleColumn> by_leading;
};

std::mutex oracle_mutex;
std::map<std::tuple<int, int, int>, OracleTable> oracle_cache;

const OracleTable& oracle_table(int m, int N, LabelFamily family) {
    const auto key = std::make_tuple(m, N, static_cast<int>(family));
    {
        std::lock_guard<std::mutex> lock(oracle_mutex);
        auto it = oracle_cache.find(key);
        if (it != oracle_cache.end()) return it->second;
    }
    OracleTable table;
    const Polynomial one = Polynomial::constant(m, 1);
    for (const auto& gen : basis_monomials(m, N - 1)) {
        Element base = Element::monomial(m, N - 1, gen.jexp, gen.perm, one)
                           .embedded(N);
        for (const auto& label : label_set(m, N, family)) {
            Element col = mul(base, label_element(m, N, label));
            // Locate the leading term and verify the unitriangular shape the
            // solver relies on; a failure here falsifies the freeness of the
            // module basis as implemented.
            const StandardMonomial* lead = nullptr;
            DominanceGreater ahead;
            for (const auto& [mono, coeff] : col.terms())
                if (lead == nullptr || ahead(mono, *lead)) lead = &mono;
            if (lead == nullptr)
                throw std::logic_error(
                    "decomposition oracle: a column collapsed to zero");
            if (!(col.coeff(*lead) == one))
                throw std::logic_error(
                    "decomposition oracle: leading coefficient is not 1");
            OracleColumn entry{gen, label, {}};
            for (const auto& [mono, coeff] : col.terms())
                entry.expansion.emplace(mono, coeff);
            if (!table.by_leading.emplace(*lead, std::move(entry)).second)
                throw std::logic_error(
                    "decomposition oracle: duplicate leading monomial "
                    "(change-of-basis matrix is singular)");
        }
    }
    std::lock_guard<std::mutex> lock(oracle_mutex);
    return oracle_cache.emplace(key, std::move(table)).first->second;
}

}  // namespace

Decomposition oracle_decompose(const Element& x, LabelFamily family) {
    const int m = x.m(), N = x.n();
    if (N < 2)
        throw std::invalid_argument("oracle_decompose requires rank >= 2");
    const OracleTable& table = oracle_table(m, N, family);

    Decomposition d;
    d.m = m;
    d.N = N;
    d.family = family;

    // Exact sparse triangular solve against the leading-term map: repeatedly
    // eliminate the residual's dominant monomial. Every elimination step
    // introduces only terms of strictly smaller total degree, so the loop
    // terminates.
    std::map<StandardMonomial, Polynomial, DominanceGreater> residual;
    for (const auto& [mono, coeff] : x.terms()) residual.emplace(mono, coeff);
    while (!residual.empty()) {
        auto top = residual.begin();
        if (top->second.is_zero()) {
            residual.erase(top);
            continue;
        }
        auto col = table.by_leading.find(top->first);
        if (col == table.by_leading.end())
            throw std::logic_error(
                "decomposition oracle: residual term cannot be eliminated "
                "(singular system)");
        const Polynomial gamma = top->second;  // leading coefficient is 1
        const OracleColumn& entry = col->second;
        auto [it, inserted] =
            d.coeffs.try_emplace(entry.label, Element::zero(m, N - 1));
        it->second.add_term({entry.gen.jexp, entry.gen.perm}, gamma);
        for (const auto& [mono, coeff] : entry.expansion) {
            auto r = residual.try_emplace(mono, Polynomial::zero(m));
            r.first->second -= gamma * coeff;
            if (r.first->second.is_zero()) residual.erase(r.first);
        }
    }
    for (auto it = d.coeffs.begin(); it != d.coeffs.end();)
        it = it->second.is_zero() ? d.coeffs.erase(it) : std::next(it);
    return d;
}

// ---------------------------------------------------------------------------
// Suite: lemmas-2 (identity batteries for the rewrite layer)

namespace {

Report suite_lemmas2(int m, int n, std::uint64_t seed) {
    Ctx c;
    c.rep.suite = "lemmas-2";
    c.rep.m = m;
    c.rep.n = n;
    c.rep.seed = seed;

    const Element one = Element::unit(m, n);
    const Element t = jm(m, n, 1);
    auto s = [&](int i) {
        return Element::perm_elt(m, n, Permutation::adjacent(n, i));
    };
    auto J = [&](int k) { return jm(m, n, k); };
    auto T = [&](int k) { return tk(m, n, k); };
    auto L = [&](int k) { return lk(m, n, k); };
    auto word = [&](const std::vector<int>& letters) {
        return Element::perm_elt(m, n, evaluate_word(n, letters));
    };
    auto idx = [&](std::initializer_list<std::pair<const char*, int>> kv) {
        ordered_json j = in_mn(m, n);
        for (const auto& [k, v] : kv) j[k] = v;
        return j;
    };

    // --- transposition / JM interaction -----------------------------------
    for (int j = 1; j <= n - 1; ++j)
        c.check_elem("transposition-onto-JM move (ascending)", idx({{"j", j}}),
                     mul(s(j), J(j)) - mul(J(j + 1), s(j)), -one);
    for (int j = 2; j <= n; ++j)
        if (j - 1 <= n - 1)
            c.check_elem("transposition-onto-JM move (descending)",
                         idx({{"j", j}}),
                         mul(s(j - 1), J(j)) - mul(J(j - 1), s(j - 1)), one);
    for (int i = 1; i <= n - 1; ++i)
        for (int j = 1; j <= n; ++j) {
            if (j == i || j == i + 1) continue;
            c.check_elem("JM commutes with a distant transposition",
                         idx({{"i", i}, {"j", j}}), mul(s(i), J(j)),
                         mul(J(j), s(i)));
        }
    for (int j = 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k)
            c.check_elem("JM elements commute", idx({{"j", j}, {"k", k}}),
                         mul(J(j), J(k)), mul(J(k), J(j)));
    for (int j = 1; j <= n - 1; ++j) {
        c.check_elem("transposition fixes the symmetric JM product",
                     idx({{"j", j}}), mul(s(j), mul(J(j), J(j + 1))),
                     mul(mul(J(j), J(j + 1)), s(j)));
        c.check_elem("transposition fixes the symmetric JM sum",
                     idx({{"j", j}}), mul(s(j), J(j) + J(j + 1)),
                     mul(J(j) + J(j + 1), s(j)));
    }
    {
        const std::vector<Polynomial> shifts = {
            Polynomial::zero(m), Polynomial::constant(m, 1),
            Polynomial::constant(m, 2), Polynomial::u(m, 1)};
        for (int j = 1; j <= n; ++j)
            for (int i = 1; i <= n - 1; ++i) {
                if (i == j) continue;
                for (std::size_t a = 0; a < shifts.size(); ++a) {
                    Element prod = one;
                    for (int r = 1; r <= j; ++r)
                        prod = mul(prod, J(r) - one * shifts[a]);
                    c.check_elem(
                        "transposition commutes with a shifted JM product",
                        idx({{"i", i}, {"j", j}, {"shift", static_cast<int>(a)}}),
                        mul(s(i), prod), mul(prod, s(i)));
                }
            }
    }

    // --- transposition / conjugated torus generators ----------------------
    for (int a = 1; a <= n - 1; ++a)
        for (int b = 1; b <= n; ++b) {
            if (b == a || b == a + 1) continue;
            c.check_elem("torus conjugate commutes with a distant transposition",
                         idx({{"a", a}, {"b", b}}), mul(s(a), T(b)),
                         mul(T(b), s(a)));
        }
    for (int a = 1; a <= n - 1; ++a) {
        c.check_elem("transposition shifts the torus conjugate up",
                     idx({{"a", a}}), mul(s(a), T(a)), mul(T(a + 1), s(a)));
        c.check_elem("transposition shifts the torus conjugate down",
                     idx({{"a", a}}), mul(s(a), T(a + 1)), mul(T(a), s(a)));
    }
    // Commutator of two torus conjugates, via the symmetric-group JM parts.
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) {
            Element lhs = mul(T(a), T(b)) - mul(T(b), T(a));
            Element rhs = (mul(T(b), L(a)) - mul(L(a), T(b))) +
                          (mul(L(b), T(a)) - mul(T(a), L(b)));
            c.check_elem("torus commutator via symmetric-group JM parts",
                         idx({{"a", a}, {"b", b}}), lhs, rhs);
            // The lower bracket vanishes outright (each transposition in L(a)
            // avoids strands b-1, b), which is why the identity above is
            // insensitive to the orientation of that bracket.
            c.check_elem("lower symmetric-group bracket vanishes",
                         idx({{"a", a}, {"b", b}}),
                         mul(L(a), T(b)) - mul(T(b), L(a)),
                         Element::zero(m, n));
            // The same commutator as a conjugated rank-2 core word: conjugation
            // by a transposition word relabels the strands of the torus
            // conjugates, so any word sending (1, 2) to (a, b) carries the
            // rank-2 commutator core onto [T(a), T(b)].
            std::vector<int> left, right;
            for (int r = a - 1; r >= 1; --r) left.push_back(r);
            for (int r = b - 1; r >= 2; --r) left.push_back(r);
            for (int r = 2; r <= b - 1; ++r) right.push_back(r);
            for (int r = 1; r <= a - 1; ++r) right.push_back(r);
            Element core = mul(s(1), t) - mul(t, s(1));
            Element conj = mul(mul(word(left), core), word(right));
            c.check_elem("torus commutator as a conjugated core word",
                         idx({{"a", a}, {"b", b}}), lhs, conj);
        }
    // Exchange identity for interleaved torus powers at rank 2.
    if (n >= 2)
        for (int l = 1; l <= m - 1; ++l)
            for (int k = 1; k <= m - 1; ++k) {
                auto tp = [&](int e) { return elt_pow(t, e); };
                Element lhs = mul(mul(mul(tp(l), s(1)), tp(k)), s(1));
                Element rhs = mul(mul(mul(s(1), tp(k)), s(1)), tp(l));
                for (int i = 1; i <= l; ++i) {
                    rhs += mul(mul(tp(l - i), s(1)), tp(k + i - 1));
                    rhs -= mul(mul(tp(k + i - 1), s(1)), tp(l - i));
                }
                c.check_elem("torus power exchange identity",
                             idx({{"l", l}, {"k", k}}), lhs, rhs);
            }
    // Adjacent torus powers as a conjugated rank-2 word.
    for (int p = 1; p + 1 <= n; ++p)
        for (int l = 1; l <= m - 1; ++l)
            for (int k = 1; k <= m - 1; ++k) {
                auto tp = [&](int e) { return elt_pow(t, e); };
                std::vector<int> left, right;
                for (int r = p - 1; r >= 1; --r) {
                    left.push_back(r);
                    left.push_back(r + 1);
                }
                for (int r = 1; r <= p - 1; ++r) {
                    right.push_back(r + 1);
                    right.push_back(r);
                }
                Element core =
                    mul(mul(mul(tp(l), s(1)), tp(k)), s(1));
                Element rhs = mul(mul(word(left), core), word(right));
                c.check_elem("adjacent torus powers via the rank-2 core",
                             idx({{"p", p}, {"l", l}, {"k", k}}),
                             mul(elt_pow(T(p), l), elt_pow(T(p + 1), k)), rhs);
            }
    // Exchange of the top torus power with t.
    for (int p = 1; p + 1 <= n; ++p)
        for (int k = 1; k <= m - 1; ++k) {
            std::vector<int> pal;
            for (int r = p; r >= 1; --r) pal.push_back(r);
            for (int r = 2; r <= p; ++r) pal.push_back(r);
            Element P = word(pal);
            Element tk1 = elt_pow(t, k);
            Element lhs = mul(elt_pow(T(p + 1), k), t);
            Element rhs = mul(t, elt_pow(T(p + 1), k)) + mul(tk1, P) -
                          mul(P, tk1);
            c.check_elem("top torus power exchanges with t",
                         idx({{"p", p}, {"k", k}}), lhs, rhs);
        }
    // Commutator corollary for torus powers on adjacent and shifted strands.
    for (int p = 1; p <= n; ++p)
        for (int a = 1; a <= 2 && p + a <= n; ++a)
            for (int l = 1; l <= m - 1; ++l)
                for (int k = 1; k <= m - 1; ++k) {
                    Element lhs = mul(elt_pow(T(p), l), elt_pow(T(p + a), k));
                    Element rhs = mul(elt_pow(T(p + a), k), elt_pow(T(p), l));
                    std::vector<int> cl, cr;
                    for (int r = p + a - 1; r >= p + 1; --r) cl.push_back(r);
                    for (int r = p + 1; r <= p + a - 1; ++r) cr.push_back(r);
                    for (int i = 1; i <= l; ++i) {
                        Element mid =
                            mul(mul(elt_pow(T(p), l - i), s(p)),
                                elt_pow(T(p), k + i - 1)) -
                            mul(mul(elt_pow(T(p), k + i - 1), s(p)),
                                elt_pow(T(p), l - i));
                        rhs += mul(mul(word(cl), mid), word(cr));
                    }
                    c.check_elem("torus power commutator corollary",
                                 idx({{"p", p}, {"a", a}, {"l", l}, {"k", k}}),
                                 lhs, rhs);
                }
    return c.rep;
}

// ---------------------------------------------------------------------------
// Suite: inductive (module decompositions and basis conversions)

bool decomp_equal(const Decomposition& a, const Decomposition& b) {
    auto clean = [](const Decomposition& d) {
        std::map<ModuleBasisLabel, Element> out;
        for (const auto& [label, coeff] : d.coeffs)
            if (!coeff.is_zero()) out.emplace(label, coeff);
        return out;
    };
    return clean(a) == clean(b);
}

Report suite_inductive(int m, int n, std::uint64_t seed) {
    Ctx c;
    c.rep.suite = "inductive";
    c.rep.m = m;
    c.rep.n = n;
    c.rep.seed = seed;
    if (n < 2) return c.rep;

    Rng rng(seed);
    const auto perms = all_permutations(n);
    const auto basis = basis_monomials(m, n);
    const bool exhaustive = basis.size() <= 64;

    for (LabelFamily family : {LabelFamily::J, LabelFamily::T}) {
        const char* fam = family == LabelFamily::J ? "J" : "T";
        const auto labels = label_set(m, n, family);
        ordered_json jf = in_mn(m, n);
        jf["family"] = fam;
        c.check_true("label census m*n", jf,
                     static_cast<int>(labels.size()) == m * n,
                     std::to_string(labels.size()), std::to_string(m * n));

        auto decomp = [&](const Element& x) {
            return family == LabelFamily::J ? decompose_J(x) : decompose_T(x);
        };

        // Each label decomposes onto itself with unit coefficient.
        for (const auto& label : labels) {
            Element le = label_element(m, n, label);
            Decomposition d = decomp(le);
            ordered_json j = jf;
            j["label"] = label.to_string();
            bool ok = d.coeffs.size() == 1 &&
                      d.coeffs.begin()->first == label &&
                      d.coeffs.begin()->second == Element::unit(m, n - 1);
            c.check_true("label word is its own decomposition", j, ok,
                         decomposition_to_json(d), label.to_string());
        }

        auto test_element = [&](const Element& x, const ordered_json& j) {
            Decomposition d = decomp(x);
            bool supported = true;
            for (const auto& [label, coeff] : d.coeffs)
                supported = supported && coeff.n() == n - 1;
            c.check_true("decomposition coefficients live one rank down", j,
                         supported, decomposition_to_json(d), "rank n-1");
            c.check_elem("decomposition round-trip", j, recompose(d), x);
            Decomposition od = oracle_decompose(x, family);
            c.check_true("constructive and oracle decompositions agree", j,
                         decomp_equal(d, od), decomposition_to_json(d),
                         decomposition_to_json(od));
        };

        if (exhaustive) {
            for (const auto& mono : basis) {
                Element x = Element::monomial(m, n, mono.jexp, mono.perm,
                                              Polynomial::constant(m, 1));
                test_element(x, in_elem(m, n, "x", x));
            }
        } else {
            for (int i = 0; i < 25; ++i) {
                auto mono = random_monomial(rng, m, n, perms);
                Element x = Element::monomial(m, n, mono.jexp, mono.perm,
                                              Polynomial::constant(m, 1));
                test_element(x, in_elem(m, n, "x", x));
            }
        }
        for (int i = 0; i < 5; ++i) {
            Element x = random_element(rng, m, n, perms);
            test_element(x, in_elem(m, n, "x", x));
        }
    }

    // t-basis conversions.
    for (int i = 0; i < kSamples / 2; ++i) {
        auto mono = random_monomial(rng, m, n, perms);
        TMonomial tm{mono.jexp, mono.perm};
        auto coords = to_T_basis(from_T_monomial(m, n, tm));
        bool ok = coords.size() == 1 && coords.begin()->first == tm &&
                  coords.begin()->second == Polynomial::constant(m, 1);
        ordered_json j = in_mn(m, n);
        j["texp"] = tm.texp;
        j["perm"] = tm.perm.to_string();
        c.check_true("t-basis coordinates of a t-basis word", j, ok,
                     std::to_string(coords.size()), "1");
    }
    for (int i = 0; i < kSamples / 2; ++i) {
        Element x = random_element(rng, m, n, perms);
        c.check_elem("t-basis round-trip", in_elem(m, n, "x", x),
                     from_T_basis(m, n, to_T_basis(x)), x);
    }
    return c.rep;
}

// ---------------------------------------------------------------------------
// Suites: trace rule batteries

Report suite_tr_rules(int m, int n, std::uint64_t seed) {
    Ctx c;
    c.rep.suite = "tr-rules";
    c.rep.m = m;
    c.rep.n = n;
    c.rep.seed = seed;

    Rng rng(seed);
    const Polynomial one = Polynomial::constant(m, 1);
    const Polynomial z = Polynomial::z(m);

    // Normalization at every rank.
    for (int i = 1; i <= n; ++i)
        c.check_poly("trace of the unit", in_mn(m, i),
                     tr_symbolic(Element::unit(m, i)), one);

    // Tower restriction consistency.
    for (int i = 1; i <= n - 1; ++i) {
        auto basis = basis_monomials(m, i);
        for (const auto& mono : basis) {
            Element x = Element::monomial(m, i, mono.jexp, mono.perm, one);
            c.check_poly("restriction consistency across ranks",
                         in_elem(m, i, "x", x), tr_symbolic(x),
                         tr_symbolic(x.embedded(n)));
        }
    }

    // Factor rules on every basis element one rank down.
    for (int i = 1; i <= n - 1; ++i) {
        const Element si = Element::perm_elt(
            m, i + 1, Permutation::adjacent(i + 1, i));
        for (const auto& mono : basis_monomials(m, i)) {
            Element a = Element::monomial(m, i, mono.jexp, mono.perm, one);
            Element ae = a.embedded(i + 1);
            c.check_poly("new transposition contributes a factor z",
                         in_elem(m, i, "a", a), tr_symbolic(mul(ae, si)),
                         z * tr_symbolic(a));
            for (int k = 1; k <= m - 1; ++k) {
                ordered_json j = in_elem(m, i, "a", a);
                j["k"] = k;
                c.check_poly("new-strand torus power contributes a moment",
                             j,
                             tr_symbolic(mul(ae, elt_pow(tk(m, i + 1, i + 1), k))),
                             Polynomial::y(m, k) * tr_symbolic(a));
            }
        }
    }

    const int N = n;
    if (N >= 2) {
        const auto perms_lo = all_permutations(N - 1);
        const Element sn =
            Element::perm_elt(m, N, Permutation::adjacent(N, N - 1));
        auto lift = [&](const Element& x) { return x.embedded(N); };
        // Interior transposition rule and conjugation symmetry.
        for (int i = 0; i < kSamples; ++i) {
            Element x = random_element(rng, m, N - 1, perms_lo);
            Element y = random_element(rng, m, N - 1, perms_lo);
            c.check_poly("interior transposition contributes a factor z",
                         in_elem(m, N - 1, "x", x),
                         tr_symbolic(mul(mul(lift(x), sn), lift(y))),
                         z * tr_symbolic(mul(x, y)));
            c.check_poly("conjugation symmetry across the top transposition",
                         in_elem(m, N - 1, "x", x),
                         tr_symbolic(mul(mul(mul(lift(x), sn), lift(y)), sn)),
                         tr_symbolic(mul(mul(mul(sn, lift(x)), sn), lift(y))));
        }
        if (N - 1 >= 2)
            for (int k = 1; k <= m - 1; ++k) {
                Element tkp = elt_pow(tk(m, N, N - 1), k);
                Element sm = Element::perm_elt(
                    m, N, Permutation::adjacent(N, N - 2));
                ordered_json j = in_mn(m, N);
                j["k"] = k;
                c.check_poly("conjugation symmetry for a torus power",
                             j, tr_symbolic(mul(mul(mul(tkp, sn), sm), sn)),
                             tr_symbolic(mul(mul(mul(sn, tkp), sn), sm)));
            }
        // Trace symmetry for the tail-word shapes of the inductive basis.
        for (int rep = 0; rep < kSamples / 2; ++rep) {
            Element h = lift(random_element(rng, m, N - 1, perms_lo));
            const Element t = jm(m, N, 1);
            for (int i = 1; i <= N - 1; ++i) {
                Element tail = Element::perm_elt(m, N, tail_perm(N, i));
                Element ht = mul(h, tail);
                ordered_json j = in_elem(m, N, "h", h);
                j["i"] = i;
                c.check_poly("trace symmetry for tail words against t", j,
                             tr_symbolic(mul(ht, t)), tr_symbolic(mul(t, ht)));
                for (int jj = 1; jj <= N - 1; ++jj) {
                    Element sj = Element::perm_elt(
                        m, N, Permutation::adjacent(N, jj));
                    c.check_poly("trace symmetry for tail words", j,
                                 tr_symbolic(mul(ht, sj)),
                                 tr_symbolic(mul(sj, ht)));
                }
                for (int k = 1; k <= m - 1; ++k) {
                    Element body = mul(ht, elt_pow(tk(m, N, i), k));
                    c.check_poly(
                        "trace symmetry for tail words with a torus power",
                        j, tr_symbolic(mul(body, sn)),
                        tr_symbolic(mul(sn, body)));
                    c.check_poly(
                        "trace symmetry for tail words with a torus power "
                        "against t",
                        j, tr_symbolic(mul(body, t)),
                        tr_symbolic(mul(t, body)));
                }
            }
            for (int k = 1; k <= m - 1; ++k) {
                Element body = mul(h, elt_pow(tk(m, N, N), k));
                ordered_json j = in_elem(m, N, "h", h);
                j["k"] = k;
                c.check_poly("trace symmetry for top torus powers against t",
                             j, tr_symbolic(mul(body, jm(m, N, 1))),
                             tr_symbolic(mul(jm(m, N, 1), body)));
                for (int jj = 1; jj <= N - 1; ++jj) {
                    Element sj = Element::perm_elt(
                        m, N, Permutation::adjacent(N, jj));
                    c.check_poly("trace symmetry for top torus powers", j,
                                 tr_symbolic(mul(body, sj)),
                                 tr_symbolic(mul(sj, body)));
                }
            }
        }
    }

    // z = 0 annihilation of every non-identity word.
    {
        const auto perms = all_permutations(n);
        const auto exps = exponent_vectors(m, n);
        long count = 0;
        for (const auto& e : exps)
            for (const auto& w : perms) {
                if (w.is_identity()) continue;
                if (++count > 200) break;
                TMonomial tm{e, w};
                ordered_json j = in_mn(m, n);
                j["texp"] = e;
                j["perm"] = w.to_string();
                c.check_poly("z=0 annihilates non-identity words", j,
                             at_z0(tr_symbolic(from_T_monomial(m, n, tm))),
                             Polynomial::zero(m));
            }
    }
    return c.rep;
}

Report symmetry_scan(const char* suite, bool normalized, int m, int n,
                     std::uint64_t seed) {
    Ctx c;
    c.rep.suite = suite;
    c.rep.m = m;
    c.rep.n = n;
    c.rep.seed = seed;

    const auto basis = basis_monomials(m, n);
    const Polynomial one = Polynomial::constant(m, 1);
    auto value = [&](const Element& x) {
        return normalized ? tr_symbolic(x) : Tr_symbolic(x);
    };

    // Pair scan. Violations are collected with a size key so the emitted
    // counterexamples are the smallest ones found, not the first ones found.
    std::vector<std::pair<std::pair<int, std::string>, Violation>> found;
    auto scan_pair = [&](const StandardMonomial& a, const StandardMonomial& b) {
        Element ea = Element::monomial(m, n, a.jexp, a.perm, one);
        Element eb = Element::monomial(m, n, b.jexp, b.perm, one);
        ++c.rep.checks;
        Polynomial lhs = value(mul(ea, eb)), rhs = value(mul(eb, ea));
        if (lhs == rhs) return;
        ordered_json j = in_mn(m, n);
        j["a"] = to_string(ea);
        j["b"] = to_string(eb);
        const int size_key =
            total_degree(a) + total_degree(b) + length(a.perm) + length(b.perm);
        found.push_back({{size_key, j.dump()},
                         {"trace symmetry", j.dump(), to_string(lhs),
                          to_string(rhs)}});
    };

    if (basis.size() <= 20) {
        for (const auto& a : basis)
            for (const auto& b : basis) scan_pair(a, b);
    } else {
        Rng rng(seed);
        for (int i = 0; i < 500; ++i) {
            const auto& a = basis[pick(rng, static_cast<int>(basis.size()))];
            const auto& b = basis[pick(rng, static_cast<int>(basis.size()))];
            scan_pair(a, b);
        }
    }
    std::sort(found.begin(), found.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    for (const auto& [key, v] : found) {
        if (static_cast<int>(c.rep.violations.size()) >= 25) break;
        c.rep.violations.push_back(v);
    }

    // For the raw trace, also probe the conjugation-symmetry shapes directly;
    // these fail for some inputs (the raw trace is not a symmetric functional
    // once ranks mix), and the failures belong in this suite's counterexample
    // stream rather than in the rule conformance suite.
    if (!normalized && n >= 2) {
        Rng rng(seed + 1);
        const int N = n;
        const auto perms_lo = all_permutations(N - 1);
        const Element sn =
            Element::perm_elt(m, N, Permutation::adjacent(N, N - 1));
        for (int rep = 0; rep < kSamples / 2; ++rep) {
            Element x = random_element(rng, m, N - 1, perms_lo).embedded(N);
            Element y = random_element(rng, m, N - 1, perms_lo).embedded(N);
            c.check_poly("conjugation symmetry across the top transposition",
                         in_elem(m, N, "x", x),
                         Tr_symbolic(mul(mul(mul(x, sn), y), sn)),
                         Tr_symbolic(mul(mul(mul(sn, x), sn), y)));
        }
        for (int rep = 0; rep < kSamples / 4; ++rep) {
            Element h = random_element(rng, m, N - 1, perms_lo).embedded(N);
            for (int i = 1; i <= N - 1; ++i) {
                Element ht = mul(h, Element::perm_elt(m, N, tail_perm(N, i)));
                ordered_json j = in_elem(m, N, "h", h);
                j["i"] = i;
                for (int k = 1; k <= m - 1; ++k) {
                    Element body = mul(ht, elt_pow(jm(m, N, i), k));
                    c.check_poly(
                        "raw-trace symmetry for tail words with a JM power",
                        j, Tr_symbolic(mul(body, sn)),
                        Tr_symbolic(mul(sn, body)));
                }
            }
            for (int k = 1; k <= m - 1; ++k) {
                Element body = mul(h, elt_pow(jm(m, N, N), k));
                ordered_json j = in_elem(m, N, "h", h);
                j["k"] = k;
                for (int jj = 1; jj <= N - 1; ++jj) {
                    Element sj = Element::perm_elt(
                        m, N, Permutation::adjacent(N, jj));
                    c.check_poly("raw-trace symmetry for top JM powers", j,
                                 Tr_symbolic(mul(body, sj)),
                                 Tr_symbolic(mul(sj, body)));
                }
            }
        }
    }
    return c.rep;
}

Report suite_Tr_rules(int m, int n, std::uint64_t seed) {
    Ctx c;
    c.rep.suite = "Tr-rules";
    c.rep.m = m;
    c.rep.n = n;
    c.rep.seed = seed;

    Rng rng(seed);
    const Polynomial one = Polynomial::constant(m, 1);
    const Polynomial z = Polynomial::z(m);

    // Zero normalization at every rank.
    for (int i = 1; i <= n; ++i)
        c.check_poly("raw trace of the unit", in_mn(m, i),
                     Tr_symbolic(Element::unit(m, i)), Polynomial::zero(m));
    // Rank-1 moment values.
    for (int k = 1; k <= m - 1; ++k) {
        ordered_json j = in_mn(m, 1);
        j["k"] = k;
        c.check_poly("rank-1 JM powers give the raw moments", j,
                     Tr_symbolic(elt_pow(jm(m, 1, 1), k)),
                     Polynomial::y(m, k));
    }
    // Top transposition rule on every basis element one rank down.
    for (int i = 1; i <= n - 1; ++i) {
        const Element si =
            Element::perm_elt(m, i + 1, Permutation::adjacent(i + 1, i));
        for (const auto& mono : basis_monomials(m, i)) {
            Element h = Element::monomial(m, i, mono.jexp, mono.perm, one);
            c.check_poly("top transposition contributes a factor z",
                         in_elem(m, i, "h", h),
                         Tr_symbolic(mul(h.embedded(i + 1), si)),
                         z * Tr_symbolic(h));
        }
    }
    // JM power push-through across the top transposition (kernel identity).
    for (int p = 1; p <= n - 1; ++p)
        for (int k = 1; k <= m - 1; ++k) {
            const int N = p + 1;
            Element sp =
                Element::perm_elt(m, N, Permutation::adjacent(N, p));
            Element sum = Element::zero(m, N);
            for (int i = 0; i <= k - 1; ++i)
                sum += mul(elt_pow(jm(m, N, N), k - 1 - i),
                           elt_pow(jm(m, N, p), i));
            ordered_json j = in_mn(m, N);
            j["k"] = k;
            c.check_elem("JM power push-through (right)", j,
                         mul(elt_pow(jm(m, N, N), k), sp),
                         mul(sp, elt_pow(jm(m, N, p), k)) + sum);
            c.check_elem("JM power push-through (left)", j,
                         mul(sp, elt_pow(jm(m, N, N), k)),
                         mul(elt_pow(jm(m, N, p), k), sp) + sum);
        }

    const int N = n;
    if (N >= 2) {
        const auto perms_lo = all_permutations(N - 1);
        const Element sn =
            Element::perm_elt(m, N, Permutation::adjacent(N, N - 1));
        auto lift = [&](const Element& x) { return x.embedded(N); };
        for (int rep = 0; rep < kSamples; ++rep) {
            Element x = random_element(rng, m, N - 1, perms_lo);
            Element y = random_element(rng, m, N - 1, perms_lo);
            c.check_poly("interior transposition contributes a factor z",
                         in_elem(m, N - 1, "x", x),
                         Tr_symbolic(mul(mul(lift(x), sn), lift(y))),
                         z * Tr_symbolic(mul(x, y)));
            for (int k = 1; k <= m - 1; ++k) {
                ordered_json j = in_elem(m, N - 1, "x", x);
                j["k"] = k;
                c.check_poly(
                    "interior JM power factors through its moment", j,
                    Tr_symbolic(mul(mul(lift(x), elt_pow(jm(m, N, N), k)),
                                    lift(y))),
                    TrJ_moment(m, N, k) * Tr_symbolic(mul(x, y)));
            }
        }
        // Exchange against t: the raw trace does absorb t-moves across the
        // inductive-basis shapes even though it is not fully symmetric (full
        // symmetry is scanned, with counterexamples, in Tr-symmetry).
        for (int rep = 0; rep < kSamples / 2; ++rep) {
            Element h = lift(random_element(rng, m, N - 1, perms_lo));
            const Element t = jm(m, N, 1);
            for (int i = 1; i <= N - 1; ++i) {
                Element tail = Element::perm_elt(m, N, tail_perm(N, i));
                Element ht = mul(h, tail);
                ordered_json j = in_elem(m, N, "h", h);
                j["i"] = i;
                for (int k = 1; k <= m - 1; ++k) {
                    Element body = mul(ht, elt_pow(jm(m, N, i), k));
                    c.check_poly(
                        "raw-trace exchange with t for tail words with a JM "
                        "power",
                        j, Tr_symbolic(mul(body, t)),
                        Tr_symbolic(mul(t, body)));
                }
            }
            for (int k = 1; k <= m - 1; ++k) {
                Element body = mul(h, elt_pow(jm(m, N, N), k));
                ordered_json j = in_elem(m, N, "h", h);
                j["k"] = k;
                c.check_poly("raw-trace exchange with t for top JM powers",
                             j, Tr_symbolic(mul(body, t)),
                             Tr_symbolic(mul(t, body)));
            }
        }
    }
    return c.rep;
}

// ---------------------------------------------------------------------------
// Suite: specializations

Report suite_specializations(int m, int n, std::uint64_t seed) {
    Ctx c;
    c.rep.suite = "specializations";
    c.rep.m = m;
    c.rep.n = n;
    c.rep.seed = seed;

    Rng rng(seed);
    const auto perms = all_permutations(n);
    const Polynomial one = Polynomial::constant(m, 1);

    // The z = y = 0 specialization is the indicator of the identity word.
    {
        long count = 0;
        for (const auto& e : exponent_vectors(m, n)) {
            for (const auto& w : perms) {
                if (++count > 400) break;
                TMonomial tm{e, w};
                Element x = from_T_monomial(m, n, tm);
                bool ident = w.is_identity() &&
                             std::all_of(e.begin(), e.end(),
                                         [](int v) { return v == 0; });
                ordered_json j = in_mn(m, n);
                j["texp"] = e;
                j["perm"] = w.to_string();
                c.check_poly("canonical-trace indicator", j, tr0(x),
                             ident ? one : Polynomial::zero(m));
            }
        }
    }
    for (int i = 0; i < kSamples / 2; ++i) {
        Element x = random_element(rng, m, n, perms);
        c.check_poly("canonical-trace specialization agreement",
                     in_elem(m, n, "x", x),
                     specialize_trace(TraceKind::Canonical0, x), tr0(x));
    }

    if (m >= 2) {
        // The z = 0, top-moment-1 specialization of the raw trace picks the
        // coefficient of the top monomial.
        const TraceParams bk = TraceParams::bk01(m);
        for (const auto& mono : basis_monomials(m, n)) {
            Element x = Element::monomial(m, n, mono.jexp, mono.perm, one);
            c.check_poly("coefficient-functional specialization",
                         in_elem(m, n, "x", x), Tr_eval(x, bk), tau_bk(x));
        }
        for (int i = 0; i < kSamples / 2; ++i) {
            Element x = random_element(rng, m, n, perms);
            bool ok = true;
            Polynomial v = Polynomial::zero(m);
            try {
                v = specialize_trace(TraceKind::BK01, x);
            } catch (const std::logic_error&) {
                ok = false;
            }
            c.check_true("checked coefficient-functional specialization",
                         in_elem(m, n, "x", x), ok && v == tau_bk(x),
                         to_string(v), to_string(tau_bk(x)));
        }
        // z = 0 factorization of raw traces of JM monomials into moments.
        for (const auto& a : exponent_vectors(m, n, 1)) {
            Element x = Element::monomial(m, n, a, Permutation::identity(n),
                                          one);
            Polynomial rhs = one;
            for (int i = 1; i <= n; ++i)
                rhs = rhs * at_z0(TrJ_moment(m, i, a[i - 1]));
            ordered_json j = in_mn(m, n);
            j["exp"] = a;
            c.check_poly("z=0 moment factorization", j,
                         at_z0(Tr_symbolic(x)), rhs);
        }
    }
    return c.rep;
}

}  // namespace

// ---------------------------------------------------------------------------
// Suite dispatch

std::vector<std::string> suite_names() {
    return {"relations",  "lemmas-2",  "inductive",
            "tr-rules",   "tr-symmetry", "Tr-rules",
            "Tr-symmetry", "specializations", "all"};
}

Report run_suite(const std::string& suite, int m, int n, std::uint64_t seed) {
    if (suite == "relations") {
        Report r = check_relations(m, n);
        r.seed = seed;
        return r;
    }
    if (suite == "lemmas-2") return suite_lemmas2(m, n, seed);
    if (suite == "inductive") return suite_inductive(m, n, seed);
    if (suite == "tr-rules") return suite_tr_rules(m, n, seed);
    if (suite == "tr-symmetry") return symmetry_scan("tr-symmetry", true, m, n, seed);
    if (suite == "Tr-rules") return suite_Tr_rules(m, n, seed);
    if (suite == "Tr-symmetry")
        return symmetry_scan("Tr-symmetry", false, m, n, seed);
    if (suite == "specializations") return suite_specializations(m, n, seed);
    if (suite == "all") {
        Report r;
        r.suite = "all";
        r.m = m;
        r.n = n;
        r.seed = seed;
        r.merge(check_relations(m, n));
        r.merge(dimension_check(m, n, seed, kSamples));
        r.merge(suite_lemmas2(m, n, seed));
        r.merge(suite_inductive(m, n, seed));
        r.merge(suite_tr_rules(m, n, seed));
        r.merge(symmetry_scan("tr-symmetry", true, m, n, seed));
        r.merge(suite_Tr_rules(m, n, seed));
        r.merge(symmetry_scan("Tr-symmetry", false, m, n, seed));
        r.merge(suite_specializations(m, n, seed));
        return r;
    }
    throw std::invalid_argument("unknown suite: " + suite);
}

}  // namespace hecke
