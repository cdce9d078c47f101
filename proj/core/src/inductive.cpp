#include "hecke/inductive.hpp"

#include <stdexcept>

#include <nlohmann/json.hpp>

namespace hecke {

// ---------------------------------------------------------------------------
// Labels

ModuleBasisLabel ModuleBasisLabel::tail_j(int i, int k) {
    if (k == 0) return tail(i);
    return {Kind::TailJ, i, k};
}

ModuleBasisLabel ModuleBasisLabel::top_j(int k) {
    if (k == 0) return unit();
    return {Kind::TopJ, 0, k};
}

ModuleBasisLabel ModuleBasisLabel::tail_t(int i, int k) {
    if (k == 0) return tail(i);
    return {Kind::TailT, i, k};
}

ModuleBasisLabel ModuleBasisLabel::top_t(int k) {
    if (k == 0) return unit();
    return {Kind::TopT, 0, k};
}

std::string ModuleBasisLabel::to_string() const {
    switch (kind) {
        case Kind::Unit:
            return "Unit";
        case Kind::Tail:
            return "Tail(" + std::to_string(i) + ")";
        case Kind::TailJ:
            return "TailJ(" + std::to_string(i) + "," + std::to_string(k) + ")";
        case Kind::TopJ:
            return "TopJ(" + std::to_string(k) + ")";
        case Kind::TailT:
            return "TailT(" + std::to_string(i) + "," + std::to_string(k) + ")";
        case Kind::TopT:
            return "TopT(" + std::to_string(k) + ")";
    }
    return "?";
}

std::vector<ModuleBasisLabel> label_set(int m, int N, LabelFamily family) {
    std::vector<ModuleBasisLabel> out;
    out.push_back(ModuleBasisLabel::unit());
    for (int i = 1; i < N; ++i) out.push_back(ModuleBasisLabel::tail(i));
    for (int i = 1; i < N; ++i)
        for (int k = 1; k < m; ++k)
            out.push_back(family == LabelFamily::J
                              ? ModuleBasisLabel::tail_j(i, k)
                              : ModuleBasisLabel::tail_t(i, k));
    for (int k = 1; k < m; ++k)
        out.push_back(family == LabelFamily::J ? ModuleBasisLabel::top_j(k)
                                               : ModuleBasisLabel::top_t(k));
    return out;
}

namespace {

Permutation tail_cycle(int N, int i) {
    std::vector<int> letters;
    for (int j = N - 1; j >= i; --j) letters.push_back(j);
    return evaluate_word(N, letters);
}

}  // namespace

Element label_element(int m, int N, const ModuleBasisLabel& label) {
    switch (label.kind) {
        case ModuleBasisLabel::Kind::Unit:
            return Element::unit(m, N);
        case ModuleBasisLabel::Kind::Tail:
            return Element::perm_elt(m, N, tail_cycle(N, label.i));
        case ModuleBasisLabel::Kind::TailJ:
            return right_mul_J_pow(
                Element::perm_elt(m, N, tail_cycle(N, label.i)), label.i,
                label.k);
        case ModuleBasisLabel::Kind::TopJ: {
            Exponents e(N, 0);
            e[N - 1] = label.k;
            return Element::monomial(m, N, e, Permutation::identity(N),
                                     Polynomial::constant(m, 1));
        }
        case ModuleBasisLabel::Kind::TailT:
            return mul(Element::perm_elt(m, N, tail_cycle(N, label.i)),
                       elt_pow(tk(m, N, label.i), label.k));
        case ModuleBasisLabel::Kind::TopT:
            return elt_pow(tk(m, N, N), label.k);
    }
    throw std::logic_error("bad label");
}

// ---------------------------------------------------------------------------
// decompose_J

namespace {

void add_coeff(Decomposition& d, const ModuleBasisLabel& label,
               const Element& h) {
    auto it = d.coeffs.find(label);
    if (it == d.coeffs.end())
        d.coeffs.emplace(label, h);
    else
        it->second += h;
}

// Classifies one canonical monomial of H_N onto the J-family labels.
void classify_J(int m, int N, const StandardMonomial& mono, const Polynomial& c,
                Decomposition& out) {
    const int k = mono.jexp[N - 1];
    auto [wp, i] = last_strand_factor(mono.perm);
    Exponents ap(mono.jexp.begin(), mono.jexp.end() - 1);
    // wp fixes N; view it one strand smaller.
    Element h = Element::monomial(
        m, N - 1, ap,
        Permutation::from_one_line(std::vector<int>(
            wp.one_line().begin(), wp.one_line().begin() + (N - 1))),
        c);
    if (i == N) {  // no tail
        add_coeff(out, ModuleBasisLabel::top_j(k), h);  // top_j(0) == Unit
        return;
    }
    if (k == 0) {
        add_coeff(out, ModuleBasisLabel::tail(i), h);
        return;
    }
    // J_N^k (s_{N-1} ... s_i):  push the power through the first tail letter
    // with J_N^k s_{N-1} = s_{N-1} J_{N-1}^k + sum_q J_N^{k-1-q} J_{N-1}^q.
    std::vector<int> rho_letters;
    for (int j = N - 2; j >= i; --j) rho_letters.push_back(j);
    const Permutation rho = evaluate_word(N - 1, rho_letters);
    for (int q = 0; q <= k - 1; ++q) {
        Element bq = right_mul_perm(right_mul_J_pow(h, N - 1, q), rho);
        add_coeff(out, ModuleBasisLabel::top_j(k - 1 - q), bq);
    }
    if (i == N - 1) {
        // Tail of length one: h s_{N-1} J_{N-1}^k is exactly the
        // TailJ(N-1, k) label with coefficient h.
        add_coeff(out, ModuleBasisLabel::tail_j(N - 1, k), h);
        return;
    }
    // Longer tail: decompose J_{N-1}^k (s_{N-2}...s_i) one level down, then
    // shift every label up with a leading s_{N-1} (coefficients there live in
    // H_{N-2} and commute past it). Each shifted label word is again a label:
    //   s_{N-1} * 1 = Tail(N-1),      s_{N-1} * (s_{N-2}..s_j) = Tail(j),
    //   s_{N-1} * (s_{N-2}..s_j J_j^q) = TailJ(j,q),
    //   s_{N-1} * J_{N-1}^q = TailJ(N-1,q).
    Exponents be(N - 1, 0);
    be[N - 2] = k;
    Element B = Element::monomial(m, N - 1, be, rho,
                                  Polynomial::constant(m, 1));
    Decomposition sub = decompose_J(B);
    for (const auto& [lab, g] : sub.coeffs) {
        Element coeff = mul(h, g.embedded(N - 1));
        switch (lab.kind) {
            case ModuleBasisLabel::Kind::Unit:
                add_coeff(out, ModuleBasisLabel::tail(N - 1), coeff);
                break;
            case ModuleBasisLabel::Kind::Tail:
                add_coeff(out, ModuleBasisLabel::tail(lab.i), coeff);
                break;
            case ModuleBasisLabel::Kind::TailJ:
                add_coeff(out, ModuleBasisLabel::tail_j(lab.i, lab.k), coeff);
                break;
            case ModuleBasisLabel::Kind::TopJ:
                add_coeff(out, ModuleBasisLabel::tail_j(N - 1, lab.k), coeff);
                break;
            default:
                throw std::logic_error("unexpected label family");
        }
    }
}

}  // namespace

Decomposition decompose_J(const Element& x) {
    if (x.n() < 2) throw std::invalid_argument("decompose needs rank >= 2");
    Decomposition d;
    d.m = x.m();
    d.N = x.n();
    d.family = LabelFamily::J;
    for (const auto& [mono, c] : x.terms()) classify_J(d.m, d.N, mono, c, d);
    // Drop zero coefficients accumulated by cancellation.
    for (auto it = d.coeffs.begin(); it != d.coeffs.end();)
        it = it->second.is_zero() ? d.coeffs.erase(it) : std::next(it);
    return d;
}

// ---------------------------------------------------------------------------
// t-basis conversions

Element from_T_monomial(int m, int n, const TMonomial& mono) {
    Element x = Element::unit(m, n);
    for (int strand = 1; strand <= n; ++strand)
        if (mono.texp[strand - 1] > 0)
            x = mul(x, elt_pow(tk(m, n, strand), mono.texp[strand - 1]));
    return right_mul_perm(x, mono.perm);
}

std::map<TMonomial, Polynomial> to_T_basis(const Element& x) {
    // Degree peeling: the expansion of a t-monomial has J^b w as its unique
    // term of maximal total degree (every other choice in the product
    // (J_i - L_i)^{b_i} picks a degree-zero L factor, and rewriting never
    // raises total degree). So all current terms of maximal degree map
    // directly to t-coordinates; subtracting their t-monomials leaves
    // strictly smaller degree.
    std::map<TMonomial, Polynomial> out;
    Element rem = x;
    while (!rem.is_zero()) {
        int maxdeg = 0;
        for (const auto& [mono, c] : rem.terms()) {
            int d = 0;
            for (int e : mono.jexp) d += e;
            maxdeg = std::max(maxdeg, d);
        }
        std::vector<std::pair<TMonomial, Polynomial>> batch;
        for (const auto& [mono, c] : rem.terms()) {
            int d = 0;
            for (int e : mono.jexp) d += e;
            if (d == maxdeg) batch.push_back({{mono.jexp, mono.perm}, c});
        }
        for (const auto& [tm, c] : batch) {
            auto [it, inserted] = out.try_emplace(tm, c);
            if (!inserted) it->second += c;
            rem -= from_T_monomial(x.m(), x.n(), tm) * c;
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

Element from_T_basis(int m, int n,
                     const std::map<TMonomial, Polynomial>& coords) {
    Element x = Element::zero(m, n);
    for (const auto& [tm, c] : coords) x += from_T_monomial(m, n, tm) * c;
    return x;
}

// ---------------------------------------------------------------------------
// decompose_T

Decomposition decompose_T(const Element& x) {
    if (x.n() < 2) throw std::invalid_argument("decompose needs rank >= 2");
    const int m = x.m(), N = x.n();
    Decomposition d;
    d.m = m;
    d.N = N;
    d.family = LabelFamily::T;
    // In t-coordinates the split is exact bookkeeping: t_N^k commutes with
    // S_{N-1} and slides through a tail without correction terms,
    // t_N^k (s_{N-1} ... s_i) = (s_{N-1} ... s_i) t_i^k.
    for (const auto& [tm, c] : to_T_basis(x)) {
        const int k = tm.texp[N - 1];
        auto [wp, i] = last_strand_factor(tm.perm);
        Exponents bp(tm.texp.begin(), tm.texp.end() - 1);
        Permutation wr = Permutation::from_one_line(std::vector<int>(
            wp.one_line().begin(), wp.one_line().begin() + (N - 1)));
        Element h = from_T_monomial(m, N - 1, {bp, wr}) * c;
        ModuleBasisLabel label = ModuleBasisLabel::unit();
        if (i == N)
            label = ModuleBasisLabel::top_t(k);
        else if (k == 0)
            label = ModuleBasisLabel::tail(i);
        else
            label = ModuleBasisLabel::tail_t(i, k);
        add_coeff(d, label, h);
    }
    for (auto it = d.coeffs.begin(); it != d.coeffs.end();)
        it = it->second.is_zero() ? d.coeffs.erase(it) : std::next(it);
    return d;
}

// ---------------------------------------------------------------------------
// recompose / JSON

Element recompose(const Decomposition& d) {
    Element x = Element::zero(d.m, d.N);
    for (const auto& [label, h] : d.coeffs)
        x += mul(h.embedded(d.N), label_element(d.m, d.N, label));
    return x;
}

std::string decomposition_to_json(const Decomposition& d) {
    nlohmann::ordered_json j;
    j["m"] = d.m;
    j["n"] = d.N;
    j["family"] = d.family == LabelFamily::J ? "J" : "T";
    j["labels"] = nlohmann::ordered_json::array();
    for (const auto& [label, h] : d.coeffs) {
        nlohmann::ordered_json entry;
        switch (label.kind) {
            case ModuleBasisLabel::Kind::Unit:
                entry["label"] = "Unit";
                break;
            case ModuleBasisLabel::Kind::Tail:
                entry["label"] = "Tail";
                break;
            case ModuleBasisLabel::Kind::TailJ:
                entry["label"] = "TailJ";
                break;
            case ModuleBasisLabel::Kind::TopJ:
                entry["label"] = "TopJ";
                break;
            case ModuleBasisLabel::Kind::TailT:
                entry["label"] = "TailT";
                break;
            case ModuleBasisLabel::Kind::TopT:
                entry["label"] = "TopT";
                break;
        }
        if (label.kind == ModuleBasisLabel::Kind::Tail ||
            label.kind == ModuleBasisLabel::Kind::TailJ ||
            label.kind == ModuleBasisLabel::Kind::TailT)
            entry["i"] = label.i;
        if (label.kind != ModuleBasisLabel::Kind::Unit &&
            label.kind != ModuleBasisLabel::Kind::Tail)
            entry["k"] = label.k;
        entry["coeff"] = nlohmann::ordered_json::parse(element_to_json(h));
        j["labels"].push_back(std::move(entry));
    }
    return j.dump();
}

}  // namespace hecke
