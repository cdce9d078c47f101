#include "hecke/element.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <nlohmann/json.hpp>

namespace hecke {

// ---------------------------------------------------------------------------
// Element basics

Element Element::unit(int m, int n) {
    Element e(m, n);
    e.add_term({Exponents(n, 0), Permutation::identity(n)},
               Polynomial::constant(m, 1));
    return e;
}

Element Element::monomial(int m, int n, const Exponents& jexp,
                          const Permutation& perm, const Polynomial& coeff) {
    if (static_cast<int>(jexp.size()) != n || perm.n() != n)
        throw std::invalid_argument("monomial shape mismatch");
    for (int e : jexp)
        if (e < 0 || e >= m) throw std::invalid_argument("exponent out of range");
    Element x(m, n);
    x.add_term({jexp, perm}, coeff);
    return x;
}

Element Element::perm_elt(int m, int n, const Permutation& w) {
    return monomial(m, n, Exponents(n, 0), w, Polynomial::constant(m, 1));
}

Polynomial Element::coeff(const StandardMonomial& mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? Polynomial::zero(m_) : it->second;
}

void Element::add_term(const StandardMonomial& mono, const Polynomial& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(mono, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Element Element::operator-() const {
    Element r(m_, n_);
    for (const auto& [mono, c] : terms_) r.terms_.emplace(mono, -c);
    return r;
}

Element& Element::operator+=(const Element& rhs) {
    if (m_ != rhs.m_ || n_ != rhs.n_)
        throw std::invalid_argument("ambient mismatch in +=");
    for (const auto& [mono, c] : rhs.terms_) add_term(mono, c);
    return *this;
}

Element& Element::operator-=(const Element& rhs) {
    if (m_ != rhs.m_ || n_ != rhs.n_)
        throw std::invalid_argument("ambient mismatch in -=");
    for (const auto& [mono, c] : rhs.terms_) add_term(mono, -c);
    return *this;
}

Element Element::operator+(const Element& rhs) const {
    Element r = *this;
    r += rhs;
    return r;
}

Element Element::operator-(const Element& rhs) const {
    Element r = *this;
    r -= rhs;
    return r;
}

Element Element::operator*(const Polynomial& c) const {
    Element r(m_, n_);
    if (c.is_zero()) return r;
    for (const auto& [mono, v] : terms_) {
        Polynomial p = v * c;
        if (!p.is_zero()) r.terms_.emplace(mono, std::move(p));
    }
    return r;
}

Element Element::operator*(const Rational& c) const {
    return *this * Polynomial::constant(m_, c);
}

bool Element::operator==(const Element& rhs) const {
    return m_ == rhs.m_ && n_ == rhs.n_ && terms_ == rhs.terms_;
}

Element Element::embedded(int n2) const {
    if (n2 < n_) throw std::invalid_argument("embedding must not shrink");
    if (n2 == n_) return *this;
    Element r(m_, n2);
    for (const auto& [mono, c] : terms_) {
        Exponents e = mono.jexp;
        e.resize(n2, 0);
        std::vector<int> img = mono.perm.one_line();
        for (int x = n_ + 1; x <= n2; ++x) img.push_back(x);
        r.terms_.emplace(
            StandardMonomial{std::move(e), Permutation::from_one_line(img)}, c);
    }
    return r;
}

bool Element::supported_on(int n2) const {
    for (const auto& [mono, c] : terms_)
        for (int x = n2 + 1; x <= n_; ++x)
            if (mono.jexp[x - 1] != 0 || !mono.perm.fixes(x)) return false;
    return true;
}

Element Element::restricted(int n2) const {
    if (n2 > n_) throw std::invalid_argument("restriction must not grow");
    if (!supported_on(n2))
        throw std::invalid_argument("element not supported on the subalgebra");
    Element r(m_, n2);
    for (const auto& [mono, c] : terms_) {
        Exponents e(mono.jexp.begin(), mono.jexp.begin() + n2);
        std::vector<int> img(mono.perm.one_line().begin(),
                             mono.perm.one_line().begin() + n2);
        r.terms_.emplace(
            StandardMonomial{std::move(e), Permutation::from_one_line(img)}, c);
    }
    return r;
}

// ---------------------------------------------------------------------------
// Kernel moves

Element right_mul_perm(const Element& x, const Permutation& w) {
    Element r(x.m(), x.n());
    for (const auto& [mono, c] : x.terms())
        r.add_term({mono.jexp, compose(mono.perm, w)}, c);
    return r;
}

Element right_mul_s(const Element& x, int i) {
    return right_mul_perm(x, Permutation::adjacent(x.n(), i));
}

Element reduce_exponents(int m, int n, Exponents b, const Permutation& w,
                         const Polynomial& c) {
    int s = -1;  // smallest strand (0-based) whose exponent overflows
    for (int i = 0; i < n; ++i) {
        if (b[i] >= m) {
            s = i;
            break;
        }
    }
    if (s < 0) return Element::monomial(m, n, b, w, c);
    b[s] -= m;  // peel one J_{s+1}^m factor and expand it
    Element r(m, n);
    Element rp = reduce_power(m, s + 1).embedded(n);
    for (const auto& [mono, rc] : rp.terms()) {
        Exponents bb = b;
        for (int i = 0; i < n; ++i) bb[i] += mono.jexp[i];
        r += reduce_exponents(m, n, std::move(bb), compose(mono.perm, w), c * rc);
    }
    return r;
}

Element right_mul_J(const Element& x, int j) {
    const int m = x.m(), n = x.n();
    if (j < 1 || j > n) throw std::out_of_range("strand index");
    Element out(m, n);
    for (const auto& [mono, c] : x.terms()) {
        const std::vector<int> letters = reduced_word(mono.perm);
        int strand = j;
        // Walk the word right to left; the moving J either passes a letter,
        // or crosses it while shifting strand and spawning the term with
        // that letter deleted (s_i J_i = J_{i+1} s_i - 1 and
        // s_i J_{i+1} = J_i s_i + 1, read right to left).
        for (int pos = static_cast<int>(letters.size()) - 1; pos >= 0; --pos) {
            const int i = letters[pos];
            int sign = 0;
            if (strand == i) {
                sign = -1;
                strand = i + 1;
            } else if (strand == i + 1) {
                sign = 1;
                strand = i;
            }
            if (sign != 0) {
                std::vector<int> rest;
                rest.reserve(letters.size() - 1);
                for (int q = 0; q < static_cast<int>(letters.size()); ++q)
                    if (q != pos) rest.push_back(letters[q]);
                out.add_term({mono.jexp, evaluate_word(n, rest)},
                             sign > 0 ? c : -c);
            }
        }
        Exponents b = mono.jexp;
        b[strand - 1] += 1;
        out += reduce_exponents(m, n, std::move(b), mono.perm, c);
    }
    return out;
}

Element right_mul_J_pow(const Element& x, int j, int k) {
    Element r = x;
    for (int i = 0; i < k; ++i) r = right_mul_J(r, j);
    return r;
}

Element mul(const Element& a, const Element& b) {
    if (a.m() != b.m() || a.n() != b.n())
        throw std::invalid_argument("ambient mismatch in mul");
    Element out(a.m(), a.n());
    for (const auto& [mono, c] : b.terms()) {
        Element cur = a;
        for (int strand = 1; strand <= a.n(); ++strand)
            cur = right_mul_J_pow(cur, strand, mono.jexp[strand - 1]);
        cur = right_mul_perm(cur, mono.perm);
        out += cur * c;
    }
    return out;
}

Element elt_pow(const Element& a, int k) {
    if (k < 0) throw std::invalid_argument("negative power");
    Element r = Element::unit(a.m(), a.n());
    for (int i = 0; i < k; ++i) r = mul(r, a);
    return r;
}

// ---------------------------------------------------------------------------
// Power reduction table

namespace {

Element build_reduce_power(int m, int k) {
    if (k == 1) {
        // J_1^m = sum_{i=1}^m (-1)^{i+1} e_i(u) J_1^{m-i}, from the degree-m
        // relation satisfied by t = J_1.
        Element r(m, 1);
        for (int i = 1; i <= m; ++i) {
            Polynomial c = elem_sym(m, i);
            if (i % 2 == 0) c = -c;
            r += Element::monomial(m, 1, Exponents{m - i},
                                   Permutation::identity(1), c);
        }
        return r;
    }
    // J_k^m = s J_{k-1}^m s + J_{k-1}^{m-1} s
    //         + sum_{i=0}^{m-2} s J_{k-1}^{i+1} J_k^{m-2-i}
    //         + sum_{i=0}^{m-2} J_k^{m-2-i} J_{k-1}^i,      s = s_{k-1}.
    // Every right-hand side term has total degree < m, so building it never
    // re-enters the reduction at strand k.
    const Permutation s = Permutation::adjacent(k, k - 1);
    const Element s_elt = Element::perm_elt(m, k, s);
    Element r = right_mul_perm(mul(s_elt, reduce_power(m, k - 1).embedded(k)),
                               s);
    {
        Exponents e(k, 0);
        e[k - 2] = m - 1;
        r += Element::monomial(m, k, e, s, Polynomial::constant(m, 1));
    }
    for (int i = 0; i <= m - 2; ++i) {
        Exponents mid(k, 0);
        mid[k - 2] = i + 1;
        mid[k - 1] = m - 2 - i;
        r += mul(s_elt, Element::monomial(m, k, mid, Permutation::identity(k),
                                          Polynomial::constant(m, 1)));
        Exponents low(k, 0);
        low[k - 2] = i;
        low[k - 1] = m - 2 - i;
        r += Element::monomial(m, k, low, Permutation::identity(k),
                               Polynomial::constant(m, 1));
    }
    return r;
}

}  // namespace

Element reduce_power(int m, int k) {
    static std::map<std::pair<int, int>, Element> cache;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({m, k});
        if (it != cache.end()) return it->second;
    }
    Element r = build_reduce_power(m, k);
    std::lock_guard<std::mutex> lock(mu);
    return cache.try_emplace({m, k}, std::move(r)).first->second;
}

// ---------------------------------------------------------------------------
// Distinguished elements

Element jm(int m, int n, int k) {
    if (k < 1 || k > n) throw std::out_of_range("strand index");
    Exponents e(n, 0);
    e[k - 1] = 1;
    return reduce_exponents(m, n, std::move(e), Permutation::identity(n),
                            Polynomial::constant(m, 1));
}

Element lk(int m, int n, int k) {
    if (k < 1 || k > n) throw std::out_of_range("strand index");
    Element r(m, n);
    for (int j = 1; j < k; ++j)
        r += Element::perm_elt(m, n, Permutation::transposition(n, j, k));
    return r;
}

Element tk(int m, int n, int k) { return jm(m, n, k) - lk(m, n, k); }

// ---------------------------------------------------------------------------
// Generator words

Element normalize_word(int m, int n, const GenWord& word) {
    Element x = Element::unit(m, n);
    for (const GenLetter& letter : word) {
        switch (letter.kind) {
            case GenLetter::Kind::T:
                x = right_mul_J(x, 1);
                break;
            case GenLetter::Kind::S:
                x = right_mul_s(x, letter.index);
                break;
            case GenLetter::Kind::J:
                x = right_mul_J(x, letter.index);
                break;
            case GenLetter::Kind::TK:
                x = mul(x, tk(m, n, letter.index));
                break;
            case GenLetter::Kind::LK:
                x = mul(x, lk(m, n, letter.index));
                break;
        }
    }
    return x;
}

// ---------------------------------------------------------------------------
// Text / JSON

std::string to_string(const Element& x) {
    if (x.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [mono, c] : x.terms()) {
        if (!first) out << " + ";
        first = false;
        std::string parts;
        for (int i = 0; i < x.n(); ++i) {
            if (mono.jexp[i] == 0) continue;
            if (!parts.empty()) parts += '*';
            parts += "J" + std::to_string(i + 1);
            if (mono.jexp[i] > 1) parts += '^' + std::to_string(mono.jexp[i]);
        }
        if (!mono.perm.is_identity()) {
            if (!parts.empty()) parts += '*';
            parts += mono.perm.to_string();
        }
        const std::string cs = to_string(c);
        if (cs == "1") {
            out << (parts.empty() ? "1" : parts);
        } else if (parts.empty()) {
            out << (c.terms().size() > 1 ? "(" + cs + ")" : cs);
        } else if (c.terms().size() == 1 && cs[0] != '-') {
            out << cs << '*' << parts;
        } else {
            out << '(' << cs << ")*" << parts;
        }
    }
    return out.str();
}

std::string element_to_json(const Element& x) {
    nlohmann::ordered_json j;
    j["m"] = x.m();
    j["n"] = x.n();
    j["basis"] = "J";
    j["terms"] = nlohmann::ordered_json::array();
    for (const auto& [mono, c] : x.terms()) {
        nlohmann::ordered_json term;
        term["exp"] = mono.jexp;
        term["perm"] = mono.perm.one_line();
        term["coeff"] = to_string(c);
        j["terms"].push_back(std::move(term));
    }
    return j.dump();
}

}  // namespace hecke
