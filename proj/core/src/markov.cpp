#include "hecke/markov.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace hecke {

// ---------------------------------------------------------------------------
// Parameters

TraceParams TraceParams::symbolic(int m) {
    TraceParams p;
    p.z = Polynomial::z(m);
    for (int k = 1; k < m; ++k) p.y.push_back(Polynomial::y(m, k));
    return p;
}

TraceParams TraceParams::canonical0(int m) {
    TraceParams p;
    p.z = Polynomial::zero(m);
    for (int k = 1; k < m; ++k) p.y.push_back(Polynomial::zero(m));
    return p;
}

TraceParams TraceParams::bk01(int m) {
    TraceParams p = canonical0(m);
    if (m >= 2) p.y[m - 2] = Polynomial::constant(m, 1);
    return p;
}

// ---------------------------------------------------------------------------
// Memo tables

namespace {

struct MonoKey {
    int m;
    int amb;
    Exponents exp;
    std::vector<int> perm;

    bool operator<(const MonoKey& o) const {
        return std::tie(m, amb, exp, perm) < std::tie(o.m, o.amb, o.exp, o.perm);
    }
};

template <typename Key>
class Cache {
  public:
    bool lookup(const Key& k, Polynomial& out) {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = map_.find(k);
        if (it == map_.end()) return false;
        out = it->second;
        return true;
    }
    void store(const Key& k, const Polynomial& v) {
        std::lock_guard<std::mutex> lock(mu_);
        map_.try_emplace(k, v);
    }

  private:
    std::mutex mu_;
    std::map<Key, Polynomial> map_;
};

Cache<MonoKey>& tr_cache() {
    static Cache<MonoKey> c;
    return c;
}
Cache<MonoKey>& Tr_cache() {
    static Cache<MonoKey> c;
    return c;
}
Cache<std::tuple<int, int, int>>& moment_cache() {
    static Cache<std::tuple<int, int, int>> c;
    return c;
}

Permutation shrink(const Permutation& w, int n2) {
    return Permutation::from_one_line(
        std::vector<int>(w.one_line().begin(), w.one_line().begin() + n2));
}

// Letters of s_{N-2} ... s_i evaluated in S_{N-1} (empty when i == N-1).
Permutation rho_perm(int N, int i) {
    std::vector<int> letters;
    for (int j = N - 2; j >= i; --j) letters.push_back(j);
    return evaluate_word(N - 1, letters);
}

Polynomial tr_mono(int m, int amb, const TMonomial& tm);

Polynomial tr_of_element_T(int m, int amb, const Element& e) {
    Polynomial acc = Polynomial::zero(m);
    for (const auto& [tm, c] : to_T_basis(e)) acc += c * tr_mono(m, amb, tm);
    return acc;
}

// Normalized trace of the t-basis monomial t^b w at ambient rank `amb`.
Polynomial tr_mono(int m, int amb, const TMonomial& tm) {
    if (amb == 1) {
        const int k = tm.texp[0];
        return k > 0 ? Polynomial::y(m, k) : Polynomial::constant(m, 1);
    }
    MonoKey key{m, amb, tm.texp, tm.perm.one_line()};
    Polynomial cached(m);
    if (tr_cache().lookup(key, cached)) return cached;

    const int k = tm.texp[amb - 1];
    auto [wp, i] = last_strand_factor(tm.perm);
    Polynomial result(m);
    if (i == amb) {
        // Top strand untouched by the permutation: strip it, paying the
        // moment y_k if the exponent is positive.
        TMonomial sub{Exponents(tm.texp.begin(), tm.texp.end() - 1),
                      shrink(wp, amb - 1)};
        result = tr_mono(m, amb - 1, sub);
        if (k > 0) result = Polynomial::y(m, k) * result;
    } else {
        // t^b w = (t^{b'} w') t_amb^k s_{amb-1} (s_{amb-2}..s_i)
        //       = (t^{b'} w') s_{amb-1} (t_{amb-1}^k rho):
        // one factor of z, then the product of the two flanks in the
        // subalgebra.
        TMonomial beta{Exponents(tm.texp.begin(), tm.texp.end() - 1),
                       shrink(wp, amb - 1)};
        Element prod = from_T_monomial(m, amb - 1, beta);
        if (k > 0) prod = mul(prod, elt_pow(tk(m, amb - 1, amb - 1), k));
        prod = right_mul_perm(prod, rho_perm(amb, i));
        result = Polynomial::z(m) * tr_of_element_T(m, amb - 1, prod);
    }
    tr_cache().store(key, result);
    return result;
}

Polynomial Tr_mono(int m, int amb, const StandardMonomial& mono);

Polynomial Tr_of_element(int m, int amb, const Element& e) {
    Polynomial acc = Polynomial::zero(m);
    for (const auto& [mono, c] : e.terms()) acc += c * Tr_mono(m, amb, mono);
    return acc;
}

// Non-normalized trace of the canonical monomial J^a w at ambient rank
// `amb`. An untouched top strand kills the value; a touched-but-unmoved one
// contributes a formal moment factor; a moved one is resolved through
// J_amb^k s_{amb-1} = s_{amb-1} J_{amb-1}^k + sum_q J_amb^{k-1-q} J_{amb-1}^q.
Polynomial Tr_mono(int m, int amb, const StandardMonomial& mono) {
    if (amb == 1) {
        const int k = mono.jexp[0];
        return k > 0 ? Polynomial::y(m, k) : Polynomial::zero(m);
    }
    MonoKey key{m, amb, mono.jexp, mono.perm.one_line()};
    Polynomial cached(m);
    if (Tr_cache().lookup(key, cached)) return cached;

    const int k = mono.jexp[amb - 1];
    auto [wp, i] = last_strand_factor(mono.perm);
    Polynomial result(m);
    if (i == amb) {
        if (k == 0) {
            result = Polynomial::zero(m);  // untouched top strand
        } else {
            StandardMonomial sub{Exponents(mono.jexp.begin(),
                                           mono.jexp.end() - 1),
                                 shrink(wp, amb - 1)};
            result = TrJ_moment(m, amb, k) * Tr_mono(m, amb - 1, sub);
        }
    } else {
        Element alpha = Element::monomial(
            m, amb - 1, Exponents(mono.jexp.begin(), mono.jexp.end() - 1),
            shrink(wp, amb - 1), Polynomial::constant(m, 1));
        const Permutation rho = rho_perm(amb, i);
        // z-term: alpha J_{amb-1}^k rho one level down.
        Element e1 = right_mul_perm(right_mul_J_pow(alpha, amb - 1, k), rho);
        result = Polynomial::z(m) * Tr_of_element(m, amb - 1, e1);
        // Remainder terms alpha J_amb^{k-1-q} J_{amb-1}^q rho: the top
        // strand is now unmoved, so each either dies (exponent zero) or
        // pays a moment factor and descends.
        for (int q = 0; q <= k - 1; ++q) {
            const int c_exp = k - 1 - q;
            if (c_exp == 0) continue;
            Element bq =
                right_mul_perm(right_mul_J_pow(alpha, amb - 1, q), rho);
            result +=
                TrJ_moment(m, amb, c_exp) * Tr_of_element(m, amb - 1, bq);
        }
    }
    Tr_cache().store(key, result);
    return result;
}

}  // namespace

// ---------------------------------------------------------------------------
// Moment table

Polynomial TrJ_moment(int m, int n, int k) {
    if (k <= 0) return Polynomial::zero(m);  // TrJ(n, 0) = Tr(1) = 0
    if (k >= m) throw std::out_of_range("moment exponent must be < m");
    if (n == 1) return Polynomial::y(m, k);
    auto key = std::make_tuple(m, n, k);
    Polynomial cached(m);
    if (moment_cache().lookup(key, cached)) return cached;

    Polynomial z = Polynomial::z(m);
    Polynomial r = TrJ_moment(m, n - 1, k) + z * TrJ_moment(m, n - 1, k - 1);
    if (k >= 2)
        r += z * Polynomial::constant(m, k - 1) * TrJ_moment(m, n - 1, k - 2);
    for (int i = 0; i <= k - 2; ++i) {
        for (int j = 0; j <= k - 2 - i; ++j)
            r += TrJ_moment(m, n, k - 2 - i - j) * TrJ_moment(m, n - 1, i + j);
        r += TrJ_moment(m, n, k - 2 - i) * TrJ_moment(m, n - 1, i);
    }
    moment_cache().store(key, r);
    return r;
}

// ---------------------------------------------------------------------------
// Public evaluators

Polynomial tr_symbolic(const Element& x) {
    Polynomial acc = Polynomial::zero(x.m());
    for (const auto& [tm, c] : to_T_basis(x))
        acc += c * tr_mono(x.m(), x.n(), tm);
    return acc;
}

Polynomial Tr_symbolic(const Element& x) {
    Polynomial acc = Polynomial::zero(x.m());
    for (const auto& [mono, c] : x.terms())
        acc += c * Tr_mono(x.m(), x.n(), mono);
    return acc;
}

namespace {

Polynomial apply_params(const Polynomial& v, const TraceParams& p) {
    const int m = v.m();
    if (static_cast<int>(p.y.size()) != m - 1)
        throw std::invalid_argument("trace parameter count mismatch");
    VarTable vt{m};
    std::map<int, Polynomial> bind;
    bind[vt.z_index()] = p.z;
    for (int k = 1; k < m; ++k) bind[vt.y_index(k)] = p.y[k - 1];
    return substitute(v, bind);
}

}  // namespace

Polynomial tr_eval(const Element& x, const TraceParams& params) {
    return apply_params(tr_symbolic(x), params);
}

Polynomial Tr_eval(const Element& x, const TraceParams& params) {
    return apply_params(Tr_symbolic(x), params);
}

Polynomial tau_bk(const Element& x) {
    return x.coeff({Exponents(x.n(), x.m() - 1),
                    Permutation::identity(x.n())});
}

Polynomial tr0(const Element& x) {
    auto coords = to_T_basis(x);
    auto it = coords.find(
        TMonomial{Exponents(x.n(), 0), Permutation::identity(x.n())});
    return it == coords.end() ? Polynomial::zero(x.m()) : it->second;
}

Polynomial specialize_trace(TraceKind kind, const Element& x) {
    switch (kind) {
        case TraceKind::Normalized:
            return tr_symbolic(x);
        case TraceKind::NonNormalized:
            return Tr_symbolic(x);
        case TraceKind::Canonical0:
            return tr_eval(x, TraceParams::canonical0(x.m()));
        case TraceKind::BK01: {
            Polynomial v = Tr_eval(x, TraceParams::bk01(x.m()));
            if (x.m() >= 2 && v != tau_bk(x))
                throw std::logic_error(
                    "specialized trace disagrees with the coefficient "
                    "functional");
            return v;
        }
        case TraceKind::DirectBK:
            return tau_bk(x);
    }
    throw std::logic_error("bad trace kind");
}

}  // namespace hecke
