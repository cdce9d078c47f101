// The rewrite kernel for the rank-n algebra H_n(u) over Q[u_1..u_m]:
// generated by t, s_1..s_{n-1} subject to
//   (t - u_1)...(t - u_m) = 0,
//   t(s_1 t s_1 + s_1) = (s_1 t s_1 + s_1) t,
//   t s_i = s_i t              (i >= 2),
//   s_i^2 = 1,
//   s_i s_{i+1} s_i = s_{i+1} s_i s_{i+1},
//   s_i s_j = s_j s_i          (|i - j| > 1).
// Every element is kept in the canonical basis
//   J_1^{a_1} ... J_n^{a_n} w,   0 <= a_i < m,  w in S_n,
// built from the commuting family J_1 = t, J_{k+1} = s_k J_k s_k + s_k.
// The local moves the kernel uses are
//   s_i J_j = J_j s_i (j not in {i, i+1}),
//   s_i J_i = J_{i+1} s_i - 1,   s_i J_{i+1} = J_i s_i + 1,
// plus the degree-m power reduction at each strand. Total J-degree never
// increases under any move, which is the termination measure.

#pragma once

#include "hecke/permutation.hpp"
#include "hecke/polynomial.hpp"

#include <map>
#include <string>
#include <vector>

namespace hecke {

struct StandardMonomial {
    Exponents jexp;    // length n, entries in [0, m)
    Permutation perm;  // in S_n

    bool operator==(const StandardMonomial& o) const {
        return jexp == o.jexp && perm == o.perm;
    }
    bool operator<(const StandardMonomial& o) const {
        if (jexp != o.jexp) return jexp < o.jexp;
        return perm < o.perm;
    }
};

class Element {
  public:
    Element() = default;
    Element(int m, int n) : m_(m), n_(n) {}

    static Element zero(int m, int n) { return Element(m, n); }
    static Element unit(int m, int n);
    static Element monomial(int m, int n, const Exponents& jexp,
                            const Permutation& perm,
                            const Polynomial& coeff);
    // The permutation w as an element (exponents all zero).
    static Element perm_elt(int m, int n, const Permutation& w);

    int m() const { return m_; }
    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<StandardMonomial, Polynomial>& terms() const {
        return terms_;
    }
    // Coefficient of a monomial (zero polynomial if absent).
    Polynomial coeff(const StandardMonomial& mono) const;

    void add_term(const StandardMonomial& mono, const Polynomial& c);

    Element operator-() const;
    Element operator+(const Element& rhs) const;
    Element operator-(const Element& rhs) const;
    Element& operator+=(const Element& rhs);
    Element& operator-=(const Element& rhs);
    Element operator*(const Polynomial& c) const;
    Element operator*(const Rational& c) const;
    bool operator==(const Element& rhs) const;
    bool operator!=(const Element& rhs) const { return !(*this == rhs); }

    // Inclusion H_n -> H_{n2} (n2 >= n): pad exponents, extend permutations.
    Element embedded(int n2) const;
    // Inverse of embedding for elements supported on H_{n2} (throws if any
    // term involves a strand above n2).
    Element restricted(int n2) const;
    // True if every term has zero exponent at strands > n2 and a permutation
    // fixing them.
    bool supported_on(int n2) const;

  private:
    int m_ = 1, n_ = 1;
    std::map<StandardMonomial, Polynomial> terms_;
};

// --- kernel operations ------------------------------------------------------

// x * s_i (right multiplication by an adjacent transposition).
Element right_mul_s(const Element& x, int i);
// x * w for a permutation w.
Element right_mul_perm(const Element& x, const Permutation& w);
// x * J_j (one factor; performs the left-move rewrites and any power
// reduction).
Element right_mul_J(const Element& x, int j);
// x * J_j^k.
Element right_mul_J_pow(const Element& x, int j, int k);
// The canonical expansion of J_k^m in H_k (so that every exponent may be
// kept below m). Cached per (m, k); thread-safe.
Element reduce_power(int m, int k);
// Canonicalizes c * J^b * w where entries of b may reach 2(m-1).
Element reduce_exponents(int m, int n, Exponents b, const Permutation& w,
                         const Polynomial& c);
// Product in H_n.
Element mul(const Element& a, const Element& b);
// Non-negative power.
Element elt_pow(const Element& a, int k);

// --- distinguished elements -------------------------------------------------

// J_k, L_k = sum of transpositions (j,k) for j < k, and t_k = J_k - L_k
// (the conjugate s_{k-1}...s_1 t s_1...s_{k-1}), all canonical in H_n.
Element jm(int m, int n, int k);
Element lk(int m, int n, int k);
Element tk(int m, int n, int k);

// --- generator words --------------------------------------------------------

struct GenLetter {
    enum class Kind { T, S, J, TK, LK };
    Kind kind;
    int index;  // unused for T

    static GenLetter t() { return {Kind::T, 0}; }
    static GenLetter s(int i) { return {Kind::S, i}; }
    static GenLetter j(int k) { return {Kind::J, k}; }
    static GenLetter tkl(int k) { return {Kind::TK, k}; }
    static GenLetter lkl(int k) { return {Kind::LK, k}; }
};
using GenWord = std::vector<GenLetter>;

// Normal form of a word in the generators (letters multiplied left to
// right starting from the unit).
Element normalize_word(int m, int n, const GenWord& word);

// --- text / JSON ------------------------------------------------------------

// Human-readable canonical text, e.g. "(u1 + u2)*J1*[2,1] + 2*J2^2".
std::string to_string(const Element& x);
// Canonical JSON: {"m","n","basis":"J","terms":[{"exp","perm","coeff"}...]}
// with terms sorted lexicographically on (exp, perm).
std::string element_to_json(const Element& x);

}  // namespace hecke
