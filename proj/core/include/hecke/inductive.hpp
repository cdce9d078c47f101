// Inductive module structure of the tower H_1 < H_2 < ... : H_N is a free
// left H_{N-1}-module of rank m*N with two distinguished bases, labelled
//   Unit            1
//   Tail(i)         s_{N-1} s_{N-2} ... s_i                    (1 <= i < N)
//   TailJ(i,k)      s_{N-1} ... s_i J_i^k      (1 <= i < N, 1 <= k < m)
//   TopJ(k)         J_N^k                              (1 <= k < m)
// and the analogous TailT/TopT family built from the conjugates
// t_i = s_{i-1}...s_1 t s_1...s_{i-1}. This header provides the label
// bookkeeping, the constructive decompositions onto either family, and the
// conversion between the canonical J-basis and the t-basis
//   t_1^{b_1} ... t_n^{b_n} w  (factors in increasing strand order).

#pragma once

#include "hecke/element.hpp"

#include <map>
#include <string>
#include <vector>

namespace hecke {

// A t-basis monomial t_1^{b_1}...t_n^{b_n} w.
struct TMonomial {
    Exponents texp;
    Permutation perm;

    bool operator==(const TMonomial& o) const {
        return texp == o.texp && perm == o.perm;
    }
    bool operator<(const TMonomial& o) const {
        if (texp != o.texp) return texp < o.texp;
        return perm < o.perm;
    }
};

enum class LabelFamily { J, T };

struct ModuleBasisLabel {
    enum class Kind { Unit, Tail, TailJ, TopJ, TailT, TopT };
    Kind kind = Kind::Unit;
    int i = 0;  // tail bottom (Tail/TailJ/TailT)
    int k = 0;  // exponent (TailJ/TopJ/TailT/TopT)

    static ModuleBasisLabel unit() { return {Kind::Unit, 0, 0}; }
    static ModuleBasisLabel tail(int i) { return {Kind::Tail, i, 0}; }
    static ModuleBasisLabel tail_j(int i, int k);  // k = 0 collapses to tail
    static ModuleBasisLabel top_j(int k);          // k = 0 collapses to unit
    static ModuleBasisLabel tail_t(int i, int k);
    static ModuleBasisLabel top_t(int k);

    bool operator==(const ModuleBasisLabel& o) const {
        return kind == o.kind && i == o.i && k == o.k;
    }
    bool operator<(const ModuleBasisLabel& o) const {
        if (kind != o.kind) return kind < o.kind;
        if (i != o.i) return i < o.i;
        return k < o.k;
    }
    std::string to_string() const;
};

// All m*N labels of the family for H_N over H_{N-1}.
std::vector<ModuleBasisLabel> label_set(int m, int N, LabelFamily family);

// The label's word as a canonical element of H_N.
Element label_element(int m, int N, const ModuleBasisLabel& label);

// x = sum_label coeff(label) * label_element(label), coefficients in
// H_{N-1}.
struct Decomposition {
    int m = 1;
    int N = 2;  // ambient rank; coefficients live in H_{N-1}
    LabelFamily family = LabelFamily::J;
    std::map<ModuleBasisLabel, Element> coeffs;
};

// Constructive decompositions (x must have ambient rank N >= 2).
Decomposition decompose_J(const Element& x);
Decomposition decompose_T(const Element& x);

// Multiplies out a decomposition back into H_N.
Element recompose(const Decomposition& d);

// Canonical JSON for a decomposition:
// {"m","n","family","labels":[{"label","i","k","coeff":<element>}...]}.
std::string decomposition_to_json(const Decomposition& d);

// --- t-basis conversions ----------------------------------------------------

// Canonical element of the t-basis monomial.
Element from_T_monomial(int m, int n, const TMonomial& mono);

// Expansion of x over the t-basis (exact; computed by degree peeling, since
// the t-monomial's expansion has J^b w as its unique top-degree term).
std::map<TMonomial, Polynomial> to_T_basis(const Element& x);

// Inverse of to_T_basis.
Element from_T_basis(int m, int n,
                     const std::map<TMonomial, Polynomial>& coords);

}  // namespace hecke
