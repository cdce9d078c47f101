// Markov traces on the tower H_1 < H_2 < ...
//
// The normalized trace tr is the unique linear functional family with
//   tr(1) = 1,  tr(x y) = tr(y x),  tr(a s_n b) = z tr(a b),
//   tr(a t_{n+1}^k) = y_k tr(a)            (a, b in H_n, 1 <= k < m),
// evaluated here by structural recursion over the t-basis. It is
// tower-consistent: the value does not depend on the ambient rank.
//
// The non-normalized companion Tr is a rank-indexed family Tr_n with
//   Tr_n(1) = 0 and, more generally, Tr_n killed on any basis monomial whose
//   top strands are untouched (zero exponent and fixed by the permutation).
// On monomials with a moved top strand it satisfies the same z-recursion as
// tr (Tr_{n+1}(h s_n) = z Tr_n(h) for h in H_n), and a touched-but-unmoved
// top strand contributes a formal moment factor TrJ(n, k). The family is by
// design *not* tower-consistent (the kill rule refers to the ambient rank);
// it is the exact-evaluation device behind the Brauer-type specialization:
// at z = 0, y_{m-1} = 1 (other y's 0) it coincides with the coefficient
// functional tau_bk.
//
// All values are computed symbolically in Q[u, z, y] and memoized; parameter
// substitution happens afterwards, so specialization commutes with
// evaluation by construction.

#pragma once

#include "hecke/element.hpp"
#include "hecke/inductive.hpp"

#include <vector>

namespace hecke {

struct TraceParams {
    Polynomial z;
    std::vector<Polynomial> y;  // y[k-1] = image of y_k; size m-1

    static TraceParams symbolic(int m);
    static TraceParams canonical0(int m);  // z = 0, all y_k = 0
    static TraceParams bk01(int m);        // z = 0, y_{m-1} = 1, others 0
};

enum class TraceKind { Normalized, NonNormalized, Canonical0, BK01, DirectBK };

// Fully symbolic values (parameters z, y_k left as variables).
Polynomial tr_symbolic(const Element& x);
Polynomial Tr_symbolic(const Element& x);

// Values with the parameters substituted.
Polynomial tr_eval(const Element& x, const TraceParams& params);
Polynomial Tr_eval(const Element& x, const TraceParams& params);

// The formal moment table TrJ(n, k), 1 <= k < m, defined by TrJ(1, k) = y_k
// and a recursion in n; setting z = 0 drops the z-proportional terms but the
// convolution terms survive, so TrJ(n, k)|_{z=0} may still mix the y's.
Polynomial TrJ_moment(int m, int n, int k);

// Coefficient of the top monomial J_1^{m-1}...J_n^{m-1} * identity.
Polynomial tau_bk(const Element& x);

// tr at z = 0, y = 0: the indicator of the identity t-basis monomial.
Polynomial tr0(const Element& x);

// Evaluates the trace named by `kind`. For BK01 the result is additionally
// checked against tau_bk (std::logic_error on disagreement).
Polynomial specialize_trace(TraceKind kind, const Element& x);

}  // namespace hecke
