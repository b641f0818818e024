#pragma once

// BBDG multiplicities a_{v,v';w}(t), the Kazhdan-Lusztig analogues P_-(v,w)
// and P(v,w), the characters chi(M(w)), chi(L(w)), and the support predicate
// for the multiplicities.
//
// a_{v,v';w} is read off a triangular basis coefficient after moving to the
// transversal slice (w, v') -> (w - C_q v', v - v') and substituting t = v^r.
// That makes chi_L = C a construction; the independent checks are the
// closed-form sum identity (sum_ap_check), the tables of P, and the positivity
// and degree bounds on P.

#include "rank2/laurent.hpp"
#include "rank2/params.hpp"
#include "rank2/qtorus.hpp"

namespace rank2 {

struct KLRecord {
  DimV v;
  WeightW w;
  LaurentPoly pMinus;
  LaurentPoly pKL;
};

/// Where a_{v,v';w} lives: the slice data (w - C_q v', v - v') and the
/// coefficient e(p, q) of C[root] it is read from (q < 0 means no coefficient).
struct SlicePoint {
  WeightW wPerp;
  DimV vPerp;
  RootVector root;
  int p = 0;
  int q = 0;
};

/// Requires v' in Dom(w).
SlicePoint slice_point(const DimV& v, const DimV& vPrime, const WeightW& w, int r);

/// a_{v,v';w} in t. Requires v' in Dom(w).
LaurentPoly a_poly(const DimV& v, const DimV& vPrime, const WeightW& w, int r);

/// t^{d - dTilde} [w'2 + r v1, v2]_t [w'1, v1]_t. Requires nonempty F.
LaurentPoly closed_form(const DimV& v, const WeightW& w, int r);

/// Requires v in Dom(w).
LaurentPoly p_minus(const DimV& v, const WeightW& w, int r);
/// t^{dTilde} P_-(v, w).
LaurentPoly p_kl(const DimV& v, const WeightW& w, int r);
KLRecord kl_record(const DimV& v, const WeightW& w, int r);

/// Sum over v' in Dom(w), v' <= v of a_{v,v';w} P_-(v', w).
LaurentPoly sum_ap(const DimV& v, const WeightW& w, int r);
/// sum_ap(v, w) == closed_form(v, w). Requires nonempty F, not dominance.
bool sum_ap_check(const DimV& v, const WeightW& w, int r);

/// Nonnegative coefficients, constant term 1 and, unless P = 1,
/// deg P <= dTilde + min(-1, f, fSwap, g).
bool kl_bounds_check(const DimV& v, const WeightW& w, int r);

/// deg(a_{v,v0;w} P_-(v0, w)) < f(v, w) for every v0 in Dom(w) \ {0}, v0 <= v.
/// Requires w = (0, w'1, w2, 0), (w'1, w2) imaginary and f(v, w) >= 0.
bool deg_ap_bound_check(const DimV& v, const WeightW& w, int r);

TorusElement chi_M(const WeightW& w, int r);
TorusElement chi_L(const WeightW& w, int r);
/// The root (w'1 - w1, w'2 - w2 + r [w'1 - w1]_+) with chi_L(w) = C[that root].
RootVector chi_L_root(const WeightW& w, int r);

/// ^f w = (min(w1, w'1), min(w1, w'1), min(w2, w'2), min(w2, w'2)).
WeightW frozen_part(const WeightW& w);
/// w - ^f w.
WeightW reduced_part(const WeightW& w);

/// Whether a_{v,v';w} can be nonzero, decided from the support region alone.
/// Requires w = (0, w'1, w2, 0), 0 <= v1 <= w'1 and 0 <= v2 <= r v1.
bool bbdg_support(const DimV& v, const WeightW& w, const DimV& vPrime, int r);

}  // namespace rank2
