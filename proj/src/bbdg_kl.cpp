#include "rank2/bbdg_kl.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <tuple>

#include "rank2/cluster_basis.hpp"
#include "rank2/errors.hpp"
#include "rank2/quiver_geometry.hpp"
#include "rank2/support_region.hpp"

namespace rank2 {

namespace {

void require_r(int r) {
  if (r < 1) throw PreconditionViolated("r must be >= 1, got " + std::to_string(r));
}

bool is_zero_dim(const DimV& v) { return v.v1 == 0 && v.v2 == 0; }

using PKey = std::tuple<DimV, WeightW, int>;

std::shared_mutex p_mu;
std::map<PKey, LaurentPoly> p_cache;

}  // namespace

SlicePoint slice_point(const DimV& v, const DimV& vPrime, const WeightW& w, int r) {
  require_r(r);
  if (!is_l_dominant(vPrime, w, r) || vPrime.v1 < 0 || vPrime.v2 < 0) {
    throw PreconditionViolated("v' = " + to_string(vPrime) + " is not in Dom" + to_string(w));
  }
  SlicePoint s;
  s.wPerp = wperp(w, vPrime, r);
  s.vPerp = v - vPrime;
  const int a1 = s.wPerp.w1p - s.wPerp.w1;
  s.root = {a1, r * pos(a1) + s.wPerp.w2p - s.wPerp.w2};
  s.p = s.vPerp.v2;
  s.q = pos(a1) - s.vPerp.v1;
  return s;
}

LaurentPoly a_poly(const DimV& v, const DimV& vPrime, const WeightW& w, int r) {
  const SlicePoint s = slice_point(v, vPrime, w, r);
  if (v == vPrime) return 1;
  if (s.vPerp.v1 < 0 || s.vPerp.v2 < 0 || s.q < 0) return {};
  const ECoefficients e = e_coefficients(s.root, ExchangeParams::skew(r));
  auto it = e.find({s.p, s.q});
  if (it == e.end()) return {};
  return it->second.extract_power(r);
}

LaurentPoly closed_form(const DimV& v, const WeightW& w, int r) {
  require_r(r);
  if (!nonempty_f(v, w, r)) {
    throw PreconditionViolated("F is empty for v = " + to_string(v) + ", w = " + to_string(w));
  }
  const long shift = d_dim(v, w, r) - d_tilde(v, w, r);
  return (gauss_binomial(w.w2p + r * v.v1, v.v2) * gauss_binomial(w.w1p, v.v1))
      .shifted(static_cast<int>(shift));
}

LaurentPoly p_minus(const DimV& v, const WeightW& w, int r) {
  require_r(r);
  if (v.v1 < 0 || v.v2 < 0 || !is_l_dominant(v, w, r)) {
    throw PreconditionViolated("v = " + to_string(v) + " is not in Dom" + to_string(w));
  }
  const PKey key{v, w, r};
  {
    std::shared_lock lock(p_mu);
    if (auto it = p_cache.find(key); it != p_cache.end()) return it->second;
  }
  LaurentPoly out = closed_form(v, w, r);
  for (const DimV& vp : dom_enumerate(w, r)) {
    if (vp == v || !vp.leq(v)) continue;
    const LaurentPoly a = a_poly(v, vp, w, r);
    if (!a.is_zero()) out -= a * p_minus(vp, w, r);
  }
  std::unique_lock lock(p_mu);
  return p_cache.try_emplace(key, std::move(out)).first->second;
}

LaurentPoly p_kl(const DimV& v, const WeightW& w, int r) {
  return p_minus(v, w, r).shifted(static_cast<int>(d_tilde(v, w, r)));
}

KLRecord kl_record(const DimV& v, const WeightW& w, int r) {
  LaurentPoly pm = p_minus(v, w, r);
  LaurentPoly pk = pm.shifted(static_cast<int>(d_tilde(v, w, r)));
  return {v, w, std::move(pm), std::move(pk)};
}

LaurentPoly sum_ap(const DimV& v, const WeightW& w, int r) {
  LaurentPoly out;
  for (const DimV& vp : dom_enumerate(w, r)) {
    if (!vp.leq(v)) continue;
    const LaurentPoly a = a_poly(v, vp, w, r);
    if (!a.is_zero()) out += a * p_minus(vp, w, r);
  }
  return out;
}

bool sum_ap_check(const DimV& v, const WeightW& w, int r) {
  const LaurentPoly rhs = closed_form(v, w, r);
  return sum_ap(v, w, r) == rhs;
}

bool kl_bounds_check(const DimV& v, const WeightW& w, int r) {
  const LaurentPoly p = p_kl(v, w, r);
  if (p.is_zero() || p.min_degree() < 0 || p.coeff(0) != 1) return false;
  for (const auto& [e, c] : p.terms()) {
    if (c < 0) return false;
  }
  if (p == LaurentPoly(1)) return true;
  const FGValues fg = fg_values(v, w, r);
  const long bound = d_tilde(v, w, r) + std::min({-1L, fg.f, fg.fSwap, fg.g});
  return p.max_degree() <= bound;
}

bool deg_ap_bound_check(const DimV& v, const WeightW& w, int r) {
  require_r(r);
  if (w.w1 != 0 || w.w2p != 0) throw PreconditionViolated("w must have the form (0, w'1, w2, 0)");
  if (!is_imaginary_root({w.w1p, w.w2}, ExchangeParams::skew(r))) {
    throw PreconditionViolated("(w'1, w2) must be an imaginary root");
  }
  if (v.v1 < 0 || v.v2 < 0) throw PreconditionViolated("v must be nonnegative");
  const long f = fg_values(v, w, r).f;
  if (f < 0) throw PreconditionViolated("f(v, w) must be >= 0");
  for (const DimV& v0 : dom_enumerate(w, r)) {
    if (is_zero_dim(v0) || !v0.leq(v)) continue;
    const LaurentPoly prod = a_poly(v, v0, w, r) * p_minus(v0, w, r);
    if (!prod.is_zero() && prod.max_degree() >= f) return false;
  }
  return true;
}

TorusElement chi_M(const WeightW& w, int r) {
  require_r(r);
  TorusElement out;
  for (int v1 = 0; v1 <= w.w1p; ++v1) {
    for (int v2 = 0; v2 <= w.w2p + r * v1; ++v2) {
      const int shift = -r * (w.w1 * v1 + w.w2 * v2);
      const LaurentPoly coeff =
          (gauss_binomial(w.w2p + r * v1, v2, r) * gauss_binomial(w.w1p, v1, r)).shifted(shift);
      out.add_term({w.w1 - w.w1p + r * v2, w.w2 - w.w2p - r * v1}, coeff);
    }
  }
  return out;
}

RootVector chi_L_root(const WeightW& w, int r) {
  const int a1 = w.w1p - w.w1;
  return {a1, w.w2p - w.w2 + r * pos(a1)};
}

TorusElement chi_L(const WeightW& w, int r) {
  require_r(r);
  const RootVector a = chi_L_root(w, r);
  TorusElement out;
  for (int v1 = 0; v1 <= pos(a.a1); ++v1) {
    for (int v2 = 0; v2 <= pos(a.a2); ++v2) {
      const LaurentPoly coeff = a_poly({v1, v2}, {0, 0}, w, r).substitute_power(r);
      out.add_term({w.w1 - w.w1p + r * v2, w.w2 - w.w2p - r * v1}, coeff);
    }
  }
  return out;
}

WeightW frozen_part(const WeightW& w) {
  const int x = std::min(w.w1, w.w1p);
  const int y = std::min(w.w2, w.w2p);
  return {x, x, y, y};
}

WeightW reduced_part(const WeightW& w) {
  const WeightW f = frozen_part(w);
  return {w.w1 - f.w1, w.w1p - f.w1p, w.w2 - f.w2, w.w2p - f.w2p};
}

bool bbdg_support(const DimV& v, const WeightW& w, const DimV& vPrime, int r) {
  require_r(r);
  if (w.w1 != 0 || w.w2p != 0) throw PreconditionViolated("w must have the form (0, w'1, w2, 0)");
  if (v.v1 < 0 || v.v1 > w.w1p || v.v2 < 0 || v.v2 > r * v.v1) {
    throw PreconditionViolated("need 0 <= v1 <= w'1 and 0 <= v2 <= r v1, got v = " + to_string(v));
  }
  if (vPrime.v1 < 0 || vPrime.v2 < 0 || !vPrime.leq(v)) return false;
  if (!is_l_dominant(vPrime, w, r)) return false;
  const int a1 = w.w1p - r * vPrime.v2;
  const int a2 = r * pos(a1) + r * vPrime.v1 - w.w2;
  const int p = v.v2 - vPrime.v2;
  const int q = pos(a1) - v.v1 + vPrime.v1;
  return region_contains({a1, a2}, p, q, ExchangeParams::skew(r));
}

}  // namespace rank2
