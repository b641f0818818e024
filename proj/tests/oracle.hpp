#pragma once

// Test-side reference computations written independently of the library
// algorithms they are compared against.

#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include "rank2/cluster_basis.hpp"
#include "rank2/laurent.hpp"
#include "rank2/qtorus.hpp"
#include "rank2/support_region.hpp"

namespace oracle {

using rank2::Integer;
using rank2::LaurentPoly;
using rank2::TorusElement;

// Unbalanced Gaussian binomial in q by the q-Pascal rule
// [n,k] = [n-1,k-1] + q^k [n-1,k], as a dense coefficient vector.
inline std::vector<Integer> gauss_dense(int n, int k) {
  if (k < 0 || k > n) return {};
  if (k == 0 || k == n) return {1};
  auto a = gauss_dense(n - 1, k - 1);
  auto b = gauss_dense(n - 1, k);
  std::vector<Integer> out(static_cast<std::size_t>(k * (n - k)) + 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i + static_cast<std::size_t>(k)] += b[i];
  return out;
}

// Balanced form t^{-k(n-k)} [n,k](q = t^2), evaluated at t = v^scale.
inline LaurentPoly gauss_balanced(int n, int k, int scale = 1) {
  LaurentPoly out;
  const auto dense = gauss_dense(n, k);
  const int shift = k * (n - k);
  for (std::size_t i = 0; i < dense.size(); ++i) {
    out.add_term((2 * static_cast<int>(i) - shift) * scale, dense[i]);
  }
  return out;
}

inline LaurentPoly random_poly(std::mt19937& rng, int terms = 3, int span = 4, int mag = 5) {
  std::uniform_int_distribution<int> e(-span, span), c(-mag, mag);
  LaurentPoly f;
  for (int i = 0; i < terms; ++i) f.add_term(e(rng), c(rng));
  return f;
}

inline TorusElement random_torus(std::mt19937& rng, int terms = 3, int span = 2) {
  std::uniform_int_distribution<int> e(-span, span);
  TorusElement f;
  for (int i = 0; i < terms; ++i) f.add_term({e(rng), e(rng)}, random_poly(rng, 2, 3, 3));
  return f;
}

// Literal bar-invariant correction loop in the torus: C := M[a]; while
// bar(C) - C != 0, take its maximal label a' (lex larger on ties) with
// coefficient delta and add the positive part of delta times M[a'].
inline TorusElement kl_loop(const rank2::RootVector& a, const rank2::ExchangeParams& params,
                            int max_steps = 10000) {
  const auto& alg = rank2::algebra(params);
  TorusElement c = alg.standard_monomial(a);
  for (int step = 0; step < max_steps; ++step) {
    const TorusElement defect = rank2::torus_bar(c) - c;
    if (defect.is_zero()) return c;
    const auto exp = alg.expand(defect);
    std::vector<rank2::RootVector> labels;
    for (const auto& [lab, coeff] : exp.coeffs) labels.push_back(lab);
    std::vector<rank2::RootVector> maximal;
    for (const auto& l : labels) {
      const bool dominated = std::any_of(labels.begin(), labels.end(), [&](const rank2::RootVector& o) {
        return !(o == l) && l.leq(o);
      });
      if (!dominated) maximal.push_back(l);
    }
    const rank2::RootVector best = *std::max_element(maximal.begin(), maximal.end());
    const LaurentPoly gamma = exp.coeffs.at(best).positive_part();
    c += alg.standard_monomial(best).scaled(gamma);
  }
  throw std::runtime_error("oracle KL loop did not converge");
}

// Lattice points of the convex hull of a finite point set (monotone chain,
// then half-plane tests against every hull edge).
inline std::vector<rank2::LatticePoint> hull(std::vector<rank2::LatticePoint> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  auto cross = [](const rank2::LatticePoint& o, const rank2::LatticePoint& a, const rank2::LatticePoint& b) {
    return (a.p - o.p) * (b.q - o.q) - (a.q - o.q) * (b.p - o.p);
  };
  std::vector<rank2::LatticePoint> h(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i > 0; --i) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i - 1]) <= 0) --k;
    h[k++] = pts[i - 1];
  }
  h.resize(k - 1);
  return h;
}

inline bool in_hull(const std::vector<rank2::LatticePoint>& h, long p, long q) {
  if (h.empty()) return false;
  if (h.size() == 1) return h[0].p == p && h[0].q == q;
  if (h.size() == 2) {
    const auto& a = h[0];
    const auto& b = h[1];
    const long cr = (b.p - a.p) * (q - a.q) - (b.q - a.q) * (p - a.p);
    return cr == 0 && std::min(a.p, b.p) <= p && p <= std::max(a.p, b.p) && std::min(a.q, b.q) <= q &&
           q <= std::max(a.q, b.q);
  }
  for (std::size_t i = 0; i < h.size(); ++i) {
    const auto& a = h[i];
    const auto& b = h[(i + 1) % h.size()];
    if ((b.p - a.p) * (q - a.q) - (b.q - a.q) * (p - a.p) < 0) return false;
  }
  return true;
}

}  // namespace oracle
