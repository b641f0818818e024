#pragma once

// Cluster variables, standard monomials and the triangular basis of the
// coefficient-free rank-2 quantum cluster algebra A_v(b, c).
//
// Everything is expressed in the initial torus with X_1 = X^(1,0) and
// X_2 = X^(0,1). Expensive objects are memoized per ClusterAlgebra; the free
// functions use one shared instance per parameter pair.

#include <map>
#include <memory>
#include <shared_mutex>
#include <utility>

#include "rank2/laurent.hpp"
#include "rank2/params.hpp"
#include "rank2/qtorus.hpp"

namespace rank2 {

struct BasisCaps {
  int root = 64;          // |a1|, |a2| for triangular_basis
  int cluster = 12;       // |m| for cluster_variable
  long iterations = 2'000'000;
};

/// Coefficients of an element in the standard monomial basis.
struct StandardExpansion {
  std::map<RootVector, LaurentPoly> coeffs;
  friend bool operator==(const StandardExpansion&, const StandardExpansion&) = default;
};

/// e(p, q) keyed by (p, q).
using ECoefficients = std::map<std::pair<int, int>, LaurentPoly>;

enum class BasisMethod {
  kAuto,              // cluster monomial for real roots when cheap, otherwise KL loop
  kKazhdanLusztig,    // always the bar-invariant correction loop
  kClusterMonomial,   // real roots only
};

class ClusterAlgebra {
 public:
  explicit ClusterAlgebra(ExchangeParams params, BasisCaps caps = {});

  const ExchangeParams& params() const { return params_; }
  const BasisCaps& caps() const { return caps_; }

  TorusElement cluster_variable(int m) const;
  TorusElement cluster_monomial(int n, int s1, int s2) const;
  TorusElement standard_monomial(const RootVector& a) const;
  /// Expansion of bar(M[a]); unitriangular with labels below a.
  StandardExpansion bar_standard_expansion(const RootVector& a) const;
  StandardExpansion expand(const TorusElement& f) const;
  TorusElement reconstruct(const StandardExpansion& e) const;
  TorusElement triangular_basis(const RootVector& a, BasisMethod method = BasisMethod::kAuto) const;
  ECoefficients e_coefficients(const RootVector& a) const;

 private:
  TorusElement compute_cluster_variable(int m) const;
  TorusElement compute_kl(const RootVector& a) const;
  TorusElement compute_basis(const RootVector& a, BasisMethod method) const;
  void check_root_cap(const RootVector& a) const;

  ExchangeParams params_;
  BasisCaps caps_;

  mutable std::shared_mutex mu_;
  mutable std::map<int, TorusElement> cluster_cache_;
  mutable std::map<RootVector, TorusElement> standard_cache_;
  mutable std::map<RootVector, StandardExpansion> bar_cache_;
  mutable std::map<std::pair<RootVector, BasisMethod>, TorusElement> basis_cache_;
  mutable std::map<RootVector, ECoefficients> e_cache_;
};

/// Shared instance for params (created on first use, default caps).
const ClusterAlgebra& algebra(const ExchangeParams& params);

TorusElement cluster_variable(int m, const ExchangeParams& params);
TorusElement cluster_monomial(int n, int s1, int s2, const ExchangeParams& params);
TorusElement standard_monomial(const RootVector& a, const ExchangeParams& params);
/// M*[w] = v^{(w1-w'1)(w'2-w2)} X_2^{w2} X_0^{w'2} X_1^{w1} X_{-1}^{w'1}; needs b = c.
TorusElement mstar(const WeightW& w, const ExchangeParams& params);
StandardExpansion expand_in_standard_basis(const TorusElement& f, const ExchangeParams& params);
TorusElement triangular_basis(const RootVector& a, const ExchangeParams& params,
                              BasisMethod method = BasisMethod::kAuto);
ECoefficients e_coefficients(const RootVector& a, const ExchangeParams& params);

/// Checks the generating-function relation between the e(p, .) of C[a] and
/// the e'(a2 - p, .) of C[b a2 - a1, a2]. Real roots with 0 <= p <= a2 only.
bool verify_sigma_relation(const RootVector& a, int p, const ExchangeParams& params);

}  // namespace rank2
