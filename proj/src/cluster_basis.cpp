#include "rank2/cluster_basis.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>

#include "rank2/errors.hpp"
#include "rank2/support_region.hpp"

namespace rank2 {

namespace {

template <class Map, class Key>
std::optional<typename Map::mapped_type> lookup(std::shared_mutex& mu, const Map& m, const Key& k) {
  std::shared_lock lock(mu);
  auto it = m.find(k);
  if (it == m.end()) return std::nullopt;
  return it->second;
}

template <class Map, class Key, class Value>
const typename Map::mapped_type& store(std::shared_mutex& mu, Map& m, const Key& k, Value&& v) {
  std::unique_lock lock(mu);
  return m.try_emplace(k, std::forward<Value>(v)).first->second;
}

// Optional on-disk memo for triangular basis elements.
std::optional<std::filesystem::path> cache_file(const ExchangeParams& params, const RootVector& a) {
  const char* dir = std::getenv("RANK2_CACHE_DIR");
  if (dir == nullptr || *dir == '\0') return std::nullopt;
  std::ostringstream name;
  name << "C_b" << params.b << "_c" << params.c << '_' << a.a1 << '_' << a.a2 << ".json";
  return std::filesystem::path(dir) / name.str();
}

std::optional<TorusElement> load_cached(const ExchangeParams& params, const RootVector& a) {
  auto path = cache_file(params, a);
  if (!path || !std::filesystem::exists(*path)) return std::nullopt;
  try {
    std::ifstream in(*path);
    nlohmann::json j = nlohmann::json::parse(in);
    TorusElement out;
    from_json(j, out);
    return out;
  } catch (const std::exception&) {
    return std::nullopt;  // unreadable entries are recomputed
  }
}

void save_cached(const ExchangeParams& params, const RootVector& a, const TorusElement& f) {
  auto path = cache_file(params, a);
  if (!path) return;
  std::error_code ec;
  std::filesystem::create_directories(path->parent_path(), ec);
  auto tmp = *path;
  tmp += ".tmp" + std::to_string(reinterpret_cast<std::uintptr_t>(&f));
  {
    std::ofstream out(tmp);
    if (!out) return;
    nlohmann::json j;
    to_json(j, f);
    out << j.dump();
  }
  std::filesystem::rename(tmp, *path, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

// Label processing order for the correction loop: larger a1 + a2 first, then
// lex larger. Anything strictly above a label in the componentwise order comes
// earlier.
struct LabelOrder {
  bool operator()(const RootVector& x, const RootVector& y) const {
    const int sx = x.a1 + x.a2, sy = y.a1 + y.a2;
    if (sx != sy) return sx > sy;
    return x > y;
  }
};

}  // namespace

ClusterAlgebra::ClusterAlgebra(ExchangeParams params, BasisCaps caps) : params_(params), caps_(caps) {}

TorusElement ClusterAlgebra::cluster_variable(int m) const {
  if (m > caps_.cluster || m < -caps_.cluster) {
    throw CapExceeded("cluster variable index " + std::to_string(m) + " exceeds cap " +
                      std::to_string(caps_.cluster));
  }
  if (auto hit = lookup(mu_, cluster_cache_, m)) return *hit;
  return store(mu_, cluster_cache_, m, compute_cluster_variable(m));
}

TorusElement ClusterAlgebra::compute_cluster_variable(int m) const {
  if (m == 1) return TorusElement::x1();
  if (m == 2) return TorusElement::x2();
  // X_{k+1} X_{k-1} = v^e X_k^e + 1 with e the exchange exponent of k.
  if (m >= 3) {
    const int k = m - 1;
    const int e = params_.exchange_exponent(k);
    const TorusElement rhs = torus_pow(cluster_variable(k), e).scaled(LaurentPoly::monomial(e)) + 1;
    return torus_div_right(rhs, cluster_variable(k - 1));
  }
  const int k = m + 1;
  const int e = params_.exchange_exponent(k);
  const TorusElement rhs = torus_pow(cluster_variable(k), e).scaled(LaurentPoly::monomial(e)) + 1;
  return torus_div_left(rhs, cluster_variable(k + 1));
}

TorusElement ClusterAlgebra::cluster_monomial(int n, int s1, int s2) const {
  if (s1 < 0 || s2 < 0) throw PreconditionViolated("cluster monomial exponents must be >= 0");
  const TorusElement x = torus_pow(cluster_variable(n), s1);
  const TorusElement y = torus_pow(cluster_variable(n + 1), s2);
  return (x * y).scaled(LaurentPoly::monomial(s1 * s2));
}

TorusElement ClusterAlgebra::standard_monomial(const RootVector& a) const {
  if (auto hit = lookup(mu_, standard_cache_, a)) return *hit;
  TorusElement out = torus_pow(cluster_variable(3), pos(a.a1)) *
                     torus_pow(TorusElement::x1(), pos(-a.a1)) *
                     torus_pow(TorusElement::x2(), pos(-a.a2)) *
                     torus_pow(cluster_variable(0), pos(a.a2));
  out = out.scaled(LaurentPoly::monomial(a.a1 * a.a2));
  return store(mu_, standard_cache_, a, std::move(out));
}

StandardExpansion ClusterAlgebra::expand(const TorusElement& f) const {
  StandardExpansion out;
  TorusElement rest = f;
  long steps = 0;
  while (!rest.is_zero()) {
    if (++steps > caps_.iterations) {
      throw NonTerminating("standard expansion exceeded " + std::to_string(caps_.iterations) +
                           " steps");
    }
    // The lex-smallest exponent is minimal in the componentwise order, so its
    // label is maximal among the remaining ones.
    const auto [e, coeff] = *rest.terms().begin();
    const RootVector label{-e.e1, -e.e2};
    rest -= standard_monomial(label).scaled(coeff);
    out.coeffs.emplace(label, coeff);
  }
  return out;
}

TorusElement ClusterAlgebra::reconstruct(const StandardExpansion& e) const {
  TorusElement out;
  for (const auto& [label, coeff] : e.coeffs) out += standard_monomial(label).scaled(coeff);
  return out;
}

StandardExpansion ClusterAlgebra::bar_standard_expansion(const RootVector& a) const {
  if (auto hit = lookup(mu_, bar_cache_, a)) return *hit;
  return store(mu_, bar_cache_, a, expand(torus_bar(standard_monomial(a))));
}

void ClusterAlgebra::check_root_cap(const RootVector& a) const {
  if (std::abs(a.a1) > caps_.root || std::abs(a.a2) > caps_.root) {
    throw CapExceeded("root " + to_string(a) + " exceeds cap " + std::to_string(caps_.root));
  }
}

TorusElement ClusterAlgebra::compute_kl(const RootVector& a) const {
  // Work in standard-monomial coordinates: C = sum_x c_x M[x] with c_a = 1.
  // Bar-invariance forces c_y - bar(c_y) = sum_{x > y} bar(c_x) B[x][y], where
  // B[x] is the expansion of bar(M[x]); c_y is the v-positive part of that sum.
  std::map<RootVector, LaurentPoly> coeffs;
  std::map<RootVector, LaurentPoly> defect;
  std::set<RootVector, LabelOrder> pending{a};
  long steps = 0;
  while (!pending.empty()) {
    if (++steps > caps_.iterations) {
      throw ConvergenceFailure("correction loop for " + to_string(a) + " did not converge");
    }
    const RootVector x = *pending.begin();
    pending.erase(pending.begin());
    LaurentPoly cx = 1;
    if (x != a) {
      const LaurentPoly delta = std::move(defect[x]);
      defect.erase(x);
      if (delta.bar() != -delta) {
        throw ConvergenceFailure("defect at " + to_string(x) + " is not antisymmetric: " +
                                 delta.to_string());
      }
      cx = delta.positive_part();
      if (cx.is_zero()) continue;
    }
    const LaurentPoly cx_bar = cx.bar();
    const StandardExpansion bar_x = bar_standard_expansion(x);
    for (const auto& [y, b] : bar_x.coeffs) {
      if (y == x) continue;
      if (!y.leq(x)) {
        throw ConvergenceFailure("bar(M" + to_string(x) + ") involves M" + to_string(y) +
                                 " outside the lower cone");
      }
      defect[y] += cx_bar * b;
      pending.insert(y);
    }
    coeffs.emplace(x, std::move(cx));
  }
  return reconstruct(StandardExpansion{std::move(coeffs)});
}

TorusElement ClusterAlgebra::compute_basis(const RootVector& a, BasisMethod method) const {
  if (method == BasisMethod::kKazhdanLusztig) return compute_kl(a);
  const bool imaginary = is_imaginary_root(a, params_);
  if (method == BasisMethod::kClusterMonomial && imaginary) {
    throw PreconditionViolated(to_string(a) + " is imaginary; no cluster monomial");
  }
  if (!imaginary) {
    std::optional<RealDecomposition> dec;
    try {
      dec = real_decompose(a, params_);
    } catch (const NotFound&) {
      if (method == BasisMethod::kClusterMonomial) throw;
    }
    if (dec) {
      const bool in_cap = std::abs(dec->n) <= caps_.cluster && std::abs(dec->n + 1) <= caps_.cluster;
      if (in_cap || method == BasisMethod::kClusterMonomial) {
        return cluster_monomial(dec->n, static_cast<int>(dec->s1), static_cast<int>(dec->s2));
      }
    }
  }
  return compute_kl(a);
}

TorusElement ClusterAlgebra::triangular_basis(const RootVector& a, BasisMethod method) const {
  check_root_cap(a);
  const auto key = std::pair{a, method};
  if (auto hit = lookup(mu_, basis_cache_, key)) return *hit;
  if (method == BasisMethod::kAuto) {
    if (auto disk = load_cached(params_, a)) return store(mu_, basis_cache_, key, std::move(*disk));
  }
  TorusElement out = compute_basis(a, method);
  if (method == BasisMethod::kAuto) save_cached(params_, a, out);
  return store(mu_, basis_cache_, key, std::move(out));
}

ECoefficients ClusterAlgebra::e_coefficients(const RootVector& a) const {
  if (auto hit = lookup(mu_, e_cache_, a)) return *hit;
  ECoefficients out;
  const TorusElement c = triangular_basis(a);
  for (const auto& [e, coeff] : c.terms()) {
    const int x = e.e1 + a.a1;
    const int y = e.e2 + a.a2;
    if (x % params_.b != 0 || y % params_.c != 0) {
      throw MalformedSupport("monomial X^(" + std::to_string(e.e1) + "," + std::to_string(e.e2) +
                             ") of C" + to_string(a) + " is off the lattice");
    }
    const int p = x / params_.b;
    const int q = y / params_.c;
    if (p < 0 || q < 0 || p > pos(a.a2) || q > pos(a.a1)) {
      throw MalformedSupport("index (" + std::to_string(p) + "," + std::to_string(q) +
                             ") of C" + to_string(a) + " is outside the index box");
    }
    out.emplace(std::pair{p, q}, coeff);
  }
  return store(mu_, e_cache_, a, std::move(out));
}

const ClusterAlgebra& algebra(const ExchangeParams& params) {
  static std::mutex mu;
  static std::map<ExchangeParams, std::unique_ptr<ClusterAlgebra>> registry;
  std::lock_guard lock(mu);
  auto& slot = registry[params];
  if (!slot) slot = std::make_unique<ClusterAlgebra>(params);
  return *slot;
}

TorusElement cluster_variable(int m, const ExchangeParams& params) {
  return algebra(params).cluster_variable(m);
}

TorusElement cluster_monomial(int n, int s1, int s2, const ExchangeParams& params) {
  return algebra(params).cluster_monomial(n, s1, s2);
}

TorusElement standard_monomial(const RootVector& a, const ExchangeParams& params) {
  return algebra(params).standard_monomial(a);
}

TorusElement mstar(const WeightW& w, const ExchangeParams& params) {
  params.r();
  const ClusterAlgebra& alg = algebra(params);
  TorusElement out = torus_pow(TorusElement::x2(), w.w2) * torus_pow(alg.cluster_variable(0), w.w2p) *
                     torus_pow(TorusElement::x1(), w.w1) * torus_pow(alg.cluster_variable(-1), w.w1p);
  return out.scaled(LaurentPoly::monomial((w.w1 - w.w1p) * (w.w2p - w.w2)));
}

StandardExpansion expand_in_standard_basis(const TorusElement& f, const ExchangeParams& params) {
  return algebra(params).expand(f);
}

TorusElement triangular_basis(const RootVector& a, const ExchangeParams& params, BasisMethod method) {
  return algebra(params).triangular_basis(a, method);
}

ECoefficients e_coefficients(const RootVector& a, const ExchangeParams& params) {
  return algebra(params).e_coefficients(a);
}

namespace {

using TSeries = std::map<int, LaurentPoly>;

TSeries series_mul(const TSeries& x, const TSeries& y) {
  TSeries out;
  for (const auto& [i, f] : x) {
    for (const auto& [j, g] : y) out[i + j] += f * g;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

TSeries column(const ECoefficients& e, int p) {
  TSeries out;
  for (const auto& [pq, coeff] : e) {
    if (pq.first == p) out.emplace(pq.second, coeff);
  }
  return out;
}

TSeries binomial_series(int n, int scale) {
  TSeries out;
  for (int l = 0; l <= n; ++l) out.emplace(l, gauss_binomial(n, l, scale));
  return out;
}

}  // namespace

bool verify_sigma_relation(const RootVector& a, int p, const ExchangeParams& params) {
  if (is_imaginary_root(a, params)) {
    throw PreconditionViolated("sigma relation is only established for real roots, got " +
                               to_string(a));
  }
  if (a.a2 < 0 || p < 0 || p > a.a2) {
    throw PreconditionViolated("need 0 <= p <= a2, got p = " + std::to_string(p) + " for " +
                               to_string(a));
  }
  const RootVector image{params.b * a.a2 - a.a1, a.a2};
  const TSeries e = column(e_coefficients(a, params), p);
  const TSeries e_image = column(e_coefficients(image, params), a.a2 - p);
  const int shift = params.b * p - a.a1;
  if (shift >= 0) return e_image == series_mul(binomial_series(shift, params.c), e);
  return series_mul(binomial_series(-shift, params.c), e_image) == e;
}

}  // namespace rank2
