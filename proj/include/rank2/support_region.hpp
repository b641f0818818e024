#pragma once

// Root classification, the support function D(p,q), denominator vectors and
// the support region R(a1,a2) of a triangular basis element.

#include <string>
#include <vector>

#include <json.hpp>

#include "rank2/params.hpp"

namespace rank2 {

struct LatticePoint {
  long p = 0;
  long q = 0;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

/// Denominator vector d_n = (d'_n, d''_n) of the cluster variable X_n.
struct DenomVector {
  long d1 = 0;
  long d2 = 0;
  friend auto operator<=>(const DenomVector&, const DenomVector&) = default;
};

struct RealDecomposition {
  int n = 1;
  long s1 = 0;
  long s2 = 0;
  friend auto operator<=>(const RealDecomposition&, const RealDecomposition&) = default;
};

enum class RegionKind { kPoint, kSegmentHorizontal, kSegmentVertical, kTriangle, kQuadrilateral, kCurved };

std::string to_string(RegionKind kind);

struct RegionDescription {
  RegionKind kind = RegionKind::kPoint;
  /// Counterclockwise from the origin; empty for curved regions.
  std::vector<LatticePoint> vertices;
  RootVector a;
  ExchangeParams params;
};

/// Default bound |n| on denominator vectors.
inline constexpr int kDenominatorCap = 64;
/// Default scan window |n - 1| <= kScanWindow for real_decompose.
inline constexpr int kScanWindow = 32;

bool is_imaginary_root(const RootVector& a, const ExchangeParams& params);

/// D(p,q) = c a1 q + b a2 p - b p^2 - bc pq - c q^2.
long d_value(long p, long q, const RootVector& a, const ExchangeParams& params);

DenomVector denominator_vector(int n, const ExchangeParams& params, int cap = kDenominatorCap);

/// a = s1 d_n + s2 d_{n+1} with s1 > 0 (or (1,0,0) for a = 0).
/// Throws PreconditionViolated on imaginary roots, NotFound outside the window.
RealDecomposition real_decompose(const RootVector& a, const ExchangeParams& params,
                                 int window = kScanWindow);

RegionDescription region(const RootVector& a, const ExchangeParams& params);

bool region_contains(const RegionDescription& r, long p, long q);
bool region_contains(const RootVector& a, long p, long q, const ExchangeParams& params);

void to_json(nlohmann::json& j, const RegionDescription& r);

}  // namespace rank2
