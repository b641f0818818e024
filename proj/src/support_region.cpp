#include "rank2/support_region.hpp"

#include <algorithm>
#include <optional>

#include "rank2/errors.hpp"

namespace rank2 {

namespace {

std::optional<long> checked_mul(long x, long y) {
  long out;
  if (__builtin_mul_overflow(x, y, &out)) return std::nullopt;
  return out;
}

std::optional<long> checked_sub(long x, long y) {
  long out;
  if (__builtin_sub_overflow(x, y, &out)) return std::nullopt;
  return out;
}

long clip(long x) { return x > 0 ? x : 0; }

// d_{n+1} = e [d_n]_+ - d_{n-1}, run in either direction.
std::optional<DenomVector> step(const DenomVector& mid, const DenomVector& other, long e) {
  auto x = checked_mul(e, clip(mid.d1));
  auto y = checked_mul(e, clip(mid.d2));
  if (!x || !y) return std::nullopt;
  auto d1 = checked_sub(*x, other.d1);
  auto d2 = checked_sub(*y, other.d2);
  if (!d1 || !d2) return std::nullopt;
  return DenomVector{*d1, *d2};
}

// Walks the recursion to index n; nullopt on overflow.
std::optional<DenomVector> walk(int n, const ExchangeParams& params) {
  DenomVector prev{-1, 0};  // d_1
  DenomVector cur{0, -1};   // d_2
  if (n == 1) return prev;
  if (n == 2) return cur;
  if (n > 2) {
    for (int m = 2; m < n; ++m) {
      auto next = step(cur, prev, params.exchange_exponent(m));
      if (!next) return std::nullopt;
      prev = cur;
      cur = *next;
    }
    return cur;
  }
  // Backwards: d_{m-1} = e_m [d_m]_+ - d_{m+1}, starting from m = 1.
  DenomVector hi = cur;   // d_{m+1}
  DenomVector mid = prev; // d_m
  for (int m = 1; m > n; --m) {
    auto lower = step(mid, hi, params.exchange_exponent(m));
    if (!lower) return std::nullopt;
    hi = mid;
    mid = *lower;
  }
  return mid;
}

}  // namespace

std::string to_string(RegionKind kind) {
  switch (kind) {
    case RegionKind::kPoint: return "point";
    case RegionKind::kSegmentHorizontal: return "segment-horizontal";
    case RegionKind::kSegmentVertical: return "segment-vertical";
    case RegionKind::kTriangle: return "triangle";
    case RegionKind::kQuadrilateral: return "quadrilateral";
    case RegionKind::kCurved: return "curved";
  }
  return "unknown";
}

bool is_imaginary_root(const RootVector& a, const ExchangeParams& params) {
  if (a.a1 <= 0 || a.a2 <= 0) return false;
  const long a1 = a.a1, a2 = a.a2, b = params.b, c = params.c;
  return c * a1 * a1 - b * c * a1 * a2 + b * a2 * a2 <= 0;
}

long d_value(long p, long q, const RootVector& a, const ExchangeParams& params) {
  const long b = params.b, c = params.c;
  return c * a.a1 * q + b * a.a2 * p - b * p * p - b * c * p * q - c * q * q;
}

DenomVector denominator_vector(int n, const ExchangeParams& params, int cap) {
  if (n > cap || n < -cap) {
    throw CapExceeded("denominator vector index " + std::to_string(n) + " exceeds cap " +
                      std::to_string(cap));
  }
  auto d = walk(n, params);
  if (!d) throw CapExceeded("denominator vector d_" + std::to_string(n) + " overflows");
  return *d;
}

RealDecomposition real_decompose(const RootVector& a, const ExchangeParams& params, int window) {
  if (is_imaginary_root(a, params)) {
    throw PreconditionViolated(to_string(a) + " is an imaginary root");
  }
  if (a.a1 == 0 && a.a2 == 0) return {1, 0, 0};

  auto try_n = [&](int n) -> std::optional<RealDecomposition> {
    auto dn = walk(n, params);
    auto dn1 = walk(n + 1, params);
    if (!dn || !dn1) return std::nullopt;
    auto t1 = checked_mul(a.a1, dn1->d2);
    auto t2 = checked_mul(a.a2, dn1->d1);
    auto t3 = checked_mul(dn->d1, a.a2);
    auto t4 = checked_mul(dn->d2, a.a1);
    if (!t1 || !t2 || !t3 || !t4) return std::nullopt;
    auto s1 = checked_sub(*t1, *t2);
    auto s2 = checked_sub(*t3, *t4);
    if (!s1 || !s2 || *s1 <= 0 || *s2 < 0) return std::nullopt;
    return RealDecomposition{n, *s1, *s2};
  };

  for (int k = 0; k <= window; ++k) {
    if (auto hit = try_n(1 + k)) return *hit;
    if (k > 0) {
      if (auto hit = try_n(1 - k)) return *hit;
    }
  }
  throw NotFound("no decomposition of " + to_string(a) + " within scan window " +
                 std::to_string(window));
}

namespace {

long cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
  return (a.p - o.p) * (b.q - o.q) - (a.q - o.q) * (b.p - o.p);
}

// Andrew's monotone chain; collinear points dropped. Counterclockwise, starting
// at the lex-smallest point.
std::vector<LatticePoint> convex_hull(std::vector<LatticePoint> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<LatticePoint> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& pt : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pt) <= 0) --k;
    hull[k++] = pt;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

}  // namespace

RegionDescription region(const RootVector& a, const ExchangeParams& params) {
  RegionDescription out;
  out.a = a;
  out.params = params;
  if (is_imaginary_root(a, params)) {
    out.kind = RegionKind::kCurved;
    return out;
  }
  const RealDecomposition dec = real_decompose(a, params);
  const DenomVector dn = denominator_vector(dec.n, params);
  const DenomVector dn1 = denominator_vector(dec.n + 1, params);
  // T_n has vertices 0, ([d''_n]_+, 0), (0, [d'_n]_+) in (p, q) coordinates.
  const std::vector<LatticePoint> tn{{0, 0}, {clip(dn.d2), 0}, {0, clip(dn.d1)}};
  const std::vector<LatticePoint> tn1{{0, 0}, {clip(dn1.d2), 0}, {0, clip(dn1.d1)}};
  std::vector<LatticePoint> sums;
  for (const auto& x : tn) {
    for (const auto& y : tn1) {
      sums.push_back({dec.s1 * x.p + dec.s2 * y.p, dec.s1 * x.q + dec.s2 * y.q});
    }
  }
  out.vertices = convex_hull(std::move(sums));
  switch (out.vertices.size()) {
    case 1: out.kind = RegionKind::kPoint; break;
    case 2:
      out.kind = out.vertices[0].q == out.vertices[1].q ? RegionKind::kSegmentHorizontal
                                                        : RegionKind::kSegmentVertical;
      break;
    case 3: out.kind = RegionKind::kTriangle; break;
    case 4: out.kind = RegionKind::kQuadrilateral; break;
    default:
      throw MalformedSupport("region of " + to_string(a) + " has " +
                             std::to_string(out.vertices.size()) + " vertices");
  }
  return out;
}

bool region_contains(const RegionDescription& r, long p, long q) {
  const LatticePoint pt{p, q};
  switch (r.kind) {
    case RegionKind::kCurved:
      return p >= 0 && q >= 0 && d_value(p, q, r.a, r.params) >= 0;
    case RegionKind::kPoint:
      return pt == r.vertices.front();
    case RegionKind::kSegmentHorizontal:
    case RegionKind::kSegmentVertical: {
      const auto& x = r.vertices[0];
      const auto& y = r.vertices[1];
      return cross(x, y, pt) == 0 && std::min(x.p, y.p) <= p && p <= std::max(x.p, y.p) &&
             std::min(x.q, y.q) <= q && q <= std::max(x.q, y.q);
    }
    default: {
      const auto& v = r.vertices;
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (cross(v[i], v[(i + 1) % v.size()], pt) < 0) return false;
      }
      return true;
    }
  }
}

bool region_contains(const RootVector& a, long p, long q, const ExchangeParams& params) {
  return region_contains(region(a, params), p, q);
}

void to_json(nlohmann::json& j, const RegionDescription& r) {
  j = nlohmann::json{{"kind", to_string(r.kind)},
                     {"a", {r.a.a1, r.a.a2}},
                     {"b", r.params.b},
                     {"c", r.params.c}};
  auto verts = nlohmann::json::array();
  for (const auto& v : r.vertices) verts.push_back({v.p, v.q});
  j["vertices"] = verts;
}

}  // namespace rank2
