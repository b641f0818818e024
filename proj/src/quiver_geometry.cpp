#include "rank2/quiver_geometry.hpp"

#include <algorithm>

#include "rank2/errors.hpp"

namespace rank2 {

bool is_l_dominant(const DimV& v, const WeightW& w, int r) {
  return w.w1 - v.v1 + r * v.v2 >= 0 && w.w1p - v.v1 >= 0 && w.w2 - v.v2 >= 0 &&
         w.w2p - v.v2 + r * v.v1 >= 0;
}

std::vector<DimV> dom_enumerate(const WeightW& w, int r) {
  std::vector<DimV> out;
  for (int v1 = 0; v1 <= w.w1p; ++v1) {
    for (int v2 = 0; v2 <= w.w2; ++v2) {
      if (is_l_dominant({v1, v2}, w, r)) out.push_back({v1, v2});
    }
  }
  return out;
}

std::array<long, 4> cq(const DimV& v, int r) {
  return {static_cast<long>(v.v1) - static_cast<long>(r) * v.v2, v.v1, v.v2,
          static_cast<long>(v.v2) - static_cast<long>(r) * v.v1};
}

WeightW wperp(const WeightW& w, const DimV& v0, int r) {
  const auto c = cq(v0, r);
  const long x[4] = {w.w1 - c[0], w.w1p - c[1], w.w2 - c[2], w.w2p - c[3]};
  for (long e : x) {
    if (e < 0) {
      throw NegativeEntry("w - C_q v0 has a negative entry for w = " + to_string(w) +
                          ", v0 = " + to_string(v0));
    }
  }
  return {static_cast<int>(x[0]), static_cast<int>(x[1]), static_cast<int>(x[2]),
          static_cast<int>(x[3])};
}

DimV vbar(const DimV& v, const WeightW& w, int r) {
  return {std::min({v.v1, w.w1p, w.w1 + r * v.v2, w.w1 + r * w.w2}),
          std::min({v.v2, w.w2, w.w2p + r * v.v1, w.w2p + r * w.w1p})};
}

bool nonempty_f(const DimV& v, const WeightW& w, int r) {
  return v.v1 >= 0 && v.v1 <= w.w1p && v.v2 >= 0 && v.v2 <= w.w2p + r * v.v1;
}

long d_dim(const DimV& v, const WeightW& w, int r) {
  const long v1 = v.v1, v2 = v.v2;
  return -v1 * v1 + r * v1 * v2 - v2 * v2 + v1 * w.w1p + v2 * w.w2p;
}

long d_tilde(const DimV& v, const WeightW& w, int r) {
  return d_dim(v, w, r) + static_cast<long>(w.w1) * v.v1 + static_cast<long>(w.w2) * v.v2;
}

Dimensions dims(const DimV& v, const WeightW& w, int r) {
  if (!nonempty_f(v, w, r)) {
    throw EmptyVariety("F is empty for v = " + to_string(v) + ", w = " + to_string(w));
  }
  Dimensions out;
  out.d = d_dim(v, w, r);
  out.dTilde = d_tilde(v, w, r);
  out.dimE = d_tilde(vbar(v, w, r), w, r);
  if (v.v1 <= w.w1p && v.v2 <= w.w2) {
    const long v1 = v.v1, v2 = v.v2;
    out.dimG = v1 * (w.w1p - v1) + v2 * (w.w2 - v2);
    out.dimGTilde = *out.dimG + w.w1 * v1 + w.w2p * v2 + r * v1 * v2;
  }
  return out;
}

DimV swap(const DimV& v) { return {v.v2, v.v1}; }

WeightW swap(const WeightW& w) { return {w.w2p, w.w2, w.w1p, w.w1}; }

namespace {

long f_value(const DimV& v, const WeightW& w, int r) {
  const long v1 = v.v1, v2 = v.v2;
  return -v1 * v1 + r * v1 * v2 - v2 * v2 + v1 * (w.w1p - w.w1) + v2 * (w.w2p - w.w2);
}

Grassmannian grassmannian(long k, long n) {
  if (k < 0 || n < 0 || k > n) {
    throw OutOfRange("Gr(" + std::to_string(k) + "," + std::to_string(n) + ") is empty");
  }
  return {k, n};
}

}  // namespace

FGValues fg_values(const DimV& v, const WeightW& w, int r) {
  const long v1 = v.v1, v2 = v.v2;
  return {f_value(v, w, r), f_value(swap(v), swap(w), r),
          -v1 * v1 - r * v1 * v2 - v2 * v2 + v1 * (w.w1p - w.w1) + v2 * (w.w2 - w.w2p)};
}

std::array<Grassmannian, 2> pi_fiber(const DimV& v, const WeightW& w, const DimV& vPrime, int r) {
  return {grassmannian(v.v1 - vPrime.v1, w.w1p - vPrime.v1),
          grassmannian(v.v2 - vPrime.v2, static_cast<long>(w.w2p) + r * v.v1 - vPrime.v2)};
}

Grassmannian fiber(FiberMap map, const DimV& v, const WeightW& w, int rank, int r) {
  switch (map) {
    case FiberMap::kP1: return grassmannian(v.v1 - rank, w.w1p - rank);
    case FiberMap::kP2: return grassmannian(v.v2 - rank, static_cast<long>(w.w2p) + r * v.v1 - rank);
    case FiberMap::kP2Prime: return grassmannian(v.v2 - rank, w.w2 - rank);
  }
  throw OutOfRange("unknown fiber map");
}

}  // namespace rank2
