#pragma once

// Numerical invariants of the graded quiver varieties attached to the
// skew-symmetric rank-2 algebra: l-dominance, Dom(w), v-bar, C_q, the
// transversal-slice shift w -> w - C_q v0, and the dimension formulas.

#include <array>
#include <optional>
#include <vector>

#include "rank2/params.hpp"

namespace rank2 {

struct Dimensions {
  long d = 0;
  long dTilde = 0;
  long dimE = 0;
  /// Only defined when v1 <= w'1 and v2 <= w2.
  std::optional<long> dimG;
  std::optional<long> dimGTilde;
};

struct FGValues {
  long f = 0;
  long fSwap = 0;
  long g = 0;
};

/// Fiber Grassmannians Gr(k, n) reported as (k, n, dim = k (n - k)).
struct Grassmannian {
  long k = 0;
  long n = 0;
  long dim() const { return k * (n - k); }
};

bool is_l_dominant(const DimV& v, const WeightW& w, int r);
/// Dom(w) inside the box [0, w'1] x [0, w2], sorted lex.
std::vector<DimV> dom_enumerate(const WeightW& w, int r);
/// C_q v = (v1 - r v2, v1, v2, v2 - r v1).
std::array<long, 4> cq(const DimV& v, int r);
/// w - C_q v0. Throws NegativeEntry unless v0 is in Dom(w).
WeightW wperp(const WeightW& w, const DimV& v0, int r);
DimV vbar(const DimV& v, const WeightW& w, int r);

/// 0 <= v1 <= w'1 and 0 <= v2 <= w'2 + r v1.
bool nonempty_f(const DimV& v, const WeightW& w, int r);
long d_dim(const DimV& v, const WeightW& w, int r);
long d_tilde(const DimV& v, const WeightW& w, int r);
/// Throws EmptyVariety when a precondition fails.
Dimensions dims(const DimV& v, const WeightW& w, int r);

DimV swap(const DimV& v);
WeightW swap(const WeightW& w);
FGValues fg_values(const DimV& v, const WeightW& w, int r);

enum class FiberMap { kP1, kP2, kP2Prime };

/// Fiber of pi over the stratum vPrime: Gr(v1 - v'1, w'1 - v'1) and
/// Gr(v2 - v'2, w'2 + r v1 - v'2). Throws OutOfRange.
std::array<Grassmannian, 2> pi_fiber(const DimV& v, const WeightW& w, const DimV& vPrime, int r);
/// Fibers of p1 (over rank s), p2 and p'2 (over rank t). Throws OutOfRange.
Grassmannian fiber(FiberMap map, const DimV& v, const WeightW& w, int rank, int r);

}  // namespace rank2
