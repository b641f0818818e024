#pragma once

#include <compare>
#include <string>

#include "rank2/errors.hpp"

namespace rank2 {

/// Exchange exponents (b, c) of A_v(b, c). b governs odd, c even mutations.
struct ExchangeParams {
  int b = 1;
  int c = 1;

  ExchangeParams() = default;
  ExchangeParams(int b_, int c_) : b(b_), c(c_) {
    if (b < 1 || c < 1) {
      throw PreconditionViolated("exchange exponents must be positive, got (" + std::to_string(b) +
                                 "," + std::to_string(c) + ")");
    }
  }
  static ExchangeParams skew(int r) { return {r, r}; }

  bool skew_symmetric() const { return b == c; }
  /// The common value r = b = c. Throws unless skew-symmetric.
  int r() const {
    if (!skew_symmetric()) throw PreconditionViolated("parameters are not skew-symmetric");
    return b;
  }
  /// Exponent of the exchange relation X_{m+1} X_{m-1} = v^e X_m^e + 1.
  int exchange_exponent(int m) const { return (m % 2 != 0) ? b : c; }

  friend auto operator<=>(const ExchangeParams&, const ExchangeParams&) = default;
};

/// Index a = (a1, a2) of a standard monomial / triangular basis element.
struct RootVector {
  int a1 = 0;
  int a2 = 0;
  friend auto operator<=>(const RootVector&, const RootVector&) = default;
  RootVector operator+(const RootVector& o) const { return {a1 + o.a1, a2 + o.a2}; }
  RootVector operator-(const RootVector& o) const { return {a1 - o.a1, a2 - o.a2}; }
  /// Componentwise partial order.
  bool leq(const RootVector& o) const { return a1 <= o.a1 && a2 <= o.a2; }
};

/// Framing dimensions w = (w1, w'1, w2, w'2).
struct WeightW {
  int w1 = 0;
  int w1p = 0;
  int w2 = 0;
  int w2p = 0;
  friend auto operator<=>(const WeightW&, const WeightW&) = default;
};

/// Dimension vector v = (v1, v2).
struct DimV {
  int v1 = 0;
  int v2 = 0;
  friend auto operator<=>(const DimV&, const DimV&) = default;
  DimV operator-(const DimV& o) const { return {v1 - o.v1, v2 - o.v2}; }
  bool leq(const DimV& o) const { return v1 <= o.v1 && v2 <= o.v2; }
};

inline int pos(int x) { return x > 0 ? x : 0; }

inline std::string to_string(const RootVector& a) {
  return "(" + std::to_string(a.a1) + "," + std::to_string(a.a2) + ")";
}

inline std::string to_string(const DimV& v) {
  return "(" + std::to_string(v.v1) + "," + std::to_string(v.v2) + ")";
}

inline std::string to_string(const WeightW& w) {
  return "(" + std::to_string(w.w1) + "," + std::to_string(w.w1p) + "," + std::to_string(w.w2) +
         "," + std::to_string(w.w2p) + ")";
}

}  // namespace rank2
