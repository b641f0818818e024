#pragma once

// The rank-2 quantum torus Z[v^{+-1}]<X1^{+-1}, X2^{+-1} : X2 X1 = v^2 X1 X2>.
//
// Elements are stored in the bar-invariant monomial basis
//   X^(a1,a2) = v^{a1 a2} X1^{a1} X2^{a2},
// in which X^(a) X^(b) = v^{a2 b1 - a1 b2} X^(a+b) and the bar involution acts
// on coefficients only.

#include <compare>
#include <map>
#include <string>

#include "rank2/laurent.hpp"

namespace rank2 {

/// Exponent pair of a torus monomial. Ordered lexicographically, e1 first.
struct Exponent {
  int e1 = 0;
  int e2 = 0;
  friend auto operator<=>(const Exponent&, const Exponent&) = default;
  Exponent operator+(const Exponent& o) const { return {e1 + o.e1, e2 + o.e2}; }
  Exponent operator-(const Exponent& o) const { return {e1 - o.e1, e2 - o.e2}; }
};

/// v-exponent picked up by X^(a) X^(b).
inline int twist(const Exponent& a, const Exponent& b) { return a.e2 * b.e1 - a.e1 * b.e2; }

class TorusElement {
 public:
  using TermMap = std::map<Exponent, LaurentPoly>;

  TorusElement() = default;
  TorusElement(long constant);  // NOLINT
  static TorusElement monomial(Exponent e, const LaurentPoly& coeff = 1);
  static TorusElement monomial(int e1, int e2, const LaurentPoly& coeff = 1) {
    return monomial(Exponent{e1, e2}, coeff);
  }
  /// Generators X_1 = X^(1,0) and X_2 = X^(0,1).
  static TorusElement x1() { return monomial(1, 0); }
  static TorusElement x2() { return monomial(0, 1); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  LaurentPoly coeff(Exponent e) const;
  LaurentPoly coeff(int e1, int e2) const { return coeff(Exponent{e1, e2}); }

  /// Largest monomial in lex order (the "leading term"). Throws on zero.
  const std::pair<const Exponent, LaurentPoly>& leading() const;
  /// True iff the leading coefficient is a unit +-v^k.
  bool is_pointed() const;

  /// Componentwise bounding box of the support. Throws on zero.
  Exponent min_exponent() const;
  Exponent max_exponent() const;

  void add_term(Exponent e, const LaurentPoly& c);

  TorusElement& operator+=(const TorusElement& o);
  TorusElement& operator-=(const TorusElement& o);
  TorusElement operator-() const;
  friend TorusElement operator+(TorusElement a, const TorusElement& b) { return a += b; }
  friend TorusElement operator-(TorusElement a, const TorusElement& b) { return a -= b; }
  friend TorusElement operator*(const TorusElement& a, const TorusElement& b);
  friend bool operator==(const TorusElement&, const TorusElement&) = default;

  /// Central scalar multiplication.
  TorusElement scaled(const LaurentPoly& c) const;

  std::string to_string() const;

 private:
  TermMap terms_;
};

TorusElement torus_mul(const TorusElement& f, const TorusElement& g);
TorusElement torus_bar(const TorusElement& f);
TorusElement torus_pow(const TorusElement& f, int n);

/// Q with Q * G == F. G must be pointed. Throws InexactDivision.
TorusElement torus_div_right(const TorusElement& f, const TorusElement& g);
/// Q with G * Q == F. G must be pointed. Throws InexactDivision.
TorusElement torus_div_left(const TorusElement& f, const TorusElement& g);

/// Commutative Laurent polynomial in x1, x2 (the image at v = 1).
using ClassicalPoly = std::map<Exponent, Integer>;

ClassicalPoly torus_specialize_classical(const TorusElement& f);
ClassicalPoly classical_mul(const ClassicalPoly& a, const ClassicalPoly& b);
ClassicalPoly classical_add(const ClassicalPoly& a, const ClassicalPoly& b);
ClassicalPoly classical_pow(const ClassicalPoly& a, int n);

/// JSON: [{"e1":..,"e2":..,"coeff":LaurentPoly-JSON}, ...] sorted lex by (e1,e2).
void to_json(nlohmann::json& j, const TorusElement& f);
void from_json(const nlohmann::json& j, TorusElement& f);

}  // namespace rank2
