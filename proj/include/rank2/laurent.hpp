#pragma once

// Exact Laurent polynomials in one central variable over Z.
//
// The same type is used for the quantum parameter v of the quantum torus and
// for the shift variable t of the quiver-variety side; the two are related by
// t = v^r (see substitute_power / extract_power).

#include <gmpxx.h>

#include <compare>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>

#include <json.hpp>

namespace rank2 {

using Integer = mpz_class;

class LaurentPoly {
 public:
  using TermMap = std::map<int, Integer>;

  LaurentPoly() = default;
  LaurentPoly(long constant);  // NOLINT: implicit on purpose, 1 and 0 read naturally
  explicit LaurentPoly(const Integer& constant);
  /// Builds from (exponent, coefficient) pairs; repeated exponents are summed.
  LaurentPoly(std::initializer_list<std::pair<int, long>> terms);

  static LaurentPoly monomial(int exponent, const Integer& coeff = 1);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Lowest / highest exponent. Throws std::domain_error on zero.
  int min_degree() const;
  int max_degree() const;
  Integer coeff(int exponent) const;

  /// True iff the value is +-v^k for some k.
  bool is_unit() const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

  /// Adds coeff * v^exponent in place.
  void add_term(int exponent, const Integer& coeff);

  /// Multiplies by v^k.
  LaurentPoly shifted(int k) const;
  /// f(v) -> f(v^{-1}).
  LaurentPoly bar() const;
  /// Keeps only the terms with strictly positive exponent.
  LaurentPoly positive_part() const;
  bool is_bar_invariant() const;

  /// f(t) -> f(v^r).
  LaurentPoly substitute_power(int r) const;
  /// Inverse of substitute_power; throws NonDivisibleExponent.
  LaurentPoly extract_power(int r) const;

  /// Exact division by a unit +-v^k. Throws InexactDivision otherwise.
  LaurentPoly divide_by_unit(const LaurentPoly& unit) const;

  /// Value at v = 1.
  Integer at_one() const;

  /// Human-readable form, e.g. "v^6+1+v^-6". Descending exponents by
  /// default; "1+2t^2+t^4" style with ascending = true.
  std::string to_string(const std::string& var = "v", bool ascending = false) const;

 private:
  TermMap terms_;
};

/// Balanced Gaussian binomial [n, k] in t, evaluated at t = v^scale.
/// Zero unless 0 <= k <= n. Bar-invariant with support in
/// {-k(n-k), ..., k(n-k)} (step 2) times scale.
LaurentPoly gauss_binomial(int n, int k, int scale = 1);

/// Parses the to_string format ("v^6+1+v^-6", "1+2t^2", "-3v", "0").
/// Whitespace is ignored. Throws std::invalid_argument on malformed input.
LaurentPoly parse_laurent(const std::string& text, const std::string& var = "v");

/// Free-function spellings of the member operations.
inline LaurentPoly lp_bar(const LaurentPoly& f) { return f.bar(); }
inline LaurentPoly lp_substitute_power(const LaurentPoly& f, int r) { return f.substitute_power(r); }
inline LaurentPoly lp_extract_power(const LaurentPoly& f, int r) { return f.extract_power(r); }

/// JSON: [[exponent, "coefficient"], ...] sorted by exponent ascending.
void to_json(nlohmann::json& j, const LaurentPoly& f);
void from_json(const nlohmann::json& j, LaurentPoly& f);

}  // namespace rank2
