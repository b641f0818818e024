#include "rank2/qtorus.hpp"

#include <sstream>
#include <stdexcept>

#include "rank2/errors.hpp"

namespace rank2 {

TorusElement::TorusElement(long constant) {
  if (constant != 0) terms_.emplace(Exponent{0, 0}, LaurentPoly(constant));
}

TorusElement TorusElement::monomial(Exponent e, const LaurentPoly& coeff) {
  TorusElement out;
  if (!coeff.is_zero()) out.terms_.emplace(e, coeff);
  return out;
}

LaurentPoly TorusElement::coeff(Exponent e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? LaurentPoly{} : it->second;
}

const std::pair<const Exponent, LaurentPoly>& TorusElement::leading() const {
  if (terms_.empty()) throw std::domain_error("leading term of zero torus element");
  return *terms_.rbegin();
}

bool TorusElement::is_pointed() const { return !terms_.empty() && leading().second.is_unit(); }

Exponent TorusElement::min_exponent() const {
  if (terms_.empty()) throw std::domain_error("min_exponent of zero torus element");
  Exponent lo = terms_.begin()->first;
  for (const auto& [e, c] : terms_) lo = {std::min(lo.e1, e.e1), std::min(lo.e2, e.e2)};
  return lo;
}

Exponent TorusElement::max_exponent() const {
  if (terms_.empty()) throw std::domain_error("max_exponent of zero torus element");
  Exponent hi = terms_.begin()->first;
  for (const auto& [e, c] : terms_) hi = {std::max(hi.e1, e.e1), std::max(hi.e2, e.e2)};
  return hi;
}

void TorusElement::add_term(Exponent e, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TorusElement& TorusElement::operator+=(const TorusElement& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

TorusElement& TorusElement::operator-=(const TorusElement& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

TorusElement TorusElement::operator-() const {
  TorusElement out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

TorusElement operator*(const TorusElement& a, const TorusElement& b) {
  TorusElement out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      out.add_term(ea + eb, (ca * cb).shifted(twist(ea, eb)));
    }
  }
  return out;
}

TorusElement TorusElement::scaled(const LaurentPoly& c) const {
  TorusElement out;
  if (c.is_zero()) return out;
  for (const auto& [e, coeff] : terms_) out.terms_.emplace_hint(out.terms_.end(), e, coeff * c);
  return out;
}

std::string TorusElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << '(' << c.to_string() << ")*X^(" << e.e1 << ',' << e.e2 << ')';
  }
  return os.str();
}

TorusElement torus_mul(const TorusElement& f, const TorusElement& g) { return f * g; }

TorusElement torus_bar(const TorusElement& f) {
  TorusElement out;
  for (const auto& [e, c] : f.terms()) out.add_term(e, c.bar());
  return out;
}

TorusElement torus_pow(const TorusElement& f, int n) {
  if (n < 0) throw std::invalid_argument("torus_pow: negative exponent");
  TorusElement result(1);
  TorusElement base = f;
  // Powers of a single element commute, so square-and-multiply is exact.
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

namespace {

enum class Side { kRight, kLeft };

TorusElement divide(const TorusElement& f, const TorusElement& g, Side side) {
  if (g.is_zero()) throw InexactDivision("division by zero");
  if (!g.is_pointed()) throw InexactDivision("divisor is not pointed: " + g.to_string());
  if (f.is_zero()) return {};

  const Exponent f_lo = f.min_exponent();
  const Exponent f_hi = f.max_exponent();
  const Exponent g_lo = g.min_exponent();
  const Exponent g_hi = g.max_exponent();
  const Exponent box_lo = f_lo - g_hi;
  const Exponent box_hi = f_hi - g_lo;

  const auto& [lead_e, lead_c] = g.leading();
  TorusElement rest = f;
  TorusElement quotient;
  while (!rest.is_zero()) {
    const auto [e, c] = rest.leading();
    const Exponent m = e - lead_e;
    if (m.e1 < box_lo.e1 || m.e2 < box_lo.e2 || m.e1 > box_hi.e1 || m.e2 > box_hi.e2) {
      throw InexactDivision("quotient term X^(" + std::to_string(m.e1) + "," +
                            std::to_string(m.e2) + ") leaves the admissible box");
    }
    const int tw = side == Side::kRight ? twist(m, lead_e) : twist(lead_e, m);
    const LaurentPoly q = c.divide_by_unit(lead_c.shifted(tw));
    const TorusElement term = TorusElement::monomial(m, q);
    quotient.add_term(m, q);
    rest -= side == Side::kRight ? term * g : g * term;
  }
  return quotient;
}

}  // namespace

TorusElement torus_div_right(const TorusElement& f, const TorusElement& g) {
  return divide(f, g, Side::kRight);
}

TorusElement torus_div_left(const TorusElement& f, const TorusElement& g) {
  return divide(f, g, Side::kLeft);
}

ClassicalPoly torus_specialize_classical(const TorusElement& f) {
  ClassicalPoly out;
  for (const auto& [e, c] : f.terms()) {
    Integer value = c.at_one();
    if (value != 0) out.emplace(e, value);
  }
  return out;
}

ClassicalPoly classical_add(const ClassicalPoly& a, const ClassicalPoly& b) {
  ClassicalPoly out = a;
  for (const auto& [e, c] : b) {
    out[e] += c;
    if (out[e] == 0) out.erase(e);
  }
  return out;
}

ClassicalPoly classical_mul(const ClassicalPoly& a, const ClassicalPoly& b) {
  ClassicalPoly out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) out[ea + eb] += ca * cb;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

ClassicalPoly classical_pow(const ClassicalPoly& a, int n) {
  ClassicalPoly result{{Exponent{0, 0}, Integer(1)}};
  for (int i = 0; i < n; ++i) result = classical_mul(result, a);
  return result;
}

void to_json(nlohmann::json& j, const TorusElement& f) {
  j = nlohmann::json::array();
  for (const auto& [e, c] : f.terms()) {
    nlohmann::json coeff;
    to_json(coeff, c);
    j.push_back({{"e1", e.e1}, {"e2", e.e2}, {"coeff", coeff}});
  }
}

void from_json(const nlohmann::json& j, TorusElement& f) {
  f = TorusElement{};
  for (const auto& item : j) {
    LaurentPoly c;
    from_json(item.at("coeff"), c);
    f.add_term(Exponent{item.at("e1").get<int>(), item.at("e2").get<int>()}, c);
  }
}

}  // namespace rank2
