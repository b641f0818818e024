#include "rank2/laurent.hpp"

#include <cctype>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "rank2/errors.hpp"

namespace rank2 {

LaurentPoly::LaurentPoly(long constant) {
  if (constant != 0) terms_.emplace(0, Integer(constant));
}

LaurentPoly::LaurentPoly(const Integer& constant) {
  if (constant != 0) terms_.emplace(0, constant);
}

LaurentPoly::LaurentPoly(std::initializer_list<std::pair<int, long>> terms) {
  for (const auto& [e, c] : terms) add_term(e, Integer(c));
}

LaurentPoly LaurentPoly::monomial(int exponent, const Integer& coeff) {
  LaurentPoly f;
  if (coeff != 0) f.terms_.emplace(exponent, coeff);
  return f;
}

int LaurentPoly::min_degree() const {
  if (terms_.empty()) throw std::domain_error("min_degree of zero polynomial");
  return terms_.begin()->first;
}

int LaurentPoly::max_degree() const {
  if (terms_.empty()) throw std::domain_error("max_degree of zero polynomial");
  return terms_.rbegin()->first;
}

Integer LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

bool LaurentPoly::is_unit() const {
  return terms_.size() == 1 && abs(terms_.begin()->second) == 1;
}

void LaurentPoly::add_term(int exponent, const Integer& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.size() == 1 && b.size() == 1) {
    const auto& [ea, ca] = *a.terms_.begin();
    const auto& [eb, cb] = *b.terms_.begin();
    return LaurentPoly::monomial(ea + eb, ca * cb);
  }
  // Dense accumulation over the exponent range of the product.
  const int lo = a.min_degree() + b.min_degree();
  const int hi = a.max_degree() + b.max_degree();
  std::vector<Integer> acc(static_cast<std::size_t>(hi - lo + 1));
  std::vector<bool> touched(acc.size(), false);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      const auto idx = static_cast<std::size_t>(ea + eb - lo);
      mpz_addmul(acc[idx].get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
      touched[idx] = true;
    }
  }
  LaurentPoly out;
  auto hint = out.terms_.end();
  for (std::size_t i = 0; i < acc.size(); ++i) {
    if (touched[i] && acc[i] != 0) {
      hint = out.terms_.emplace_hint(hint, static_cast<int>(i) + lo, std::move(acc[i]));
      ++hint;
    }
  }
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  if (k == 0) return *this;
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + k, c);
  return out;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.begin(), -e, c);
  return out;
}

LaurentPoly LaurentPoly::positive_part() const {
  LaurentPoly out;
  for (auto it = terms_.upper_bound(0); it != terms_.end(); ++it) {
    out.terms_.emplace_hint(out.terms_.end(), it->first, it->second);
  }
  return out;
}

bool LaurentPoly::is_bar_invariant() const { return bar() == *this; }

LaurentPoly LaurentPoly::substitute_power(int r) const {
  if (r < 1) throw std::invalid_argument("substitute_power: r must be >= 1");
  if (r == 1) return *this;
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e * r, c);
  return out;
}

LaurentPoly LaurentPoly::extract_power(int r) const {
  if (r < 1) throw std::invalid_argument("extract_power: r must be >= 1");
  if (r == 1) return *this;
  LaurentPoly out;
  for (const auto& [e, c] : terms_) {
    if (e % r != 0) {
      throw NonDivisibleExponent("exponent " + std::to_string(e) + " of " + to_string() +
                                 " is not a multiple of " + std::to_string(r));
    }
    out.terms_.emplace_hint(out.terms_.end(), e / r, c);
  }
  return out;
}

LaurentPoly LaurentPoly::divide_by_unit(const LaurentPoly& unit) const {
  if (!unit.is_unit()) throw InexactDivision("divisor " + unit.to_string() + " is not a unit");
  const auto& [k, sign] = *unit.terms_.begin();
  LaurentPoly out = shifted(-k);
  return sign < 0 ? -out : out;
}

Integer LaurentPoly::at_one() const {
  Integer s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

std::string LaurentPoly::to_string(const std::string& var, bool ascending) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  auto emit = [&](int e, const Integer& c) {
    Integer mag = abs(c);
    if (c < 0) {
      os << '-';
    } else if (!first) {
      os << '+';
    }
    first = false;
    if (e == 0) {
      os << mag.get_str();
      return;
    }
    if (mag != 1) os << mag.get_str();
    os << var;
    if (e != 1) os << '^' << e;
  };
  if (ascending) {
    for (const auto& [e, c] : terms_) emit(e, c);
  } else {
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) emit(it->first, it->second);
  }
  return os.str();
}

namespace {

// Coefficients of the ordinary Gaussian binomial in q = t^2, index j is the
// coefficient of q^j, 0 <= j <= k(n-k).
const std::vector<Integer>& ordinary_gaussian(int n, int k) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<Integer>> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find({n, k}); it != cache.end()) return it->second;

  // Row-by-row Pascal recursion G(m,j) = G(m-1,j-1) + q^j G(m-1,j).
  std::vector<std::vector<Integer>> row(static_cast<std::size_t>(k + 1));
  row[0] = {1};
  for (int m = 1; m <= n; ++m) {
    for (int j = std::min(m, k); j >= 1; --j) {
      const auto& left = row[static_cast<std::size_t>(j - 1)];
      const auto& mid = row[static_cast<std::size_t>(j)];
      std::vector<Integer> next(static_cast<std::size_t>(j * (m - j) + 1));
      for (std::size_t i = 0; i < left.size() && i < next.size(); ++i) next[i] += left[i];
      for (std::size_t i = 0; i < mid.size(); ++i) {
        const std::size_t idx = i + static_cast<std::size_t>(j);
        if (idx < next.size()) next[idx] += mid[i];
      }
      row[static_cast<std::size_t>(j)] = std::move(next);
    }
  }
  return cache.emplace(std::pair{n, k}, std::move(row[static_cast<std::size_t>(k)])).first->second;
}

}  // namespace

LaurentPoly gauss_binomial(int n, int k, int scale) {
  if (scale < 1) throw std::invalid_argument("gauss_binomial: scale must be >= 1");
  if (n < 0 || k < 0 || k > n) return {};
  k = std::min(k, n - k);
  const auto& q = ordinary_gaussian(n, k);
  const int top = k * (n - k);
  LaurentPoly out;
  for (int j = 0; j <= top; ++j) out.add_term((2 * j - top) * scale, q[static_cast<std::size_t>(j)]);
  return out;
}

LaurentPoly parse_laurent(const std::string& text, const std::string& var) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) throw std::invalid_argument("empty polynomial");
  auto fail = [&]() { throw std::invalid_argument("cannot parse polynomial '" + text + "'"); };
  LaurentPoly out;
  std::size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      fail();
    }
    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    const bool has_digits = j > i;
    Integer coeff = has_digits ? Integer(s.substr(i, j - i)) : Integer(1);
    i = j;
    int exponent = 0;
    if (s.compare(i, var.size(), var) == 0) {
      i += var.size();
      exponent = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::size_t k = i;
        if (k < s.size() && (s[k] == '-' || s[k] == '+')) ++k;
        const std::size_t digits = k;
        while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
        if (k == digits) fail();
        exponent = std::stoi(s.substr(i, k - i));
        i = k;
      }
    } else if (!has_digits) {
      fail();
    }
    out.add_term(exponent, sign * coeff);
  }
  return out;
}

void to_json(nlohmann::json& j, const LaurentPoly& f) {
  j = nlohmann::json::array();
  for (const auto& [e, c] : f.terms()) j.push_back({e, c.get_str()});
}

void from_json(const nlohmann::json& j, LaurentPoly& f) {
  f = LaurentPoly{};
  for (const auto& pair : j) {
    f.add_term(pair.at(0).get<int>(), Integer(pair.at(1).get<std::string>()));
  }
}

}  // namespace rank2
