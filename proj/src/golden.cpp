#include "rank2/golden.hpp"

#include <chrono>
#include <fstream>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "rank2/bbdg_kl.hpp"
#include "rank2/cluster_basis.hpp"
#include "rank2/quiver_geometry.hpp"
#include "rank2/support_region.hpp"

#ifndef RANK2_FIXTURE_DIR
#define RANK2_FIXTURE_DIR "tests/fixtures"
#endif

namespace rank2 {

using nlohmann::json;

bool GoldenReport::ok() const {
  for (const auto& it : items) {
    if (!it.ok) return false;
  }
  return !items.empty();
}

std::vector<GoldenItem> GoldenReport::mismatches() const {
  std::vector<GoldenItem> out;
  for (const auto& it : items) {
    if (!it.ok) out.push_back(it);
  }
  return out;
}

std::filesystem::path default_fixture_dir() { return RANK2_FIXTURE_DIR; }

namespace {

json load(const std::filesystem::path& dir, const std::string& stem) {
  const auto path = dir / (stem + ".json");
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& ex) {
    throw std::runtime_error("malformed fixture " + path.string() + ": " + ex.what());
  }
}

std::string pt(long p, long q) { return "(" + std::to_string(p) + "," + std::to_string(q) + ")"; }

struct Sink {
  std::string table;
  GoldenReport* report;

  void add(const std::string& item, const std::string& expected, const std::string& actual, bool ok) {
    report->items.push_back({table, item, expected, actual, ok});
  }
  void same(const std::string& item, const std::string& expected, const std::string& actual) {
    add(item, expected, actual, expected == actual);
  }
  void poly(const std::string& item, const std::string& expected, const LaurentPoly& actual,
            const std::string& var) {
    const LaurentPoly want = parse_laurent(expected, var);
    add(item, expected, actual.to_string(var), want == actual);
  }
};

LaurentPoly coeff_at(const ECoefficients& e, long p, long q) {
  auto it = e.find({static_cast<int>(p), static_cast<int>(q)});
  return it == e.end() ? LaurentPoly{} : it->second;
}

std::string deg_string(const LaurentPoly& f) {
  return f.is_zero() ? "zero" : std::to_string(f.max_degree());
}

void coefficient_table(const json& fx, Sink& out) {
  const ExchangeParams params(fx.at("b").get<int>(), fx.at("c").get<int>());
  const RootVector a{fx.at("a")[0].get<int>(), fx.at("a")[1].get<int>()};
  const ECoefficients e = e_coefficients(a, params);

  std::set<std::pair<int, int>> listed;
  for (const auto& row : fx.at("coefficients")) {
    const int p = row.at("p"), q = row.at("q");
    listed.insert({p, q});
    out.poly("e" + pt(p, q), row.at("e").get<std::string>(), coeff_at(e, p, q), "v");
  }
  for (const auto& row : fx.at("D")) {
    const long p = row.at("p"), q = row.at("q"), D = row.at("D");
    out.same("D" + pt(p, q), std::to_string(D), std::to_string(d_value(p, q, a, params)));
    out.same("deg e" + pt(p, q), D >= 0 ? std::to_string(D) : "zero", deg_string(coeff_at(e, p, q)));
  }
  if (!fx.contains("polygon")) {
    // The printed table is complete: nothing outside it may be nonzero.
    std::string extra;
    for (const auto& [pq, c] : e) {
      if (!listed.count(pq)) extra += pt(pq.first, pq.second);
    }
    out.same("no unlisted coefficients", "", extra);
  }
}

void polygon_table(const json& fx, Sink& out) {
  const ExchangeParams params(fx.at("b").get<int>(), fx.at("c").get<int>());
  const RootVector a{fx.at("a")[0].get<int>(), fx.at("a")[1].get<int>()};
  const RegionDescription reg = region(a, params);
  std::string want, got;
  for (const auto& v : fx.at("polygon")) want += pt(v[0].get<long>(), v[1].get<long>());
  for (const auto& v : reg.vertices) got += pt(v.p, v.q);
  out.same("region vertices", want, got);

  // Support equals the lattice points of the printed polygon (convex, CCW).
  std::vector<LatticePoint> poly;
  for (const auto& v : fx.at("polygon")) poly.push_back({v[0].get<long>(), v[1].get<long>()});
  auto inside = [&](long p, long q) {
    for (std::size_t i = 0; i < poly.size(); ++i) {
      const auto& s = poly[i];
      const auto& t = poly[(i + 1) % poly.size()];
      if ((t.p - s.p) * (q - s.q) - (t.q - s.q) * (p - s.p) < 0) return false;
    }
    return true;
  };
  const ECoefficients e = e_coefficients(a, params);
  std::string bad;
  for (int p = 0; p <= pos(a.a2); ++p) {
    for (int q = 0; q <= pos(a.a1); ++q) {
      if (inside(p, q) == coeff_at(e, p, q).is_zero()) bad += pt(p, q);
    }
  }
  out.same("support equals polygon", "", bad);
}

void kl_tables(const json& fx, Sink& out) {
  for (const auto& row : fx.at("rows")) {
    const int r = row.at("r");
    const DimV v{row.at("v")[0].get<int>(), row.at("v")[1].get<int>()};
    const std::string label = "r=" + std::to_string(r) + " v=" + to_string(v);
    const LaurentPoly pm = parse_laurent(row.at("pMinus").get<std::string>(), "t");
    const LaurentPoly pk = parse_laurent(row.at("P").get<std::string>(), "t");
    const json& wj = row.at("w");

    std::vector<std::pair<WeightW, int>> cases;  // (w, shift of P_-)
    if (wj.is_string()) {
      for (int w1p = 0; w1p <= 3; ++w1p)
        for (int w2 = 0; w2 <= 3; ++w2) cases.push_back({{0, w1p, w2, 0}, 0});
    } else if (wj[2].is_string()) {
      for (int i = row.at("iMin"); i <= row.at("iMax").get<int>(); ++i) {
        cases.push_back({{wj[0].get<int>(), wj[1].get<int>(), i, wj[3].get<int>()}, -i});
      }
    } else {
      cases.push_back({{wj[0].get<int>(), wj[1].get<int>(), wj[2].get<int>(), wj[3].get<int>()}, 0});
    }
    for (const auto& [w, shift] : cases) {
      const std::string item = label + " w=" + to_string(w);
      const LaurentPoly want = pm.shifted(shift);
      const LaurentPoly got_m = p_minus(v, w, r);
      const LaurentPoly got = p_kl(v, w, r);
      out.add(item + " P_-", want.to_string("t"), got_m.to_string("t"), want == got_m);
      out.add(item + " P", pk.to_string("t", true), got.to_string("t", true), pk == got);
    }
  }
}

void a_values(const json& fx, Sink& out) {
  const int r = fx.at("r");
  const WeightW w{fx["w"][0], fx["w"][1], fx["w"][2], fx["w"][3]};
  const DimV v{fx["v"][0].get<int>(), fx["v"][1].get<int>()};
  out.same("d", std::to_string(fx.at("d").get<long>()), std::to_string(d_dim(v, w, r)));
  out.same("dTilde", std::to_string(fx.at("dTilde").get<long>()), std::to_string(d_tilde(v, w, r)));
  for (const auto& row : fx.at("rows")) {
    const DimV vp{row["vPrime"][0].get<int>(), row["vPrime"][1].get<int>()};
    const LaurentPoly a = a_poly(v, vp, w, r);
    out.poly("a v'=" + to_string(vp), row.at("a").get<std::string>(), a, "t");
    const LaurentPoly prod = a * p_minus(vp, w, r);
    const std::string want = row.at("maxDeg").is_null() ? "zero" : std::to_string(row["maxDeg"].get<long>());
    out.same("max-deg a P_- v'=" + to_string(vp), want, deg_string(prod));
  }
  LaurentPoly rhs = 1;
  for (const auto& bk : fx["sum"]["binomials"]) rhs *= gauss_binomial(bk[0], bk[1]);
  rhs = rhs.shifted(fx["sum"]["shift"].get<int>());
  const LaurentPoly lhs = sum_ap(v, w, r);
  out.add("sum a P_-", rhs.to_string("t"), lhs.to_string("t"), lhs == rhs);
}

ClassicalPoly classical_monomial(int e1, int e2, long c = 1) { return {{Exponent{e1, e2}, Integer(c)}}; }

void slice_0110(const json& fx, Sink& out) {
  const WeightW w{fx["w"][0], fx["w"][1], fx["w"][2], fx["w"][3]};
  for (int r : fx.at("r").get<std::vector<int>>()) {
    const std::string rl = "r=" + std::to_string(r);
    for (int i = 0; i <= r; ++i) {
      const LaurentPoly want = gauss_binomial(r - 1, i);
      const LaurentPoly got = a_poly({1, i}, {0, 0}, w, r);
      out.add(rl + " a_(1," + std::to_string(i) + "),0", want.to_string("t"), got.to_string("t"),
              want == got);
    }
    const ExchangeParams params = ExchangeParams::skew(r);
    const TorusElement c = triangular_basis({1, r - 1}, params);
    out.add(rl + " chi_L = C[1,r-1]", c.to_string(), chi_L(w, r).to_string(), chi_L(w, r) == c);

    // x1^-1 x2^-(r-1) (x2^r + (1 + x1^r)^(r-1))
    ClassicalPoly inner = classical_pow(classical_add(classical_monomial(0, 0), classical_monomial(r, 0)), r - 1);
    inner = classical_add(inner, classical_monomial(0, r));
    const ClassicalPoly want = classical_mul(inner, classical_monomial(-1, -(r - 1)));
    const ClassicalPoly got = torus_specialize_classical(c);
    auto str = [](const ClassicalPoly& f) {
      std::string s;
      for (const auto& [e, k] : f) s += k.get_str() + "x" + pt(e.e1, e.e2) + " ";
      return s;
    };
    out.add(rl + " classical specialization", str(want), str(got), want == got);
  }
}

const std::vector<std::string>& stems() {
  static const std::vector<std::string> s{"c34", "c28", "kl_tables", "a_values", "slice_0110"};
  return s;
}

}  // namespace

GoldenReport run_golden_table(const std::filesystem::path& dir, const std::string& stem) {
  const auto start = std::chrono::steady_clock::now();
  GoldenReport report;
  Sink sink{stem, &report};
  const json fx = load(dir, stem);
  try {
    if (stem == "c34") {
      coefficient_table(fx, sink);
    } else if (stem == "c28") {
      coefficient_table(fx, sink);
      polygon_table(fx, sink);
    } else if (stem == "kl_tables") {
      kl_tables(fx, sink);
    } else if (stem == "a_values") {
      a_values(fx, sink);
    } else if (stem == "slice_0110") {
      slice_0110(fx, sink);
    } else {
      throw std::runtime_error("unknown golden table '" + stem + "'");
    }
  } catch (const json::exception& ex) {
    throw std::runtime_error("malformed fixture " + stem + ": " + ex.what());
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

GoldenReport run_golden(const std::filesystem::path& dir) {
  GoldenReport all;
  for (const auto& stem : stems()) {
    GoldenReport one = run_golden_table(dir, stem);
    all.items.insert(all.items.end(), one.items.begin(), one.items.end());
    all.seconds += one.seconds;
  }
  return all;
}

}  // namespace rank2
