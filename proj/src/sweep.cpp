#include "rank2/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <stdexcept>
#include <thread>

#include "rank2/bbdg_kl.hpp"
#include "rank2/cluster_basis.hpp"
#include "rank2/quiver_geometry.hpp"
#include "rank2/support_region.hpp"

namespace rank2 {

std::string to_string(Check c) {
  switch (c) {
    case Check::kSupport: return "support";
    case Check::kSymmetry: return "symmetry";
    case Check::kUnimodality: return "unimodality";
    case Check::kSigma: return "sigma";
    case Check::kSumAP: return "sumAP";
    case Check::kKLTables: return "kl-tables";
  }
  return "unknown";
}

Check parse_check(const std::string& name) {
  for (Check c : {Check::kSupport, Check::kSymmetry, Check::kUnimodality, Check::kSigma,
                  Check::kSumAP, Check::kKLTables}) {
    if (name == to_string(c)) return c;
  }
  throw std::invalid_argument("unknown check '" + name + "'");
}

std::set<Check> parse_checks(const std::vector<std::string>& names) {
  std::set<Check> out;
  for (const auto& item : names) {
    std::size_t start = 0;
    while (start <= item.size()) {
      const std::size_t comma = item.find(',', start);
      const std::string name = item.substr(start, comma == std::string::npos ? std::string::npos
                                                                             : comma - start);
      if (name == "all") {
        out.insert({Check::kSupport, Check::kSymmetry, Check::kUnimodality, Check::kSigma,
                    Check::kSumAP, Check::kKLTables});
      } else if (!name.empty()) {
        out.insert(parse_check(name));
      }
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  return out;
}

void SweepConfig::validate() const {
  if (bRange.lo < 1 || cRange.lo < 1 || bRange.hi < bRange.lo || cRange.hi < cRange.lo) {
    throw std::invalid_argument("b and c ranges must be nonempty and positive");
  }
  if (normBound < 1 || wBound < 1) throw std::invalid_argument("bounds must be positive");
  if (normBound > 64) throw std::invalid_argument("norm bound exceeds the root cap 64");
  if (checks.empty()) throw std::invalid_argument("no checks selected");
  if (parallelism < 1) throw std::invalid_argument("parallelism must be >= 1");
  for (int r : rList) {
    if (r < 1) throw std::invalid_argument("r values must be positive");
  }
}

std::string coefficient_shape_violation(const LaurentPoly& e, long D, int r) {
  if (e.is_zero()) return "coefficient is zero";
  if (!e.is_bar_invariant()) return "not bar-invariant";
  if (e.max_degree() != D) return "top degree " + std::to_string(e.max_degree()) + " != D";
  if (e.coeff(static_cast<int>(D)) != 1) return "top coefficient is not 1";
  const long step = 2L * r;
  for (const auto& [i, c] : e.terms()) {
    if (c <= 0) return "nonpositive coefficient at v^" + std::to_string(i);
    if ((i + D) % step != 0) return "unexpected exponent " + std::to_string(i);
  }
  for (long i = -D; i + step <= D; i += step) {
    const Integer lo = e.coeff(static_cast<int>(i));
    const Integer hi = e.coeff(static_cast<int>(i + step));
    if (lo == 0 || hi == 0) return "gap in support near v^" + std::to_string(i);
    if (i + step <= 0 && lo > hi) return "not increasing at v^" + std::to_string(i);
    if (i >= 0 && lo < hi) return "not decreasing at v^" + std::to_string(i);
    if (i < 0 && i + step > 0 && lo != hi) return "middle pair differs at v^" + std::to_string(i);
  }
  return {};
}

namespace {

struct TaskResult {
  std::string check;
  long cases = 0;
  std::vector<SweepFailure> failures;
  double seconds = 0;
};

using Task = std::function<TaskResult()>;

std::string params_label(const ExchangeParams& p) {
  return "b=" + std::to_string(p.b) + ",c=" + std::to_string(p.c);
}

std::string point_label(long p, long q) {
  return "(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

std::vector<RootVector> roots_within(int bound) {
  std::vector<RootVector> out;
  for (int a1 = -bound; a1 <= bound; ++a1) {
    for (int a2 = -bound; a2 <= bound; ++a2) {
      if (std::abs(a1) + std::abs(a2) <= bound) out.push_back({a1, a2});
    }
  }
  return out;
}

LaurentPoly coefficient(const ECoefficients& e, int p, int q) {
  auto it = e.find({p, q});
  return it == e.end() ? LaurentPoly{} : it->second;
}

// Wraps a body so that library errors become failures rather than aborting
// the sweep.
TaskResult guarded(const std::string& check, const std::string& params, const std::string& root,
                   const std::function<void(TaskResult&)>& body) {
  TaskResult out;
  out.check = check;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& ex) {
    out.failures.push_back({check, params, root, "", "no error", ex.what()});
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

void support_task(const ExchangeParams& params, const RootVector& a, TaskResult& out) {
  const std::string pl = params_label(params);
  const ECoefficients e = e_coefficients(a, params);
  const RegionDescription reg = region(a, params);
  const bool imaginary = reg.kind == RegionKind::kCurved;
  // Degrees are pinned down for every real root and for b = c.
  const bool degree_known = !imaginary || params.skew_symmetric();
  for (int p = 0; p <= pos(a.a2); ++p) {
    for (int q = 0; q <= pos(a.a1); ++q) {
      ++out.cases;
      const LaurentPoly c = coefficient(e, p, q);
      const bool inside = region_contains(reg, p, q);
      if (c.is_zero() == inside) {
        out.failures.push_back({"support", pl, to_string(a), point_label(p, q),
                                inside ? "nonzero" : "zero", c.to_string()});
        continue;
      }
      if (!c.is_zero() && degree_known) {
        const long D = d_value(p, q, a, params);
        if (c.max_degree() != D) {
          out.failures.push_back({"support", pl, to_string(a), point_label(p, q),
                                  "deg " + std::to_string(D), "deg " + std::to_string(c.max_degree())});
        }
      }
    }
  }
}

void symmetry_task(const ExchangeParams& params, const RootVector& a, bool shape, TaskResult& out) {
  const std::string check = shape ? "unimodality" : "symmetry";
  const std::string pl = params_label(params);
  for (const auto& [pq, c] : e_coefficients(a, params)) {
    ++out.cases;
    const long D = d_value(pq.first, pq.second, a, params);
    std::string why;
    if (shape) {
      why = coefficient_shape_violation(c, D, params.b);
    } else if (!c.is_bar_invariant()) {
      why = "not bar-invariant";
    } else if (params.skew_symmetric() && c.coeff(static_cast<int>(D)) != 1) {
      why = "coefficient of v^D is not 1";
    }
    if (!why.empty()) {
      out.failures.push_back({check, pl, to_string(a), point_label(pq.first, pq.second), "", why});
    }
  }
}

void sigma_task(const ExchangeParams& params, const RootVector& a, TaskResult& out) {
  for (int p = 0; p <= a.a2; ++p) {
    ++out.cases;
    if (!verify_sigma_relation(a, p, params)) {
      out.failures.push_back({"sigma", params_label(params), to_string(a), "p=" + std::to_string(p),
                              "identity", "mismatch"});
    }
  }
}

std::vector<WeightW> weights_within(int bound) {
  std::vector<WeightW> out;
  for (int w1 = 0; w1 <= bound; ++w1)
    for (int w1p = 0; w1p <= bound; ++w1p)
      for (int w2 = 0; w2 <= bound; ++w2)
        for (int w2p = 0; w2p <= bound; ++w2p) out.push_back({w1, w1p, w2, w2p});
  return out;
}

void sum_ap_task(const WeightW& w, int r, TaskResult& out) {
  const std::string pl = "r=" + std::to_string(r);
  for (int v1 = 0; v1 <= w.w1p; ++v1) {
    for (int v2 = 0; v2 <= w.w2p + r * v1; ++v2) {
      ++out.cases;
      const DimV v{v1, v2};
      const LaurentPoly lhs = sum_ap(v, w, r);
      const LaurentPoly rhs = closed_form(v, w, r);
      if (lhs != rhs) {
        out.failures.push_back({"sumAP", pl, to_string(w), to_string(v), rhs.to_string("t"),
                                lhs.to_string("t")});
      }
    }
  }
}

void kl_task(const WeightW& w, int r, TaskResult& out) {
  const std::string pl = "r=" + std::to_string(r);
  for (const DimV& v : dom_enumerate(w, r)) {
    ++out.cases;
    if (!kl_bounds_check(v, w, r)) {
      out.failures.push_back({"kl-tables", pl, to_string(w), to_string(v), "positivity and degree bounds",
                              p_kl(v, w, r).to_string("t", true)});
    }
  }
  const bool deg_applies = w.w1 == 0 && w.w2p == 0 &&
                           is_imaginary_root({w.w1p, w.w2}, ExchangeParams::skew(r));
  if (!deg_applies) return;
  for (int v1 = 0; v1 <= w.w1p; ++v1) {
    for (int v2 = 0; v2 <= w.w2p + r * v1; ++v2) {
      const DimV v{v1, v2};
      if (fg_values(v, w, r).f < 0) continue;
      ++out.cases;
      if (!deg_ap_bound_check(v, w, r)) {
        out.failures.push_back({"kl-tables", pl, to_string(w), to_string(v), "deg(aP) < f", "violated"});
      }
    }
  }
}

std::vector<TaskResult> run_tasks(const std::vector<Task>& tasks, int parallelism) {
  std::vector<TaskResult> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < tasks.size(); i = next++) results[i] = tasks[i]();
  };
  const int n = std::max(1, std::min<int>(parallelism, static_cast<int>(tasks.size())));
  std::vector<std::thread> pool;
  for (int i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return results;
}

}  // namespace

SweepReport verify_sweep(const SweepConfig& cfg) {
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();
  std::vector<Task> tasks;
  const auto has = [&](Check c) { return cfg.checks.count(c) > 0; };

  for (int b = cfg.bRange.lo; b <= cfg.bRange.hi; ++b) {
    for (int c = cfg.cRange.lo; c <= cfg.cRange.hi; ++c) {
      const ExchangeParams params(b, c);
      const std::string pl = params_label(params);
      for (const RootVector& a : roots_within(cfg.normBound)) {
        const bool imaginary = is_imaginary_root(a, params);
        if (has(Check::kSupport)) {
          tasks.push_back([=] {
            return guarded("support", pl, to_string(a), [&](TaskResult& r) { support_task(params, a, r); });
          });
        }
        if (imaginary && has(Check::kSymmetry)) {
          tasks.push_back([=] {
            return guarded("symmetry", pl, to_string(a),
                           [&](TaskResult& r) { symmetry_task(params, a, false, r); });
          });
        }
        if (imaginary && params.skew_symmetric() && has(Check::kUnimodality)) {
          tasks.push_back([=] {
            return guarded("unimodality", pl, to_string(a),
                           [&](TaskResult& r) { symmetry_task(params, a, true, r); });
          });
        }
        if (!imaginary && a.a2 >= 0 && has(Check::kSigma)) {
          tasks.push_back([=] {
            return guarded("sigma", pl, to_string(a), [&](TaskResult& r) { sigma_task(params, a, r); });
          });
        }
      }
    }
  }
  for (int r : cfg.rList) {
    for (const WeightW& w : weights_within(cfg.wBound)) {
      const std::string pl = "r=" + std::to_string(r);
      if (has(Check::kSumAP)) {
        tasks.push_back([=] {
          return guarded("sumAP", pl, to_string(w), [&](TaskResult& t) { sum_ap_task(w, r, t); });
        });
      }
      if (has(Check::kKLTables)) {
        tasks.push_back([=] {
          return guarded("kl-tables", pl, to_string(w), [&](TaskResult& t) { kl_task(w, r, t); });
        });
      }
    }
  }

  SweepReport report;
  for (TaskResult& res : run_tasks(tasks, cfg.parallelism)) {
    report.cases += res.cases;
    report.casesByCheck[res.check] += res.cases;
    report.secondsByCheck[res.check] += res.seconds;
    for (auto& f : res.failures) report.failures.push_back(std::move(f));
  }
  std::sort(report.failures.begin(), report.failures.end());
  report.wallSeconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

nlohmann::json report_json(const SweepReport& report, bool include_timing) {
  nlohmann::json j;
  j["cases"] = report.cases;
  j["casesByCheck"] = report.casesByCheck;
  auto failures = nlohmann::json::array();
  for (const auto& f : report.failures) {
    failures.push_back({{"check", f.check},
                        {"params", f.params},
                        {"root", f.root},
                        {"point", f.point},
                        {"expected", f.expected},
                        {"actual", f.actual}});
  }
  j["failures"] = failures;
  j["ok"] = report.ok();
  if (include_timing) {
    j["timing"] = {{"wallSeconds", report.wallSeconds}, {"secondsByCheck", report.secondsByCheck}};
  }
  return j;
}

}  // namespace rank2
