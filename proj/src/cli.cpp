#include "rank2/cli.hpp"

#include <fstream>
#include <functional>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rank2/bbdg_kl.hpp"
#include "rank2/cluster_basis.hpp"
#include "rank2/errors.hpp"
#include "rank2/format.hpp"
#include "rank2/golden.hpp"
#include "rank2/quiver_geometry.hpp"
#include "rank2/support_region.hpp"
#include "rank2/sweep.hpp"

namespace rank2::cli {

namespace {

using nlohmann::json;

constexpr int kUsage = 2;
constexpr int kFailure = 1;

// Thrown for argument combinations CLI11 cannot express.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Opts {
  int b = 0, c = 0, r = 0, m = 0;
  std::vector<int> a, w, v, vPrime;
  std::string format = "json";
  std::string method = "auto";
  std::string kind = "L";
  std::string svg;
  // verify
  std::vector<int> bRange, cRange, rList{2, 3};
  int normBound = 8, wBound = 3, jobs = 1;
  std::vector<std::string> checks{"all"};
  std::string output;
  bool timing = false;
  // golden
  std::string fixtures;
  std::string table;
};

const std::vector<std::string> kFormats{"json", "csv", "latex", "ascii"};

void add_params(CLI::App* cmd, Opts& o) {
  cmd->add_option("--b", o.b, "exchange exponent b")->required()->check(CLI::PositiveNumber);
  cmd->add_option("--c", o.c, "exchange exponent c")->required()->check(CLI::PositiveNumber);
}

void add_r(CLI::App* cmd, Opts& o) {
  cmd->add_option("--r", o.r, "b = c = r")->required()->check(CLI::PositiveNumber);
}

void add_pair(CLI::App* cmd, const std::string& name, std::vector<int>& dst, const std::string& help,
              bool nonnegative) {
  auto* opt = cmd->add_option(name, dst, help)->required()->expected(2);
  if (nonnegative) opt->check(CLI::NonNegativeNumber);
}

void add_w(CLI::App* cmd, Opts& o) {
  cmd->add_option("--w", o.w, "w1 w'1 w2 w'2")->required()->expected(4)->check(CLI::NonNegativeNumber);
}

void add_format(CLI::App* cmd, Opts& o, const std::vector<std::string>& allowed) {
  cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember(allowed));
}

RootVector root(const Opts& o) { return {o.a[0], o.a[1]}; }
DimV dimv(const std::vector<int>& v) { return {v[0], v[1]}; }
WeightW weight(const Opts& o) { return {o.w[0], o.w[1], o.w[2], o.w[3]}; }

BasisMethod method(const std::string& m) {
  if (m == "kl") return BasisMethod::kKazhdanLusztig;
  if (m == "cluster") return BasisMethod::kClusterMonomial;
  return BasisMethod::kAuto;
}

void print_torus(const TorusElement& f, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << json(f).dump(2) << '\n';
  } else if (format == "csv") {
    out << torus_csv(f);
  } else if (format == "latex") {
    out << torus_latex(f);
  } else {
    out << torus_ascii(f);
  }
}

int cmd_triangular(const Opts& o, std::ostream& out) {
  const ExchangeParams params(o.b, o.c);
  const RootVector a = root(o);
  const TorusElement f = algebra(params).triangular_basis(a, method(o.method));
  if (o.format == "json") {
    out << json(f).dump(2) << '\n';
    return 0;
  }
  const ECoefficients e = e_coefficients(a, params);
  if (o.format == "csv") out << e_table_csv(e, a);
  if (o.format == "latex") out << e_table_latex(e, a);
  if (o.format == "ascii") out << e_table_ascii(e, a);
  return 0;
}

int cmd_region(const Opts& o, std::ostream& out) {
  const ExchangeParams params(o.b, o.c);
  const RootVector a = root(o);
  const RegionDescription reg = region(a, params);
  const auto [pmax, qmax] = region_window(a);
  if (o.format == "ascii") {
    out << region_ascii(reg, pmax, qmax);
  } else {
    out << json(reg).dump(2) << '\n';
  }
  if (!o.svg.empty()) {
    std::ofstream file(o.svg);
    if (!file) throw std::runtime_error("cannot write " + o.svg);
    file << region_svg(reg, pmax, qmax);
  }
  return 0;
}

int cmd_dims(const Opts& o, std::ostream& out) {
  const DimV v = dimv(o.v);
  const WeightW w = weight(o);
  const Dimensions d = dims(v, w, o.r);
  const FGValues fg = fg_values(v, w, o.r);
  json j{{"v", o.v},
         {"w", o.w},
         {"r", o.r},
         {"lDominant", is_l_dominant(v, w, o.r)},
         {"d", d.d},
         {"dTilde", d.dTilde},
         {"dimE", d.dimE},
         {"dimG", d.dimG ? json(*d.dimG) : json(nullptr)},
         {"dimGTilde", d.dimGTilde ? json(*d.dimGTilde) : json(nullptr)},
         {"f", fg.f},
         {"fSwap", fg.fSwap},
         {"g", fg.g},
         {"vbar", {vbar(v, w, o.r).v1, vbar(v, w, o.r).v2}}};
  out << j.dump(2) << '\n';
  return 0;
}

int cmd_slice(const Opts& o, std::ostream& out) {
  const SlicePoint s = slice_point(dimv(o.v), dimv(o.vPrime), weight(o), o.r);
  const WeightW& wp = s.wPerp;
  json j{{"wPerp", {wp.w1, wp.w1p, wp.w2, wp.w2p}},
         {"vPerp", {s.vPerp.v1, s.vPerp.v2}},
         {"root", {s.root.a1, s.root.a2}},
         {"p", s.p},
         {"q", s.q},
         {"a", a_poly(dimv(o.v), dimv(o.vPrime), weight(o), o.r).to_string("t")}};
  out << j.dump(2) << '\n';
  return 0;
}

int cmd_kl_poly(const Opts& o, std::ostream& out) {
  const WeightW w = weight(o);
  std::vector<DimV> vs;
  if (!o.v.empty()) {
    vs.push_back(dimv(o.v));
  } else {
    vs = dom_enumerate(w, o.r);
  }
  if (o.format == "ascii" && !o.v.empty()) {
    out << p_kl(vs[0], w, o.r).to_string("t", true) << '\n';
    return 0;
  }
  if (o.format == "json") {
    auto rows = json::array();
    for (const DimV& v : vs) {
      const KLRecord rec = kl_record(v, w, o.r);
      rows.push_back({{"v", {v.v1, v.v2}},
                      {"w", o.w},
                      {"pMinus", rec.pMinus.to_string("t")},
                      {"P", rec.pKL.to_string("t", true)}});
    }
    out << rows.dump(2) << '\n';
    return 0;
  }
  const char sep = o.format == "csv" ? ',' : '\t';
  out << "v" << sep << "w" << sep << "P_-" << sep << "P\n";
  for (const DimV& v : vs) {
    const KLRecord rec = kl_record(v, w, o.r);
    auto quoted = [&](const std::string& s) { return o.format == "csv" ? '"' + s + '"' : s; };
    out << quoted(to_string(v)) << sep << quoted(to_string(w)) << sep << rec.pMinus.to_string("t") << sep
        << rec.pKL.to_string("t", true) << '\n';
  }
  return 0;
}

IntRange range_of(const std::vector<int>& v, const char* name) {
  if (v.empty() || v.size() > 2) throw UsageError(std::string("--") + name + " takes one or two values");
  return {v.front(), v.back()};
}

int cmd_verify(const Opts& o, std::ostream& out, std::ostream& err) {
  SweepConfig cfg;
  cfg.bRange = range_of(o.bRange, "b");
  cfg.cRange = range_of(o.cRange, "c");
  cfg.normBound = o.normBound;
  cfg.wBound = o.wBound;
  cfg.rList = o.rList;
  cfg.outputPath = o.output;
  cfg.parallelism = o.jobs;
  cfg.timing = o.timing;
  try {
    cfg.checks = parse_checks(o.checks);
    cfg.validate();
  } catch (const std::invalid_argument& ex) {
    throw UsageError(ex.what());
  }
  const SweepReport report = verify_sweep(cfg);
  const std::string text = report_json(report, cfg.timing).dump(2) + "\n";
  if (cfg.outputPath.empty()) {
    out << text;
  } else {
    std::ofstream file(cfg.outputPath);
    if (!file) throw std::runtime_error("cannot write " + cfg.outputPath);
    file << text;
    out << (report.ok() ? "ok" : "FAILED") << ": " << report.cases << " cases, " << report.failures.size()
        << " failures\n";
  }
  if (!report.ok()) err << report.failures.size() << " sweep failures\n";
  return report.ok() ? 0 : kFailure;
}

int cmd_golden(const Opts& o, std::ostream& out) {
  const std::filesystem::path dir = o.fixtures.empty() ? default_fixture_dir() : std::filesystem::path(o.fixtures);
  const GoldenReport report = o.table.empty() ? run_golden(dir) : run_golden_table(dir, o.table);
  for (const auto& m : report.mismatches()) {
    out << "MISMATCH " << m.table << ' ' << m.item << "\n  expected: " << m.expected
        << "\n  computed: " << m.actual << '\n';
  }
  out << (report.ok() ? "golden ok" : "golden FAILED") << ": " << report.items.size() << " items, "
      << report.mismatches().size() << " mismatches\n";
  return report.ok() ? 0 : kFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Triangular bases of rank-2 quantum cluster algebras and quiver-variety data", "rank2"};
  app.require_subcommand(1);
  Opts o;

  auto* tri = app.add_subcommand("triangular", "triangular basis element C[a1,a2]");
  add_params(tri, o);
  add_pair(tri, "--a", o.a, "root a1 a2", false);
  tri->add_option("--method", o.method, "auto, kl or cluster")->check(CLI::IsMember({"auto", "kl", "cluster"}));
  add_format(tri, o, kFormats);

  auto* cv = app.add_subcommand("cluster-var", "cluster variable X_m");
  add_params(cv, o);
  cv->add_option("--m", o.m, "index m")->required();
  add_format(cv, o, kFormats);

  auto* st = app.add_subcommand("standard", "standard monomial M[a1,a2]");
  add_params(st, o);
  add_pair(st, "--a", o.a, "root a1 a2", false);
  add_format(st, o, kFormats);

  auto* ms = app.add_subcommand("mstar", "M*(w) for b = c = r");
  add_r(ms, o);
  add_w(ms, o);
  add_format(ms, o, kFormats);

  auto* rg = app.add_subcommand("region", "support region R(a1,a2)");
  add_params(rg, o);
  add_pair(rg, "--a", o.a, "root a1 a2", false);
  add_format(rg, o, {"json", "ascii"});
  rg->add_option("--svg", o.svg, "also write an SVG plot to this file");

  auto* dm = app.add_subcommand("dom", "Dom(w) with d, dTilde, f, fSwap, g");
  add_r(dm, o);
  add_w(dm, o);
  dm->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  auto* ds = app.add_subcommand("dims", "dimension data for (v, w)");
  add_r(ds, o);
  add_w(ds, o);
  add_pair(ds, "--v", o.v, "v1 v2", true);

  auto* sl = app.add_subcommand("slice", "transversal slice data for (v, v', w)");
  add_r(sl, o);
  add_w(sl, o);
  add_pair(sl, "--v", o.v, "v1 v2", true);
  add_pair(sl, "--vprime", o.vPrime, "v'1 v'2", true);

  auto* ap = app.add_subcommand("a-poly", "BBDG multiplicity a_{v,v';w}(t)");
  add_r(ap, o);
  add_w(ap, o);
  add_pair(ap, "--v", o.v, "v1 v2", true);
  add_pair(ap, "--vprime", o.vPrime, "v'1 v'2", true);

  auto* kl = app.add_subcommand("kl-poly", "P(v,w); all of Dom(w) as a table when --v is omitted");
  add_r(kl, o);
  add_w(kl, o);
  kl->add_option("--v", o.v, "v1 v2")->expected(2)->check(CLI::NonNegativeNumber);
  kl->add_option("--format", o.format, "ascii, csv or json")->check(CLI::IsMember({"ascii", "csv", "json"}));

  auto* bs = app.add_subcommand("bbdg-support", "whether a_{v,v';w} is nonzero, from the region");
  add_r(bs, o);
  add_w(bs, o);
  add_pair(bs, "--v", o.v, "v1 v2", true);
  add_pair(bs, "--vprime", o.vPrime, "v'1 v'2", true);

  auto* ch = app.add_subcommand("chi", "chi(M(w)) or chi(L(w))");
  add_r(ch, o);
  add_w(ch, o);
  ch->add_option("--kind", o.kind, "M or L")->check(CLI::IsMember({"M", "L"}));
  add_format(ch, o, kFormats);

  auto* vf = app.add_subcommand("verify", "property sweep over parameter ranges");
  vf->add_option("--b", o.bRange, "b or b_lo b_hi")->required()->expected(1, 2)->check(CLI::PositiveNumber);
  vf->add_option("--c", o.cRange, "c or c_lo c_hi")->required()->expected(1, 2)->check(CLI::PositiveNumber);
  vf->add_option("--norm-bound", o.normBound, "roots with |a1|+|a2| <= bound")->check(CLI::PositiveNumber);
  vf->add_option("--w-bound", o.wBound, "entries of w for sumAP and kl-tables")->check(CLI::PositiveNumber);
  vf->add_option("--r-list", o.rList, "r values for sumAP and kl-tables")->check(CLI::PositiveNumber);
  vf->add_option("--checks", o.checks, "support,symmetry,unimodality,sigma,sumAP,kl-tables or all");
  vf->add_option("--output", o.output, "write the JSON report here");
  vf->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  vf->add_flag("--timing", o.timing, "include timing in the report");

  auto* gd = app.add_subcommand("golden", "recompute the published tables and diff");
  gd->add_option("--fixtures", o.fixtures, "fixture directory");
  gd->add_option("--table", o.table, "run a single fixture")
      ->check(CLI::IsMember({"c34", "c28", "kl_tables", "a_values", "slice_0110"}));

  // Per-command default formats.
  dm->preparse_callback([&](std::size_t) { o.format = "csv"; });
  kl->preparse_callback([&](std::size_t) { o.format = "ascii"; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (tri->parsed()) return cmd_triangular(o, out);
    if (cv->parsed()) {
      print_torus(cluster_variable(o.m, ExchangeParams(o.b, o.c)), o.format, out);
      return 0;
    }
    if (st->parsed()) {
      print_torus(standard_monomial(root(o), ExchangeParams(o.b, o.c)), o.format, out);
      return 0;
    }
    if (ms->parsed()) {
      print_torus(mstar(weight(o), ExchangeParams::skew(o.r)), o.format, out);
      return 0;
    }
    if (rg->parsed()) return cmd_region(o, out);
    if (dm->parsed()) {
      if (o.format == "json") {
        out << dom_json(weight(o), o.r).dump(2) << '\n';
      } else {
        out << dom_csv(weight(o), o.r);
      }
      return 0;
    }
    if (ds->parsed()) return cmd_dims(o, out);
    if (sl->parsed()) return cmd_slice(o, out);
    if (ap->parsed()) {
      out << a_poly(dimv(o.v), dimv(o.vPrime), weight(o), o.r).to_string("t") << '\n';
      return 0;
    }
    if (kl->parsed()) return cmd_kl_poly(o, out);
    if (bs->parsed()) {
      out << (bbdg_support(dimv(o.v), weight(o), dimv(o.vPrime), o.r) ? "true" : "false") << '\n';
      return 0;
    }
    if (ch->parsed()) {
      const WeightW w = weight(o);
      print_torus(o.kind == "M" ? chi_M(w, o.r) : chi_L(w, o.r), o.format, out);
      return 0;
    }
    if (vf->parsed()) return cmd_verify(o, out, err);
    if (gd->parsed()) return cmd_golden(o, out);
  } catch (const UsageError& ex) {
    err << "usage error: " << ex.what() << '\n';
    return kUsage;
  } catch (const PreconditionViolated& ex) {
    err << ex.what() << '\n';
    return kUsage;
  } catch (const NegativeEntry& ex) {
    err << ex.what() << '\n';
    return kUsage;
  } catch (const EmptyVariety& ex) {
    err << ex.what() << '\n';
    return kUsage;
  } catch (const OutOfRange& ex) {
    err << ex.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& ex) {
    err << ex.what() << '\n';
    return kUsage;
  } catch (const std::exception& ex) {
    err << ex.what() << '\n';
    return kFailure;
  }
  return kUsage;
}

}  // namespace rank2::cli
