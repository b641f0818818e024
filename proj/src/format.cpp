#include "rank2/format.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <vector>

namespace rank2 {

namespace {

struct Grid {
  int pmax = 0;
  int qmax = 0;
};

Grid grid_of(const ECoefficients& e, const RootVector& a) {
  Grid g{pos(a.a2), pos(a.a1)};
  for (const auto& [pq, c] : e) {
    g.pmax = std::max(g.pmax, pq.first);
    g.qmax = std::max(g.qmax, pq.second);
  }
  return g;
}

std::string cell(const ECoefficients& e, int p, int q) {
  auto it = e.find({p, q});
  return it == e.end() ? std::string() : it->second.to_string();
}

// "v^6+1+v^-6" -> "\mathbf{v}^{6}+1+\mathbf{v}^{-6}".
std::string latex_poly(const LaurentPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    const Integer mag = abs(c);
    if (c < 0) {
      os << '-';
    } else if (!first) {
      os << '+';
    }
    first = false;
    if (e == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str();
    os << "\\mathbf{v}";
    if (e != 1) os << "^{" << e << '}';
  }
  return os.str();
}

}  // namespace

std::string e_table_csv(const ECoefficients& e, const RootVector& a) {
  const Grid g = grid_of(e, a);
  std::ostringstream os;
  os << "q\\p";
  for (int p = 0; p <= g.pmax; ++p) os << ',' << p;
  os << '\n';
  for (int q = g.qmax; q >= 0; --q) {
    os << q;
    for (int p = 0; p <= g.pmax; ++p) os << ',' << cell(e, p, q);
    os << '\n';
  }
  return os.str();
}

std::string e_table_ascii(const ECoefficients& e, const RootVector& a) {
  const Grid g = grid_of(e, a);
  std::vector<std::size_t> width(static_cast<std::size_t>(g.pmax) + 1, 1);
  for (int p = 0; p <= g.pmax; ++p) {
    auto& w = width[static_cast<std::size_t>(p)];
    w = std::max(w, std::to_string(p).size());
    for (int q = 0; q <= g.qmax; ++q) w = std::max(w, cell(e, p, q).size());
  }
  std::ostringstream os;
  os << "q\\p |";
  for (int p = 0; p <= g.pmax; ++p) os << ' ' << std::setw(static_cast<int>(width[p])) << p;
  os << '\n';
  for (int q = g.qmax; q >= 0; --q) {
    os << std::setw(3) << q << " |";
    for (int p = 0; p <= g.pmax; ++p) {
      const std::string c = cell(e, p, q);
      os << ' ' << std::setw(static_cast<int>(width[p])) << (c.empty() ? "." : c);
    }
    os << '\n';
  }
  return os.str();
}

std::string e_table_latex(const ECoefficients& e, const RootVector& a) {
  const Grid g = grid_of(e, a);
  std::ostringstream os;
  os << "\\begin{tabular}{|c|" << std::string(static_cast<std::size_t>(g.pmax) + 1, 'c') << "|}\n";
  os << "\\hline\n$q \\backslash p$";
  for (int p = 0; p <= g.pmax; ++p) os << " & $" << p << '$';
  os << " \\\\\n\\hline\n";
  for (int q = g.qmax; q >= 0; --q) {
    os << q;
    for (int p = 0; p <= g.pmax; ++p) {
      auto it = e.find({p, q});
      os << " & ";
      if (it == e.end()) continue;
      const bool single = it->second.size() == 1;
      os << (single ? "$" : "$\\left(") << latex_poly(it->second) << (single ? "$" : "\\right)$");
    }
    os << " \\\\\n";
  }
  os << "\\hline\n\\end{tabular}\n";
  return os.str();
}

std::string torus_csv(const TorusElement& f) {
  std::ostringstream os;
  os << "e1,e2,coeff\n";
  for (const auto& [e, c] : f.terms()) os << e.e1 << ',' << e.e2 << ',' << c.to_string() << '\n';
  return os.str();
}

std::string torus_ascii(const TorusElement& f) {
  if (f.is_zero()) return "0\n";
  std::ostringstream os;
  for (const auto& [e, c] : f.terms()) {
    os << "X^(" << e.e1 << ',' << e.e2 << "): " << c.to_string() << '\n';
  }
  return os.str();
}

std::string torus_latex(const TorusElement& f) {
  if (f.is_zero()) return "$0$\n";
  std::ostringstream os;
  os << '$';
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    if (!first) os << " + ";
    first = false;
    if (c != LaurentPoly(1)) os << "\\left(" << latex_poly(c) << "\\right)";
    os << "X^{\\left(" << e.e1 << ", " << e.e2 << "\\right)}";
  }
  os << "$\n";
  return os.str();
}

std::pair<long, long> region_window(const RootVector& a) { return {pos(a.a2) + 1, pos(a.a1) + 1}; }

std::string region_ascii(const RegionDescription& r, long pmax, long qmax) {
  std::ostringstream os;
  for (long q = qmax; q >= 0; --q) {
    for (long p = 0; p <= pmax; ++p) os << (region_contains(r, p, q) ? '#' : '.');
    os << '\n';
  }
  return os.str();
}

std::string region_svg(const RegionDescription& r, long pmax, long qmax) {
  constexpr long kStep = 24;
  constexpr long kMargin = 16;
  const long width = 2 * kMargin + pmax * kStep;
  const long height = 2 * kMargin + qmax * kStep;
  auto x = [&](long p) { return kMargin + p * kStep; };
  auto y = [&](long q) { return height - kMargin - q * kStep; };
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\">\n";
  if (r.vertices.size() >= 3) {
    os << "  <polygon fill=\"#dde6ff\" stroke=\"#333\" points=\"";
    for (const auto& v : r.vertices) os << x(v.p) << ',' << y(v.q) << ' ';
    os << "\"/>\n";
  } else if (r.vertices.size() == 2) {
    os << "  <line stroke=\"#333\" stroke-width=\"3\" x1=\"" << x(r.vertices[0].p) << "\" y1=\""
       << y(r.vertices[0].q) << "\" x2=\"" << x(r.vertices[1].p) << "\" y2=\"" << y(r.vertices[1].q)
       << "\"/>\n";
  }
  for (long q = 0; q <= qmax; ++q) {
    for (long p = 0; p <= pmax; ++p) {
      const bool in = region_contains(r, p, q);
      os << "  <circle cx=\"" << x(p) << "\" cy=\"" << y(q) << "\" r=\"" << (in ? 4 : 2)
         << "\" fill=\"" << (in ? "#1f3b99" : "#999") << "\"/>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

std::string dom_csv(const WeightW& w, int r) {
  std::ostringstream os;
  os << "v1,v2,d,dTilde,f,fSwap,g\n";
  for (const DimV& v : dom_enumerate(w, r)) {
    const FGValues fg = fg_values(v, w, r);
    os << v.v1 << ',' << v.v2 << ',' << d_dim(v, w, r) << ',' << d_tilde(v, w, r) << ',' << fg.f
       << ',' << fg.fSwap << ',' << fg.g << '\n';
  }
  return os.str();
}

nlohmann::json dom_json(const WeightW& w, int r) {
  auto out = nlohmann::json::array();
  for (const DimV& v : dom_enumerate(w, r)) {
    const FGValues fg = fg_values(v, w, r);
    out.push_back({{"v", {v.v1, v.v2}},
                   {"d", d_dim(v, w, r)},
                   {"dTilde", d_tilde(v, w, r)},
                   {"f", fg.f},
                   {"fSwap", fg.fSwap},
                   {"g", fg.g}});
  }
  return out;
}

}  // namespace rank2
