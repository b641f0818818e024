#pragma once

// Text renderings used by the command-line frontend.

#include <string>

#include <json.hpp>

#include "rank2/cluster_basis.hpp"
#include "rank2/quiver_geometry.hpp"
#include "rank2/support_region.hpp"

namespace rank2 {

/// e(p,q) table: header "q\p,0,1,...", one row per q (largest first).
std::string e_table_csv(const ECoefficients& e, const RootVector& a);
/// LaTeX tabular with q rows (largest first) and p columns.
std::string e_table_latex(const ECoefficients& e, const RootVector& a);
/// Plain-text table, same layout as the CSV.
std::string e_table_ascii(const ECoefficients& e, const RootVector& a);

/// One "e1,e2,coeff" row per monomial.
std::string torus_csv(const TorusElement& f);
/// One "X^(e1,e2): coeff" line per monomial.
std::string torus_ascii(const TorusElement& f);
std::string torus_latex(const TorusElement& f);

/// '#' for lattice points in the region, '.' elsewhere; q decreasing downwards.
std::string region_ascii(const RegionDescription& r, long pmax, long qmax);
std::string region_svg(const RegionDescription& r, long pmax, long qmax);
/// Default plotting window [0, [a2]_+ + 1] x [0, [a1]_+ + 1].
std::pair<long, long> region_window(const RootVector& a);

std::string dom_csv(const WeightW& w, int r);
nlohmann::json dom_json(const WeightW& w, int r);

}  // namespace rank2
