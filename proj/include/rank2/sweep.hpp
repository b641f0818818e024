#pragma once

// Batch verification of the support, symmetry, unimodality, sigma-relation,
// sum-identity and KL-bound properties over parameter ranges.

#include <compare>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "rank2/laurent.hpp"

namespace rank2 {

enum class Check { kSupport, kSymmetry, kUnimodality, kSigma, kSumAP, kKLTables };

std::string to_string(Check c);
/// Accepts support, symmetry, unimodality, sigma, sumAP, kl-tables (and "all"
/// through parse_checks). Throws std::invalid_argument.
Check parse_check(const std::string& name);
std::set<Check> parse_checks(const std::vector<std::string>& names);

struct IntRange {
  int lo = 1;
  int hi = 1;
};

struct SweepConfig {
  IntRange bRange{1, 1};
  IntRange cRange{1, 1};
  /// Roots with |a1| + |a2| <= normBound (for imaginary roots this is a1 + a2).
  int normBound = 8;
  /// Entries of w for the sumAP and kl-tables checks.
  int wBound = 3;
  std::vector<int> rList{2, 3};
  std::set<Check> checks;
  std::string outputPath;
  int parallelism = 1;
  /// Timing is left out of the JSON report unless asked for, so that reports
  /// are byte-identical across runs.
  bool timing = false;

  /// Throws std::invalid_argument.
  void validate() const;
};

struct SweepFailure {
  std::string check;
  std::string params;
  std::string root;
  std::string point;
  std::string expected;
  std::string actual;
  friend auto operator<=>(const SweepFailure&, const SweepFailure&) = default;
};

struct SweepReport {
  long cases = 0;
  std::map<std::string, long> casesByCheck;
  std::vector<SweepFailure> failures;
  std::map<std::string, double> secondsByCheck;
  double wallSeconds = 0;

  bool ok() const { return failures.empty(); }
};

/// Shape of a nonzero coefficient e(p,q) for b = c = r and an imaginary root:
/// bar-invariant, top term v^D with coefficient 1, nonzero exactly at
/// -D, -D+2r, ..., D, unimodal about 0 (or about +-r when 2r does not divide D).
/// Returns a description of the first violation, or an empty string.
std::string coefficient_shape_violation(const LaurentPoly& e, long D, int r);

SweepReport verify_sweep(const SweepConfig& cfg);

nlohmann::json report_json(const SweepReport& report, bool include_timing);

}  // namespace rank2
