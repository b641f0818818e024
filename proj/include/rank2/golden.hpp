#pragma once

// Re-derives the published tables stored as JSON fixtures and diffs them
// against freshly computed values.

#include <filesystem>
#include <string>
#include <vector>

namespace rank2 {

struct GoldenItem {
  std::string table;  // fixture file stem
  std::string item;
  std::string expected;
  std::string actual;
  bool ok = false;
};

struct GoldenReport {
  std::vector<GoldenItem> items;
  double seconds = 0;

  bool ok() const;
  std::vector<GoldenItem> mismatches() const;
};

/// Fixture directory baked in at build time.
std::filesystem::path default_fixture_dir();

/// Runs every fixture found in dir (c34, c28, kl_tables, a_values,
/// slice_0110). Throws std::runtime_error when a fixture is missing or malformed.
GoldenReport run_golden(const std::filesystem::path& dir);
/// A single fixture by stem.
GoldenReport run_golden_table(const std::filesystem::path& dir, const std::string& stem);

}  // namespace rank2
