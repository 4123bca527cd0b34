#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bjlb/approx.hpp"

namespace bjlb::suite {

struct RunConfig {
  std::uint64_t seed = 1;
  int trials = 100;
  double tol = 1e-6;
  std::vector<double> p_list;  // empty uses the suite's own default
  double max_exponent = 8.0;
};

struct TrialRow {
  std::int64_t trial = 0;
  double p = 0.0;
  int dim = 0;
  int atoms = 0;
  std::string verdict_criterion;
  std::string verdict_oracle;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  bool excluded = false;  // some participating certificate was borderline
  bool failed = false;
  std::string note;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  int trials = 0;
  double tol = 0.0;
  std::vector<double> p_list;
  std::vector<TrialRow> rows;
  int failures = 0;
  int excluded = 0;
  double max_margin_violation = 0.0;

  std::string to_json_text() const;
  // Pinned columns: suite,trial,p,dim,atoms,verdict_criterion,verdict_oracle,lhs,rhs,margin
  std::string to_csv() const;
};

std::vector<std::string> suite_names();

// Runs one of thm-tensor-p, crit-vs-oracle, light, approx, duality-map.
// Trials are generated from per-trial seeds and may execute in parallel;
// the report is assembled in trial order, so bytes depend only on config.
SuiteReport run_suite(const std::string& name, const RunConfig& cfg);

}  // namespace bjlb::suite
