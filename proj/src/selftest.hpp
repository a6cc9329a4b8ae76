#pragma once

// The acceptance suite: one entry per criterion, each returning an
// independent pass/fail with detail. Run by the `selftest` subcommand and
// by the integration test binary.

#include <cstdint>
#include <string>
#include <vector>

namespace syzlab {

struct CriterionResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct SelftestOptions {
  // Criterion 3 covers (2,0;4); on slow machines it dominates the run.
  bool include_slow = true;
  int jobs = 1;
};

std::vector<CriterionResult> run_selftest(const SelftestOptions& opts = {});

}  // namespace syzlab
