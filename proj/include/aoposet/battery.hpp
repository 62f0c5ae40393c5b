#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "aoposet/solver.hpp"

namespace aoposet::battery {

struct Options {
  std::size_t max_n = 7;  // enumeration size; criteria 6, 8, 9, 11 stop at 6
  std::size_t max_a = 8;  // lambda constructions; x constructions stop at 6
  std::uint64_t seed = 0x5eed'a0'2026ULL;
  std::size_t random_graphs = 1000;
  SolverConfig solver;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  double seconds = 0;
  double budget_seconds = 0;
  std::vector<std::string> failures;  // empty iff the checks themselves held
  std::string summary;
};

inline constexpr int kCriterionCount = 11;

/// Runs one criterion (1..11). A criterion passes when every check holds and
/// it finishes within its time budget.
CriterionResult run_criterion(int id, const Options& opts = {});
std::vector<CriterionResult> run_all(const Options& opts = {});

/// "criterion 3 PASS x via maximization (0.01 s)" plus indented failure lines.
std::string format(const CriterionResult& r);

}  // namespace aoposet::battery
