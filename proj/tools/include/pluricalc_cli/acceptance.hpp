#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pluricalc/json_io.hpp"

namespace pluricalc::cli {

struct AcceptOptions {
  std::uint64_t seed = 20240601;
  std::size_t threads = 0;
  std::set<int> only;     // empty: every criterion
  bool mutate = false;    // perturb the fixtures (harness sanity check)
  std::size_t random_trials = 1000;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::vector<std::string> details;  // exact values and, on failure, the diff
  double seconds = 0;
};

std::vector<CriterionResult> run_acceptance(const AcceptOptions& opts);

json acceptance_json(const std::vector<CriterionResult>& results, bool timings);

}  // namespace pluricalc::cli
