#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "trajsearch/bench/config.hpp"
#include "trajsearch/cost_table.hpp"

namespace trajsearch::bench {

struct ResultRow {
  std::string problem;
  std::string method;
  int trial = 0;
  Index N = 0;
  /// Classical oracle evaluations, or simulated Grover rotations for the
  /// quantum methods.
  std::uint64_t cost_metric = 0;
  /// round(sqrt(N_eff) * epsilon) summed over phases; quantum methods only.
  std::optional<std::uint64_t> theoretical_cost;
  std::optional<double> best_cost;  // reported units; empty when nothing feasible
  std::optional<double> error_pct;
  std::uint64_t seed = 0;
  double wall_ms = 0.0;
  std::vector<double> best_point;
};

/// Per-trial seed: the configured seed mixed with the trial index.
std::uint64_t trial_seed(std::uint64_t seed, int trial);

/// Runs cfg.trials independent trials (concurrently) and returns rows in
/// trial order. `cache`, when given, must hold the costs of the problem's
/// full space and is used instead of the live oracle for that space.
std::vector<ResultRow> run(const RunConfig& cfg, const CostTable* cache = nullptr);

void write_rows_csv(std::ostream& os, const std::vector<ResultRow>& rows, bool timing);
void write_rows_json(std::ostream& os, const std::vector<ResultRow>& rows, bool timing);

/// "# trajsearch <what> <UTC timestamp>".
std::string provenance_line(const std::string& what);

}  // namespace trajsearch::bench
