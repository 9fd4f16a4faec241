#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "trajsearch/cost_table.hpp"
#include "trajsearch/discrete_space.hpp"

namespace trajsearch::bench {

struct TableRow {
  std::string id;      // method family: I..VI
  std::string method;  // human label
  Index n_states = 0;  // states this run actually searched (0: not run)
  /// Cost column: classical evaluations, or the sqrt(N) * epsilon estimate
  /// at the published search-space sizes for the quantum rows.
  std::optional<std::uint64_t> cost;
  std::string reference_cost;  // as published
  std::optional<std::uint64_t> actual_theoretical_cost;  // sqrt(N) * epsilon at our sizes
  std::optional<std::uint64_t> simulated_rotations;
  std::optional<double> best;
  std::optional<double> error_pct;
  std::optional<double> reference_best;
  std::string note;
};

struct TableOptions {
  std::uint64_t seed = 1;
  double epsilon = 2.46;
  double lambda = 1.34;
  unsigned threads = 0;
  /// Costs of the full coarse space, reused when present (built otherwise).
  const CostTable* cache = nullptr;
  /// Include the 85,562,001-state coefficient-space row (about a minute).
  bool coefficient_space = true;
};

/// Fixed refined grid used by the hybrid rows of the brachistochrone table:
/// 4 x 4 x 20 x 20 node heights.
MixedRadixSpace brach_hybrid_refined_space();

std::vector<TableRow> brach_comparison(const TableOptions& opts);
std::vector<TableRow> iso_comparison(const TableOptions& opts);
/// Dispatch by name; throws ConfigError for an unknown table.
std::vector<TableRow> make_table(const std::string& name, const TableOptions& opts);

void write_table_csv(std::ostream& os, const std::vector<TableRow>& rows);
void write_table_json(std::ostream& os, const std::vector<TableRow>& rows);
void write_table_text(std::ostream& os, const std::vector<TableRow>& rows);

}  // namespace trajsearch::bench
