#pragma once

#include <functional>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "trajsearch/bench/config.hpp"
#include "trajsearch/discrete_space.hpp"
#include "trajsearch/types.hpp"

namespace trajsearch::bench {

/// Everything a run needs to know about one problem.
struct ProblemSetup {
  Problem problem;
  MixedRadixSpace space;
  OracleFactory factory;
  /// Optimum of the continuous problem, in reported units, when known.
  std::optional<double> analytic;
  /// Oracle cost -> reported quantity (time, area, landed mass).
  std::function<double(double)> reported;
  std::string unit;
};

ProblemSetup make_problem(const RunConfig& cfg);

/// One coarse step either side, five times finer, unless cfg overrides it.
RefinementSpec default_refinement(const RunConfig& cfg, const MixedRadixSpace& space);

/// Explicit refined grid from cfg.refined_levels, if set.
std::optional<MixedRadixSpace> explicit_refined_space(const RunConfig& cfg);

struct Probe {
  std::vector<double> values;
  double cost = kInfeasible;  // oracle cost
  double reported = 0.0;      // in problem units, meaningful when feasible
  std::string verdict;
};

/// Evaluates one state given by grid index.
Probe probe_index(const RunConfig& cfg, Index index);
/// Evaluates one state given by its decoded values (need not be on the grid).
Probe probe_values(const RunConfig& cfg, std::span<const double> values);

/// Writes the path of the state given by `values` at `samples` points, plus
/// the analytic reference curve as extra columns where one exists.
/// Brachistochrone: x,y,x_ref,y_ref. Isoperimetric: x,y,x_ref,y_ref (the
/// arc-length-normalised curve in Cartesian form). Moon: t,h,v,m.
void write_path(std::ostream& os, const RunConfig& cfg, std::span<const double> values, int samples);

}  // namespace trajsearch::bench
