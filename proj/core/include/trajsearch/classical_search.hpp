#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "trajsearch/discrete_space.hpp"
#include "trajsearch/types.hpp"

namespace trajsearch {

struct TracePoint {
  std::uint64_t evals = 0;  // oracle calls made when the incumbent changed
  double cost = kInfeasible;
};

/// Result of one search run. `best_index` is an oracle index; when nothing
/// feasible was seen, best_cost stays kInfeasible and found() is false.
struct SearchOutcome {
  Index best_index = 0;
  double best_cost = kInfeasible;
  std::uint64_t classical_evals = 0;
  std::uint64_t feasible_evals = 0;
  std::uint64_t grover_rotations = 0;
  std::uint64_t seed = 0;
  std::vector<TracePoint> trace;

  bool found() const { return is_feasible(best_cost); }
};

struct ExhaustiveOptions {
  unsigned threads = 0;  // 0: hardware concurrency
};

/// Scans every domain element. Ties go to the lowest domain position, for
/// any thread count.
SearchOutcome exhaustive_min(const CostOracle& oracle, const SearchDomain& domain,
                             const ExhaustiveOptions& opts = {});
SearchOutcome exhaustive_min(const CostOracle& oracle, const MixedRadixSpace& space,
                             const ExhaustiveOptions& opts = {});

/// Pure random search: n uniform draws with replacement, keeping the
/// running minimum.
SearchOutcome random_min(const CostOracle& oracle, const SearchDomain& domain, std::uint64_t n,
                         RandomStream& rng);

/// 1 - (1 - r/N)^n: chance that n draws hit one of the r best states.
double rank_success_probability(Index r, std::uint64_t n, Index N);

struct HybridOutcome {
  SearchOutcome random_phase;
  SearchOutcome refined_phase;  // indices refer to refined_space
  std::optional<MixedRadixSpace> refined_space;
  SearchOutcome combined;  // best_index refers to the space named by best_in_refined
  bool best_in_refined = false;
  std::vector<double> best_point;  // decoded winner
};

/// Random phase over `space`, then exhaustive search over the refinement of
/// the incumbent (or over `refined`, when given). Counters are summed.
HybridOutcome hybrid_min(const OracleFactory& factory, const MixedRadixSpace& space,
                         std::uint64_t n_random, const RefinementSpec& refinement,
                         RandomStream& rng,
                         const std::optional<MixedRadixSpace>& refined = std::nullopt,
                         const ExhaustiveOptions& opts = {});

}  // namespace trajsearch
