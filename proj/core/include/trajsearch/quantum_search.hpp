#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "trajsearch/classical_search.hpp"
#include "trajsearch/discrete_space.hpp"
#include "trajsearch/types.hpp"

namespace trajsearch {

/// N states of which M are marked; sin(theta/2) = sqrt(M/N).
struct GroverModel {
  Index N = 1;
  Index M = 0;
  double theta = 0.0;

  GroverModel(Index n, Index m);
  /// Probability of measuring a marked state after r iterations.
  double success_probability(std::uint64_t r) const;
};

double grover_success_probability(Index N, Index M, std::uint64_t r);

/// Iteration count maximising the success probability (lowest on ties).
std::uint64_t optimal_rotations(Index N, Index M);

/// Real-amplitude register of n qubits, for validating the rotation model.
class Statevector {
 public:
  static constexpr unsigned kMaxQubits = 20;

  explicit Statevector(unsigned n_qubits);  // |0...0>

  unsigned qubits() const { return n_; }
  Index dimension() const { return amp_.size(); }
  std::span<const double> amplitudes() const { return amp_; }
  std::span<double> amplitudes() { return amp_; }

  void hadamard(unsigned qubit);
  void hadamard_all();
  /// Oracle: amplitude sign flip on the marked basis states.
  void phase_flip(std::span<const Index> marked);
  /// 2|0><0| - I.
  void reflect_zero();
  /// H^n (2|0><0| - I) H^n, built from gates.
  void diffusion();
  /// a_k -> 2 mean - a_k, computed directly.
  void invert_about_mean();

  double norm_squared() const;
  double probability(std::span<const Index> states) const;

 private:
  unsigned n_;
  std::vector<double> amp_;
};

/// H^n |0>, then r rounds of phase flip + diffusion.
std::vector<double> statevector_grover(unsigned n_qubits, std::span<const Index> marked,
                                       std::uint64_t r);

/// Query accounts of a quantum run. simulator_evals is the simulator's own
/// bookkeeping and is never part of the algorithm's cost.
struct QueryLedger {
  std::uint64_t rotations = 0;
  std::uint64_t classical_evals = 0;
  std::uint64_t simulator_evals = 0;
};

/// Measurement model of Grover search over a fixed domain. Costs are scanned
/// once (charged to simulator_evals); afterwards the sampler is read-only
/// and safe to share between threads.
class GroverSampler {
 public:
  GroverSampler(const CostOracle& oracle, const SearchDomain& domain, unsigned threads = 0);

  Index size() const { return order_.size(); }
  /// Number of positions with cost strictly below threshold.
  Index marked_count(double threshold) const;
  /// Cost of the k-th domain position.
  double cost(Index k) const { return cost_[k]; }
  std::uint64_t scan_evals() const { return order_.size(); }

  /// One measurement after r iterations against the marked set
  /// {cost < threshold}. Returns a domain position; charges r rotations and
  /// one verification evaluation.
  Index sample(double threshold, std::uint64_t r, RandomStream& rng, QueryLedger& ledger) const;

 private:
  std::vector<double> cost_;   // by domain position
  std::vector<Index> order_;   // positions sorted by (cost, position)
  std::vector<double> sorted_; // cost_ in order_
};

/// round(sqrt(n) * epsilon).
std::uint64_t theoretical_quantum_cost(Index n, double epsilon);

struct QuantumCostReport {
  std::uint64_t simulated_rotations = 0;
  std::uint64_t theoretical_cost = 0;
  double epsilon = 2.46;
  Index n_eff = 0;
  std::vector<Index> phase_sizes;
  /// Largest ceil(m - 1) any draw was taken from; the loop can overshoot
  /// its budget by at most this.
  std::uint64_t largest_draw_cap = 0;
};

struct QuantumOutcome {
  SearchOutcome search;  // best_index is an oracle index
  QuantumCostReport report;
  QueryLedger ledger;
};

struct DurrHoyerOptions {
  double lambda = 1.34;
  double epsilon = 2.46;
};

/// 22.5 sqrt(N) + 1.4 log2(N)^2.
double durr_hoyer_budget(Index N);

/// Adaptive minimum finding over the sampler's domain. `domain` maps
/// sampler positions to oracle indices.
QuantumOutcome durr_hoyer_min(const GroverSampler& sampler, const SearchDomain& domain,
                              RandomStream& rng, const DurrHoyerOptions& opts = {});
QuantumOutcome durr_hoyer_min(const CostOracle& oracle, const SearchDomain& domain,
                              RandomStream& rng, const DurrHoyerOptions& opts = {});

QuantumOutcome quantum_exhaustive_min(const CostOracle& oracle, const MixedRadixSpace& space,
                                      RandomStream& rng, const DurrHoyerOptions& opts = {});

/// Uniform subset of size s, then minimum finding on it.
QuantumOutcome quantum_random_min(const CostOracle& oracle, const MixedRadixSpace& space,
                                  Index s, RandomStream& rng, const DurrHoyerOptions& opts = {});

struct QuantumHybridOutcome {
  QuantumOutcome random_phase;
  QuantumOutcome refined_phase;  // indices refer to refined_space
  std::optional<MixedRadixSpace> refined_space;
  QuantumOutcome combined;
  bool best_in_refined = false;
  std::vector<double> best_point;
};

QuantumHybridOutcome quantum_hybrid_min(const OracleFactory& factory,
                                        const MixedRadixSpace& space, Index s,
                                        const RefinementSpec& refinement, RandomStream& rng,
                                        const std::optional<MixedRadixSpace>& refined = std::nullopt,
                                        const DurrHoyerOptions& opts = {});

}  // namespace trajsearch
