#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "trajsearch/detail/parallel.hpp"
#include "trajsearch/quantum_search.hpp"

namespace trajsearch {

GroverSampler::GroverSampler(const CostOracle& oracle, const SearchDomain& domain,
                             unsigned threads) {
  const Index n = domain.size();
  if (n == 0) throw std::invalid_argument("GroverSampler: empty domain");
  cost_.resize(n);
  const unsigned t = detail::resolve_threads(threads, n);
  const unsigned chunks = static_cast<unsigned>(std::min<Index>(n, Index{t} * 8));
  detail::for_each_chunk(n, t, chunks, [&](unsigned, Index lo, Index hi) {
    for (Index k = lo; k < hi; ++k) cost_[k] = oracle(domain.at(k));
  });
  order_.resize(n);
  std::iota(order_.begin(), order_.end(), Index{0});
  std::sort(order_.begin(), order_.end(), [this](Index a, Index b) {
    return cost_[a] < cost_[b] || (cost_[a] == cost_[b] && a < b);
  });
  sorted_.resize(n);
  for (Index k = 0; k < n; ++k) sorted_[k] = cost_[order_[k]];
}

Index GroverSampler::marked_count(double threshold) const {
  return static_cast<Index>(std::lower_bound(sorted_.begin(), sorted_.end(), threshold) -
                            sorted_.begin());
}

Index GroverSampler::sample(double threshold, std::uint64_t r, RandomStream& rng,
                            QueryLedger& ledger) const {
  const Index n = size();
  const Index m = marked_count(threshold);
  ledger.rotations += r;
  ledger.classical_evals += 1;
  const double p = m == 0 ? 0.0 : grover_success_probability(n, m, r);
  if (m == n || (m > 0 && uniform_unit(rng) < p)) return order_[uniform_index(rng, m)];
  return order_[m + uniform_index(rng, n - m)];
}

QuantumOutcome durr_hoyer_min(const GroverSampler& sampler, const SearchDomain& domain,
                              RandomStream& rng, const DurrHoyerOptions& opts) {
  if (!(opts.lambda > 1.0)) throw std::invalid_argument("durr_hoyer_min: lambda must exceed 1");
  const Index n = sampler.size();
  if (domain.size() != n) throw std::invalid_argument("durr_hoyer_min: domain/sampler mismatch");

  QuantumOutcome out;
  auto& ledger = out.ledger;
  Index y = uniform_index(rng, n);
  double cy = sampler.cost(y);
  ledger.classical_evals = 1;
  if (is_feasible(cy)) out.search.trace.push_back({1, cy});

  if (n > 1) {
    const double budget = durr_hoyer_budget(n);
    double m = 1.0;
    std::uint64_t g_total = 0;
    while (static_cast<double>(g_total) < budget) {
      const auto r_max = static_cast<std::uint64_t>(std::ceil(m - 1.0));
      out.report.largest_draw_cap = std::max(out.report.largest_draw_cap, r_max);
      const auto r = std::uniform_int_distribution<std::uint64_t>(0, r_max)(rng);
      const Index x = sampler.sample(cy, r, rng, ledger);
      g_total += r;
      if (sampler.cost(x) < cy) {
        y = x;
        cy = sampler.cost(x);
        m = 1.0;
        out.search.trace.push_back({ledger.classical_evals, cy});
      } else {
        m *= opts.lambda;
      }
    }
  }

  out.search.best_index = domain.at(y);
  out.search.best_cost = cy;
  out.search.classical_evals = ledger.classical_evals;
  out.search.grover_rotations = ledger.rotations;
  out.report.simulated_rotations = ledger.rotations;
  out.report.epsilon = opts.epsilon;
  out.report.n_eff = n;
  out.report.phase_sizes = {n};
  out.report.theoretical_cost = theoretical_quantum_cost(n, opts.epsilon);
  return out;
}

QuantumOutcome durr_hoyer_min(const CostOracle& oracle, const SearchDomain& domain,
                              RandomStream& rng, const DurrHoyerOptions& opts) {
  const GroverSampler sampler(oracle, domain);
  auto out = durr_hoyer_min(sampler, domain, rng, opts);
  out.ledger.simulator_evals += sampler.scan_evals();
  return out;
}

QuantumOutcome quantum_exhaustive_min(const CostOracle& oracle, const MixedRadixSpace& space,
                                      RandomStream& rng, const DurrHoyerOptions& opts) {
  return durr_hoyer_min(oracle, SearchDomain(space), rng, opts);
}

QuantumOutcome quantum_random_min(const CostOracle& oracle, const MixedRadixSpace& space,
                                  Index s, RandomStream& rng, const DurrHoyerOptions& opts) {
  if (s == 0) throw std::invalid_argument("quantum_random_min: empty subset");
  const SubsetSpace subset = sample_subset(space, s, rng);
  return durr_hoyer_min(oracle, SearchDomain(subset), rng, opts);
}

QuantumHybridOutcome quantum_hybrid_min(const OracleFactory& factory,
                                        const MixedRadixSpace& space, Index s,
                                        const RefinementSpec& refinement, RandomStream& rng,
                                        const std::optional<MixedRadixSpace>& refined,
                                        const DurrHoyerOptions& opts) {
  QuantumHybridOutcome out;
  out.random_phase = quantum_random_min(factory(space), space, s, rng, opts);
  out.combined = out.random_phase;
  out.best_point = space.decode(out.random_phase.search.best_index);
  if (!out.random_phase.search.found() && !refined) return out;

  out.refined_space =
      refined ? *refined : refine_around(space, out.random_phase.search.best_index, refinement);
  out.refined_phase = quantum_exhaustive_min(factory(*out.refined_space), *out.refined_space, rng, opts);

  auto& c = out.combined;
  const auto& p2 = out.refined_phase;
  c.ledger.rotations += p2.ledger.rotations;
  c.ledger.classical_evals += p2.ledger.classical_evals;
  c.ledger.simulator_evals += p2.ledger.simulator_evals;
  c.search.classical_evals = c.ledger.classical_evals;
  c.search.grover_rotations = c.ledger.rotations;
  c.report.simulated_rotations = c.ledger.rotations;
  c.report.theoretical_cost += p2.report.theoretical_cost;
  c.report.n_eff += p2.report.n_eff;
  c.report.phase_sizes.push_back(p2.report.n_eff);
  c.report.largest_draw_cap = std::max(c.report.largest_draw_cap, p2.report.largest_draw_cap);
  if (p2.search.best_cost < c.search.best_cost) {
    c.search.best_cost = p2.search.best_cost;
    c.search.best_index = p2.search.best_index;
    out.best_in_refined = true;
    out.best_point = out.refined_space->decode(p2.search.best_index);
  }
  c.search.trace.clear();
  if (out.random_phase.search.found())
    c.search.trace.push_back({out.random_phase.ledger.classical_evals, out.random_phase.search.best_cost});
  if (c.search.found()) c.search.trace.push_back({c.ledger.classical_evals, c.search.best_cost});
  return out;
}

}  // namespace trajsearch
