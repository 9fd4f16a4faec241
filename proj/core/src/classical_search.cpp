#include "trajsearch/classical_search.hpp"

#include <cmath>
#include <stdexcept>

#include "trajsearch/detail/parallel.hpp"

namespace trajsearch {

namespace {

struct ChunkBest {
  Index position = 0;
  double cost = kInfeasible;
  std::uint64_t feasible = 0;
};

}  // namespace

SearchOutcome exhaustive_min(const CostOracle& oracle, const SearchDomain& domain,
                             const ExhaustiveOptions& opts) {
  const Index n = domain.size();
  if (n == 0) throw std::invalid_argument("exhaustive_min: empty domain");
  const unsigned threads = detail::resolve_threads(opts.threads, n);
  const unsigned chunks = static_cast<unsigned>(std::min<Index>(n, Index{threads} * 8));
  std::vector<ChunkBest> best(chunks);
  detail::for_each_chunk(n, threads, chunks, [&](unsigned c, Index lo, Index hi) {
    ChunkBest b;
    for (Index k = lo; k < hi; ++k) {
      const double cost = oracle(domain.at(k));
      if (!is_feasible(cost)) continue;
      ++b.feasible;
      if (cost < b.cost) {
        b.cost = cost;
        b.position = k;
      }
    }
    best[c] = b;
  });

  SearchOutcome out;
  out.classical_evals = n;
  Index position = 0;
  for (const auto& b : best) {
    out.feasible_evals += b.feasible;
    // chunks are in index order, so strict < keeps the lowest index on ties
    if (b.cost < out.best_cost) {
      out.best_cost = b.cost;
      position = b.position;
    }
  }
  out.best_index = domain.at(position);
  if (out.found()) out.trace.push_back({n, out.best_cost});
  return out;
}

SearchOutcome exhaustive_min(const CostOracle& oracle, const MixedRadixSpace& space,
                             const ExhaustiveOptions& opts) {
  return exhaustive_min(oracle, SearchDomain(space), opts);
}

SearchOutcome random_min(const CostOracle& oracle, const SearchDomain& domain, std::uint64_t n,
                         RandomStream& rng) {
  if (n == 0) throw std::invalid_argument("random_min: need at least one draw");
  if (domain.size() == 0) throw std::invalid_argument("random_min: empty domain");
  SearchOutcome out;
  for (std::uint64_t i = 0; i < n; ++i) {
    const Index x = domain.at(uniform_index(rng, domain.size()));
    const double cost = oracle(x);
    ++out.classical_evals;
    if (!is_feasible(cost)) continue;
    ++out.feasible_evals;
    if (cost < out.best_cost) {
      out.best_cost = cost;
      out.best_index = x;
      out.trace.push_back({out.classical_evals, cost});
    }
  }
  if (!out.found()) out.best_index = domain.at(0);
  return out;
}

double rank_success_probability(Index r, std::uint64_t n, Index N) {
  if (N == 0 || r == 0 || r > N)
    throw std::invalid_argument("rank_success_probability: need 1 <= r <= N");
  const double miss = 1.0 - static_cast<double>(r) / static_cast<double>(N);
  return 1.0 - std::pow(miss, static_cast<double>(n));
}

HybridOutcome hybrid_min(const OracleFactory& factory, const MixedRadixSpace& space,
                         std::uint64_t n_random, const RefinementSpec& refinement,
                         RandomStream& rng, const std::optional<MixedRadixSpace>& refined,
                         const ExhaustiveOptions& opts) {
  HybridOutcome out;
  out.random_phase = random_min(factory(space), SearchDomain(space), n_random, rng);
  out.combined = out.random_phase;
  out.combined.trace.clear();
  out.best_point = space.decode(out.random_phase.best_index);
  if (!out.random_phase.found() && !refined) return out;

  out.refined_space = refined ? *refined : refine_around(space, out.random_phase.best_index, refinement);
  out.refined_phase = exhaustive_min(factory(*out.refined_space), *out.refined_space, opts);

  out.combined.classical_evals += out.refined_phase.classical_evals;
  out.combined.feasible_evals += out.refined_phase.feasible_evals;
  if (out.refined_phase.best_cost < out.random_phase.best_cost) {
    out.combined.best_cost = out.refined_phase.best_cost;
    out.combined.best_index = out.refined_phase.best_index;
    out.best_in_refined = true;
    out.best_point = out.refined_space->decode(out.refined_phase.best_index);
  }
  if (out.random_phase.found())
    out.combined.trace.push_back({out.random_phase.classical_evals, out.random_phase.best_cost});
  if (out.combined.found())
    out.combined.trace.push_back({out.combined.classical_evals, out.combined.best_cost});
  return out;
}

}  // namespace trajsearch
