#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>

namespace trajsearch {

/// Position of a state inside a finite search space, in [0, N).
using Index = std::uint64_t;

/// Seeded random stream. Every search owns its stream; nothing is shared.
using RandomStream = std::mt19937_64;

/// Cost of an infeasible state. Ordered above every finite cost, so a plain
/// `<` comparison never lets it become an incumbent over a feasible state.
inline constexpr double kInfeasible = std::numeric_limits<double>::infinity();

inline bool is_feasible(double cost) { return std::isfinite(cost); }

/// Pure map from state index to cost (or kInfeasible). The only view a
/// search method has of a problem. Must be reentrant.
using CostOracle = std::function<double(Index)>;

class MixedRadixSpace;

/// Builds the oracle for a (possibly refined) space of the same problem.
using OracleFactory = std::function<CostOracle(const MixedRadixSpace&)>;

/// Uniform draw in [0, n). n must be positive.
inline Index uniform_index(RandomStream& rng, Index n) {
  return std::uniform_int_distribution<Index>(0, n - 1)(rng);
}

inline double uniform_unit(RandomStream& rng) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

/// SplitMix64 finalizer; used to derive independent per-trial seeds.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace trajsearch
