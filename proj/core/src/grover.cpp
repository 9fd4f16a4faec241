#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "trajsearch/quantum_search.hpp"

namespace trajsearch {

GroverModel::GroverModel(Index n, Index m) : N(n), M(m) {
  if (n == 0) throw std::invalid_argument("GroverModel: N must be positive");
  if (m > n) throw std::invalid_argument("GroverModel: M exceeds N");
  theta = 2.0 * std::asin(std::sqrt(static_cast<double>(m) / static_cast<double>(n)));
}

double GroverModel::success_probability(std::uint64_t r) const {
  if (M == N) return 1.0;
  const double s = std::sin((2.0 * static_cast<double>(r) + 1.0) * theta / 2.0);
  return s * s;
}

double grover_success_probability(Index N, Index M, std::uint64_t r) {
  return GroverModel(N, M).success_probability(r);
}

std::uint64_t optimal_rotations(Index N, Index M) {
  if (M == 0) throw std::invalid_argument("optimal_rotations: no marked state");
  const GroverModel g(N, M);
  if (M == N) return 0;
  using std::numbers::pi;
  // Local maxima sit next to r_k = (pi/2 + k pi)/theta - 1/2. The first one
  // is the usual choice; later ones are examined up to 2 sqrt(N) rotations
  // because rounding can make one of them strictly better.
  const double first = std::max(0.0, std::round((pi / (2.0 * g.theta) - 1.0) / 2.0));
  const auto bound = std::max<std::uint64_t>(
      static_cast<std::uint64_t>(first) + 1,
      static_cast<std::uint64_t>(std::floor(2.0 * std::sqrt(static_cast<double>(N)))));

  std::uint64_t best_r = 0;
  double best_p = g.success_probability(0);
  auto consider = [&](std::uint64_t r) {
    if (r > bound) return;
    const double p = g.success_probability(r);
    if (p > best_p || (p == best_p && r < best_r)) {
      best_p = p;
      best_r = r;
    }
  };
  for (std::uint64_t k = 0;; ++k) {
    const double peak = (pi / 2.0 + static_cast<double>(k) * pi) / g.theta - 0.5;
    if (peak > static_cast<double>(bound) + 1.0) break;
    const double lo = std::max(0.0, std::floor(peak));
    consider(static_cast<std::uint64_t>(lo));
    consider(static_cast<std::uint64_t>(lo) + 1);
  }
  return best_r;
}

std::uint64_t theoretical_quantum_cost(Index n, double epsilon) {
  return static_cast<std::uint64_t>(std::llround(std::sqrt(static_cast<double>(n)) * epsilon));
}

double durr_hoyer_budget(Index N) {
  const double n = static_cast<double>(N);
  const double lg = std::log2(n);
  return 22.5 * std::sqrt(n) + 1.4 * lg * lg;
}

}  // namespace trajsearch
