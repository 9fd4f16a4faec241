#pragma once

#include <memory>
#include <vector>

#include "trajsearch/discrete_space.hpp"
#include "trajsearch/types.hpp"

namespace trajsearch {

/// Every cost of a full space, evaluated once. Immutable after build, so
/// concurrent reads from several trials are safe.
class CostTable {
 public:
  static CostTable build(const CostOracle& oracle, Index n, unsigned threads = 0);

  Index size() const { return costs_->size(); }
  double operator[](Index i) const { return (*costs_)[i]; }
  std::uint64_t feasible_count() const { return feasible_; }

  /// Oracle reading from the table. Shares ownership of the data.
  CostOracle oracle() const;

 private:
  std::shared_ptr<const std::vector<double>> costs_;
  std::uint64_t feasible_ = 0;
};

/// Wraps an oracle with a thread-safe call counter.
class CountingOracle {
 public:
  explicit CountingOracle(CostOracle inner);
  double operator()(Index i) const;
  std::uint64_t calls() const;
  CostOracle as_oracle() const;

 private:
  struct State;
  std::shared_ptr<State> state_;
};

}  // namespace trajsearch
