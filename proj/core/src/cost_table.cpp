#include "trajsearch/cost_table.hpp"

#include <atomic>

#include "trajsearch/detail/parallel.hpp"

namespace trajsearch {

CostTable CostTable::build(const CostOracle& oracle, Index n, unsigned threads) {
  auto costs = std::make_shared<std::vector<double>>(n);
  const unsigned t = detail::resolve_threads(threads, n);
  const unsigned chunks = static_cast<unsigned>(std::min<Index>(n, Index{t} * 8));
  detail::for_each_chunk(n, t, chunks, [&](unsigned, Index lo, Index hi) {
    for (Index i = lo; i < hi; ++i) (*costs)[i] = oracle(i);
  });
  CostTable table;
  for (double c : *costs) table.feasible_ += is_feasible(c) ? 1 : 0;
  table.costs_ = std::move(costs);
  return table;
}

CostOracle CostTable::oracle() const {
  return [costs = costs_](Index i) { return costs->at(i); };
}

struct CountingOracle::State {
  CostOracle inner;
  std::atomic<std::uint64_t> calls{0};
};

CountingOracle::CountingOracle(CostOracle inner) : state_(std::make_shared<State>()) {
  state_->inner = std::move(inner);
}

double CountingOracle::operator()(Index i) const {
  state_->calls.fetch_add(1, std::memory_order_relaxed);
  return state_->inner(i);
}

std::uint64_t CountingOracle::calls() const { return state_->calls.load(); }

CostOracle CountingOracle::as_oracle() const {
  return [self = *this](Index i) { return self(i); };
}

}  // namespace trajsearch
