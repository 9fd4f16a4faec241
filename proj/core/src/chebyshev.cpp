#include <cmath>
#include <cstdlib>

#include "trajsearch/numerics.hpp"

namespace trajsearch {

ChebyshevTable::ChebyshevTable(int max_degree) {
  if (max_degree < 0) throw std::invalid_argument("ChebyshevTable: negative degree");
  rows_.push_back({1});
  if (max_degree >= 1) rows_.push_back({0, 1});
  for (int n = 1; n < max_degree; ++n) {
    const auto& cur = rows_[static_cast<std::size_t>(n)];
    const auto& prev = rows_[static_cast<std::size_t>(n - 1)];
    std::vector<std::int64_t> next(static_cast<std::size_t>(n + 2), 0);
    for (std::size_t k = 0; k < cur.size(); ++k) {
      if (__builtin_mul_overflow(cur[k], std::int64_t{2}, &next[k + 1]))
        throw std::overflow_error("ChebyshevTable: coefficient overflow");
    }
    for (std::size_t k = 0; k < prev.size(); ++k) {
      if (__builtin_sub_overflow(next[k], prev[k], &next[k]))
        throw std::overflow_error("ChebyshevTable: coefficient overflow");
    }
    rows_.push_back(std::move(next));
  }
}

std::int64_t ChebyshevTable::coeff(int n, int k) const {
  const auto& r = rows_.at(static_cast<std::size_t>(n));
  return (k < 0 || static_cast<std::size_t>(k) >= r.size()) ? 0 : r[static_cast<std::size_t>(k)];
}

std::vector<double> coefficient_bounds(const ChebyshevTable& table, int zeta) {
  if (zeta < 2) throw std::invalid_argument("coefficient_bounds: zeta must be >= 2");
  const int n = zeta - 1;
  if (table.max_degree() < n) throw std::invalid_argument("coefficient_bounds: table too small");
  std::vector<double> bounds;
  bounds.reserve(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    const int source = ((n - j) % 2 == 0) ? n : n - 1;
    bounds.push_back(static_cast<double>(std::llabs(table.coeff(source, j))));
  }
  return bounds;
}

}  // namespace trajsearch
