#include "trajsearch/discrete_space.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace trajsearch {

LevelSet::LevelSet(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("LevelSet: empty value list");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i]))
      throw std::invalid_argument("LevelSet: non-finite value");
    if (i > 0 && !(values_[i] > values_[i - 1]))
      throw std::invalid_argument("LevelSet: values must be strictly increasing");
  }
}

LevelSet LevelSet::equidistant(double min, double max, std::size_t count) {
  if (count == 0) throw std::invalid_argument("LevelSet: count must be >= 1");
  if (min > max) throw std::invalid_argument("LevelSet: min > max");
  if (count == 1) {
    if (min != max)
      throw std::invalid_argument("LevelSet: a single level requires min == max");
    return LevelSet({min});
  }
  std::vector<double> v(count);
  const double step = (max - min) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) v[i] = min + step * static_cast<double>(i);
  v.back() = max;
  return LevelSet(std::move(v));
}

std::size_t LevelSet::find(double value, double tol) const {
  auto it = std::lower_bound(values_.begin(), values_.end(), value - tol);
  if (it != values_.end() && std::abs(*it - value) <= tol)
    return static_cast<std::size_t>(it - values_.begin());
  return values_.size();
}

MixedRadixSpace::MixedRadixSpace(std::vector<LevelSet> dims) : dims_(std::move(dims)) {
  for (const auto& d : dims_) {
    const Index c = d.size();
    if (size_ > std::numeric_limits<Index>::max() / c)
      throw std::overflow_error("MixedRadixSpace: cardinality overflows 64 bits");
    size_ *= c;
  }
}

void MixedRadixSpace::check_index(Index i) const {
  if (i >= size_)
    throw std::out_of_range("MixedRadixSpace: index " + std::to_string(i) +
                            " out of range [0, " + std::to_string(size_) + ")");
}

void MixedRadixSpace::index_to_tuple(Index i, std::span<std::size_t> digits) const {
  check_index(i);
  if (digits.size() != dims_.size())
    throw std::invalid_argument("index_to_tuple: digit buffer has wrong rank");
  for (std::size_t d = dims_.size(); d-- > 0;) {
    const Index radix = dims_[d].size();
    digits[d] = static_cast<std::size_t>(i % radix);
    i /= radix;
  }
}

std::vector<std::size_t> MixedRadixSpace::index_to_tuple(Index i) const {
  std::vector<std::size_t> digits(dims_.size());
  index_to_tuple(i, digits);
  return digits;
}

Index MixedRadixSpace::tuple_to_index(std::span<const std::size_t> digits) const {
  if (digits.size() != dims_.size())
    throw std::invalid_argument("tuple_to_index: wrong rank");
  Index i = 0;
  for (std::size_t d = 0; d < dims_.size(); ++d) {
    if (digits[d] >= dims_[d].size())
      throw std::out_of_range("tuple_to_index: digit out of range");
    i = i * dims_[d].size() + digits[d];
  }
  return i;
}

void MixedRadixSpace::decode(Index i, std::span<double> out) const {
  check_index(i);
  if (out.size() != dims_.size())
    throw std::invalid_argument("decode: output buffer has wrong rank");
  for (std::size_t d = dims_.size(); d-- > 0;) {
    const Index radix = dims_[d].size();
    out[d] = dims_[d][static_cast<std::size_t>(i % radix)];
    i /= radix;
  }
}

std::vector<double> MixedRadixSpace::decode(Index i) const {
  std::vector<double> out(dims_.size());
  decode(i, out);
  return out;
}

MixedRadixSpace make_equidistant_space(std::span<const DimensionSpec> specs) {
  std::vector<LevelSet> dims;
  dims.reserve(specs.size());
  for (const auto& s : specs) dims.push_back(LevelSet::equidistant(s.min, s.max, s.count));
  return MixedRadixSpace(std::move(dims));
}

SubsetSpace::SubsetSpace(const MixedRadixSpace& parent, std::vector<Index> indices)
    : parent_(&parent), indices_(std::move(indices)) {
  std::vector<Index> sorted = indices_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("SubsetSpace: duplicate index");
  if (!sorted.empty() && sorted.back() >= parent.size())
    throw std::out_of_range("SubsetSpace: index outside parent space");
}

SubsetSpace sample_subset(const MixedRadixSpace& space, Index s, RandomStream& rng) {
  const Index n = space.size();
  if (s == 0 || s > n)
    throw std::invalid_argument("sample_subset: need 1 <= s <= N");
  // Partial Fisher-Yates over a virtual identity array; only displaced
  // slots are materialised.
  std::unordered_map<Index, Index> displaced;
  auto slot = [&](Index k) {
    auto it = displaced.find(k);
    return it == displaced.end() ? k : it->second;
  };
  std::vector<Index> out;
  out.reserve(s);
  for (Index k = 0; k < s; ++k) {
    const Index j = k + uniform_index(rng, n - k);
    const Index vj = slot(j);
    const Index vk = slot(k);
    displaced[j] = vk;
    out.push_back(vj);
  }
  return SubsetSpace(space, std::move(out));
}

MixedRadixSpace refine_around(const MixedRadixSpace& space, Index center,
                              const RefinementSpec& spec) {
  const std::size_t rank = space.rank();
  if (spec.half_width.size() != rank || spec.step.size() != rank)
    throw std::invalid_argument("refine_around: spec rank mismatch");
  const auto c = space.decode(center);
  std::vector<LevelSet> dims;
  dims.reserve(rank);
  for (std::size_t d = 0; d < rank; ++d) {
    const double step = spec.step[d];
    const double w = spec.half_width[d];
    if (!(step > 0.0)) throw std::invalid_argument("refine_around: step must be positive");
    if (!(w >= 0.0)) throw std::invalid_argument("refine_around: negative half-width");
    const double lo = space.dimension(d).min();
    const double hi = space.dimension(d).max();
    const auto k = static_cast<long long>(std::floor(w / step + 1e-9));
    std::vector<double> levels;
    for (long long j = -k; j <= k; ++j) {
      const double v = c[d] + static_cast<double>(j) * step;
      if (j == 0 || (v >= lo - 1e-12 && v <= hi + 1e-12))
        levels.push_back(j == 0 ? c[d] : std::clamp(v, lo, hi));
    }
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    dims.emplace_back(std::move(levels));
  }
  return MixedRadixSpace(std::move(dims));
}

}  // namespace trajsearch
