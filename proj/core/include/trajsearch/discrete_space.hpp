#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "trajsearch/types.hpp"

namespace trajsearch {

/// Strictly increasing, nonempty list of admissible values for one dimension.
class LevelSet {
 public:
  explicit LevelSet(std::vector<double> values);

  /// `count` equally spaced levels from min to max inclusive. count == 1
  /// requires min == max.
  static LevelSet equidistant(double min, double max, std::size_t count);

  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  double min() const { return values_.front(); }
  double max() const { return values_.back(); }
  std::span<const double> values() const { return values_; }

  /// Position of `value` (exact match within `tol`), or size() if absent.
  std::size_t find(double value, double tol = 1e-12) const;

 private:
  std::vector<double> values_;
};

struct DimensionSpec {
  double min = 0.0;
  double max = 0.0;
  std::size_t count = 1;
};

/// Cartesian product of level sets with most-significant-first mixed-radix
/// indexing: dimension 0 varies slowest.
class MixedRadixSpace {
 public:
  explicit MixedRadixSpace(std::vector<LevelSet> dims);

  Index size() const { return size_; }
  std::size_t rank() const { return dims_.size(); }
  const LevelSet& dimension(std::size_t i) const { return dims_[i]; }
  std::span<const LevelSet> dimensions() const { return dims_; }

  std::vector<std::size_t> index_to_tuple(Index i) const;
  void index_to_tuple(Index i, std::span<std::size_t> digits) const;
  Index tuple_to_index(std::span<const std::size_t> digits) const;

  std::vector<double> decode(Index i) const;
  void decode(Index i, std::span<double> out) const;

 private:
  void check_index(Index i) const;

  std::vector<LevelSet> dims_;
  Index size_ = 1;
};

MixedRadixSpace make_equidistant_space(std::span<const DimensionSpec> specs);

/// A sample of parent indices drawn without replacement.
class SubsetSpace {
 public:
  SubsetSpace(const MixedRadixSpace& parent, std::vector<Index> indices);

  const MixedRadixSpace& parent() const { return *parent_; }
  Index size() const { return indices_.size(); }
  Index operator[](Index k) const { return indices_[k]; }
  std::span<const Index> indices() const { return indices_; }

 private:
  const MixedRadixSpace* parent_;
  std::vector<Index> indices_;
};

/// s indices uniform without replacement (sparse partial Fisher-Yates, so
/// the draw does not allocate O(N) for huge spaces).
SubsetSpace sample_subset(const MixedRadixSpace& space, Index s, RandomStream& rng);

struct RefinementSpec {
  /// Per-dimension half-width, in the same units as the level values.
  std::vector<double> half_width;
  /// Per-dimension step of the refined grid.
  std::vector<double> step;
};

/// Finer grid centred on the decoded `center`, clipped to each parent
/// dimension's [min, max]. Always contains the centre value.
MixedRadixSpace refine_around(const MixedRadixSpace& space, Index center,
                              const RefinementSpec& spec);

/// The set of oracle indices a search runs over: either all of [0, N) or an
/// explicit list. Non-owning; the backing list must outlive the domain.
class SearchDomain {
 public:
  explicit SearchDomain(Index n) : size_(n) {}
  explicit SearchDomain(const MixedRadixSpace& space) : size_(space.size()) {}
  explicit SearchDomain(const SubsetSpace& subset)
      : size_(subset.size()), explicit_(subset.indices()) {}
  explicit SearchDomain(std::span<const Index> indices)
      : size_(indices.size()), explicit_(indices) {}

  Index size() const { return size_; }
  /// Oracle index of the k-th domain element.
  Index at(Index k) const { return explicit_.empty() ? k : explicit_[k]; }

 private:
  Index size_;
  std::span<const Index> explicit_;
};

}  // namespace trajsearch
