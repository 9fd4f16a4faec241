#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>

#include "doctest.h"
#include "trajsearch/discrete_space.hpp"

using namespace trajsearch;

TEST_CASE("level set validation") {
  CHECK_THROWS_AS(LevelSet(std::vector<double>{}), std::invalid_argument);
  CHECK_THROWS_AS(LevelSet({0.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(LevelSet({1.0, 0.5}), std::invalid_argument);
  CHECK_THROWS_AS(LevelSet({0.0, std::nan("")}), std::invalid_argument);
  CHECK_THROWS(LevelSet::equidistant(0.0, 1.0, 0));
  CHECK_THROWS(LevelSet::equidistant(0.0, 1.0, 1));
  CHECK(LevelSet::equidistant(0.5, 0.5, 1).size() == 1);
}

TEST_CASE("equidistant levels hit both endpoints exactly") {
  const auto l = LevelSet::equidistant(0.0, 2.0, 41);
  CHECK(l.size() == 41);
  CHECK(l.min() == 0.0);
  CHECK(l.max() == 2.0);
  for (std::size_t i = 0; i < l.size(); ++i) CHECK(l[i] == doctest::Approx(2.0 * i / 40.0).epsilon(1e-15));
  CHECK(l.find(0.95) == 19);
  CHECK(l.find(0.951) == l.size());
}

TEST_CASE("mixed radix order: dimension 0 varies slowest") {
  const MixedRadixSpace s({LevelSet({0, 1}), LevelSet({0, 1, 2}), LevelSet({0, 1, 2, 3})});
  REQUIRE(s.size() == 24);
  // independent oracle: nested loops in lexicographic order
  Index expect = 0;
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 3; ++b)
      for (std::size_t c = 0; c < 4; ++c, ++expect) {
        const std::vector<std::size_t> t{a, b, c};
        CHECK(s.tuple_to_index(t) == expect);
        CHECK(s.index_to_tuple(expect) == t);
        const auto v = s.decode(expect);
        CHECK(v == std::vector<double>{double(a), double(b), double(c)});
      }
}

TEST_CASE("mixed radix round trip over a random-radix space") {
  RandomStream rng(7);
  for (int rep = 0; rep < 20; ++rep) {
    std::vector<LevelSet> dims;
    const int rank = 1 + static_cast<int>(uniform_index(rng, 4));
    for (int d = 0; d < rank; ++d)
      dims.push_back(LevelSet::equidistant(0.0, 1.0, 2 + static_cast<std::size_t>(uniform_index(rng, 6))));
    const MixedRadixSpace s(dims);
    std::set<std::vector<std::size_t>> seen;
    for (Index i = 0; i < s.size(); ++i) {
      const auto t = s.index_to_tuple(i);
      CHECK(s.tuple_to_index(t) == i);
      seen.insert(t);
    }
    CHECK(seen.size() == s.size());
  }
}

TEST_CASE("mixed radix errors") {
  const MixedRadixSpace s({LevelSet({0, 1}), LevelSet({0, 1, 2})});
  CHECK_THROWS_AS(s.decode(6), std::out_of_range);
  CHECK_THROWS_AS(s.tuple_to_index(std::vector<std::size_t>{2, 0}), std::out_of_range);
  CHECK_THROWS(s.tuple_to_index(std::vector<std::size_t>{0}));
  // 2^13 levels in 5 dimensions is 2^65 states
  std::vector<DimensionSpec> big(5, DimensionSpec{0.0, 1.0, 8192});
  CHECK_THROWS_AS(make_equidistant_space(big), std::overflow_error);
}

TEST_CASE("subset sampling draws without replacement") {
  const auto space = make_equidistant_space(std::vector<DimensionSpec>{{0, 1, 10}, {0, 1, 10}});
  RandomStream rng(3);
  const auto sub = sample_subset(space, 40, rng);
  CHECK(sub.size() == 40);
  std::set<Index> distinct(sub.indices().begin(), sub.indices().end());
  CHECK(distinct.size() == 40);
  CHECK(*distinct.rbegin() < space.size());

  const auto all = sample_subset(space, space.size(), rng);
  std::set<Index> every(all.indices().begin(), all.indices().end());
  CHECK(every.size() == space.size());

  CHECK_THROWS(sample_subset(space, space.size() + 1, rng));
  CHECK_THROWS(SubsetSpace(space, {1, 1}));
  CHECK_THROWS(SubsetSpace(space, {100}));
}

TEST_CASE("subset sampling is uniform over elements") {
  // each of N = 10 elements lands in a size-3 subset with probability 0.3
  const MixedRadixSpace space({LevelSet::equidistant(0, 9, 10)});
  RandomStream rng(11);
  const int reps = 20000;
  std::map<Index, int> hits;
  for (int r = 0; r < reps; ++r) {
    const auto subset = sample_subset(space, 3, rng);
    for (Index i : subset.indices()) ++hits[i];
  }
  const double sigma = std::sqrt(reps * 0.3 * 0.7);
  for (Index i = 0; i < 10; ++i) CHECK(std::abs(hits[i] - reps * 0.3) < 5 * sigma);
}

TEST_CASE("refine_around contains the centre and stays inside the parent box") {
  const auto space = make_equidistant_space(std::vector<DimensionSpec>{{0, 2, 41}, {0, 2, 41}});
  RandomStream rng(5);
  for (int rep = 0; rep < 50; ++rep) {
    const Index c = uniform_index(rng, space.size());
    const auto centre = space.decode(c);
    const auto r = refine_around(space, c, {{0.1, 0.05}, {0.01, 0.025}});
    for (std::size_t d = 0; d < 2; ++d) {
      const auto& lv = r.dimension(d);
      CHECK(lv.find(centre[d], 1e-12) < lv.size());
      CHECK(lv.min() >= 0.0);
      CHECK(lv.max() <= 2.0);
    }
  }
  const auto corner = refine_around(space, 0, {{0.1, 0.1}, {0.01, 0.01}});
  CHECK(corner.dimension(0).size() == 11);  // 0 .. 0.1, clipped below
  const auto interior = refine_around(space, space.tuple_to_index(std::vector<std::size_t>{20, 20}),
                                      {{0.1, 0.1}, {0.01, 0.01}});
  CHECK(interior.size() == 21 * 21);
}

TEST_CASE("refinement of width zero is the centre alone") {
  const auto space = make_equidistant_space(std::vector<DimensionSpec>{{0, 1, 5}, {0, 1, 5}});
  const auto r = refine_around(space, 7, {{0.0, 0.0}, {0.1, 0.1}});
  CHECK(r.size() == 1);
  CHECK(r.decode(0) == space.decode(7));
}

TEST_CASE("search domain maps positions to oracle indices") {
  const MixedRadixSpace space({LevelSet::equidistant(0, 9, 10)});
  const SearchDomain full(space);
  CHECK(full.size() == 10);
  CHECK(full.at(4) == 4);
  const SubsetSpace sub(space, {9, 2, 5});
  const SearchDomain part(sub);
  CHECK(part.size() == 3);
  CHECK(part.at(0) == 9);
  CHECK(part.at(2) == 5);
}
