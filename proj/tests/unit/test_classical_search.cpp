#include <algorithm>
#include <cmath>
#include <numeric>

#include "doctest.h"
#include "trajsearch/classical_search.hpp"
#include "trajsearch/cost_table.hpp"

using namespace trajsearch;

namespace {

CostOracle table_oracle(std::vector<double> costs) {
  return [c = std::move(costs)](Index i) { return c.at(i); };
}

std::vector<double> random_costs(Index n, std::uint64_t seed, double infeasible_share = 0.0) {
  RandomStream rng(seed);
  std::vector<double> c(n);
  for (auto& x : c) x = uniform_unit(rng) < infeasible_share ? kInfeasible : uniform_unit(rng);
  return c;
}

// independent scan: first index of the smallest finite cost
std::pair<Index, double> linear_scan(const std::vector<double>& c) {
  Index best = 0;
  double cost = kInfeasible;
  for (Index i = 0; i < c.size(); ++i)
    if (std::isfinite(c[i]) && c[i] < cost) {
      cost = c[i];
      best = i;
    }
  return {best, cost};
}

}  // namespace

TEST_CASE("exhaustive: single state") {
  const auto o = exhaustive_min(table_oracle({3.5}), SearchDomain(Index{1}));
  CHECK(o.best_index == 0);
  CHECK(o.best_cost == 3.5);
  CHECK(o.classical_evals == 1);
  CHECK(o.grover_rotations == 0);
}

TEST_CASE("exhaustive: six known costs") {
  const std::vector<double> c{4.0, 2.5, kInfeasible, 1.25, 9.0, 1.5};
  const auto o = exhaustive_min(table_oracle(c), SearchDomain(Index{6}));
  const auto [idx, cost] = linear_scan(c);
  CHECK(o.best_index == idx);
  CHECK(o.best_cost == cost);
  CHECK(o.classical_evals == 6);
  CHECK(o.feasible_evals == 5);
}

TEST_CASE("exhaustive: ties go to the lowest index for every thread count") {
  std::vector<double> c(1000, 5.0);
  c[17] = 1.0;
  c[400] = 1.0;
  c[999] = 1.0;
  for (unsigned t : {1u, 2u, 3u, 7u, 64u}) {
    const auto o = exhaustive_min(table_oracle(c), SearchDomain(Index{c.size()}), {t});
    CHECK(o.best_index == 17);
  }
}

TEST_CASE("exhaustive: result independent of parallelism") {
  const auto c = random_costs(5000, 9, 0.3);
  const auto ref = exhaustive_min(table_oracle(c), SearchDomain(Index{c.size()}), {1});
  for (unsigned t : {2u, 5u, 16u}) {
    const auto o = exhaustive_min(table_oracle(c), SearchDomain(Index{c.size()}), {t});
    CHECK(o.best_index == ref.best_index);
    CHECK(o.best_cost == ref.best_cost);
    CHECK(o.feasible_evals == ref.feasible_evals);
  }
  const auto [idx, cost] = linear_scan(c);
  CHECK(ref.best_index == idx);
  CHECK(ref.best_cost == cost);
}

TEST_CASE("exhaustive: all infeasible is explicit") {
  const auto o = exhaustive_min(table_oracle({kInfeasible, kInfeasible}), SearchDomain(Index{2}));
  CHECK_FALSE(o.found());
  CHECK(o.classical_evals == 2);
  CHECK(o.feasible_evals == 0);
  CHECK_THROWS(exhaustive_min(table_oracle({}), SearchDomain(Index{0})));
}

TEST_CASE("evaluation counters are exact") {
  const auto c = random_costs(777, 4, 0.2);
  CountingOracle counted(table_oracle(c));
  const auto e = exhaustive_min(counted.as_oracle(), SearchDomain(Index{c.size()}), {3});
  CHECK(counted.calls() == e.classical_evals);
  CountingOracle counted2(table_oracle(c));
  RandomStream rng(2);
  const auto r = random_min(counted2.as_oracle(), SearchDomain(Index{c.size()}), 123, rng);
  CHECK(counted2.calls() == r.classical_evals);
  CHECK(r.classical_evals == 123);
}

TEST_CASE("random search: deterministic, single state, subset domain") {
  const auto c = random_costs(500, 5);
  RandomStream a(42), b(42);
  const auto ra = random_min(table_oracle(c), SearchDomain(Index{500}), 50, a);
  const auto rb = random_min(table_oracle(c), SearchDomain(Index{500}), 50, b);
  CHECK(ra.best_index == rb.best_index);
  CHECK(ra.best_cost == rb.best_cost);

  RandomStream rng(1);
  const auto one = random_min(table_oracle({2.0}), SearchDomain(Index{1}), 10, rng);
  CHECK(one.best_index == 0);
  CHECK(one.classical_evals == 10);

  const std::vector<Index> ids{7, 9, 11};
  const auto sub = random_min(table_oracle(c), SearchDomain(std::span<const Index>(ids)), 30, rng);
  CHECK(std::find(ids.begin(), ids.end(), sub.best_index) != ids.end());
  CHECK_THROWS(random_min(table_oracle(c), SearchDomain(Index{500}), 0, rng));
}

TEST_CASE("random search: incumbent is non-increasing in n and never beats exhaustive") {
  const auto c = random_costs(2000, 6, 0.4);
  const auto ex = exhaustive_min(table_oracle(c), SearchDomain(Index{c.size()}));
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    double prev = kInfeasible;
    for (std::uint64_t n : {1, 5, 20, 100, 400}) {
      RandomStream rng(seed);
      const auto r = random_min(table_oracle(c), SearchDomain(Index{c.size()}), n, rng);
      CHECK(r.best_cost <= prev);
      CHECK(ex.best_cost <= r.best_cost);
      prev = r.best_cost;
      for (std::size_t i = 1; i < r.trace.size(); ++i) CHECK(r.trace[i].cost < r.trace[i - 1].cost);
    }
  }
}

TEST_CASE("rank success probability") {
  CHECK(rank_success_probability(100, 1, 100) == 1.0);
  CHECK(rank_success_probability(5, 0, 100) == 0.0);
  double miss = 1.0;
  for (int i = 0; i < 50; ++i) miss *= 0.95;
  CHECK(rank_success_probability(5, 50, 100) == doctest::Approx(1.0 - miss).epsilon(1e-14));
  CHECK(rank_success_probability(5, 50, 100) == doctest::Approx(0.923055).epsilon(1e-6));
  CHECK_THROWS(rank_success_probability(0, 5, 100));
  CHECK_THROWS(rank_success_probability(101, 5, 100));
}

TEST_CASE("random search obeys the rank law") {
  // cost(i) = i, so rank <= r means index < r
  std::vector<double> c(100);
  std::iota(c.begin(), c.end(), 0.0);
  const int runs = 1000;
  int hits = 0;
  for (int s = 0; s < runs; ++s) {
    RandomStream rng(mix_seed(99, static_cast<std::uint64_t>(s)));
    hits += random_min(table_oracle(c), SearchDomain(Index{100}), 50, rng).best_index < 5 ? 1 : 0;
  }
  const double p = rank_success_probability(5, 50, 100);
  const double sigma = std::sqrt(runs * p * (1 - p));
  CHECK(std::abs(hits - runs * p) <= 3 * sigma);
}

TEST_CASE("hybrid: zero width adds exactly one evaluation") {
  const auto space = make_equidistant_space(std::vector<DimensionSpec>{{0, 1, 11}, {0, 1, 11}});
  const OracleFactory f = [](const MixedRadixSpace& s) {
    return CostOracle([s](Index i) {
      const auto v = s.decode(i);
      return (v[0] - 0.3) * (v[0] - 0.3) + (v[1] - 0.6) * (v[1] - 0.6);
    });
  };
  RandomStream a(3), b(3);
  const auto h = hybrid_min(f, space, 20, {{0.0, 0.0}, {0.1, 0.1}}, a);
  const auto r = random_min(f(space), SearchDomain(space), 20, b);
  CHECK(h.combined.classical_evals == 21);
  CHECK(h.combined.best_cost == r.best_cost);
  CHECK(h.refined_space->size() == 1);
}

TEST_CASE("hybrid: finds a planted minimum inside the refinement box") {
  const auto space = make_equidistant_space(std::vector<DimensionSpec>{{0, 1, 11}, {0, 1, 11}});
  // smooth bowl centred off-grid at (0.33, 0.57); planted spike at the
  // fine-grid point (0.34, 0.56)
  const OracleFactory f = [](const MixedRadixSpace& s) {
    return CostOracle([s](Index i) {
      const auto v = s.decode(i);
      if (std::abs(v[0] - 0.34) < 1e-9 && std::abs(v[1] - 0.56) < 1e-9) return -1.0;
      return (v[0] - 0.33) * (v[0] - 0.33) + (v[1] - 0.57) * (v[1] - 0.57);
    });
  };
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    RandomStream rng(seed);
    const auto h = hybrid_min(f, space, 121 * 4, {{0.1, 0.1}, {0.01, 0.01}}, rng);
    CHECK(h.combined.best_cost == -1.0);
    CHECK(h.best_in_refined);
    CHECK(h.best_point[0] == doctest::Approx(0.34));
    CHECK(h.best_point[1] == doctest::Approx(0.56));
    CHECK(h.combined.best_cost <= h.random_phase.best_cost);
    CHECK(h.combined.classical_evals == h.random_phase.classical_evals + h.refined_phase.classical_evals);
  }
}

TEST_CASE("hybrid: explicit refined space is used as given") {
  const auto space = make_equidistant_space(std::vector<DimensionSpec>{{0, 1, 5}});
  const OracleFactory f = [](const MixedRadixSpace& s) {
    return CostOracle([s](Index i) { return std::abs(s.decode(i)[0] - 0.77); });
  };
  const MixedRadixSpace fine({LevelSet({0.7, 0.75, 0.77, 0.8})});
  RandomStream rng(0);
  const auto h = hybrid_min(f, space, 3, {}, rng, fine);
  CHECK(h.refined_space->size() == 4);
  CHECK(h.combined.best_cost == doctest::Approx(0.0));
  CHECK(h.refined_phase.feasible_evals == 4);
}

TEST_CASE("cost table reproduces the oracle") {
  const auto c = random_costs(300, 8, 0.5);
  const auto t = CostTable::build(table_oracle(c), c.size(), 4);
  CHECK(t.size() == 300);
  std::uint64_t feasible = 0;
  for (Index i = 0; i < c.size(); ++i) {
    CHECK((t[i] == c[i]));
    feasible += std::isfinite(c[i]) ? 1 : 0;
  }
  CHECK(t.feasible_count() == feasible);
  CHECK(t.oracle()(5) == c[5]);
}
