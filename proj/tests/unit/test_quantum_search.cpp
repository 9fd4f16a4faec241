#include <cmath>
#include <numbers>
#include <numeric>

#include "doctest.h"
#include "trajsearch/quantum_search.hpp"

using namespace trajsearch;

namespace {

// Closed form for Grover success with M of N marked after r iterations,
// written from the angle directly rather than through GroverModel.
double closed_form(double N, double M, double r) {
  const double a = std::asin(std::sqrt(M / N));
  const double s = std::sin((2.0 * r + 1.0) * a);
  return s * s;
}

CostOracle vector_oracle(std::vector<double> c) {
  return [c = std::move(c)](Index i) { return c.at(i); };
}

}  // namespace

TEST_CASE("Grover model basics") {
  CHECK(grover_success_probability(100, 7, 0) == doctest::Approx(0.07).epsilon(1e-14));
  CHECK(grover_success_probability(4, 1, 1) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(grover_success_probability(9, 9, 3) == 1.0);
  CHECK(grover_success_probability(9, 0, 3) == 0.0);
  for (Index N : {2u, 10u, 1000u})
    for (Index M = 1; M <= N; M += std::max<Index>(1, N / 7))
      for (std::uint64_t r = 0; r < 30; ++r) {
        const double p = grover_success_probability(N, M, r);
        CHECK(p >= 0.0);
        CHECK(p <= 1.0 + 1e-15);
        CHECK(p == doctest::Approx(closed_form(double(N), double(M), double(r))).epsilon(1e-12));
      }
  CHECK_THROWS(GroverModel(4, 5));
}

TEST_CASE("optimal rotations match brute force") {
  // searched range: through the first peak and up to 2 sqrt(N)
  for (Index N = 1; N <= 64; ++N)
    for (Index M = 1; M <= N; ++M) {
      const double theta = 2.0 * std::asin(std::sqrt(double(M) / double(N)));
      const double first = std::max(0.0, std::round((std::numbers::pi / (2.0 * theta) - 1.0) / 2.0));
      const auto limit = std::max<std::uint64_t>(static_cast<std::uint64_t>(first) + 1,
                                                 static_cast<std::uint64_t>(2.0 * std::sqrt(double(N))));
      double best_p = -1.0;
      for (std::uint64_t r = 0; r <= limit; ++r)
        best_p = std::max(best_p, closed_form(double(N), double(M), double(r)));
      const auto r = optimal_rotations(N, M);
      CHECK(r <= limit);
      CHECK(closed_form(double(N), double(M), double(r)) == doctest::Approx(best_p).epsilon(1e-12));
      // nothing earlier is materially better
      for (std::uint64_t q = 0; q < r; ++q)
        CHECK(closed_form(double(N), double(M), double(q)) < best_p + 1e-12);
    }
  CHECK(optimal_rotations(7, 7) == 0);
  // 2^20 states, one marked: floor(pi/4 sqrt(N)) = 804
  CHECK(optimal_rotations(Index{1} << 20, 1) == 804);
  CHECK_THROWS(optimal_rotations(10, 0));
}

TEST_CASE("statevector gates") {
  Statevector a(5), b(5);
  a.hadamard_all();
  b.hadamard_all();
  const std::vector<Index> marked{3, 17, 30};
  for (int i = 0; i < 4; ++i) {
    a.phase_flip(marked);
    b.phase_flip(marked);
    a.diffusion();
    b.invert_about_mean();
    for (Index k = 0; k < a.dimension(); ++k)
      CHECK(a.amplitudes()[k] == doctest::Approx(b.amplitudes()[k]).epsilon(1e-13));
    CHECK(a.norm_squared() == doctest::Approx(1.0).epsilon(1e-13));
  }
  Statevector h(3);
  h.hadamard(0);
  h.hadamard(0);
  CHECK(h.amplitudes()[0] == doctest::Approx(1.0));
  CHECK_THROWS(Statevector(Statevector::kMaxQubits + 1));
}

TEST_CASE("statevector amplitudes follow the rotation formula") {
  const std::vector<Index> marked{5, 6};
  const double N = 16, M = 2;
  const double a = std::asin(std::sqrt(M / N));
  for (std::uint64_t r = 0; r < 8; ++r) {
    const auto amp = statevector_grover(4, marked, r);
    const double good = std::sin((2.0 * double(r) + 1.0) * a) / std::sqrt(M);
    const double bad = std::cos((2.0 * double(r) + 1.0) * a) / std::sqrt(N - M);
    for (Index k = 0; k < 16; ++k) {
      const bool is_marked = k == 5 || k == 6;
      CHECK(amp[k] == doctest::Approx(is_marked ? good : bad).epsilon(1e-12));
    }
  }
  const auto one = statevector_grover(2, std::vector<Index>{2}, 1);
  CHECK(one[2] * one[2] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS(statevector_grover(3, std::vector<Index>{}, 1));
  CHECK_THROWS(statevector_grover(3, std::vector<Index>{1, 1}, 1));
}

TEST_CASE("sampler edge cases and marked counts") {
  const std::vector<double> c{3.0, 1.0, 2.0, 1.0, kInfeasible};
  const GroverSampler s(vector_oracle(c), SearchDomain(Index{5}), 2);
  CHECK(s.size() == 5);
  CHECK(s.marked_count(1.0) == 0);
  CHECK(s.marked_count(1.5) == 2);
  CHECK(s.marked_count(kInfeasible) == 4);
  RandomStream rng(1);
  QueryLedger ledger;
  // nothing marked: never returns something below the threshold
  for (int i = 0; i < 50; ++i) CHECK(s.cost(s.sample(1.0, 3, rng, ledger)) >= 1.0);
  CHECK(ledger.rotations == 150);
  CHECK(ledger.classical_evals == 50);
  // everything marked
  const GroverSampler all(vector_oracle({3.0, 1.0, 2.0}), SearchDomain(Index{3}));
  CHECK(all.marked_count(1e300) == 3);
  for (int i = 0; i < 50; ++i) CHECK(all.cost(all.sample(1e300, 2, rng, ledger)) < 1e300);
}

TEST_CASE("sampler measurement frequency matches the model") {
  std::vector<double> c(1024);
  std::iota(c.begin(), c.end(), 0.0);
  const GroverSampler s(vector_oracle(c), SearchDomain(Index{1024}));
  RandomStream rng(77);
  QueryLedger ledger;
  const int runs = 20000;
  for (std::uint64_t r : {0u, 3u, 7u}) {
    int hits = 0;
    for (int i = 0; i < runs; ++i) hits += s.sample(10.0, r, rng, ledger) < 10 ? 1 : 0;
    const double p = closed_form(1024, 10, double(r));
    const double sigma = std::sqrt(runs * p * (1 - p));
    CHECK(std::abs(hits - runs * p) <= 4 * sigma + 1);
  }
}

TEST_CASE("Durr-Hoyer: single state and accounting") {
  RandomStream rng(3);
  const auto one = durr_hoyer_min(vector_oracle({4.0}), SearchDomain(Index{1}), rng);
  CHECK(one.search.best_index == 0);
  CHECK(one.search.grover_rotations == 0);
  CHECK(one.ledger.simulator_evals == 1);

  std::vector<double> c(500);
  RandomStream gen(11);
  for (auto& x : c) x = uniform_unit(gen);
  const GroverSampler s(vector_oracle(c), SearchDomain(Index{500}));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    RandomStream r(seed);
    const auto o = durr_hoyer_min(s, SearchDomain(Index{500}), r);
    CHECK(o.search.grover_rotations == o.ledger.rotations);
    CHECK(o.search.classical_evals == o.ledger.classical_evals);
    CHECK(o.ledger.simulator_evals == 0);
    CHECK(double(o.ledger.rotations) >= durr_hoyer_budget(500));
    CHECK(double(o.ledger.rotations) <= durr_hoyer_budget(500) + double(o.report.largest_draw_cap));
    CHECK(o.report.theoretical_cost == theoretical_quantum_cost(500, 2.46));
    CHECK(o.search.best_cost == c[o.search.best_index]);
    for (std::size_t i = 1; i < o.search.trace.size(); ++i)
      CHECK(o.search.trace[i].cost < o.search.trace[i - 1].cost);
  }
}

TEST_CASE("Durr-Hoyer finds the minimum with high probability") {
  std::vector<double> c(1024);
  RandomStream gen(5);
  for (auto& x : c) x = uniform_unit(gen);
  const auto best = static_cast<Index>(std::min_element(c.begin(), c.end()) - c.begin());
  const GroverSampler s(vector_oracle(c), SearchDomain(Index{1024}));
  int hits = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    RandomStream r(mix_seed(1, seed));
    hits += durr_hoyer_min(s, SearchDomain(Index{1024}), r).search.best_index == best ? 1 : 0;
  }
  CHECK(hits >= 90);
}

TEST_CASE("theoretical costs") {
  CHECK(theoretical_quantum_cost(2825761, 2.46) == 4135);
  CHECK(theoretical_quantum_cost(5000, 2.46) == 174);
  CHECK(theoretical_quantum_cost(3249, 2.46) == 140);
  CHECK(theoretical_quantum_cost(5000, 2.46) + theoretical_quantum_cost(3249, 2.46) == 314);
  CHECK(theoretical_quantum_cost(1, 2.46) == 2);
  CHECK(durr_hoyer_budget(1024) == doctest::Approx(22.5 * 32 + 1.4 * 100));
}

TEST_CASE("quantum random and hybrid") {
  const auto space = make_equidistant_space(std::vector<DimensionSpec>{{0, 1, 21}, {0, 1, 21}});
  const OracleFactory f = [](const MixedRadixSpace& sp) {
    return CostOracle([sp](Index i) {
      const auto v = sp.decode(i);
      return (v[0] - 0.31) * (v[0] - 0.31) + (v[1] - 0.64) * (v[1] - 0.64);
    });
  };
  const auto global = exhaustive_min(f(space), SearchDomain(space));
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    RandomStream rng(seed);
    const auto q = quantum_random_min(f(space), space, 50, rng);
    CHECK(q.search.best_cost >= global.best_cost);
    CHECK(q.report.theoretical_cost == theoretical_quantum_cost(50, 2.46));

    RandomStream rng2(seed);
    const auto h = quantum_hybrid_min(f, space, 50, {{0.05, 0.05}, {0.01, 0.01}}, rng2);
    CHECK(h.combined.search.best_cost <= h.random_phase.search.best_cost);
    CHECK(h.combined.ledger.rotations ==
          h.random_phase.ledger.rotations + h.refined_phase.ledger.rotations);
    CHECK(h.combined.report.theoretical_cost ==
          theoretical_quantum_cost(50, 2.46) +
              theoretical_quantum_cost(h.refined_space->size(), 2.46));

    RandomStream rng3(seed);
    const auto z = quantum_hybrid_min(f, space, 50, {{0.0, 0.0}, {0.01, 0.01}}, rng3);
    CHECK(z.refined_space->size() == 1);
    CHECK(z.combined.report.theoretical_cost ==
          theoretical_quantum_cost(50, 2.46) + 2);  // round(eps) for one state
  }
}
