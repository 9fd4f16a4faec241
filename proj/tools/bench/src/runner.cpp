#include "trajsearch/bench/runner.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <fmt/format.h>
#include <thread>

#include "json.hpp"
#include "trajsearch/bench/problem_setup.hpp"
#include "trajsearch/classical_search.hpp"
#include "trajsearch/quantum_search.hpp"

namespace trajsearch::bench {

std::uint64_t trial_seed(std::uint64_t seed, int trial) {
  return mix_seed(seed, static_cast<std::uint64_t>(trial));
}

namespace {

ResultRow run_trial(const RunConfig& cfg, const ProblemSetup& setup, const CostOracle& oracle, int trial) {
  ResultRow row;
  row.problem = to_string(cfg.problem);
  row.method = to_string(cfg.method);
  row.trial = trial;
  row.N = setup.space.size();
  row.seed = trial_seed(cfg.seed, trial);
  RandomStream rng(row.seed);
  // hybrid methods see the cached oracle for the coarse space and the live
  // one for any refined grid
  const OracleFactory factory = [&](const MixedRadixSpace& s) {
    return &s == &setup.space ? oracle : setup.factory(s);
  };
  const DurrHoyerOptions dh{cfg.lambda, cfg.epsilon};
  const ExhaustiveOptions ex{cfg.threads};

  const auto start = std::chrono::steady_clock::now();
  double best = kInfeasible;
  switch (cfg.method) {
    case Method::exhaustive: {
      const auto o = exhaustive_min(oracle, setup.space, ex);
      row.cost_metric = o.classical_evals;
      best = o.best_cost;
      if (o.found()) row.best_point = setup.space.decode(o.best_index);
      break;
    }
    case Method::random: {
      const auto o = random_min(oracle, SearchDomain(setup.space), cfg.n_random, rng);
      row.cost_metric = o.classical_evals;
      best = o.best_cost;
      if (o.found()) row.best_point = setup.space.decode(o.best_index);
      break;
    }
    case Method::hybrid: {
      const auto o = hybrid_min(factory, setup.space, cfg.n_random, default_refinement(cfg, setup.space),
                                rng, explicit_refined_space(cfg), ex);
      row.cost_metric = o.combined.classical_evals;
      best = o.combined.best_cost;
      if (o.combined.found()) row.best_point = o.best_point;
      break;
    }
    case Method::q_exhaustive: {
      const auto o = quantum_exhaustive_min(oracle, setup.space, rng, dh);
      row.cost_metric = o.report.simulated_rotations;
      row.theoretical_cost = o.report.theoretical_cost;
      best = o.search.best_cost;
      if (o.search.found()) row.best_point = setup.space.decode(o.search.best_index);
      break;
    }
    case Method::q_random: {
      if (cfg.subset > setup.space.size()) throw ConfigError("subset larger than the space");
      const auto o = quantum_random_min(oracle, setup.space, cfg.subset, rng, dh);
      row.cost_metric = o.report.simulated_rotations;
      row.theoretical_cost = o.report.theoretical_cost;
      best = o.search.best_cost;
      if (o.search.found()) row.best_point = setup.space.decode(o.search.best_index);
      break;
    }
    case Method::q_hybrid: {
      if (cfg.subset > setup.space.size()) throw ConfigError("subset larger than the space");
      const auto o = quantum_hybrid_min(factory, setup.space, cfg.subset,
                                        default_refinement(cfg, setup.space), rng,
                                        explicit_refined_space(cfg), dh);
      row.cost_metric = o.combined.report.simulated_rotations;
      row.theoretical_cost = o.combined.report.theoretical_cost;
      best = o.combined.search.best_cost;
      if (o.combined.search.found()) row.best_point = o.best_point;
      break;
    }
  }
  row.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (is_feasible(best)) {
    row.best_cost = setup.reported(best);
    if (setup.analytic)
      row.error_pct = 100.0 * std::abs(*row.best_cost - *setup.analytic) / std::abs(*setup.analytic);
  }
  return row;
}

std::string num(double v) { return fmt::format("{:.12g}", v); }

}  // namespace

std::vector<ResultRow> run(const RunConfig& cfg, const CostTable* cache) {
  const auto setup = make_problem(cfg);
  if (cache && cache->size() != setup.space.size())
    throw std::invalid_argument("run: cost cache does not match the space");
  const CostOracle oracle = cache ? cache->oracle() : setup.factory(setup.space);

  std::vector<ResultRow> rows(static_cast<std::size_t>(cfg.trials));
  std::vector<std::exception_ptr> errors(rows.size());
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned workers = std::min<unsigned>(hw, static_cast<unsigned>(rows.size()));
  auto work = [&](unsigned w) {
    for (std::size_t t = w; t < rows.size(); t += workers) {
      try {
        rows[t] = run_trial(cfg, setup, oracle, static_cast<int>(t));
      } catch (...) {
        errors[t] = std::current_exception();
      }
    }
  };
  if (workers <= 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return rows;
}

void write_rows_csv(std::ostream& os, const std::vector<ResultRow>& rows, bool timing) {
  os << "problem,method,trial,N,cost_metric,theoretical_cost,best_cost,error_pct,seed,wall_ms\n";
  for (const auto& r : rows) {
    os << r.problem << ',' << r.method << ',' << r.trial << ',' << r.N << ',' << r.cost_metric << ','
       << (r.theoretical_cost ? std::to_string(*r.theoretical_cost) : "") << ','
       << (r.best_cost ? num(*r.best_cost) : "") << ',' << (r.error_pct ? num(*r.error_pct) : "")
       << ',' << r.seed << ',' << (timing ? fmt::format("{:.3f}", r.wall_ms) : "") << '\n';
  }
}

void write_rows_json(std::ostream& os, const std::vector<ResultRow>& rows, bool timing) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json j = {{"problem", r.problem},   {"method", r.method},
                        {"trial", r.trial},       {"N", r.N},
                        {"cost_metric", r.cost_metric},
                        {"theoretical_cost", r.theoretical_cost ? nlohmann::json(*r.theoretical_cost) : nlohmann::json(nullptr)},
                        {"best_cost", r.best_cost ? nlohmann::json(*r.best_cost) : nlohmann::json(nullptr)},
                        {"error_pct", r.error_pct ? nlohmann::json(*r.error_pct) : nlohmann::json(nullptr)},
                        {"seed", r.seed},
                        {"wall_ms", timing ? nlohmann::json(r.wall_ms) : nlohmann::json(nullptr)},
                        {"best_point", r.best_point}};
    arr.push_back(std::move(j));
  }
  os << arr.dump(2) << '\n';
}

std::string provenance_line(const std::string& what) {
  const std::time_t now = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return fmt::format("# trajsearch {} {}", what, buf);
}

}  // namespace trajsearch::bench
