#include <fstream>
#include <iostream>
#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "trajsearch/bench/config.hpp"
#include "trajsearch/bench/problem_setup.hpp"
#include "trajsearch/bench/runner.hpp"
#include "trajsearch/bench/tables.hpp"

namespace {

using namespace trajsearch;
using namespace trajsearch::bench;

enum Exit { kOk = 0, kConfig = 2, kNoFeasible = 3, kIo = 4 };

struct Overrides {
  std::string config;
  std::optional<std::string> problem, method, format;
  std::optional<std::uint64_t> seed, n_random, subset;
  std::optional<int> trials, samples;
  std::optional<double> epsilon, lambda;
  std::optional<unsigned> threads;
  std::optional<std::string> out, emit_path;
  bool no_header = false;
  bool no_timing = false;
};

void add_common(CLI::App* app, Overrides& o) {
  app->add_option("--config", o.config, "JSON config file; flags override it");
  app->add_option("--problem", o.problem, "brach-physical | brach-coeff | isoperimetric | moon");
  app->add_option("--seed", o.seed, "64-bit base seed");
  app->add_option("--epsilon", o.epsilon, "quantum cost prefactor");
  app->add_option("--lambda", o.lambda, "minimum-finding growth factor");
  app->add_option("--threads", o.threads, "worker threads (0: all cores)");
  app->add_option("--out", o.out, "output file (default stdout)");
  app->add_option("--format", o.format, "csv | json");
  app->add_flag("--no-header", o.no_header, "omit the timestamped provenance line");
}

RunConfig resolve(const Overrides& o) {
  RunConfig c = o.config.empty() ? RunConfig{} : load_config(o.config);
  if (o.problem) c.problem = parse_problem(*o.problem);
  if (o.method) c.method = parse_method(*o.method);
  if (o.format) c.format = parse_format(*o.format);
  if (o.seed) c.seed = *o.seed;
  if (o.trials) c.trials = *o.trials;
  if (o.n_random) c.n_random = *o.n_random;
  if (o.subset) c.subset = *o.subset;
  if (o.epsilon) c.epsilon = *o.epsilon;
  if (o.lambda) c.lambda = *o.lambda;
  if (o.threads) c.threads = *o.threads;
  if (o.samples) c.path_samples = *o.samples;
  if (o.out) c.out = *o.out;
  if (o.emit_path) c.emit_path = *o.emit_path;
  if (o.no_header) c.header = false;
  if (o.no_timing) c.timing = false;
  c.validate();
  return c;
}

/// Runs `fn` against stdout or a freshly opened file.
template <class Fn>
void with_output(const std::string& path, Fn&& fn) {
  if (path.empty() || path == "-") {
    fn(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream f(path);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  fn(f);
  f.flush();
  if (!f) throw IoError("write to '" + path + "' failed");
}

std::vector<double> parse_values(const std::string& s) {
  std::vector<double> v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ConfigError("bad number '" + item + "' in --values");
    }
  }
  if (v.empty()) throw ConfigError("--values is empty");
  return v;
}

int cmd_run(const Overrides& o) {
  const RunConfig c = resolve(o);
  const auto rows = run(c);
  with_output(c.out, [&](std::ostream& os) {
    if (c.format == Format::json) {
      write_rows_json(os, rows, c.timing);
    } else {
      if (c.header) os << provenance_line("run") << '\n';
      write_rows_csv(os, rows, c.timing);
    }
  });
  const bool any = std::any_of(rows.begin(), rows.end(), [](const ResultRow& r) { return r.best_cost.has_value(); });
  if (!any) {
    std::cerr << "no feasible state found in any trial\n";
    return kNoFeasible;
  }
  if (!c.emit_path.empty()) {
    const auto& first = rows.front();
    if (first.best_cost)
      with_output(c.emit_path, [&](std::ostream& os) { write_path(os, c, first.best_point, c.path_samples); });
  }
  return kOk;
}

int cmd_table(const Overrides& o, const std::string& name, bool skip_coefficient_space) {
  const RunConfig c = resolve(o);
  TableOptions opts;
  opts.seed = c.seed;
  opts.epsilon = c.epsilon;
  opts.lambda = c.lambda;
  opts.threads = c.threads;
  opts.coefficient_space = !skip_coefficient_space;
  const auto rows = make_table(name, opts);
  write_table_text(std::cout, rows);
  if (!c.out.empty()) {
    with_output(c.out, [&](std::ostream& os) {
      if (c.format == Format::json) {
        write_table_json(os, rows);
      } else {
        if (c.header) os << provenance_line("table " + name) << '\n';
        write_table_csv(os, rows);
      }
    });
  }
  return kOk;
}

std::vector<double> state_values(const RunConfig& c, const std::optional<Index>& index,
                                 const std::optional<std::string>& values) {
  if (index.has_value() == values.has_value()) throw ConfigError("give exactly one of --index or --values");
  if (values) return parse_values(*values);
  const auto setup = make_problem(c);
  if (*index >= setup.space.size())
    throw ConfigError(fmt::format("index {} outside [0, {})", *index, setup.space.size()));
  return setup.space.decode(*index);
}

int cmd_path(const Overrides& o, const std::optional<Index>& index, const std::optional<std::string>& values) {
  const RunConfig c = resolve(o);
  const auto v = state_values(c, index, values);
  std::ostringstream body;
  write_path(body, c, v, c.path_samples);
  with_output(c.out, [&](std::ostream& os) { os << body.str(); });
  return kOk;
}

int cmd_probe(const Overrides& o, const std::optional<Index>& index, const std::optional<std::string>& values) {
  const RunConfig c = resolve(o);
  const auto v = state_values(c, index, values);
  const Probe p = probe_values(c, v);
  const bool ok = is_feasible(p.cost);
  with_output(c.out, [&](std::ostream& os) {
    if (c.format == Format::json) {
      nlohmann::json j = {{"problem", to_string(c.problem)},
                          {"values", p.values},
                          {"verdict", p.verdict},
                          {"cost", ok ? nlohmann::json(p.cost) : nlohmann::json(nullptr)},
                          {"reported", ok ? nlohmann::json(p.reported) : nlohmann::json(nullptr)}};
      if (index) j["index"] = *index;
      os << j.dump(2) << '\n';
    } else {
      os << "problem,values,verdict,cost,reported\n" << to_string(c.problem) << ",\"";
      for (std::size_t i = 0; i < p.values.size(); ++i) os << (i ? "," : "") << fmt::format("{:.17g}", p.values[i]);
      os << "\"," << p.verdict << ',' << (ok ? fmt::format("{:.17g}", p.cost) : "") << ','
         << (ok ? fmt::format("{:.17g}", p.reported) : "") << '\n';
    }
  });
  return ok ? kOk : kNoFeasible;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Trajectory optimisation by classical and simulated quantum search over discrete spaces"};
  app.require_subcommand(1);

  Overrides run_o, table_o, path_o, probe_o;

  auto* run_cmd = app.add_subcommand("run", "run a search method and emit result rows");
  add_common(run_cmd, run_o);
  run_cmd->add_option("--method", run_o.method, "exhaustive | random | hybrid | q-exhaustive | q-random | q-hybrid");
  run_cmd->add_option("--trials", run_o.trials, "independent trials");
  run_cmd->add_option("--n-random", run_o.n_random, "draws for random and hybrid");
  run_cmd->add_option("--subset", run_o.subset, "subset size for q-random and q-hybrid");
  run_cmd->add_option("--emit-path", run_o.emit_path, "write trial 0's best path to this CSV");
  run_cmd->add_option("--samples", run_o.samples, "points for --emit-path");
  run_cmd->add_flag("--no-timing", run_o.no_timing, "leave wall_ms empty (byte-stable output)");

  std::string table_name;
  auto* table_cmd = app.add_subcommand("table", "regenerate a comparison table");
  add_common(table_cmd, table_o);
  table_cmd->add_option("name", table_name, "brach-comparison | iso-comparison")->required();
  bool skip_coeff = false;
  table_cmd->add_flag("--skip-coefficient-space", skip_coeff, "omit the 85M-state coefficient-space row");

  std::optional<Index> path_index, probe_index_opt;
  std::optional<std::string> path_values, probe_values_opt;
  auto* path_cmd = app.add_subcommand("path", "write the path of one state as CSV");
  add_common(path_cmd, path_o);
  path_cmd->add_option("--index", path_index, "grid index of the state");
  path_cmd->add_option("--values", path_values, "comma-separated state values");
  path_cmd->add_option("--samples", path_o.samples, "number of points");

  auto* probe_cmd = app.add_subcommand("probe", "evaluate the cost of one state");
  add_common(probe_cmd, probe_o);
  probe_cmd->add_option("--index", probe_index_opt, "grid index of the state");
  probe_cmd->add_option("--values", probe_values_opt, "comma-separated state values");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfig;
  }

  try {
    if (*run_cmd) return cmd_run(run_o);
    if (*table_cmd) return cmd_table(table_o, table_name, skip_coeff);
    if (*path_cmd) return cmd_path(path_o, path_index, path_values);
    if (*probe_cmd) return cmd_probe(probe_o, probe_index_opt, probe_values_opt);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfig;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kIo;
  } catch (const InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << '\n';
    return kNoFeasible;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfig;
  }
  return kConfig;
}
