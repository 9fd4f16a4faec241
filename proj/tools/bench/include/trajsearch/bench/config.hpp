#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "trajsearch/discrete_space.hpp"
#include "trajsearch/problems.hpp"

namespace trajsearch::bench {

/// Bad configuration: unknown names, malformed JSON, invalid values.
class ConfigError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// File could not be read or written.
class IoError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// No feasible state where one was required.
class InfeasibleError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Problem { brach_physical, brach_coeff, isoperimetric, moon };
enum class Method { exhaustive, random, hybrid, q_exhaustive, q_random, q_hybrid };
enum class Format { csv, json };

const char* to_string(Problem p);
const char* to_string(Method m);
const char* to_string(Format f);
Problem parse_problem(const std::string& s);
Method parse_method(const std::string& s);
Format parse_format(const std::string& s);

bool is_quantum(Method m);

struct RunConfig {
  Problem problem = Problem::brach_physical;
  Method method = Method::exhaustive;

  BrachConfig brach;
  BrachCoeffConfig coeff;
  IsoConfig iso;
  MoonConfig moon;

  std::uint64_t n_random = 5000;  // classical random draws
  std::uint64_t subset = 5000;    // quantum random subset size s
  /// Refinement around the incumbent for hybrid methods. Empty vectors mean
  /// "one coarse step either side, five times finer".
  RefinementSpec refinement;
  /// Explicit refined grid (one level list per dimension); overrides
  /// `refinement` when set.
  std::optional<std::vector<std::vector<double>>> refined_levels;

  double epsilon = 2.46;
  double lambda = 1.34;
  std::uint64_t seed = 1;
  int trials = 1;
  unsigned threads = 0;  // 0: hardware concurrency

  std::string out;        // result file; empty means stdout
  std::string emit_path;  // path CSV of trial 0's winner; empty means none
  int path_samples = 200;
  bool header = true;  // leading "# ..." provenance line
  bool timing = true;  // wall_ms column filled in
  Format format = Format::csv;

  /// Throws ConfigError.
  void validate() const;
};

void to_json(nlohmann::json& j, const RunConfig& c);
/// Missing keys keep their defaults; unknown keys are rejected.
void from_json(const nlohmann::json& j, RunConfig& c);

RunConfig load_config(const std::string& path);

}  // namespace trajsearch::bench
