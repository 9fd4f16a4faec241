#include "trajsearch/bench/config.hpp"

#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <sstream>

namespace trajsearch::bench {

using nlohmann::json;

namespace {

template <class E, std::size_t N>
E parse_enum(const std::string& s, const std::pair<const char*, E> (&names)[N], const char* what) {
  for (const auto& [name, value] : names)
    if (s == name) return value;
  std::string msg = std::string("unknown ") + what + " '" + s + "' (expected one of:";
  for (const auto& [name, value] : names) msg += std::string(" ") + name;
  throw ConfigError(msg + ")");
}

constexpr std::pair<const char*, Problem> kProblems[] = {
    {"brach-physical", Problem::brach_physical},
    {"brach-coeff", Problem::brach_coeff},
    {"isoperimetric", Problem::isoperimetric},
    {"moon", Problem::moon},
};

constexpr std::pair<const char*, Method> kMethods[] = {
    {"exhaustive", Method::exhaustive},     {"random", Method::random},
    {"hybrid", Method::hybrid},             {"q-exhaustive", Method::q_exhaustive},
    {"q-random", Method::q_random},         {"q-hybrid", Method::q_hybrid},
};

constexpr std::pair<const char*, Format> kFormats[] = {{"csv", Format::csv}, {"json", Format::json}};

template <class E, std::size_t N>
const char* enum_name(E v, const std::pair<const char*, E> (&names)[N]) {
  for (const auto& [name, value] : names)
    if (value == v) return name;
  return "?";
}

void reject_unknown(const json& j, std::initializer_list<const char*> keys, const char* where) {
  if (!j.is_object()) throw ConfigError(std::string(where) + ": expected an object");
  for (const auto& [key, value] : j.items()) {
    if (std::none_of(keys.begin(), keys.end(), [&](const char* k) { return key == k; }))
      throw ConfigError(std::string(where) + ": unknown key '" + key + "'");
  }
}

template <class T>
void read(const json& j, const char* key, T& out) {
  auto it = j.find(key);
  if (it == j.end()) return;
  try {
    out = it->get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad value for '") + key + "': " + e.what());
  }
}

json quadrature_json(const QuadratureSpec& q) {
  json g = nullptr;
  if (q.grading)
    g = {{"endpoint", q.grading->endpoint == Endpoint::lower ? "lower" : "upper"},
         {"strength", q.grading->strength}};
  return {{"order", q.order},     {"base_panels", q.base_panels},
          {"grading", g},         {"rel_tol", q.rel_tol},
          {"max_refinements", q.max_refinements}};
}

void read_quadrature(const json& j, QuadratureSpec& q) {
  reject_unknown(j, {"order", "base_panels", "grading", "rel_tol", "max_refinements"}, "quadrature");
  read(j, "order", q.order);
  read(j, "base_panels", q.base_panels);
  read(j, "rel_tol", q.rel_tol);
  read(j, "max_refinements", q.max_refinements);
  if (auto it = j.find("grading"); it != j.end()) {
    if (it->is_null()) {
      q.grading.reset();
    } else {
      reject_unknown(*it, {"endpoint", "strength"}, "quadrature.grading");
      Grading g = q.grading.value_or(Grading{});
      std::string endpoint = g.endpoint == Endpoint::lower ? "lower" : "upper";
      read(*it, "endpoint", endpoint);
      if (endpoint != "lower" && endpoint != "upper")
        throw ConfigError("quadrature.grading.endpoint must be 'lower' or 'upper'");
      g.endpoint = endpoint == "lower" ? Endpoint::lower : Endpoint::upper;
      read(*it, "strength", g.strength);
      q.grading = g;
    }
  }
}

json brach_json(const BrachConfig& b) {
  return {{"start_y", b.start_y},   {"end_x", b.end_x},
          {"end_y", b.end_y},       {"g", b.g},
          {"zeta", b.zeta},         {"levels", b.levels},
          {"y_min", b.y_min},       {"y_max", b.y_max},
          {"envelope", b.envelope}, {"feasibility_samples", b.feasibility_samples},
          {"quadrature", quadrature_json(b.quadrature)}};
}

void read_brach(const json& j, BrachConfig& b) {
  reject_unknown(j,
                 {"start_y", "end_x", "end_y", "g", "zeta", "levels", "y_min", "y_max", "envelope",
                  "feasibility_samples", "quadrature"},
                 "brach");
  read(j, "start_y", b.start_y);
  read(j, "end_x", b.end_x);
  read(j, "end_y", b.end_y);
  read(j, "g", b.g);
  read(j, "zeta", b.zeta);
  read(j, "levels", b.levels);
  read(j, "y_min", b.y_min);
  read(j, "y_max", b.y_max);
  read(j, "envelope", b.envelope);
  read(j, "feasibility_samples", b.feasibility_samples);
  if (auto it = j.find("quadrature"); it != j.end()) read_quadrature(*it, b.quadrature);
}

json coeff_json(const BrachCoeffConfig& c) {
  return {{"zeta", c.zeta}, {"level_counts", c.level_counts}, {"bound_envelope", c.bound_envelope}};
}

void read_coeff(const json& j, BrachCoeffConfig& c) {
  reject_unknown(j, {"zeta", "level_counts", "bound_envelope"}, "coeff");
  read(j, "zeta", c.zeta);
  read(j, "level_counts", c.level_counts);
  read(j, "bound_envelope", c.bound_envelope);
}

json iso_json(const IsoConfig& c) {
  return {{"theta_begin", c.theta_begin}, {"theta_end", c.theta_end},
          {"length", c.length},           {"node_bound", c.node_bound},
          {"levels", c.levels},           {"free_nodes", c.free_nodes},
          {"feasibility_samples", c.feasibility_samples},
          {"quadrature", quadrature_json(c.quadrature)}};
}

void read_iso(const json& j, IsoConfig& c) {
  reject_unknown(j,
                 {"theta_begin", "theta_end", "length", "node_bound", "levels", "free_nodes",
                  "feasibility_samples", "quadrature"},
                 "iso");
  read(j, "theta_begin", c.theta_begin);
  read(j, "theta_end", c.theta_end);
  read(j, "length", c.length);
  read(j, "node_bound", c.node_bound);
  read(j, "levels", c.levels);
  read(j, "free_nodes", c.free_nodes);
  read(j, "feasibility_samples", c.feasibility_samples);
  if (auto it = j.find("quadrature"); it != j.end()) read_quadrature(*it, c.quadrature);
}

json moon_json(const MoonConfig& m) {
  return {{"h0", m.h0},
          {"v0", m.v0},
          {"m0", m.m0},
          {"g", m.g},
          {"k_ex", m.k_ex},
          {"max_burn", m.max_burn},
          {"m_dry", m.m_dry},
          {"t", m.t},
          {"control_levels", m.control_levels},
          {"a1_scan", m.a1_scan},
          {"height_samples", m.height_samples}};
}

void read_moon(const json& j, MoonConfig& m) {
  reject_unknown(j,
                 {"h0", "v0", "m0", "g", "k_ex", "max_burn", "m_dry", "t", "control_levels",
                  "a1_scan", "height_samples"},
                 "moon");
  read(j, "h0", m.h0);
  read(j, "v0", m.v0);
  read(j, "m0", m.m0);
  read(j, "g", m.g);
  read(j, "k_ex", m.k_ex);
  read(j, "max_burn", m.max_burn);
  read(j, "m_dry", m.m_dry);
  read(j, "t", m.t);
  read(j, "control_levels", m.control_levels);
  read(j, "a1_scan", m.a1_scan);
  read(j, "height_samples", m.height_samples);
}

}  // namespace

const char* to_string(Problem p) { return enum_name(p, kProblems); }
const char* to_string(Method m) { return enum_name(m, kMethods); }
const char* to_string(Format f) { return enum_name(f, kFormats); }
Problem parse_problem(const std::string& s) { return parse_enum(s, kProblems, "problem"); }
Method parse_method(const std::string& s) { return parse_enum(s, kMethods, "method"); }
Format parse_format(const std::string& s) { return parse_enum(s, kFormats, "format"); }

bool is_quantum(Method m) {
  return m == Method::q_exhaustive || m == Method::q_random || m == Method::q_hybrid;
}

void RunConfig::validate() const {
  try {
    switch (problem) {
      case Problem::brach_physical: brach.validate(); break;
      case Problem::brach_coeff: coeff.validate(); break;
      case Problem::isoperimetric: iso.validate(); break;
      case Problem::moon: moon.validate(); break;
    }
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (n_random == 0) throw ConfigError("n_random must be >= 1");
  if (subset == 0) throw ConfigError("subset must be >= 1");
  if (trials < 1) throw ConfigError("trials must be >= 1");
  if (!(epsilon > 0.0)) throw ConfigError("epsilon must be positive");
  if (!(lambda > 1.0)) throw ConfigError("lambda must exceed 1");
  if (path_samples < 2) throw ConfigError("path_samples must be >= 2");
  if (refinement.half_width.size() != refinement.step.size())
    throw ConfigError("refinement.half_width and refinement.step differ in length");
  for (double s : refinement.step)
    if (!(s > 0.0)) throw ConfigError("refinement steps must be positive");
  for (double w : refinement.half_width)
    if (!(w >= 0.0)) throw ConfigError("refinement half widths must be >= 0");
  if (refined_levels)
    for (const auto& levels : *refined_levels)
      if (levels.empty()) throw ConfigError("refined_levels: empty level list");
}

void to_json(json& j, const RunConfig& c) {
  j = {{"problem", to_string(c.problem)},
       {"method", to_string(c.method)},
       {"brach", brach_json(c.brach)},
       {"coeff", coeff_json(c.coeff)},
       {"iso", iso_json(c.iso)},
       {"moon", moon_json(c.moon)},
       {"n_random", c.n_random},
       {"subset", c.subset},
       {"refinement", {{"half_width", c.refinement.half_width}, {"step", c.refinement.step}}},
       {"refined_levels", c.refined_levels ? json(*c.refined_levels) : json(nullptr)},
       {"epsilon", c.epsilon},
       {"lambda", c.lambda},
       {"seed", c.seed},
       {"trials", c.trials},
       {"threads", c.threads},
       {"out", c.out},
       {"emit_path", c.emit_path},
       {"path_samples", c.path_samples},
       {"header", c.header},
       {"timing", c.timing},
       {"format", to_string(c.format)}};
}

void from_json(const json& j, RunConfig& c) {
  reject_unknown(j,
                 {"problem", "method", "brach", "coeff", "iso", "moon", "n_random", "subset",
                  "refinement", "refined_levels", "epsilon", "lambda", "seed", "trials", "threads",
                  "out", "emit_path", "path_samples", "header", "timing", "format"},
                 "config");
  std::string name;
  if (j.contains("problem")) {
    read(j, "problem", name);
    c.problem = parse_problem(name);
  }
  if (j.contains("method")) {
    read(j, "method", name);
    c.method = parse_method(name);
  }
  if (j.contains("format")) {
    read(j, "format", name);
    c.format = parse_format(name);
  }
  if (auto it = j.find("brach"); it != j.end()) read_brach(*it, c.brach);
  if (auto it = j.find("coeff"); it != j.end()) read_coeff(*it, c.coeff);
  if (auto it = j.find("iso"); it != j.end()) read_iso(*it, c.iso);
  if (auto it = j.find("moon"); it != j.end()) read_moon(*it, c.moon);
  // the coefficient problem shares the physical endpoints
  c.coeff.base = c.brach;
  read(j, "n_random", c.n_random);
  read(j, "subset", c.subset);
  if (auto it = j.find("refinement"); it != j.end()) {
    reject_unknown(*it, {"half_width", "step"}, "refinement");
    read(*it, "half_width", c.refinement.half_width);
    read(*it, "step", c.refinement.step);
  }
  if (auto it = j.find("refined_levels"); it != j.end()) {
    if (it->is_null()) {
      c.refined_levels.reset();
    } else {
      std::vector<std::vector<double>> levels;
      read(j, "refined_levels", levels);
      c.refined_levels = std::move(levels);
    }
  }
  read(j, "epsilon", c.epsilon);
  read(j, "lambda", c.lambda);
  read(j, "seed", c.seed);
  read(j, "trials", c.trials);
  read(j, "threads", c.threads);
  read(j, "out", c.out);
  read(j, "emit_path", c.emit_path);
  read(j, "path_samples", c.path_samples);
  read(j, "header", c.header);
  read(j, "timing", c.timing);
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("config file '" + path + "': " + e.what());
  }
  RunConfig c;
  from_json(j, c);
  return c;
}

}  // namespace trajsearch::bench
