#include "trajsearch/bench/problem_setup.hpp"

#include <cmath>
#include <fmt/format.h>

#include "trajsearch/problems.hpp"

namespace trajsearch::bench {

namespace {

BrachCoeffConfig coeff_config(const RunConfig& cfg) {
  BrachCoeffConfig c = cfg.coeff;
  c.base = cfg.brach;
  return c;
}

double identity(double c) { return c; }
double negated(double c) { return -c; }

std::string fmt_num(double v) { return fmt::format("{:.17g}", v); }

}  // namespace

ProblemSetup make_problem(const RunConfig& cfg) {
  cfg.validate();
  switch (cfg.problem) {
    case Problem::brach_physical:
      return {cfg.problem, brach_space(cfg.brach), brach_oracle_factory(cfg.brach),
              brach_analytic_time(cfg.brach), identity, "s"};
    case Problem::brach_coeff: {
      const auto c = coeff_config(cfg);
      try {
        c.validate();
      } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
      }
      OracleFactory f = [c](const MixedRadixSpace& s) { return brach_coeff_oracle(c, s); };
      return {cfg.problem, brach_coeff_space(c), f, brach_analytic_time(c.base), identity, "s"};
    }
    case Problem::isoperimetric: {
      OracleFactory f = [iso = cfg.iso](const MixedRadixSpace& s) { return iso_oracle(iso, s); };
      return {cfg.problem, iso_space(cfg.iso), f, iso_analytic_area(cfg.iso), negated, "area"};
    }
    case Problem::moon: {
      OracleFactory f = [moon = cfg.moon](const MixedRadixSpace& s) { return moon_oracle(moon, s); };
      return {cfg.problem, moon_space(cfg.moon), f, std::nullopt, negated, "kg"};
    }
  }
  throw ConfigError("unknown problem");
}

RefinementSpec default_refinement(const RunConfig& cfg, const MixedRadixSpace& space) {
  if (!cfg.refinement.step.empty()) {
    if (cfg.refinement.step.size() != space.rank())
      throw ConfigError("refinement needs one entry per dimension");
    return cfg.refinement;
  }
  RefinementSpec r;
  for (const auto& d : space.dimensions()) {
    const double coarse = d.size() > 1 ? (d.max() - d.min()) / static_cast<double>(d.size() - 1) : 0.0;
    r.half_width.push_back(coarse);
    r.step.push_back(coarse > 0.0 ? coarse / 5.0 : 1.0);
  }
  return r;
}

std::optional<MixedRadixSpace> explicit_refined_space(const RunConfig& cfg) {
  if (!cfg.refined_levels) return std::nullopt;
  std::vector<LevelSet> dims;
  try {
    for (const auto& levels : *cfg.refined_levels) dims.emplace_back(levels);
    return MixedRadixSpace(std::move(dims));
  } catch (const std::exception& e) {
    throw ConfigError(std::string("refined_levels: ") + e.what());
  }
}

Probe probe_index(const RunConfig& cfg, Index index) {
  const auto setup = make_problem(cfg);
  if (index >= setup.space.size())
    throw ConfigError(fmt::format("index {} outside [0, {})", index, setup.space.size()));
  return probe_values(cfg, setup.space.decode(index));
}

Probe probe_values(const RunConfig& cfg, std::span<const double> values) {
  cfg.validate();
  Probe p;
  p.values.assign(values.begin(), values.end());
  switch (cfg.problem) {
    case Problem::brach_physical: {
      if (values.size() != static_cast<std::size_t>(cfg.brach.zeta - 1))
        throw ConfigError(fmt::format("expected {} node heights", cfg.brach.zeta - 1));
      const auto e = brach_cost(cfg.brach, polynomial_curve(brach_path(cfg.brach, values), cfg.brach.start_y));
      p.cost = e.cost;
      p.reported = e.cost;
      p.verdict = to_string(e.verdict);
      break;
    }
    case Problem::brach_coeff: {
      const auto c = coeff_config(cfg);
      if (values.size() != static_cast<std::size_t>(c.zeta - 2))
        throw ConfigError(fmt::format("expected {} coefficients b_2..b_{}", c.zeta - 2, c.zeta - 1));
      BrachConfig check = c.base;
      if (!c.bound_envelope) check.envelope = kInfeasible;
      const auto e = brach_cost(check, polynomial_curve(brach_coeff_polynomial(c, values), check.start_y));
      p.cost = e.cost;
      p.reported = e.cost;
      p.verdict = to_string(e.verdict);
      break;
    }
    case Problem::isoperimetric: {
      if (values.size() != cfg.iso.free_nodes.size())
        throw ConfigError(fmt::format("expected {} node radii", cfg.iso.free_nodes.size()));
      const auto e = iso_area(cfg.iso, polynomial_curve(iso_curve(cfg.iso, values)));
      p.cost = e.feasible() ? -e.area : kInfeasible;
      p.reported = e.area;
      p.verdict = to_string(e.verdict);
      break;
    }
    case Problem::moon: {
      if (values.size() != 3) throw ConfigError("expected 3 controls a_2, a_3, a_4");
      const auto r = solve_soft_landing(cfg.moon, values[0], values[1], values[2]);
      p.cost = r.solution ? -r.solution->m_final : kInfeasible;
      p.reported = r.solution ? r.solution->m_final : 0.0;
      p.verdict = r.solution ? "feasible" : to_string(r.failure);
      break;
    }
  }
  return p;
}

void write_path(std::ostream& os, const RunConfig& cfg, std::span<const double> values, int samples) {
  if (samples < 2) throw ConfigError("path needs at least 2 samples");
  const double last = samples - 1;
  switch (cfg.problem) {
    case Problem::brach_physical:
    case Problem::brach_coeff: {
      const auto c = coeff_config(cfg);
      if (cfg.problem == Problem::brach_physical && values.size() != static_cast<std::size_t>(cfg.brach.zeta - 1))
        throw ConfigError(fmt::format("expected {} node heights", cfg.brach.zeta - 1));
      if (cfg.problem == Problem::brach_coeff && values.size() != static_cast<std::size_t>(c.zeta - 2))
        throw ConfigError(fmt::format("expected {} coefficients", c.zeta - 2));
      const Polynomial y = cfg.problem == Problem::brach_physical ? brach_path(cfg.brach, values)
                                                                  : brach_coeff_polynomial(c, values);
      const auto ref = cycloid_parametric(cfg.brach);
      os << "x,y,x_ref,y_ref\n";
      for (int i = 0; i < samples; ++i) {
        const double x = cfg.brach.end_x * i / last;
        const auto [xr, yr] = ref.point(ref.t_begin + (ref.t_end - ref.t_begin) * i / last);
        os << fmt_num(x) << ',' << fmt_num(y(x)) << ',' << fmt_num(xr) << ',' << fmt_num(yr) << '\n';
      }
      return;
    }
    case Problem::isoperimetric: {
      if (values.size() != cfg.iso.free_nodes.size())
        throw ConfigError(fmt::format("expected {} node radii", cfg.iso.free_nodes.size()));
      const Polynomial r = iso_curve(cfg.iso, values);
      const auto e = iso_area(cfg.iso, polynomial_curve(r));
      if (!e.feasible()) throw InfeasibleError(std::string("curve is ") + to_string(e.verdict));
      const auto semi = semicircle_curve(cfg.iso);
      os << "x,y,x_ref,y_ref\n";
      for (int i = 0; i < samples; ++i) {
        const double th = cfg.iso.theta_begin + (cfg.iso.theta_end - cfg.iso.theta_begin) * i / last;
        const double rc = e.scale * r(th);
        const double rs = semi.value(th);
        os << fmt_num(rc * std::cos(th)) << ',' << fmt_num(rc * std::sin(th)) << ','
           << fmt_num(rs * std::cos(th)) << ',' << fmt_num(rs * std::sin(th)) << '\n';
      }
      return;
    }
    case Problem::moon: {
      if (values.size() != 3) throw ConfigError("expected 3 controls a_2, a_3, a_4");
      const auto res = solve_soft_landing(cfg.moon, values[0], values[1], values[2]);
      if (!res.solution) throw InfeasibleError(std::string("no soft landing: ") + to_string(res.failure));
      const auto& sol = *res.solution;
      os << "t,h,v,m\n";
      for (int i = 0; i < samples; ++i) {
        const double t = sol.tau * i / last;
        const auto s = sol.at(cfg.moon, t);
        os << fmt_num(t) << ',' << fmt_num(s.h) << ',' << fmt_num(s.v) << ',' << fmt_num(s.m) << '\n';
      }
      return;
    }
  }
}

}  // namespace trajsearch::bench
