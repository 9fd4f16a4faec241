#include <cmath>
#include <memory>
#include <numbers>
#include <stdexcept>

#include "trajsearch/problems.hpp"

namespace trajsearch {

void IsoConfig::validate() const {
  if (!(theta_begin < theta_end)) throw std::invalid_argument("IsoConfig: empty theta range");
  if (!(length > 0.0)) throw std::invalid_argument("IsoConfig: length must be positive");
  if (!(node_bound > 0.0)) throw std::invalid_argument("IsoConfig: node bound must be positive");
  if (levels < 1) throw std::invalid_argument("IsoConfig: levels must be >= 1");
  if (free_nodes.empty()) throw std::invalid_argument("IsoConfig: need at least one free node");
  double prev = theta_begin;
  for (double t : free_nodes) {
    if (!(t > prev) || !(t <= theta_end))
      throw std::invalid_argument("IsoConfig: nodes must increase strictly inside the range");
    prev = t;
  }
  if (feasibility_samples < 1) throw std::invalid_argument("IsoConfig: need feasibility samples");
}

namespace {

template <class Value, class Slope>
IsoEvaluation normalised_area(const IsoConfig& cfg, Value&& value, Slope&& slope) {
  IsoEvaluation out;
  auto arc = [&](double t) {
    const double r = value(t);
    const double s = slope(t);
    return std::sqrt(r * r + s * s);
  };
  auto half_square = [&](double t) {
    const double r = value(t);
    return 0.5 * r * r;
  };
  try {
    out.raw_length = integrate(arc, cfg.theta_begin, cfg.theta_end, cfg.quadrature).value;
  } catch (const std::exception&) {
    out.verdict = Verdict::quadrature_failed;
    return out;
  }
  if (!(out.raw_length > 0.0)) {
    out.verdict = Verdict::degenerate;
    return out;
  }
  // Arc length is linear in the scale, so one division normalises it.
  out.scale = cfg.length / out.raw_length;
  const int n = cfg.feasibility_samples;
  for (int i = 1; i <= n; ++i) {
    const double t = cfg.theta_begin + (cfg.theta_end - cfg.theta_begin) * i / n;
    if (out.scale * value(t) < -1e-12) {
      out.verdict = Verdict::constraint_violated;
      return out;
    }
  }
  try {
    const double raw_area = integrate(half_square, cfg.theta_begin, cfg.theta_end, cfg.quadrature).value;
    out.area = out.scale * out.scale * raw_area;
  } catch (const std::exception&) {
    out.verdict = Verdict::quadrature_failed;
  }
  return out;
}

std::vector<double> iso_nodes(const IsoConfig& cfg) {
  std::vector<double> nodes{cfg.theta_begin};
  nodes.insert(nodes.end(), cfg.free_nodes.begin(), cfg.free_nodes.end());
  return nodes;
}

}  // namespace

IsoEvaluation iso_area(const IsoConfig& cfg, const GraphCurve& radius) {
  if (!radius.value || !radius.slope) throw std::invalid_argument("iso_area: incomplete curve");
  return normalised_area(cfg, radius.value, radius.slope);
}

MixedRadixSpace iso_space(const IsoConfig& cfg) {
  cfg.validate();
  std::vector<LevelSet> dims(
      cfg.free_nodes.size(),
      LevelSet::equidistant(0.0, cfg.node_bound, static_cast<std::size_t>(cfg.levels) + 1));
  return MixedRadixSpace(std::move(dims));
}

Polynomial iso_curve(const IsoConfig& cfg, std::span<const double> free_values) {
  if (free_values.size() != cfg.free_nodes.size())
    throw std::invalid_argument("iso_curve: one value per free node expected");
  std::vector<double> values{0.0};
  values.insert(values.end(), free_values.begin(), free_values.end());
  return lagrange_interpolate(LagrangeBasis(iso_nodes(cfg)), values);
}

CostOracle iso_oracle(const IsoConfig& cfg, const MixedRadixSpace& space) {
  cfg.validate();
  if (space.rank() != cfg.free_nodes.size())
    throw std::invalid_argument("iso_oracle: one dimension per free node expected");
  auto interp = std::make_shared<const Interpolator>(LagrangeBasis(iso_nodes(cfg)));
  auto sp = std::make_shared<const MixedRadixSpace>(space);
  return [cfg, interp, sp](Index i) {
    const std::size_t n = interp->size();
    std::vector<double> values(n, 0.0);
    sp->decode(i, std::span<double>(values).subspan(1));
    std::vector<double> c(n);
    interp->coefficients(values, c);
    auto value = [&c](double t) {
      double acc = 0.0;
      for (std::size_t k = c.size(); k-- > 0;) acc = acc * t + c[k];
      return acc;
    };
    auto slope = [&c](double t) {
      double acc = 0.0;
      for (std::size_t k = c.size(); k-- > 1;) acc = acc * t + static_cast<double>(k) * c[k];
      return acc;
    };
    const auto e = normalised_area(cfg, value, slope);
    return e.feasible() ? -e.area : kInfeasible;
  };
}

GraphCurve semicircle_curve(const IsoConfig& cfg) {
  const double diameter = 2.0 * cfg.length / std::numbers::pi;
  GraphCurve c;
  c.value = [diameter](double t) { return -diameter * std::cos(t); };
  c.slope = [diameter](double t) { return diameter * std::sin(t); };
  return c;
}

double iso_analytic_area(const IsoConfig& cfg) {
  return cfg.length * cfg.length / (2.0 * std::numbers::pi);
}

}  // namespace trajsearch
