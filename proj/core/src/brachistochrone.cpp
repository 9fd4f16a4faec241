#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <numbers>
#include <stdexcept>

#include "trajsearch/problems.hpp"

namespace trajsearch {

QuadratureSpec default_brach_quadrature() {
  QuadratureSpec q;
  q.order = 16;
  q.base_panels = 2;
  q.grading = Grading{Endpoint::lower, 20};
  q.rel_tol = 1e-9;
  q.max_refinements = 8;
  return q;
}

void BrachConfig::validate() const {
  if (!(g > 0.0)) throw std::invalid_argument("BrachConfig: g must be positive");
  if (zeta < 2) throw std::invalid_argument("BrachConfig: zeta must be >= 2");
  if (levels < 1) throw std::invalid_argument("BrachConfig: levels must be >= 1");
  if (!(end_x > 0.0)) throw std::invalid_argument("BrachConfig: end_x must be positive");
  if (!(y_min <= y_max)) throw std::invalid_argument("BrachConfig: y_min > y_max");
  if (feasibility_samples < 1) throw std::invalid_argument("BrachConfig: need feasibility samples");
}

std::vector<double> brach_nodes(const BrachConfig& cfg) {
  std::vector<double> x(static_cast<std::size_t>(cfg.zeta) + 1);
  for (int k = 0; k <= cfg.zeta; ++k) x[static_cast<std::size_t>(k)] = cfg.end_x * k / cfg.zeta;
  x.back() = cfg.end_x;
  return x;
}

MixedRadixSpace brach_space(const BrachConfig& cfg) {
  cfg.validate();
  std::vector<LevelSet> dims(
      static_cast<std::size_t>(cfg.zeta - 1),
      LevelSet::equidistant(cfg.y_min, cfg.y_max, static_cast<std::size_t>(cfg.levels) + 1));
  return MixedRadixSpace(std::move(dims));
}

namespace {

std::vector<double> node_values(const BrachConfig& cfg, std::span<const double> interior) {
  if (interior.size() != static_cast<std::size_t>(cfg.zeta - 1))
    throw std::invalid_argument("brach: expected zeta-1 interior node values");
  std::vector<double> v;
  v.reserve(interior.size() + 2);
  v.push_back(cfg.start_y);
  v.insert(v.end(), interior.begin(), interior.end());
  v.push_back(cfg.end_y);
  return v;
}

// Horner evaluation of a polynomial and of (p(x) - p(0)) / x.
double horner(std::span<const double> c, double x) {
  double acc = 0.0;
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * x + c[k];
  return acc;
}
double horner_quotient(std::span<const double> c, double x) {
  double acc = 0.0;
  for (std::size_t k = c.size(); k-- > 1;) acc = acc * x + c[k];
  return acc;
}
double horner_slope(std::span<const double> c, double x) {
  double acc = 0.0;
  for (std::size_t k = c.size(); k-- > 1;) acc = acc * x + static_cast<double>(k) * c[k];
  return acc;
}

template <class Value, class Slope, class Drop>
Evaluation travel_time(const BrachConfig& cfg, Value&& value, Slope&& slope, Drop&& drop) {
  const int n = cfg.feasibility_samples;
  for (int i = 1; i <= n; ++i) {
    const double x = cfg.end_x * i / n;
    if (!(drop(x) > 0.0) || std::abs(value(x)) > cfg.envelope + 1e-9)
      return {kInfeasible, Verdict::constraint_violated};
  }
  const double two_g = 2.0 * cfg.g;
  auto integrand = [&](double x) {
    const double s = slope(x);
    return std::sqrt((1.0 + s * s) / (two_g * drop(x)));
  };
  try {
    const auto r = integrate(integrand, 0.0, cfg.end_x, cfg.quadrature);
    return {r.value, Verdict::feasible};
  } catch (const NonFiniteIntegrand&) {
    return {kInfeasible, Verdict::constraint_violated};
  } catch (const ToleranceNotMet&) {
    return {kInfeasible, Verdict::quadrature_failed};
  }
}

Evaluation polynomial_time(const BrachConfig& cfg, std::span<const double> c) {
  // c[0] == start_y is enforced by callers, so the drop is exactly -x q(x).
  return travel_time(
      cfg, [c](double x) { return horner(c, x); }, [c](double x) { return horner_slope(c, x); },
      [c](double x) { return -x * horner_quotient(c, x); });
}

}  // namespace

Polynomial brach_path(const BrachConfig& cfg, std::span<const double> interior) {
  const auto values = node_values(cfg, interior);
  auto p = lagrange_interpolate(LagrangeBasis(brach_nodes(cfg)), values);
  std::vector<double> c(p.coeffs().begin(), p.coeffs().end());
  c[0] = cfg.start_y;  // x_0 = 0 pins the constant term
  return Polynomial(std::move(c));
}

Evaluation brach_cost(const BrachConfig& cfg, const GraphCurve& path) {
  if (!path.value || !path.slope) throw std::invalid_argument("brach_cost: incomplete curve");
  if (path.drop) return travel_time(cfg, path.value, path.slope, path.drop);
  return travel_time(cfg, path.value, path.slope,
                     [&](double x) { return cfg.start_y - path.value(x); });
}

CostOracle brach_oracle(const BrachConfig& cfg, const MixedRadixSpace& space) {
  cfg.validate();
  if (space.rank() != static_cast<std::size_t>(cfg.zeta - 1))
    throw std::invalid_argument("brach_oracle: space rank must be zeta-1");
  auto interp = std::make_shared<const Interpolator>(LagrangeBasis(brach_nodes(cfg)));
  auto sp = std::make_shared<const MixedRadixSpace>(space);
  return [cfg, interp, sp](Index i) {
    const std::size_t n = interp->size();
    std::vector<double> values(n);
    std::vector<double> coeffs(n);
    values.front() = cfg.start_y;
    values.back() = cfg.end_y;
    sp->decode(i, std::span<double>(values).subspan(1, n - 2));
    interp->coefficients(values, coeffs);
    coeffs[0] = cfg.start_y;
    return polynomial_time(cfg, coeffs).cost;
  };
}

OracleFactory brach_oracle_factory(const BrachConfig& cfg) {
  return [cfg](const MixedRadixSpace& space) { return brach_oracle(cfg, space); };
}

namespace {

// phi - sin(phi), with a series near 0 where the subtraction cancels.
double versed_arc(double phi) {
  if (phi > 0.5) return phi - std::sin(phi);
  const double p2 = phi * phi;
  double term = phi * p2 / 6.0;
  double sum = term;
  for (int k = 2; k < 12; ++k) {
    term *= -p2 / ((2.0 * k) * (2.0 * k + 1.0));
    sum += term;
  }
  return sum;
}

double cycloid_angle(double u) {
  if (u <= 0.0) return 0.0;
  if (u >= std::numbers::pi) return std::numbers::pi;
  double lo = 0.0;
  double hi = std::numbers::pi;
  double phi = std::min(std::cbrt(6.0 * u), std::numbers::pi);
  for (int it = 0; it < 100; ++it) {
    const double f = versed_arc(phi) - u;
    if (f > 0.0) hi = phi; else lo = phi;
    const double s = std::sin(0.5 * phi);
    const double df = 2.0 * s * s;
    double next = df > 0.0 ? phi - f / df : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - phi) <= 1e-16 * std::max(1.0, phi)) return next;
    phi = next;
  }
  return phi;
}

double cycloid_radius(const BrachConfig& cfg) {
  const double a = 0.5 * (cfg.start_y - cfg.end_y);
  if (!(a > 0.0)) throw std::invalid_argument("cycloid: end must lie below start");
  if (std::abs(a * std::numbers::pi - cfg.end_x) > 1e-9 * cfg.end_x)
    throw std::invalid_argument("cycloid: end point is not the cycloid's lowest point");
  return a;
}

}  // namespace

GraphCurve cycloid_curve(const BrachConfig& cfg) {
  const double a = cycloid_radius(cfg);
  const double y0 = cfg.start_y;
  GraphCurve c;
  c.drop = [a](double x) {
    const double s = std::sin(0.5 * cycloid_angle(x / a));
    return 2.0 * a * s * s;
  };
  c.value = [a, y0](double x) {
    const double s = std::sin(0.5 * cycloid_angle(x / a));
    return y0 - 2.0 * a * s * s;
  };
  c.slope = [a](double x) {
    const double half = 0.5 * cycloid_angle(x / a);
    return -std::cos(half) / std::sin(half);
  };
  return c;
}

ParametricCurve cycloid_parametric(const BrachConfig& cfg) {
  const double a = cycloid_radius(cfg);
  const double y0 = cfg.start_y;
  ParametricCurve p;
  p.t_begin = 0.0;
  p.t_end = std::numbers::pi;
  p.point = [a, y0](double phi) {
    return std::pair{a * versed_arc(phi), y0 - a * (1.0 - std::cos(phi))};
  };
  return p;
}

double brach_analytic_time(const BrachConfig& cfg) {
  return std::numbers::pi * std::sqrt(cycloid_radius(cfg) / cfg.g);
}

// ------------------------------------------------------------ coefficient space

void BrachCoeffConfig::validate() const {
  base.validate();
  if (zeta < 3) throw std::invalid_argument("BrachCoeffConfig: zeta must be >= 3");
  if (level_counts.size() != static_cast<std::size_t>(zeta - 2))
    throw std::invalid_argument("BrachCoeffConfig: need one level count per b_2..b_{zeta-1}");
  for (auto c : level_counts)
    if (c < 2) throw std::invalid_argument("BrachCoeffConfig: level counts must be >= 2");
}

MixedRadixSpace brach_coeff_space(const BrachCoeffConfig& cfg) {
  cfg.validate();
  const auto bounds = coefficient_bounds(ChebyshevTable(cfg.zeta), cfg.zeta);
  std::vector<LevelSet> dims;
  for (int j = 2; j < cfg.zeta; ++j) {
    const double b = bounds[static_cast<std::size_t>(j - 1)];
    dims.push_back(LevelSet::equidistant(-b, b, cfg.level_counts[static_cast<std::size_t>(j - 2)]));
  }
  return MixedRadixSpace(std::move(dims));
}

Polynomial brach_coeff_polynomial(const BrachCoeffConfig& cfg, std::span<const double> b) {
  const int z = cfg.zeta;
  if (b.size() != static_cast<std::size_t>(z - 2))
    throw std::invalid_argument("brach_coeff_polynomial: expected b_2..b_{zeta-1}");
  const double half = 0.5 * cfg.base.end_x;
  const double env = cfg.base.envelope;
  std::vector<double> a(static_cast<std::size_t>(z), 0.0);
  // (1/env) y(half (s + 1)) = sum_n b_n s^n, solved top-down for a_n, n >= 2.
  for (int n = z - 1; n >= 2; --n) {
    double tail = 0.0;
    double binom = 1.0;  // C(m, n), starting at m = n
    for (int m = n + 1; m < z; ++m) {
      binom = binom * m / (m - n);
      tail += a[static_cast<std::size_t>(m)] * std::pow(half, m) * binom;
    }
    a[static_cast<std::size_t>(n)] = (env * b[static_cast<std::size_t>(n - 2)] - tail) / std::pow(half, n);
  }
  a[0] = cfg.base.start_y;
  double rest = a[0];
  for (int n = 2; n < z; ++n) rest += a[static_cast<std::size_t>(n)] * std::pow(cfg.base.end_x, n);
  a[1] = (cfg.base.end_y - rest) / cfg.base.end_x;
  return Polynomial(std::move(a));
}

CostOracle brach_coeff_oracle(const BrachCoeffConfig& cfg, const MixedRadixSpace& space) {
  cfg.validate();
  if (space.rank() != static_cast<std::size_t>(cfg.zeta - 2))
    throw std::invalid_argument("brach_coeff_oracle: space rank must be zeta-2");
  BrachConfig check = cfg.base;
  if (!cfg.bound_envelope) check.envelope = std::numeric_limits<double>::infinity();
  auto sp = std::make_shared<const MixedRadixSpace>(space);
  return [cfg, check, sp](Index i) {
    const auto b = sp->decode(i);
    const auto p = brach_coeff_polynomial(cfg, b);
    return polynomial_time(check, p.coeffs()).cost;
  };
}

}  // namespace trajsearch
