#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <string>

#include "trajsearch/numerics.hpp"

namespace trajsearch {

ToleranceNotMet::ToleranceNotMet(double best, double achieved)
    : std::runtime_error("quadrature tolerance not met (achieved " + std::to_string(achieved) +
                         ")"),
      best_(best),
      achieved_(achieved) {}

NonFiniteIntegrand::NonFiniteIntegrand(double x)
    : std::domain_error("integrand is not finite at x = " + std::to_string(x)), x_(x) {}

namespace {

GaussLegendreRule build_rule(int n) {
  GaussLegendreRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // recompute derivative at the converged node
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    const auto lo = static_cast<std::size_t>(i);
    const auto hi = static_cast<std::size_t>(n - 1 - i);
    rule.nodes[lo] = -x;
    rule.nodes[hi] = x;
    rule.weights[lo] = w;
    rule.weights[hi] = w;
  }
  if (n % 2 == 1) rule.nodes[static_cast<std::size_t>(n / 2)] = 0.0;
  return rule;
}

double panel_sum(const std::function<double(double)>& f, const GaussLegendreRule& rule, double lo,
                 double hi, std::uint64_t& evals) {
  const double half = 0.5 * (hi - lo);
  const double mid = 0.5 * (hi + lo);
  double s = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double x = mid + half * rule.nodes[i];
    const double fx = f(x);
    if (!std::isfinite(fx)) throw NonFiniteIntegrand(x);
    s += rule.weights[i] * fx;
  }
  evals += rule.nodes.size();
  return s * half;
}

double graded_estimate(const std::function<double(double)>& f, double a, double b,
                       const QuadratureSpec& spec, int pass, std::uint64_t& evals) {
  const auto& rule = gauss_legendre(spec.order);
  const long panels = static_cast<long>(spec.base_panels) << pass;
  const double h = (b - a) / static_cast<double>(panels);
  const int levels = spec.grading ? spec.grading->strength * (pass + 1) : 0;
  const bool lower = spec.grading && spec.grading->endpoint == Endpoint::lower;
  const bool upper = spec.grading && spec.grading->endpoint == Endpoint::upper;

  double total = 0.0;
  for (long p = 0; p < panels; ++p) {
    const double lo = a + h * static_cast<double>(p);
    const double hi = (p + 1 == panels) ? b : a + h * static_cast<double>(p + 1);
    const bool graded = (lower && p == 0) || (upper && p + 1 == panels);
    if (!graded) {
      total += panel_sum(f, rule, lo, hi, evals);
      continue;
    }
    // Dyadic subpanels shrinking toward the singular end; summed from the
    // smallest contribution outward.
    const double width = hi - lo;
    // Near a nonzero endpoint doubles cannot resolve subpanels much below
    // ulp(endpoint); stop there so no node rounds onto the endpoint.
    const double edge = std::abs(lower ? lo : hi);
    const double floor_width = 4096.0 * std::numeric_limits<double>::epsilon() * edge;
    int depth = levels;
    while (depth > 0 && std::ldexp(width, -depth) < floor_width) --depth;
    double sub = 0.0;
    for (int j = depth; j >= 0; --j) {
      const double outer = std::ldexp(width, -j);
      const double inner = j == depth ? 0.0 : std::ldexp(width, -(j + 1));
      if (lower)
        sub += panel_sum(f, rule, lo + inner, lo + outer, evals);
      else
        sub += panel_sum(f, rule, hi - outer, hi - inner, evals);
    }
    total += sub;
  }
  return total;
}

}  // namespace

const GaussLegendreRule& gauss_legendre(int n) {
  static std::mutex mu;
  static std::map<int, GaussLegendreRule> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_rule(n)).first;
  return it->second;
}

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureSpec& spec) {
  if (!(a < b)) throw std::invalid_argument("integrate: need a < b");
  if (spec.order < 2) throw std::invalid_argument("integrate: order must be >= 2");
  if (!(spec.rel_tol > 0.0)) throw std::invalid_argument("integrate: rel_tol must be positive");
  if (spec.base_panels < 1) throw std::invalid_argument("integrate: base_panels must be >= 1");

  QuadratureResult out;
  out.achieved_tol = std::numeric_limits<double>::infinity();  // until two passes agree
  double prev = graded_estimate(f, a, b, spec, 0, out.evaluations);
  double diff = 0.0;
  for (int pass = 1; pass <= spec.max_refinements; ++pass) {
    const double cur = graded_estimate(f, a, b, spec, pass, out.evaluations);
    diff = std::abs(cur - prev);
    out.value = cur;
    out.refinements = pass;
    out.achieved_tol = cur != 0.0 ? diff / std::abs(cur) : diff;
    if (diff <= spec.rel_tol * std::abs(cur) || diff <= 1e-14) return out;
    prev = cur;
  }
  throw ToleranceNotMet(prev, out.achieved_tol);
}

}  // namespace trajsearch
