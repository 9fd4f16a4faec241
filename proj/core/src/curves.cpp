#include <cmath>
#include <memory>
#include <stdexcept>

#include "trajsearch/problems.hpp"

namespace trajsearch {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::feasible: return "feasible";
    case Verdict::constraint_violated: return "constraint-violated";
    case Verdict::quadrature_failed: return "quadrature-failed";
    case Verdict::degenerate: return "degenerate";
  }
  return "unknown";
}

GraphCurve polynomial_curve(Polynomial p, std::optional<double> start_height) {
  auto poly = std::make_shared<const Polynomial>(std::move(p));
  auto slope = std::make_shared<const Polynomial>(poly->derivative());
  GraphCurve c;
  c.value = [poly](double x) { return (*poly)(x); };
  c.slope = [slope](double x) { return (*slope)(x); };
  if (start_height) {
    const double h0 = *start_height;
    auto q = std::make_shared<const Polynomial>(poly->shifted_quotient());
    const double offset = h0 - poly->coeff(0);
    c.drop = [q, offset](double x) { return offset - x * (*q)(x); };
  }
  return c;
}

ParametricCurve as_parametric(GraphCurve curve, double a, double b) {
  ParametricCurve pc;
  pc.t_begin = a;
  pc.t_end = b;
  pc.point = [f = std::move(curve.value)](double x) { return std::pair{x, f(x)}; };
  return pc;
}

double path_rmse(const GraphCurve& candidate, const ParametricCurve& reference, int samples) {
  if (samples < 2) throw std::invalid_argument("path_rmse: need at least 2 samples");
  double sum = 0.0;
  const double span = reference.t_end - reference.t_begin;
  for (int i = 0; i < samples; ++i) {
    const double t = reference.t_begin + span * i / (samples - 1);
    const auto [x, y] = reference.point(t);
    const double e = candidate.value(x) - y;
    sum += e * e;
  }
  return std::sqrt(sum / samples);
}

}  // namespace trajsearch
