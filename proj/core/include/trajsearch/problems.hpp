#pragma once

#include <array>
#include <functional>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "trajsearch/discrete_space.hpp"
#include "trajsearch/numerics.hpp"
#include "trajsearch/types.hpp"

namespace trajsearch {

enum class Verdict {
  feasible,
  constraint_violated,  // sampled constraint failed
  quadrature_failed,    // integrand non-finite or tolerance not met
  degenerate,           // e.g. zero-length curve
};

const char* to_string(Verdict v);

/// Outcome of one cost evaluation. `cost` is kInfeasible unless feasible.
struct Evaluation {
  double cost = kInfeasible;
  Verdict verdict = Verdict::feasible;
  bool feasible() const { return verdict == Verdict::feasible; }
};

/// y(x) together with its slope. `drop`, when set, returns start height
/// minus y(x) computed without cancellation near the start point.
struct GraphCurve {
  std::function<double(double)> value;
  std::function<double(double)> slope;
  std::function<double(double)> drop;
};

/// Planar curve t -> (x, y) over [t_begin, t_end].
struct ParametricCurve {
  double t_begin = 0.0;
  double t_end = 1.0;
  std::function<std::pair<double, double>(double)> point;
};

/// Graph curve whose drop below `start_height` is evaluated as -x q(x) when
/// p(0) equals start_height exactly.
GraphCurve polynomial_curve(Polynomial p, std::optional<double> start_height = std::nullopt);

/// The graph y(x), x in [a, b], seen as a curve parameterised by x.
ParametricCurve as_parametric(GraphCurve curve, double a, double b);

/// Root mean square of candidate.y(x(t)) - y(t) over `samples` uniform
/// values of the reference's own parameter t (endpoints included).
double path_rmse(const GraphCurve& candidate, const ParametricCurve& reference,
                 int samples = 1000);

// ---------------------------------------------------------------- brachistochrone

QuadratureSpec default_brach_quadrature();

struct BrachConfig {
  double start_y = 2.0;  // start is (0, start_y), at rest
  double end_x = std::numbers::pi;
  double end_y = 0.0;
  double g = 9.8;
  int zeta = 5;     // nodes x_0..x_zeta, interior ones free
  int levels = 40;  // L: each interior node takes L+1 values
  double y_min = 0.0;
  double y_max = 2.0;
  double envelope = 2.0;  // |y(x)| bound checked by feasibility sampling
  int feasibility_samples = 512;
  QuadratureSpec quadrature = default_brach_quadrature();

  void validate() const;
};

/// x_k = k * end_x / zeta, k = 0..zeta.
std::vector<double> brach_nodes(const BrachConfig& cfg);

/// zeta-1 dimensions, each with levels+1 equidistant values on [y_min, y_max].
MixedRadixSpace brach_space(const BrachConfig& cfg);

/// Interpolant through (0, start_y), interior nodes, (end_x, end_y).
Polynomial brach_path(const BrachConfig& cfg, std::span<const double> interior);

/// Travel time from rest, speed^2 = 2 g (start_y - y). kInfeasible if a
/// sampled point rises to or above the start or leaves the envelope.
Evaluation brach_cost(const BrachConfig& cfg, const GraphCurve& path);

/// Oracle over any space whose dimensions are the interior node heights
/// (the physical grid or a refinement of it).
CostOracle brach_oracle(const BrachConfig& cfg, const MixedRadixSpace& space);
OracleFactory brach_oracle_factory(const BrachConfig& cfg);

/// Cycloid of radius a = (start_y - end_y) / 2 from the start point; reaches
/// the end point only when end_x == a * pi.
GraphCurve cycloid_curve(const BrachConfig& cfg);
ParametricCurve cycloid_parametric(const BrachConfig& cfg);
double brach_analytic_time(const BrachConfig& cfg);

struct BrachCoeffConfig {
  BrachConfig base;
  int zeta = 6;  // polynomial degree zeta-1
  /// Level counts for b_2..b_{zeta-1}; each spans [-B_j, B_j].
  std::vector<std::size_t> level_counts{81, 81, 81, 161};
  bool bound_envelope = true;

  void validate() const;
};

MixedRadixSpace brach_coeff_space(const BrachCoeffConfig& cfg);

/// y(x) = sum a_n x^n from b_2..b_{zeta-1} of (1/2) y(pi/2 (s+1)) = sum b_n s^n,
/// with a_0 = start_y and a_1 fixed by y(end_x) = end_y.
Polynomial brach_coeff_polynomial(const BrachCoeffConfig& cfg, std::span<const double> b);

CostOracle brach_coeff_oracle(const BrachCoeffConfig& cfg, const MixedRadixSpace& space);

// ---------------------------------------------------------------- isoperimetric

struct IsoConfig {
  double theta_begin = std::numbers::pi / 2;  // r(theta_begin) = 0 pinned
  double theta_end = std::numbers::pi;
  double length = std::numbers::pi / 3;
  double node_bound = 1.0;  // b
  int levels = 100;         // L
  std::vector<double> free_nodes{5 * std::numbers::pi / 8, 3 * std::numbers::pi / 4,
                                 7 * std::numbers::pi / 8};
  int feasibility_samples = 512;
  QuadratureSpec quadrature{16, 4, std::nullopt, 1e-12, 8};

  void validate() const;
};

struct IsoEvaluation {
  double area = 0.0;        // area of the normalised curve c f
  double scale = 0.0;       // c = length / raw_length
  double raw_length = 0.0;  // arc length of f
  Verdict verdict = Verdict::feasible;
  bool feasible() const { return verdict == Verdict::feasible; }
};

/// Scales f to the configured arc length and returns the enclosed area.
IsoEvaluation iso_area(const IsoConfig& cfg, const GraphCurve& radius);

/// One dimension per free node, levels+1 values b i / L.
MixedRadixSpace iso_space(const IsoConfig& cfg);
Polynomial iso_curve(const IsoConfig& cfg, std::span<const double> free_values);
/// Negated normalised area (maximisation exposed as minimisation).
CostOracle iso_oracle(const IsoConfig& cfg, const MixedRadixSpace& space);

/// r = -(2 length / pi) cos(theta): the half circle on the line theta = pi.
GraphCurve semicircle_curve(const IsoConfig& cfg);
double iso_analytic_area(const IsoConfig& cfg);

// ---------------------------------------------------------------- moon landing

struct MoonConfig {
  double h0 = 50002.65;
  double v0 = -178.0;
  double m0 = 2500.0;
  double g = 1.63;
  double k_ex = 585.0;
  double max_burn = 15.0;  // controls lie in [-max_burn, 0]
  double m_dry = 800.0;
  std::array<double, 4> t{25.0, 75.0, 200.0, 400.0};
  /// Admissible values for a_2, a_3, a_4 (search dimensions).
  std::vector<double> control_levels{-6.35, -6.30, -6.25};
  int a1_scan = 200;
  int height_samples = 2000;

  void validate() const;
};

struct MoonState {
  double m = 0.0;
  double v = 0.0;
  double h = 0.0;
};

using MoonControls = std::array<double, 4>;

/// Closed-form mass, velocity and height at time t in [0, t_4] under
/// piecewise-constant burn rates.
MoonState moon_dynamics(const MoonConfig& cfg, const MoonControls& controls, double t);

struct MoonSolution {
  MoonControls controls{};
  double tau = 0.0;
  double m_final = 0.0;

  MoonState at(const MoonConfig& cfg, double t) const { return moon_dynamics(cfg, controls, t); }
};

enum class LandingFailure {
  none,
  control_out_of_range,
  no_velocity_zero,
  no_sign_change,
  height_dips,
  mass_below_dry,
};

const char* to_string(LandingFailure f);

struct LandingResult {
  std::optional<MoonSolution> solution;
  LandingFailure failure = LandingFailure::none;
};

/// First time in (0, t_4] where v crosses zero, if any.
std::optional<double> first_velocity_zero(const MoonConfig& cfg, const MoonControls& controls);

/// Solves for a_1 and tau with v(tau) = 0 and h(tau) = 0.
LandingResult solve_soft_landing(const MoonConfig& cfg, double a2, double a3, double a4);

/// Three dimensions (a_2, a_3, a_4) over control_levels.
MixedRadixSpace moon_space(const MoonConfig& cfg);
/// Cost -m(tau): maximising landed mass.
CostOracle moon_oracle(const MoonConfig& cfg, const MixedRadixSpace& space);

}  // namespace trajsearch
