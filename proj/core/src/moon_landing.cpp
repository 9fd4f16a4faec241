#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>

#include "trajsearch/problems.hpp"

namespace trajsearch {

const char* to_string(LandingFailure f) {
  switch (f) {
    case LandingFailure::none: return "none";
    case LandingFailure::control_out_of_range: return "control-out-of-range";
    case LandingFailure::no_velocity_zero: return "no-velocity-zero";
    case LandingFailure::no_sign_change: return "no-sign-change";
    case LandingFailure::height_dips: return "height-dips";
    case LandingFailure::mass_below_dry: return "mass-below-dry";
  }
  return "unknown";
}

void MoonConfig::validate() const {
  if (!(t[0] > 0.0 && t[0] < t[1] && t[1] < t[2] && t[2] < t[3]))
    throw std::invalid_argument("MoonConfig: need 0 < t1 < t2 < t3 < t4");
  if (!(m0 > m_dry)) throw std::invalid_argument("MoonConfig: m0 must exceed the dry mass");
  if (!(max_burn > 0.0)) throw std::invalid_argument("MoonConfig: max_burn must be positive");
  if (!(k_ex > 0.0) || !(g > 0.0)) throw std::invalid_argument("MoonConfig: g and k must be positive");
  if (control_levels.empty()) throw std::invalid_argument("MoonConfig: no control levels");
  for (double a : control_levels)
    if (a < -max_burn || a > 0.0)
      throw std::invalid_argument("MoonConfig: control levels must lie in [-max_burn, 0]");
  if (a1_scan < 2) throw std::invalid_argument("MoonConfig: a1_scan must be >= 2");
}

namespace {

// Integral of ln((b + a x) / m0) over x in [0, s], stable for a -> 0.
double log_mass_integral(double a, double b, double s, double m0) {
  const double base = s * std::log(b / m0);
  if (a == 0.0 || s == 0.0) return base;
  const double u = a * s / b;
  return base + s * ((1.0 + u) * std::log1p(u) - u) / u;
}

}  // namespace

MoonState moon_dynamics(const MoonConfig& cfg, const MoonControls& controls, double t) {
  if (t < 0.0 || t > cfg.t[3]) throw std::out_of_range("moon_dynamics: t outside [0, t4]");
  double m = cfg.m0;
  double h = cfg.h0;
  double t_prev = 0.0;
  for (std::size_t k = 0; k < 4; ++k) {
    const double t_end = cfg.t[k];
    const double s = std::min(t, t_end) - t_prev;
    const double a = controls[k];
    const double m_next = m + a * s;
    if (!(m_next > 0.0)) throw std::domain_error("moon_dynamics: mass reaches zero");
    h += cfg.v0 * s - 0.5 * cfg.g * ((t_prev + s) * (t_prev + s) - t_prev * t_prev) -
         cfg.k_ex * log_mass_integral(a, m, s, cfg.m0);
    m = m_next;
    if (t <= t_end) break;
    t_prev = t_end;
  }
  MoonState out;
  out.m = m;
  out.v = cfg.v0 - cfg.g * t - cfg.k_ex * std::log(m / cfg.m0);
  out.h = h;
  return out;
}

std::optional<double> first_velocity_zero(const MoonConfig& cfg, const MoonControls& controls) {
  constexpr int kSub = 64;
  auto v = [&](double t) { return moon_dynamics(cfg, controls, t).v; };
  try {
    double t_prev = 0.0;
    if (v(0.0) >= 0.0) return std::nullopt;
    double seg_begin = 0.0;
    for (std::size_t k = 0; k < 4; ++k) {
      const double seg_end = cfg.t[k];
      for (int i = 1; i <= kSub; ++i) {
        const double t = i == kSub ? seg_end : seg_begin + (seg_end - seg_begin) * i / kSub;
        const double vt = v(t);
        if (vt >= 0.0) return bisect_root(v, t_prev, t, 1e-12);
        t_prev = t;
      }
      seg_begin = seg_end;
    }
  } catch (const std::domain_error&) {
    // fuel exhausted before any zero
  }
  return std::nullopt;
}

LandingResult solve_soft_landing(const MoonConfig& cfg, double a2, double a3, double a4) {
  cfg.validate();
  LandingResult out;
  for (double a : {a2, a3, a4}) {
    if (a < -cfg.max_burn || a > 0.0) {
      out.failure = LandingFailure::control_out_of_range;
      return out;
    }
  }
  auto controls = [&](double a1) { return MoonControls{a1, a2, a3, a4}; };
  struct NoTouchdown {};
  auto height_at_touchdown = [&](double a1) {
    const auto c = controls(a1);
    const auto tau = first_velocity_zero(cfg, c);
    if (!tau) throw NoTouchdown{};
    return moon_dynamics(cfg, c, *tau).h;
  };

  const int n = cfg.a1_scan;
  std::vector<double> grid(static_cast<std::size_t>(n));
  std::vector<double> f(static_cast<std::size_t>(n), std::nan(""));
  bool any_zero = false;
  for (int i = 0; i < n; ++i) {
    const double a1 = -cfg.max_burn + cfg.max_burn * i / (n - 1);
    grid[static_cast<std::size_t>(i)] = a1;
    try {
      f[static_cast<std::size_t>(i)] = height_at_touchdown(a1);
      any_zero = true;
    } catch (const NoTouchdown&) {
    }
  }
  if (!any_zero) {
    out.failure = LandingFailure::no_velocity_zero;
    return out;
  }

  std::optional<double> a1;
  for (std::size_t i = 0; i + 1 < grid.size() && !a1; ++i) {
    const double fl = f[i];
    const double fr = f[i + 1];
    if (!std::isfinite(fl) || !std::isfinite(fr)) continue;
    if (std::signbit(fl) == std::signbit(fr) && fl != 0.0 && fr != 0.0) continue;
    try {
      a1 = bisect_root(height_at_touchdown, grid[i], grid[i + 1], 1e-15);
    } catch (const NoTouchdown&) {
    }
  }
  if (!a1) {
    out.failure = LandingFailure::no_sign_change;
    return out;
  }

  const auto c = controls(*a1);
  const auto tau = first_velocity_zero(cfg, c);
  if (!tau) {
    out.failure = LandingFailure::no_sign_change;
    return out;
  }
  const auto end = moon_dynamics(cfg, c, *tau);
  if (std::abs(end.v) > 1e-6 || std::abs(end.h) > 1e-4) {
    out.failure = LandingFailure::no_sign_change;
    return out;
  }
  for (int i = 0; i < cfg.height_samples; ++i) {
    const double t = *tau * i / cfg.height_samples;
    if (!(moon_dynamics(cfg, c, t).h > 0.0)) {
      out.failure = LandingFailure::height_dips;
      return out;
    }
  }
  if (end.m < cfg.m_dry) {
    out.failure = LandingFailure::mass_below_dry;
    return out;
  }
  out.solution = MoonSolution{c, *tau, end.m};
  return out;
}

MixedRadixSpace moon_space(const MoonConfig& cfg) {
  cfg.validate();
  auto levels = cfg.control_levels;
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  return MixedRadixSpace(std::vector<LevelSet>(3, LevelSet(levels)));
}

CostOracle moon_oracle(const MoonConfig& cfg, const MixedRadixSpace& space) {
  cfg.validate();
  if (space.rank() != 3) throw std::invalid_argument("moon_oracle: expected 3 dimensions");
  auto sp = std::make_shared<const MixedRadixSpace>(space);
  return [cfg, sp](Index i) {
    const auto a = sp->decode(i);
    const auto r = solve_soft_landing(cfg, a[0], a[1], a[2]);
    return r.solution ? -r.solution->m_final : kInfeasible;
  };
}

}  // namespace trajsearch
