#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace trajsearch {

/// Real polynomial in monomial form, coefficients ascending (a0 + a1 x + ...).
class Polynomial {
 public:
  Polynomial() : coeffs_{0.0} {}
  explicit Polynomial(std::vector<double> coeffs);

  double operator()(double x) const;
  Polynomial derivative() const;

  /// (p(x) - p(0)) / x, i.e. the coefficients shifted down by one. Lets
  /// callers evaluate p(x) - p(0) without cancellation near x = 0.
  Polynomial shifted_quotient() const;

  std::size_t degree() const { return coeffs_.size() - 1; }
  std::span<const double> coeffs() const { return coeffs_; }
  double coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : 0.0; }

 private:
  std::vector<double> coeffs_;
};

/// Lagrange cardinal functions on distinct nodes x0..x_zeta.
class LagrangeBasis {
 public:
  explicit LagrangeBasis(std::vector<double> nodes);

  std::span<const double> nodes() const { return nodes_; }
  std::size_t size() const { return nodes_.size(); }

  /// phi_k(x) = prod_{j != k} (x - x_j) / (x_k - x_j).
  double cardinal(std::size_t k, double x) const;

  /// Interpolant value at x via the barycentric form (no coefficients).
  double evaluate(std::span<const double> values, double x) const;

 private:
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

/// Monomial coefficients of the interpolant through (nodes, values); solves
/// the Vandermonde system with partial pivoting.
Polynomial lagrange_interpolate(const LagrangeBasis& basis, std::span<const double> values);

/// Precomputed inverse Vandermonde for a fixed node set: coefficients are a
/// matrix-vector product. Used by hot oracles that interpolate millions of
/// value tuples on the same nodes.
class Interpolator {
 public:
  explicit Interpolator(const LagrangeBasis& basis);
  Polynomial operator()(std::span<const double> values) const;
  void coefficients(std::span<const double> values, std::span<double> out) const;
  std::size_t size() const { return n_; }

 private:
  std::size_t n_;
  std::vector<double> inverse_;  // row-major n x n
};

enum class Endpoint { lower, upper };

struct Grading {
  Endpoint endpoint = Endpoint::lower;
  /// Dyadic levels added toward the endpoint on every refinement pass.
  int strength = 16;
};

struct QuadratureSpec {
  int order = 16;         // Gauss-Legendre points per panel
  int base_panels = 4;
  std::optional<Grading> grading;
  double rel_tol = 1e-9;
  int max_refinements = 8;
};

struct QuadratureResult {
  double value = 0.0;
  double achieved_tol = 0.0;  // |last - previous| / |last|
  int refinements = 0;
  std::uint64_t evaluations = 0;
};

class ToleranceNotMet : public std::runtime_error {
 public:
  ToleranceNotMet(double best, double achieved);
  double best_estimate() const { return best_; }
  double achieved_tol() const { return achieved_; }

 private:
  double best_;
  double achieved_;
};

/// Raised when the integrand returns a non-finite value at a sample point.
class NonFiniteIntegrand : public std::domain_error {
 public:
  explicit NonFiniteIntegrand(double x);
  double where() const { return x_; }

 private:
  double x_;
};

/// Composite Gauss-Legendre with optional dyadic grading toward one endpoint.
/// Never samples a or b. Panels double each pass until successive estimates
/// agree to rel_tol (or 1e-14 absolute).
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureSpec& spec = {});

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const GaussLegendreRule& gauss_legendre(int n);

/// Integer coefficients of Chebyshev polynomials of the first kind,
/// T_n(x) = sum_k t[n][k] x^k, built by T_{n+1} = 2x T_n - T_{n-1}.
class ChebyshevTable {
 public:
  explicit ChebyshevTable(int max_degree);

  int max_degree() const { return static_cast<int>(rows_.size()) - 1; }
  std::int64_t coeff(int n, int k) const;
  std::span<const std::int64_t> row(int n) const { return rows_.at(static_cast<std::size_t>(n)); }

 private:
  std::vector<std::vector<std::int64_t>> rows_;
};

/// Magnitude bounds B_1..B_{zeta-1} on the coefficients b_j of a polynomial
/// of degree zeta-1 bounded by 1 on [-1, 1]: indices of the same parity as
/// n = zeta-1 take |t_{n,j}|, the others |t_{n-1,j}|. Entry j-1 is B_j.
std::vector<double> coefficient_bounds(const ChebyshevTable& table, int zeta);

/// Bisection to a bracket no wider than tol. Requires f(lo) f(hi) <= 0.
double bisect_root(const std::function<double(double)>& f, double lo, double hi,
                   double tol = 1e-10);

}  // namespace trajsearch
