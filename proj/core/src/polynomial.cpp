#include <cmath>
#include <stdexcept>

#include "trajsearch/numerics.hpp"

namespace trajsearch {

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.push_back(0.0);
}

double Polynomial::operator()(double x) const {
  double acc = 0.0;
  for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + coeffs_[k];
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() == 1) return Polynomial({0.0});
  std::vector<double> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = static_cast<double>(k) * coeffs_[k];
  return Polynomial(std::move(d));
}

Polynomial Polynomial::shifted_quotient() const {
  if (coeffs_.size() == 1) return Polynomial({0.0});
  return Polynomial(std::vector<double>(coeffs_.begin() + 1, coeffs_.end()));
}

LagrangeBasis::LagrangeBasis(std::vector<double> nodes) : nodes_(std::move(nodes)) {
  if (nodes_.empty()) throw std::invalid_argument("LagrangeBasis: no nodes");
  const std::size_t n = nodes_.size();
  weights_.assign(n, 1.0);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j == k) continue;
      const double diff = nodes_[k] - nodes_[j];
      if (diff == 0.0) throw std::invalid_argument("LagrangeBasis: duplicate nodes");
      weights_[k] /= diff;
    }
  }
}

double LagrangeBasis::cardinal(std::size_t k, double x) const {
  double p = 1.0;
  for (std::size_t j = 0; j < nodes_.size(); ++j)
    if (j != k) p *= (x - nodes_[j]) / (nodes_[k] - nodes_[j]);
  return p;
}

double LagrangeBasis::evaluate(std::span<const double> values, double x) const {
  if (values.size() != nodes_.size())
    throw std::invalid_argument("LagrangeBasis::evaluate: value count mismatch");
  double num = 0.0;
  double den = 0.0;
  for (std::size_t k = 0; k < nodes_.size(); ++k) {
    const double dx = x - nodes_[k];
    if (dx == 0.0) return values[k];
    const double t = weights_[k] / dx;
    num += t * values[k];
    den += t;
  }
  return num / den;
}

namespace {

// Solves V c = rhs in place for each column of rhs (n x m, row-major), with
// V the Vandermonde matrix of `nodes`. Gaussian elimination, partial pivoting.
void solve_vandermonde(std::span<const double> nodes, std::vector<double>& rhs, std::size_t m) {
  const std::size_t n = nodes.size();
  std::vector<double> a(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    double p = 1.0;
    for (std::size_t j = 0; j < n; ++j) {
      a[i * n + j] = p;
      p *= nodes[i];
    }
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a[r * n + col]) > std::abs(a[piv * n + col])) piv = r;
    if (a[piv * n + col] == 0.0) throw std::invalid_argument("Vandermonde system is singular");
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[col * n + j], a[piv * n + j]);
      for (std::size_t j = 0; j < m; ++j) std::swap(rhs[col * m + j], rhs[piv * m + j]);
    }
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = a[r * n + col] / a[col * n + col];
      if (f == 0.0) continue;
      for (std::size_t j = col; j < n; ++j) a[r * n + j] -= f * a[col * n + j];
      for (std::size_t j = 0; j < m; ++j) rhs[r * m + j] -= f * rhs[col * m + j];
    }
  }
  for (std::size_t row = n; row-- > 0;) {
    for (std::size_t j = 0; j < m; ++j) {
      double s = rhs[row * m + j];
      for (std::size_t k = row + 1; k < n; ++k) s -= a[row * n + k] * rhs[k * m + j];
      rhs[row * m + j] = s / a[row * n + row];
    }
  }
}

}  // namespace

Polynomial lagrange_interpolate(const LagrangeBasis& basis, std::span<const double> values) {
  if (values.size() != basis.size())
    throw std::invalid_argument("lagrange_interpolate: value count mismatch");
  std::vector<double> c(values.begin(), values.end());
  solve_vandermonde(basis.nodes(), c, 1);
  return Polynomial(std::move(c));
}

Interpolator::Interpolator(const LagrangeBasis& basis) : n_(basis.size()) {
  inverse_.assign(n_ * n_, 0.0);
  for (std::size_t i = 0; i < n_; ++i) inverse_[i * n_ + i] = 1.0;
  solve_vandermonde(basis.nodes(), inverse_, n_);
}

void Interpolator::coefficients(std::span<const double> values, std::span<double> out) const {
  if (values.size() != n_ || out.size() != n_)
    throw std::invalid_argument("Interpolator: size mismatch");
  for (std::size_t i = 0; i < n_; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < n_; ++j) s += inverse_[i * n_ + j] * values[j];
    out[i] = s;
  }
}

Polynomial Interpolator::operator()(std::span<const double> values) const {
  std::vector<double> c(n_);
  coefficients(values, c);
  return Polynomial(std::move(c));
}

}  // namespace trajsearch
