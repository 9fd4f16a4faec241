#include <cmath>
#include <numbers>

#include "doctest.h"
#include "trajsearch/numerics.hpp"

using namespace trajsearch;

namespace {

double naive_eval(const std::vector<double>& c, double x) {
  double s = 0.0;
  for (std::size_t k = 0; k < c.size(); ++k) s += c[k] * std::pow(x, static_cast<double>(k));
  return s;
}

long long binom(int n, int k) {
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// T_n coefficient of x^{n-2k}: (-1)^k n/(n-k) C(n-k, k) 2^{n-2k-1}
long long cheb_closed_form(int n, int j) {
  if (n == 0) return j == 0 ? 1 : 0;
  if (j > n || (n - j) % 2 != 0) return 0;
  const int k = (n - j) / 2;
  const long long mag = n * binom(n - k, k) / (n - k) * (1LL << (n - 2 * k)) / 2;
  return (k % 2 ? -1 : 1) * mag;
}

}  // namespace

TEST_CASE("polynomial evaluation, derivative and shifted quotient") {
  const std::vector<double> c{2.0, -2.7, 2.4, -1.3, 0.39, -0.04};
  const Polynomial p(c);
  const Polynomial d = p.derivative();
  const Polynomial q = p.shifted_quotient();
  CHECK(p.degree() == 5);
  for (double x : {-1.0, 0.0, 0.3, 1.7, 3.1}) {
    CHECK(p(x) == doctest::Approx(naive_eval(c, x)).epsilon(1e-13));
    const double h = 1e-5;
    CHECK(d(x) == doctest::Approx((p(x + h) - p(x - h)) / (2 * h)).epsilon(1e-8));
    CHECK(p(x) == doctest::Approx(p.coeff(0) + x * q(x)).epsilon(1e-13));
  }
  CHECK(Polynomial({5.0}).derivative()(1.0) == 0.0);
}

TEST_CASE("lagrange interpolation passes through the nodes and reproduces polynomials") {
  const LagrangeBasis basis({0.0, 0.5, 1.2, 2.0, 3.0});
  const std::vector<double> truth{1.0, -2.0, 0.5, 0.25, -0.125};  // degree 4: exact
  std::vector<double> values;
  for (double x : basis.nodes()) values.push_back(naive_eval(truth, x));
  const Polynomial p = lagrange_interpolate(basis, values);
  for (std::size_t k = 0; k < truth.size(); ++k) CHECK(p.coeff(k) == doctest::Approx(truth[k]).epsilon(1e-10));
  for (double x : {0.1, 0.7, 2.5}) CHECK(basis.evaluate(values, x) == doctest::Approx(p(x)).epsilon(1e-12));
  for (std::size_t k = 0; k < basis.size(); ++k) {
    for (std::size_t j = 0; j < basis.size(); ++j)
      CHECK(basis.cardinal(k, basis.nodes()[j]) == doctest::Approx(k == j ? 1.0 : 0.0));
  }
  const Interpolator fast(basis);
  const Polynomial p2 = fast(values);
  for (std::size_t k = 0; k < truth.size(); ++k) CHECK(p2.coeff(k) == doctest::Approx(p.coeff(k)).epsilon(1e-10));
  CHECK_THROWS(LagrangeBasis({0.0, 1.0, 1.0}));
}

TEST_CASE("gauss-legendre rules integrate polynomials of degree 2n-1 exactly") {
  for (int n : {1, 2, 5, 16}) {
    const auto& r = gauss_legendre(n);
    double wsum = 0.0;
    for (double w : r.weights) wsum += w;
    CHECK(wsum == doctest::Approx(2.0).epsilon(1e-14));
    for (int deg = 0; deg <= 2 * n - 1; ++deg) {
      double s = 0.0;
      for (std::size_t i = 0; i < r.nodes.size(); ++i) s += r.weights[i] * std::pow(r.nodes[i], deg);
      const double exact = deg % 2 ? 0.0 : 2.0 / (deg + 1);
      CHECK(s == doctest::Approx(exact).epsilon(1e-13).scale(1.0));
    }
  }
}

TEST_CASE("integrate smooth and endpoint-singular integrands") {
  CHECK(integrate([](double x) { return std::exp(x); }, 0.0, 1.0).value ==
        doctest::Approx(std::numbers::e - 1.0).epsilon(1e-13));
  QuadratureSpec graded;
  graded.grading = Grading{Endpoint::lower, 20};
  graded.base_panels = 2;
  CHECK(integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, graded).value ==
        doctest::Approx(2.0).epsilon(1e-9));
  QuadratureSpec upper = graded;
  upper.grading->endpoint = Endpoint::upper;
  // near x = 1 doubles only resolve about 1e-13 of the tail, so use a
  // milder singularity there: integral of (1 - x)^(-1/4) is 4/3
  CHECK(integrate([](double x) { return std::pow(1.0 - x, -0.25); }, 0.0, 1.0, upper).value ==
        doctest::Approx(4.0 / 3.0).epsilon(1e-8));
  // shifted interval: grading toward a nonzero endpoint never samples it
  CHECK(integrate([](double x) { return 1.0 / std::sqrt(x - 2.0); }, 2.0, 3.0, graded).value ==
        doctest::Approx(2.0).epsilon(1e-5));
}

TEST_CASE("quadrature failures are typed") {
  CHECK_THROWS_AS(integrate([](double x) { return x > 0.5 ? std::nan("") : 1.0; }, 0.0, 1.0), NonFiniteIntegrand);
  QuadratureSpec tight;
  tight.rel_tol = 1e-15;
  tight.max_refinements = 0;
  tight.order = 2;
  tight.base_panels = 1;
  try {
    integrate([](double x) { return std::sin(50 * x); }, 0.0, 3.0, tight);
    FAIL("expected ToleranceNotMet");
  } catch (const ToleranceNotMet& e) {
    CHECK(std::isfinite(e.best_estimate()));
    CHECK(e.achieved_tol() > 1e-15);
  }
}

TEST_CASE("chebyshev table matches the closed-form coefficients") {
  const ChebyshevTable t(12);
  for (int n = 0; n <= 12; ++n)
    for (int j = 0; j <= n; ++j) CHECK(t.coeff(n, j) == cheb_closed_form(n, j));
  // T_n(cos a) = cos(n a)
  for (int n = 0; n <= 12; ++n) {
    for (double a : {0.1, 0.9, 2.3}) {
      double s = 0.0;
      for (int j = 0; j <= n; ++j) s += static_cast<double>(t.coeff(n, j)) * std::pow(std::cos(a), j);
      CHECK(s == doctest::Approx(std::cos(n * a)).epsilon(1e-9).scale(1.0));
    }
  }
  CHECK_THROWS_AS(ChebyshevTable(80), std::overflow_error);
}

TEST_CASE("coefficient bounds follow the parity rule") {
  const ChebyshevTable t(10);
  for (int zeta = 2; zeta <= 8; ++zeta) {
    const auto b = coefficient_bounds(t, zeta);
    const int n = zeta - 1;
    REQUIRE(b.size() == static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) {
      const int src = (n - j) % 2 == 0 ? n : n - 1;
      CHECK(b[static_cast<std::size_t>(j - 1)] == static_cast<double>(std::llabs(cheb_closed_form(src, j))));
    }
  }
  // degree 5 (zeta 6): B_2..B_5 = 8, 20, 8, 16
  const auto b6 = coefficient_bounds(t, 6);
  CHECK(b6[1] == 8.0);
  CHECK(b6[2] == 20.0);
  CHECK(b6[3] == 8.0);
  CHECK(b6[4] == 16.0);
}

TEST_CASE("bisection") {
  CHECK(bisect_root([](double x) { return x * x - 2.0; }, 0.0, 2.0, 1e-14) ==
        doctest::Approx(std::numbers::sqrt2).epsilon(1e-13));
  CHECK_THROWS(bisect_root([](double x) { return x * x + 1.0; }, -1.0, 1.0));
}
