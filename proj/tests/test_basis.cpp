#include <array>
#include <cmath>
#include <vector>

#include <doctest.h>

#include "wenoh/basis.hpp"

using namespace wenoh;

namespace {

// Independent closed forms for the deflated pair: subtract the low-order Taylor
// terms from cosh/sinh (or cos/sin for negative s2) directly.
void closed_form_pair(double s2, double t, double& phi4, double& phi5) {
  if (s2 > 0.0) {
    const double lam = std::sqrt(s2);
    const double x = lam * t;
    phi4 = (std::cosh(x) - 1.0 - 0.5 * x * x) / (s2 * s2);
    phi5 = (std::sinh(x) - x - x * x * x / 6.0) / (s2 * s2 * lam);
  } else {
    const double mu = std::sqrt(-s2);
    const double x = mu * t;
    phi4 = (std::cos(x) - 1.0 + 0.5 * x * x) / (s2 * s2);
    phi5 = (std::sin(x) - x + x * x * x / 6.0) / (s2 * s2 * mu);
  }
}

// Derivative of the Lagrange cardinal polynomial for node n at x, built from
// first principles as the textbook sum-of-products.
double lagrange_cardinal_derivative(int n, double x) {
  const auto& nodes = kPrimitiveNodes;
  double total = 0.0;
  for (int k = 0; k < 6; ++k) {
    if (k == n) continue;
    double prod = 1.0 / (nodes[n] - nodes[k]);
    for (int m = 0; m < 6; ++m) {
      if (m == n || m == k) continue;
      prod *= (x - nodes[m]) / (nodes[n] - nodes[m]);
    }
    total += prod;
  }
  return total;
}

}  // namespace

TEST_CASE("series basis values match cosh/sinh closed forms") {
  const double s2s[] = {1.0, 0.5, 0.1, -0.1, -0.5, -1.0};
  for (double s2 : s2s)
    for (double t : kPrimitiveNodes) {
      if (t == 0.0) continue;
      const auto kind = s2 > 0.0 ? BasisKind::HyperbolicC1 : BasisKind::TrigonometricC1;
      const auto phi = primitive_basis_values(kind, s2, t);
      double p4, p5;
      closed_form_pair(s2, t, p4, p5);
      CHECK(phi[4] == doctest::Approx(p4).epsilon(1e-11));
      CHECK(phi[5] == doctest::Approx(p5).epsilon(1e-11));
      CHECK(phi[0] == 1.0);
      CHECK(phi[1] == t);
      CHECK(phi[2] == doctest::Approx(0.5 * t * t).epsilon(1e-15));
      CHECK(phi[3] == doctest::Approx(t * t * t / 6.0).epsilon(1e-15));
    }
}

TEST_CASE("polynomial limit of the deflated pair is exact") {
  for (double t : {-3.0, -1.0, 0.5, 2.0}) {
    const auto phi = primitive_basis_values(BasisKind::Polynomial, 123.0, t);
    CHECK(phi[4] == doctest::Approx(t * t * t * t / 24.0).epsilon(1e-16));
    CHECK(phi[5] == doctest::Approx(t * t * t * t * t / 120.0).epsilon(1e-16));
    const auto phi0 = primitive_basis_values(BasisKind::HyperbolicC1, 0.0, t);
    CHECK(phi0[4] == phi[4]);
    CHECK(phi0[5] == phi[5]);
  }
}

TEST_CASE("second-class kinds add the cross term s2 t^6/720 to phi5") {
  const double s2 = 0.3, t = -2.0;
  const auto c1 = primitive_basis_values(BasisKind::HyperbolicC1, s2, t);
  const auto c2 = primitive_basis_values(BasisKind::HyperbolicC2, s2, t);
  CHECK(c2[5] - c1[5] == doctest::Approx(s2 * std::pow(t, 6) / 720.0).epsilon(1e-14));
  CHECK(c2[4] == c1[4]);
}

TEST_CASE("polynomial derivative weights match the Lagrange-cardinal oracle") {
  const auto dw = lagrange_derivative_weights(BasisKind::Polynomial, 0.0);
  CHECK_FALSE(dw.fallback);
  for (int n = 0; n < 6; ++n) {
    CHECK(dw.w[n] == doctest::Approx(lagrange_cardinal_derivative(n, 0.0)).epsilon(1e-13));
    CHECK(dw.w[n] == doctest::Approx(kPolyDerivativeWeights[n]).epsilon(1e-13));
  }
}

TEST_CASE("derivative weights differentiate the active basis exactly") {
  // For every basis function: sum_n w_n phi(t_n) must equal phi'(0).
  struct Case {
    BasisKind kind;
    double s2;
  };
  const Case cases[] = {{BasisKind::HyperbolicC1, 0.8},     {BasisKind::HyperbolicC1, 0.05},
                        {BasisKind::TrigonometricC1, -0.8}, {BasisKind::TrigonometricC1, -0.05},
                        {BasisKind::HyperbolicC2, 0.4},     {BasisKind::TrigonometricC2, -0.4}};
  for (const auto& cs : cases) {
    const auto dw = lagrange_derivative_weights(cs.kind, cs.s2);
    REQUIRE_FALSE(dw.fallback);
    // phi'(0): phi0..phi5 differentiate to (0, 1, 0, 0, 0, 0) at t = 0; the
    // deflated pair starts at t^4, t^5 and the cross term at t^6, so all vanish.
    const std::array<double, 6> target{0.0, 1.0, 0.0, 0.0, 0.0, 0.0};
    for (int l = 0; l < 6; ++l) {
      double acc = 0.0;
      for (int n = 0; n < 6; ++n)
        acc += dw.w[n] * primitive_basis_values(cs.kind, cs.s2, kPrimitiveNodes[n])[l];
      CHECK(acc == doctest::Approx(target[l]).epsilon(1e-10));
    }
  }
}

TEST_CASE("fast interface coefficients agree with the dense solve") {
  const double s2s[] = {1.0,   0.5,   0.1,  1e-2, 1e-4, 1e-6,  1e-8,
                        -1e-8, -1e-4, -0.1, -0.5, -1.0, 0.3333};
  for (auto kind : {BasisKind::HyperbolicC1, BasisKind::TrigonometricC1,
                    BasisKind::HyperbolicC2, BasisKind::TrigonometricC2})
    for (double s2m : s2s) {
      const double s2 =
          (kind == BasisKind::TrigonometricC1 || kind == BasisKind::TrigonometricC2)
              ? -std::fabs(s2m)
              : std::fabs(s2m);
      const auto dw = lagrange_derivative_weights(kind, s2);
      REQUIRE_FALSE(dw.fallback);
      const auto ic = interface_coeffs(kind, s2);
      REQUIRE_FALSE(ic.fallback);
      // Telescoping the dense-route node weights gives the cell coefficients.
      std::array<double, 5> c{};
      c[4] = dw.w[5];
      for (int l = 3; l >= 0; --l) c[l] = c[l + 1] + dw.w[l + 1];
      for (int l = 0; l < 5; ++l) CHECK(ic.C[l] == doctest::Approx(c[l]).epsilon(1e-11));
    }
}

TEST_CASE("interface coefficients: classical limit and structure") {
  const auto poly = interface_coeffs(BasisKind::Polynomial, 0.7);
  for (int l = 0; l < 5; ++l) CHECK(poly.C[l] == kClassicalC[l]);
  for (int k = 0; k < 3; ++k) CHECK(poly.d[k] == kClassicalD[k]);

  const auto near0 = interface_coeffs(BasisKind::HyperbolicC1, 1e-8);
  for (int l = 0; l < 5; ++l)
    CHECK(near0.C[l] == doctest::Approx(kClassicalC[l]).epsilon(1e-7));
  for (int k = 0; k < 3; ++k)
    CHECK(near0.d[k] == doctest::Approx(kClassicalD[k]).epsilon(1e-7));

  for (double s2 : {1.0, -1.0, 0.25, -0.25}) {
    const auto ic = interface_coeffs(BasisKind::HyperbolicC1, s2);
    REQUIRE_FALSE(ic.fallback);
    REQUIRE_FALSE(ic.d_clamped);
    // Consistency: coefficients sum to one (constant data reproduced).
    double cs = 0.0, ds = 0.0;
    for (double v : ic.C) cs += v;
    for (double v : ic.d) ds += v;
    CHECK(cs == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(ds == doctest::Approx(1.0).epsilon(1e-13));
    // The convex split recombines to C through the substencil coefficients.
    std::array<double, 5> acc{};
    for (int k = 0; k < 3; ++k)
      for (int i = 0; i < 3; ++i) acc[k + i] += ic.d[k] * kSubstencilCoeffs[k][i];
    for (int l = 0; l < 5; ++l) CHECK(acc[l] == doctest::Approx(ic.C[l]).epsilon(1e-12));
  }
}

TEST_CASE("classical substencil and global coefficients reproduce quadratic data") {
  // Nodal values of any quadratic are the sliding cell averages of a shifted
  // quadratic; every route must return that function's interface value.
  const double dx = 0.2, xj = 0.37;
  auto avg = [&](double x) { return x * x + dx * dx / 12.0; };  // averages of h = x^2
  double w5[5];
  for (int l = 0; l < 5; ++l) w5[l] = avg(xj + (l - 2) * dx);
  const double target = (xj + 0.5 * dx) * (xj + 0.5 * dx);
  for (int k = 0; k < 3; ++k)
    CHECK(local_flux(w5, k) == doctest::Approx(target).epsilon(1e-13));
  double full = 0.0;
  for (int l = 0; l < 5; ++l) full += kClassicalC[l] * w5[l];
  CHECK(full == doctest::Approx(target).epsilon(1e-13));
}
