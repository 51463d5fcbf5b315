#include <array>
#include <cmath>

#include <doctest.h>

#include "wenoh/basis.hpp"
#include "wenoh/weights.hpp"

using namespace wenoh;

namespace {

bool convex(const std::array<double, 3>& om, double tol = 1e-14) {
  const double sum = om[0] + om[1] + om[2];
  return om[0] >= -tol && om[1] >= -tol && om[2] >= -tol &&
         std::fabs(sum - 1.0) <= 1e-12;
}

}  // namespace

TEST_CASE("difference operators and L1 indicators on a frozen window") {
  const double w5[5] = {1.0, 2.0, 4.0, 8.0, 16.0};
  double id1, id2;
  id_operators(w5, 0, id1, id2);
  CHECK(id1 == 3.0);   // f0 - 3 f1 + 2 f2
  CHECK(id2 == 1.0);
  id_operators(w5, 1, id1, id2);
  CHECK(id1 == 4.0);   // f2 - f1 over the middle substencil
  CHECK(id2 == 2.0);
  id_operators(w5, 2, id1, id2);
  CHECK(id1 == 4.0);   // -f0 + f1
  CHECK(id2 == 4.0);

  const auto b = beta_l1(w5, 0.25);
  CHECK(b.b0 == doctest::Approx(1.75).epsilon(1e-15));
  CHECK(b.b1 == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(b.b2 == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(tau5(w5) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("quadratic indicators are translation invariant and exact on parabolas") {
  const double w5[5] = {4.0, 1.0, 0.0, 1.0, 4.0};  // x^2 sampled at -2..2
  const auto b = beta_js(w5);
  CHECK(b.b0 == doctest::Approx(13.0 / 3.0).epsilon(1e-14));
  CHECK(b.b1 == doctest::Approx(13.0 / 3.0).epsilon(1e-14));
  CHECK(b.b2 == doctest::Approx(13.0 / 3.0).epsilon(1e-14));

  double shifted[5];
  for (int i = 0; i < 5; ++i) shifted[i] = w5[i] + 77.0;
  const auto bs = beta_js(shifted);
  CHECK(bs.b0 == doctest::Approx(b.b0).epsilon(1e-12));
  CHECK(bs.b2 == doctest::Approx(b.b2).epsilon(1e-12));

  const double lin[5] = {-2.0, -1.0, 0.0, 1.0, 2.0};
  const auto bl = beta_js(lin);
  CHECK(bl.b0 == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(bl.b1 == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(bl.b2 == doctest::Approx(1.0).epsilon(1e-14));

  const double quart[5] = {16.0, 1.0, 0.0, 1.0, 16.0};
  CHECK(tau5(quart) == doctest::Approx(24.0).epsilon(1e-15));
}

TEST_CASE("all weight maps return convex weights near the ideal split on smooth data") {
  double w5[5];
  for (int i = 0; i < 5; ++i) w5[i] = std::sin(0.3 + 0.05 * (i - 2));
  const auto bjs = beta_js(w5);
  const auto bl1 = beta_l1(w5, 0.25);
  const double t5 = tau5(w5);

  const auto js = weights_js(bjs, kClassicalD, 1e-6);
  const auto m = weights_m(bjs, kClassicalD, 1e-6);
  const auto z = weights_z(bjs, kClassicalD, 1e-6);
  const auto h = weights_h(bl1, t5, kClassicalD, std::pow(0.05, 4.0));
  for (const auto& om : {js, m, z, h}) {
    CHECK(convex(om));
    for (int k = 0; k < 3; ++k)
      CHECK(om[k] == doctest::Approx(kClassicalD[k]).epsilon(0.2));
  }
  // The mapped and global-reference variants sit closer to d than plain JS at
  // this resolution.
  const auto dev = [](const std::array<double, 3>& om) {
    double m2 = 0.0;
    for (int k = 0; k < 3; ++k) m2 = std::max(m2, std::fabs(om[k] - kClassicalD[k]));
    return m2;
  };
  CHECK(dev(m) <= dev(js) + 1e-15);
  CHECK(dev(z) <= dev(js) + 1e-15);
}

TEST_CASE("discontinuous windows suppress the crossing substencil") {
  const double w5[5] = {0.0, 0.0, 0.0, 1.0, 1.0};
  const auto om = weights_js(beta_js(w5), kClassicalD, 1e-6);
  CHECK(convex(om));
  CHECK(om[2] < 1e-6);   // substencil spanning the jump
  CHECK(om[0] > 0.99);   // clean substencil takes over

  const auto oh = weights_h(beta_l1(w5, 0.25), tau5(w5), kClassicalD, std::pow(0.01, 4.0));
  CHECK(convex(oh));
  CHECK(oh[0] > oh[2]);
}

TEST_CASE("rational map fixes the ideal weight and the endpoints") {
  for (double d : {0.1, 0.6, 0.3}) {
    CHECK(henrick_map(d, d) == doctest::Approx(d).epsilon(1e-15));
    CHECK(henrick_map(0.0, d) == 0.0);
    CHECK(henrick_map(1.0, d) == doctest::Approx(1.0).epsilon(1e-15));
    // Flat at the fixed point: g'(d) = 0 -> symmetric secant slope vanishes.
    const double e = 1e-4;
    const double slope = (henrick_map(d + e, d) - henrick_map(d - e, d)) / (2.0 * e);
    CHECK(std::fabs(slope) < 1e-6);
  }
}

TEST_CASE("identical indicators reproduce the ideal weights exactly") {
  SmoothnessTriple b{2.0, 2.0, 2.0};
  for (const auto& om :
       {weights_js(b, kClassicalD, 1e-6), weights_m(b, kClassicalD, 1e-6),
        weights_z(b, kClassicalD, 1e-6), weights_h(b, 0.0, kClassicalD, 1e-8)}) {
    CHECK(om[0] == doctest::Approx(0.1).epsilon(1e-12));
    CHECK(om[1] == doctest::Approx(0.6).epsilon(1e-12));
    CHECK(om[2] == doctest::Approx(0.3).epsilon(1e-12));
  }
}

TEST_CASE("H weights accept a data-driven split and keep it convex") {
  const std::array<double, 3> d{0.2, 0.5, 0.3};
  SmoothnessTriple b{0.1, 0.4, 0.2};
  const auto om = weights_h(b, 0.05, d, 1e-8);
  CHECK(convex(om));
  // Smaller indicator lifts its weight (relative to the d anchors).
  CHECK(om[0] / d[0] > om[1] / d[1]);
}
