// Smoothness indicators and nonlinear weight maps for the four schemes.
#pragma once

#include <array>
#include <cmath>

namespace wenoh {

struct SmoothnessTriple {
  double b0 = 0.0, b1 = 0.0, b2 = 0.0;
};

// First- and second-difference operators of substencil k over the five-cell
// window w5 = f_{j-2} .. f_{j+2} (one-sided first differences biased toward the
// interface side of each substencil).
inline void id_operators(const double* w5, int k, double& id1, double& id2) {
  const double f0 = w5[k], f1 = w5[k + 1], f2 = w5[k + 2];
  id1 = (1.0 - k) * f0 + (2.0 * k - 3.0) * f1 + (2.0 - k) * f2;
  id2 = f0 - 2.0 * f1 + f2;
}

// L1-type indicator: theta * |first difference| + |second difference|.
inline SmoothnessTriple beta_l1(const double* w5, double theta) {
  SmoothnessTriple b;
  double id1, id2;
  id_operators(w5, 0, id1, id2);
  b.b0 = theta * std::fabs(id1) + std::fabs(id2);
  id_operators(w5, 1, id1, id2);
  b.b1 = theta * std::fabs(id1) + std::fabs(id2);
  id_operators(w5, 2, id1, id2);
  b.b2 = theta * std::fabs(id1) + std::fabs(id2);
  return b;
}

// Classical quadratic (Jiang-Shu) indicators.
inline SmoothnessTriple beta_js(const double* w5) {
  const double f0 = w5[0], f1 = w5[1], f2 = w5[2], f3 = w5[3], f4 = w5[4];
  SmoothnessTriple b;
  {
    const double a = f0 - 2.0 * f1 + f2, c = f0 - 4.0 * f1 + 3.0 * f2;
    b.b0 = (13.0 / 12.0) * a * a + 0.25 * c * c;
  }
  {
    const double a = f1 - 2.0 * f2 + f3, c = f1 - f3;
    b.b1 = (13.0 / 12.0) * a * a + 0.25 * c * c;
  }
  {
    const double a = f2 - 2.0 * f3 + f4, c = 3.0 * f2 - 4.0 * f3 + f4;
    b.b2 = (13.0 / 12.0) * a * a + 0.25 * c * c;
  }
  return b;
}

// Fourth-difference reference value centered on the window.
inline double tau5(const double* w5) {
  return w5[0] - 4.0 * w5[1] + 6.0 * w5[2] - 4.0 * w5[3] + w5[4];
}

inline std::array<double, 3> normalize3(double a0, double a1, double a2) {
  const double inv = 1.0 / (a0 + a1 + a2);
  return {a0 * inv, a1 * inv, a2 * inv};
}

// Sixth-order scheme: L1 indicators with the global reference tau and a
// resolution-coupled regularization eps = dx^gamma.
inline std::array<double, 3> weights_h(const SmoothnessTriple& b, double tau,
                                       const std::array<double, 3>& d, double eps) {
  const double t2 = tau * tau;
  const double a0 = d[0] * (1.0 + t2 / (b.b0 * b.b0 + eps));
  const double a1 = d[1] * (1.0 + t2 / (b.b1 * b.b1 + eps));
  const double a2 = d[2] * (1.0 + t2 / (b.b2 * b.b2 + eps));
  return normalize3(a0, a1, a2);
}

inline std::array<double, 3> weights_h(const SmoothnessTriple& b, double tau,
                                       const std::array<double, 3>& d, double dx,
                                       double gamma_exp) {
  return weights_h(b, tau, d, std::pow(dx, gamma_exp));
}

inline std::array<double, 3> weights_js(const SmoothnessTriple& b,
                                        const std::array<double, 3>& d, double eps) {
  const double q0 = eps + b.b0, q1 = eps + b.b1, q2 = eps + b.b2;
  return normalize3(d[0] / (q0 * q0), d[1] / (q1 * q1), d[2] / (q2 * q2));
}

// Mapped weights: the rational map fixes d and flattens near it, restoring the
// design order at critical points.
inline double henrick_map(double om, double d) {
  const double num = om * (d + d * d - 3.0 * d * om + om * om);
  const double den = d * d + om * (1.0 - 2.0 * d);
  return num / den;
}

inline std::array<double, 3> weights_m(const SmoothnessTriple& b,
                                       const std::array<double, 3>& d, double eps) {
  const auto om = weights_js(b, d, eps);
  return normalize3(henrick_map(om[0], d[0]), henrick_map(om[1], d[1]),
                    henrick_map(om[2], d[2]));
}

// Global-reference weights with tau_z = |b0 - b2| and linear power.
inline std::array<double, 3> weights_z(const SmoothnessTriple& b,
                                       const std::array<double, 3>& d, double eps) {
  const double tz = std::fabs(b.b0 - b.b2);
  return normalize3(d[0] * (1.0 + tz / (b.b0 + eps)), d[1] * (1.0 + tz / (b.b1 + eps)),
                    d[2] * (1.0 + tz / (b.b2 + eps)));
}

}  // namespace wenoh
