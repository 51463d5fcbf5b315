// Data-driven choice of approximation space and tension from a six-cell window.
#pragma once

#include <cmath>

#include "wenoh/basis.hpp"

namespace wenoh {

// Undivided differences of the window f_{j-2} .. f_{j+3}; orders 4 and 5 are
// centered on the five-cell core, order 6 needs the extension cell f_{j+3}.
struct PrimitiveDifferences {
  double d4 = 0.0, d5 = 0.0, d6 = 0.0;
};

// w6 points at the six-cell window (cells j-2 .. j+3).
inline PrimitiveDifferences primitive_differences(const double* w6) {
  PrimitiveDifferences d;
  d.d4 = w6[4] - 3.0 * w6[3] + 3.0 * w6[2] - w6[1];
  d.d5 = w6[4] - 4.0 * w6[3] + 6.0 * w6[2] - 4.0 * w6[1] + w6[0];
  d.d6 = w6[5] - 5.0 * w6[4] + 10.0 * w6[3] - 10.0 * w6[2] + 5.0 * w6[1] - w6[0];
  return d;
}

struct TensionThresholds {
  double eps_zero = 1e-10;  // relative floor below which a difference counts as zero
  double s2_max = 1.0;      // cap on |s2| = (lam dx)^2; keeps both families well posed
};

struct TensionDecision {
  BasisKind kind = BasisKind::Polynomial;
  double s2 = 0.0;
};

// scale is a magnitude reference for the window (max |f| + 1) so the zero tests
// are invariant under adding a large constant to the data.
inline TensionDecision select_tension(const PrimitiveDifferences& d, double dx, double scale,
                                      const TensionThresholds& th = {}) {
  if (!(std::isfinite(d.d4) && std::isfinite(d.d5) && std::isfinite(d.d6)))
    return {BasisKind::Polynomial, 0.0};
  const double tol = th.eps_zero * scale;
  if (std::fabs(d.d6) <= tol) return {BasisKind::Polynomial, 0.0};

  if (std::fabs(d.d4) > tol) {
    // Smooth generic data: lam^2 estimated from the ratio of like-parity
    // differences, sixth over fourth.
    double s2 = d.d6 / d.d4;
    if (s2 > th.s2_max) s2 = th.s2_max;
    if (s2 < -th.s2_max) s2 = -th.s2_max;
    return {s2 > 0.0 ? BasisKind::HyperbolicC1 : BasisKind::TrigonometricC1, s2};
  }
  if (std::fabs(d.d5) > tol) {
    // Vanishing fourth difference: fall back to the odd-parity ratio, which
    // carries an extra factor of dx and the cross-derivative correction.
    double s2 = dx * d.d6 / d.d5;
    if (s2 > th.s2_max) s2 = th.s2_max;
    if (s2 < -th.s2_max) s2 = -th.s2_max;
    return {s2 > 0.0 ? BasisKind::HyperbolicC2 : BasisKind::TrigonometricC2, s2};
  }
  return {BasisKind::Polynomial, 0.0};
}

}  // namespace wenoh
