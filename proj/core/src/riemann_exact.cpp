#include "wenoh/riemann_exact.hpp"

#include <algorithm>
#include <cmath>

namespace wenoh {

namespace {

// Pressure function for one side and its derivative with respect to p.
void side_function(double p, const PrimState1D& s, double gamma, double& f, double& fd) {
  const double c = std::sqrt(gamma * s.p / s.rho);
  if (p > s.p) {  // shock
    const double A = 2.0 / ((gamma + 1.0) * s.rho);
    const double B = (gamma - 1.0) / (gamma + 1.0) * s.p;
    const double root = std::sqrt(A / (p + B));
    f = (p - s.p) * root;
    fd = root * (1.0 - 0.5 * (p - s.p) / (p + B));
  } else {  // rarefaction
    const double pr = p / s.p;
    const double g1 = 0.5 * (gamma - 1.0) / gamma;
    f = 2.0 * c / (gamma - 1.0) * (std::pow(pr, g1) - 1.0);
    fd = std::pow(pr, -0.5 * (gamma + 1.0) / gamma) / (s.rho * c);
  }
}

}  // namespace

RiemannStar solve_riemann(const PrimState1D& left, const PrimState1D& right, double gamma) {
  const double cl = std::sqrt(gamma * left.p / left.rho);
  const double cr = std::sqrt(gamma * right.p / right.rho);
  const double du = right.u - left.u;
  if (2.0 * (cl + cr) / (gamma - 1.0) <= du)
    throw std::domain_error("solve_riemann: initial states admit vacuum");

  // Initial guess: two-rarefaction approximation, floored away from zero.
  const double z = 0.5 * (gamma - 1.0) / gamma;
  double p = std::pow((cl + cr - 0.5 * (gamma - 1.0) * du) /
                          (cl / std::pow(left.p, z) + cr / std::pow(right.p, z)),
                      1.0 / z);
  p = std::fmax(p, 1e-12 * std::fmin(left.p, right.p));

  RiemannStar star;
  for (int it = 0; it < 100; ++it) {
    double fl, fld, fr, frd;
    side_function(p, left, gamma, fl, fld);
    side_function(p, right, gamma, fr, frd);
    const double delta = (fl + fr + du) / (fld + frd);
    double pn = p - delta;
    if (pn <= 0.0) pn = 0.5 * p;
    star.iterations = it + 1;
    const double rel = std::fabs(pn - p) / (0.5 * (pn + p));
    p = pn;
    if (rel < 1e-12) break;
  }
  star.p = p;
  double fl, fld, fr, frd;
  side_function(p, left, gamma, fl, fld);
  side_function(p, right, gamma, fr, frd);
  star.u = 0.5 * (left.u + right.u) + 0.5 * (fr - fl);
  return star;
}

PrimState1D sample_riemann(const PrimState1D& left, const PrimState1D& right, double gamma,
                           const RiemannStar& star, double xi) {
  const double g = gamma;
  const double gm1 = g - 1.0, gp1 = g + 1.0;

  if (xi <= star.u) {  // left of the contact
    const PrimState1D& s = left;
    const double c = std::sqrt(g * s.p / s.rho);
    if (star.p > s.p) {  // left shock
      const double ps = star.p / s.p;
      const double sspd = s.u - c * std::sqrt(0.5 * gp1 / g * ps + 0.5 * gm1 / g);
      if (xi < sspd) return s;
      const double rho = s.rho * (ps + gm1 / gp1) / (gm1 / gp1 * ps + 1.0);
      return {rho, star.u, star.p};
    }
    // left rarefaction
    const double cs = c * std::pow(star.p / s.p, 0.5 * gm1 / g);
    if (xi < s.u - c) return s;
    if (xi > star.u - cs) {
      const double rho = s.rho * std::pow(star.p / s.p, 1.0 / g);
      return {rho, star.u, star.p};
    }
    const double u = (2.0 / gp1) * (c + 0.5 * gm1 * s.u + xi);
    const double cf = (2.0 / gp1) * (c + 0.5 * gm1 * (s.u - xi));
    const double rho = s.rho * std::pow(cf / c, 2.0 / gm1);
    const double p = s.p * std::pow(cf / c, 2.0 * g / gm1);
    return {rho, u, p};
  }

  // right of the contact
  const PrimState1D& s = right;
  const double c = std::sqrt(g * s.p / s.rho);
  if (star.p > s.p) {  // right shock
    const double ps = star.p / s.p;
    const double sspd = s.u + c * std::sqrt(0.5 * gp1 / g * ps + 0.5 * gm1 / g);
    if (xi > sspd) return s;
    const double rho = s.rho * (ps + gm1 / gp1) / (gm1 / gp1 * ps + 1.0);
    return {rho, star.u, star.p};
  }
  // right rarefaction
  const double cs = c * std::pow(star.p / s.p, 0.5 * gm1 / g);
  if (xi > s.u + c) return s;
  if (xi < star.u + cs) {
    const double rho = s.rho * std::pow(star.p / s.p, 1.0 / g);
    return {rho, star.u, star.p};
  }
  const double u = (2.0 / gp1) * (-c + 0.5 * gm1 * s.u + xi);
  const double cf = (2.0 / gp1) * (c - 0.5 * gm1 * (s.u - xi));
  const double rho = s.rho * std::pow(cf / c, 2.0 / gm1);
  const double p = s.p * std::pow(cf / c, 2.0 * g / gm1);
  return {rho, u, p};
}

}  // namespace wenoh
