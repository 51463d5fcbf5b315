// Exact solution of the 1D Euler Riemann problem for reference profiles.
#pragma once

#include <stdexcept>

namespace wenoh {

struct PrimState1D {
  double rho = 1.0, u = 0.0, p = 1.0;
};

struct RiemannStar {
  double p = 0.0, u = 0.0;
  int iterations = 0;
};

// Star-region pressure and velocity via Newton iteration on the pressure
// function; throws std::domain_error when the data admit vacuum.
RiemannStar solve_riemann(const PrimState1D& left, const PrimState1D& right, double gamma);

// Self-similar sample at xi = (x - x0) / t.
PrimState1D sample_riemann(const PrimState1D& left, const PrimState1D& right, double gamma,
                           const RiemannStar& star, double xi);

}  // namespace wenoh
