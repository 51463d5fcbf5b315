// Hyperbolic flux models: linear advection and the compressible Euler equations
// in one and two dimensions, with characteristic decompositions for upwinding.
#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <variant>

#include "wenoh/grid.hpp"

namespace wenoh {

struct AdvectionModel {
  double speed = 1.0;
  static constexpr int ncomp = 1;
};

struct Euler1DModel {
  double gamma = 1.4;
  static constexpr int ncomp = 3;
};

struct Euler2DModel {
  double gamma = 1.4;
  bool gravity = false;  // adds (0, 0, rho, rho v) as a source term
  static constexpr int ncomp = 4;
};

using FluxModel = std::variant<AdvectionModel, Euler1DModel, Euler2DModel>;

inline int model_ncomp(const FluxModel& m) {
  return std::visit([](const auto& mm) { return mm.ncomp; }, m);
}
inline double model_gamma(const FluxModel& m) {
  if (const auto* e1 = std::get_if<Euler1DModel>(&m)) return e1->gamma;
  if (const auto* e2 = std::get_if<Euler2DModel>(&m)) return e2->gamma;
  return 1.4;
}

struct NonPhysicalState : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// --- primitive <-> conserved -------------------------------------------------

inline void euler1d_prim(const double* q, double gamma, double& rho, double& u, double& p) {
  rho = q[0];
  u = q[1] / rho;
  p = (gamma - 1.0) * (q[2] - 0.5 * rho * u * u);
}

inline void euler2d_prim(const double* q, double gamma, double& rho, double& u, double& v,
                         double& p) {
  rho = q[0];
  u = q[1] / rho;
  v = q[2] / rho;
  p = (gamma - 1.0) * (q[3] - 0.5 * rho * (u * u + v * v));
}

inline std::array<double, 3> euler1d_conserved(double rho, double u, double p, double gamma) {
  return {rho, rho * u, p / (gamma - 1.0) + 0.5 * rho * u * u};
}

inline std::array<double, 4> euler2d_conserved(double rho, double u, double v, double p,
                                               double gamma) {
  return {rho, rho * u, rho * v, p / (gamma - 1.0) + 0.5 * rho * (u * u + v * v)};
}

// --- physical fluxes ----------------------------------------------------------

// dir: 0 = x, 1 = y. q and flux hold ncomp entries for the given model.
void physical_flux(const FluxModel& m, const double* q, int dir, double* flux);

inline void euler1d_flux(const double* q, double gamma, double* f) {
  double rho, u, p;
  euler1d_prim(q, gamma, rho, u, p);
  f[0] = q[1];
  f[1] = q[1] * u + p;
  f[2] = (q[2] + p) * u;
}

inline void euler2d_flux(const double* q, double gamma, int dir, double* f) {
  double rho, u, v, p;
  euler2d_prim(q, gamma, rho, u, v, p);
  if (dir == 0) {
    f[0] = q[1];
    f[1] = q[1] * u + p;
    f[2] = q[2] * u;
    f[3] = (q[3] + p) * u;
  } else {
    f[0] = q[2];
    f[1] = q[1] * v;
    f[2] = q[2] * v + p;
    f[3] = (q[3] + p) * v;
  }
}

// Largest |eigenvalue| over the interior and the ghost strips read by sweeps.
double max_wavespeed(const FieldArray& q, const UniformGrid& g, const FluxModel& m, int dir);

// --- global flux splitting ----------------------------------------------------

// f_plus = (f + alpha q) / 2, f_minus = (f - alpha q) / 2; alpha must be positive.
inline void lf_split(double f, double q, double alpha, double& fp, double& fm) {
  fp = 0.5 * (f + alpha * q);
  fm = 0.5 * (f - alpha * q);
}

// --- Roe-averaged characteristic frames ----------------------------------------

struct RoeAverage {
  double u = 0.0, v = 0.0, H = 0.0, c = 0.0;
  bool ok = false;  // false when the averaged sound speed is imaginary
};

inline RoeAverage roe_average_1d(const double* qL, const double* qR, double gamma) {
  RoeAverage a;
  if (!(qL[0] > 0.0) || !(qR[0] > 0.0)) return a;
  const double sl = std::sqrt(qL[0]), sr = std::sqrt(qR[0]);
  double rho, u, p;
  euler1d_prim(qL, gamma, rho, u, p);
  const double hl = (qL[2] + p) / rho, ul = u;
  euler1d_prim(qR, gamma, rho, u, p);
  const double hr = (qR[2] + p) / rho, ur = u;
  const double inv = 1.0 / (sl + sr);
  a.u = (sl * ul + sr * ur) * inv;
  a.H = (sl * hl + sr * hr) * inv;
  const double c2 = (gamma - 1.0) * (a.H - 0.5 * a.u * a.u);
  if (c2 > 0.0) {
    a.c = std::sqrt(c2);
    a.ok = true;
  }
  return a;
}

inline RoeAverage roe_average_2d(const double* qL, const double* qR, double gamma) {
  RoeAverage a;
  if (!(qL[0] > 0.0) || !(qR[0] > 0.0)) return a;
  const double sl = std::sqrt(qL[0]), sr = std::sqrt(qR[0]);
  double rho, u, v, p;
  euler2d_prim(qL, gamma, rho, u, v, p);
  const double hl = (qL[3] + p) / rho, ul = u, vl = v;
  euler2d_prim(qR, gamma, rho, u, v, p);
  const double hr = (qR[3] + p) / rho, ur = u, vr = v;
  const double inv = 1.0 / (sl + sr);
  a.u = (sl * ul + sr * ur) * inv;
  a.v = (sl * vl + sr * vr) * inv;
  a.H = (sl * hl + sr * hr) * inv;
  const double c2 = (gamma - 1.0) * (a.H - 0.5 * (a.u * a.u + a.v * a.v));
  if (c2 > 0.0) {
    a.c = std::sqrt(c2);
    a.ok = true;
  }
  return a;
}

// Arithmetic-mean frame, the fallback when the Roe average is non-physical.
inline RoeAverage arithmetic_average(const double* qL, const double* qR, double gamma,
                                     int ncomp) {
  RoeAverage a;
  double qm[4];
  for (int c = 0; c < ncomp; ++c) qm[c] = 0.5 * (qL[c] + qR[c]);
  if (!(qm[0] > 0.0)) return a;
  if (ncomp == 3) {
    double rho, u, p;
    euler1d_prim(qm, gamma, rho, u, p);
    if (!(p > 0.0)) return a;
    a.u = u;
    a.H = (qm[2] + p) / rho;
    a.c = std::sqrt(gamma * p / rho);
  } else {
    double rho, u, v, p;
    euler2d_prim(qm, gamma, rho, u, v, p);
    if (!(p > 0.0)) return a;
    a.u = u;
    a.v = v;
    a.H = (qm[3] + p) / rho;
    a.c = std::sqrt(gamma * p / rho);
  }
  a.ok = true;
  return a;
}

// Left/right eigenvector matrices in conserved variables. Rows of L and columns
// of R are ordered by wave speed: u-c, entropy (u), [shear (u),] u+c. L R = I.
struct Eigen1D {
  double L[3][3], R[3][3];
  double lam[3];
};

struct Eigen2D {
  double L[4][4], R[4][4];
  double lam[4];
};

inline Eigen1D eigensystem_1d(const RoeAverage& a, double gamma) {
  Eigen1D e;
  const double u = a.u, c = a.c, H = a.H;
  const double b1 = (gamma - 1.0) / (c * c);
  const double b2 = 0.5 * b1 * u * u;
  const double ic = 1.0 / c;

  e.lam[0] = u - c;
  e.lam[1] = u;
  e.lam[2] = u + c;

  e.R[0][0] = 1.0;       e.R[0][1] = 1.0;          e.R[0][2] = 1.0;
  e.R[1][0] = u - c;     e.R[1][1] = u;            e.R[1][2] = u + c;
  e.R[2][0] = H - u * c; e.R[2][1] = 0.5 * u * u;  e.R[2][2] = H + u * c;

  e.L[0][0] = 0.5 * (b2 + u * ic);
  e.L[0][1] = -0.5 * (b1 * u + ic);
  e.L[0][2] = 0.5 * b1;
  e.L[1][0] = 1.0 - b2;
  e.L[1][1] = b1 * u;
  e.L[1][2] = -b1;
  e.L[2][0] = 0.5 * (b2 - u * ic);
  e.L[2][1] = -0.5 * (b1 * u - ic);
  e.L[2][2] = 0.5 * b1;
  return e;
}

inline Eigen2D eigensystem_2d(const RoeAverage& a, double gamma, int dir) {
  Eigen2D e;
  const double u = a.u, v = a.v, c = a.c, H = a.H;
  const double q2 = u * u + v * v;
  const double b1 = (gamma - 1.0) / (c * c);
  const double b2 = 0.5 * b1 * q2;
  const double ic = 1.0 / c;
  const double un = (dir == 0) ? u : v;  // wall-normal velocity for this sweep

  e.lam[0] = un - c;
  e.lam[1] = un;
  e.lam[2] = un;
  e.lam[3] = un + c;

  if (dir == 0) {
    e.R[0][0] = 1.0;       e.R[0][1] = 1.0;      e.R[0][2] = 0.0; e.R[0][3] = 1.0;
    e.R[1][0] = u - c;     e.R[1][1] = u;        e.R[1][2] = 0.0; e.R[1][3] = u + c;
    e.R[2][0] = v;         e.R[2][1] = v;        e.R[2][2] = 1.0; e.R[2][3] = v;
    e.R[3][0] = H - u * c; e.R[3][1] = 0.5 * q2; e.R[3][2] = v;   e.R[3][3] = H + u * c;

    e.L[0][0] = 0.5 * (b2 + u * ic);
    e.L[0][1] = -0.5 * (b1 * u + ic);
    e.L[0][2] = -0.5 * b1 * v;
    e.L[0][3] = 0.5 * b1;
    e.L[1][0] = 1.0 - b2;
    e.L[1][1] = b1 * u;
    e.L[1][2] = b1 * v;
    e.L[1][3] = -b1;
    e.L[2][0] = -v;
    e.L[2][1] = 0.0;
    e.L[2][2] = 1.0;
    e.L[2][3] = 0.0;
    e.L[3][0] = 0.5 * (b2 - u * ic);
    e.L[3][1] = -0.5 * (b1 * u - ic);
    e.L[3][2] = -0.5 * b1 * v;
    e.L[3][3] = 0.5 * b1;
  } else {
    e.R[0][0] = 1.0;       e.R[0][1] = 1.0;      e.R[0][2] = 0.0; e.R[0][3] = 1.0;
    e.R[1][0] = u;         e.R[1][1] = u;        e.R[1][2] = 1.0; e.R[1][3] = u;
    e.R[2][0] = v - c;     e.R[2][1] = v;        e.R[2][2] = 0.0; e.R[2][3] = v + c;
    e.R[3][0] = H - v * c; e.R[3][1] = 0.5 * q2; e.R[3][2] = u;   e.R[3][3] = H + v * c;

    e.L[0][0] = 0.5 * (b2 + v * ic);
    e.L[0][1] = -0.5 * b1 * u;
    e.L[0][2] = -0.5 * (b1 * v + ic);
    e.L[0][3] = 0.5 * b1;
    e.L[1][0] = 1.0 - b2;
    e.L[1][1] = b1 * u;
    e.L[1][2] = b1 * v;
    e.L[1][3] = -b1;
    e.L[2][0] = -u;
    e.L[2][1] = 1.0;
    e.L[2][2] = 0.0;
    e.L[2][3] = 0.0;
    e.L[3][0] = 0.5 * (b2 - v * ic);
    e.L[3][1] = -0.5 * b1 * u;
    e.L[3][2] = -0.5 * (b1 * v - ic);
    e.L[3][3] = 0.5 * b1;
  }
  return e;
}

}  // namespace wenoh
