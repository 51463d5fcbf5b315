#include "wenoh/euler.hpp"

namespace wenoh {

void physical_flux(const FluxModel& m, const double* q, int dir, double* flux) {
  if (const auto* adv = std::get_if<AdvectionModel>(&m)) {
    flux[0] = adv->speed * q[0];
    return;
  }
  if (const auto* e1 = std::get_if<Euler1DModel>(&m)) {
    double rho = 0.0, u = 0.0, p = 0.0;
    if (q[0] > 0.0) euler1d_prim(q, e1->gamma, rho, u, p);
    if (!(rho > 0.0) || !(p > 0.0))
      throw NonPhysicalState("physical_flux: non-positive density or pressure");
    euler1d_flux(q, e1->gamma, flux);
    return;
  }
  const auto& e2 = std::get<Euler2DModel>(m);
  double rho = 0.0, u = 0.0, v = 0.0, p = 0.0;
  if (q[0] > 0.0) euler2d_prim(q, e2.gamma, rho, u, v, p);
  if (!(rho > 0.0) || !(p > 0.0))
    throw NonPhysicalState("physical_flux: non-positive density or pressure");
  euler2d_flux(q, e2.gamma, dir, flux);
}

double max_wavespeed(const FieldArray& q, const UniformGrid& g, const FluxModel& m, int dir) {
  if (const auto* adv = std::get_if<AdvectionModel>(&m)) return std::fabs(adv->speed);

  const double gamma = model_gamma(m);
  double amax = 0.0;
  bool bad = false;
  if (std::holds_alternative<Euler1DModel>(m)) {
    for_each_sweep_cell(q, g.dim, [&](const double* cell) {
      double rho, u, p;
      euler1d_prim(cell, gamma, rho, u, p);
      if (!(rho > 0.0) || !(p > 0.0)) { bad = true; return; }
      amax = std::fmax(amax, std::fabs(u) + std::sqrt(gamma * p / rho));
    });
  } else {
    for_each_sweep_cell(q, g.dim, [&](const double* cell) {
      double rho, u, v, p;
      euler2d_prim(cell, gamma, rho, u, v, p);
      if (!(rho > 0.0) || !(p > 0.0)) { bad = true; return; }
      const double c = std::sqrt(gamma * p / rho);
      const double un = (dir == 0) ? u : v;
      amax = std::fmax(amax, std::fabs(un) + c);
    });
  }
  if (bad) throw NonPhysicalState("max_wavespeed: non-positive density or pressure");
  return amax;
}

}  // namespace wenoh
