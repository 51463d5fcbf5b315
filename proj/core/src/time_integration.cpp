#include "wenoh/time_integration.hpp"

#include <cmath>
#include <string>

namespace wenoh {

double compute_dt(const FieldArray& q, const UniformGrid& g, const FluxModel& m,
                  const TimeStepLaw& law, double t, double t_final) {
  double dt;
  if (law.kind == TimeStepLaw::Kind::FixedPower) {
    dt = std::pow(g.dx, law.power);
  } else {
    if (!(law.cfl > 0.0)) throw std::invalid_argument("compute_dt: CFL must be positive");
    if (g.dim == 1) {
      const double ax = max_wavespeed(q, g, m, 0);
      if (!(ax > 0.0))
        throw std::invalid_argument("compute_dt: zero wavespeed under a CFL law");
      dt = law.cfl * g.dx / ax;
    } else {
      const double ax = max_wavespeed(q, g, m, 0);
      const double ay = max_wavespeed(q, g, m, 1);
      const double rate = ax / g.dx + ay / g.dy;
      if (!(rate > 0.0))
        throw std::invalid_argument("compute_dt: zero wavespeed under a CFL law");
      dt = law.cfl / rate;
    }
  }
  if (t + dt > t_final) dt = t_final - t;
  return dt;
}

namespace {

// Cheap full-array finiteness test: a finite sum certifies every term.
void check_finite(const FieldArray& u, const char* stage) {
  double acc = 0.0;
  for (int j = 0; j < u.ny; ++j) {
    const double* row = u.cell(0, j);
    const std::size_t n = static_cast<std::size_t>(u.nx) * u.ncomp;
    for (std::size_t i = 0; i < n; ++i) acc += row[i];
  }
  if (!std::isfinite(acc))
    throw NonFiniteState(std::string("non-finite state after ") + stage);
}

}  // namespace

void tvd_rk3_step(FieldArray& u, double t, double dt, const RhsFn& rhs, RKWorkspace& ws) {
  ws.match(u);
  FieldArray& k = ws.s1;
  FieldArray& u1 = ws.s2;
  FieldArray& u2 = ws.s3;
  const std::size_t n = u.data.size();

  rhs(u, t, k);
  for (std::size_t i = 0; i < n; ++i) u1.data[i] = u.data[i] + dt * k.data[i];
  check_finite(u1, "RK3 stage 1");

  rhs(u1, t + dt, k);
  for (std::size_t i = 0; i < n; ++i)
    u2.data[i] = 0.75 * u.data[i] + 0.25 * (u1.data[i] + dt * k.data[i]);
  check_finite(u2, "RK3 stage 2");

  rhs(u2, t + 0.5 * dt, k);
  const double c = 2.0 / 3.0;
  for (std::size_t i = 0; i < n; ++i)
    u.data[i] = (1.0 / 3.0) * u.data[i] + c * (u2.data[i] + dt * k.data[i]);
  check_finite(u, "RK3 stage 3");
}

void rk4_step(FieldArray& u, double t, double dt, const RhsFn& rhs, RKWorkspace& ws) {
  ws.match(u);
  FieldArray& k = ws.s1;
  FieldArray& utmp = ws.s2;
  FieldArray& acc = ws.s3;
  const std::size_t n = u.data.size();
  const double h = 0.5 * dt;

  rhs(u, t, k);
  for (std::size_t i = 0; i < n; ++i) {
    acc.data[i] = k.data[i];
    utmp.data[i] = u.data[i] + h * k.data[i];
  }
  check_finite(utmp, "RK4 stage 1");

  rhs(utmp, t + h, k);
  for (std::size_t i = 0; i < n; ++i) {
    acc.data[i] += 2.0 * k.data[i];
    utmp.data[i] = u.data[i] + h * k.data[i];
  }
  check_finite(utmp, "RK4 stage 2");

  rhs(utmp, t + h, k);
  for (std::size_t i = 0; i < n; ++i) {
    acc.data[i] += 2.0 * k.data[i];
    utmp.data[i] = u.data[i] + dt * k.data[i];
  }
  check_finite(utmp, "RK4 stage 3");

  rhs(utmp, t + dt, k);
  for (std::size_t i = 0; i < n; ++i)
    u.data[i] += (dt / 6.0) * (acc.data[i] + k.data[i]);
  check_finite(u, "RK4 stage 4");
}

}  // namespace wenoh
