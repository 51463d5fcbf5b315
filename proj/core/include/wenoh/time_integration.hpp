// Explicit Runge-Kutta steppers and time-step laws.
#pragma once

#include <functional>
#include <stdexcept>

#include "wenoh/euler.hpp"
#include "wenoh/grid.hpp"

namespace wenoh {

enum class Integrator : std::uint8_t { RK3, RK4 };

struct TimeStepLaw {
  enum class Kind : std::uint8_t { CFL, FixedPower } kind = Kind::CFL;
  double cfl = 0.5;
  double power = 1.5;  // FixedPower: dt = dx^power, decoupling time error from space
};

// Next step size; clips exactly onto t_final so runs land on the target time.
double compute_dt(const FieldArray& q, const UniformGrid& g, const FluxModel& m,
                  const TimeStepLaw& law, double t, double t_final);

// Fills dudt for the given state; must refresh ghost cells itself at the stage
// time it is handed (the state argument is mutable for exactly that purpose).
using RhsFn = std::function<void(FieldArray&, double, FieldArray&)>;

struct NonFiniteState : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Scratch arrays reused across steps.
struct RKWorkspace {
  FieldArray s1, s2, s3, s4;
  void match(const FieldArray& u) {
    if (s1.data.size() != u.data.size()) {
      s1 = FieldArray::like(u);
      s2 = FieldArray::like(u);
      s3 = FieldArray::like(u);
      s4 = FieldArray::like(u);
    }
  }
};

// Third-order strong-stability-preserving scheme (stage times t, t+dt, t+dt/2).
void tvd_rk3_step(FieldArray& u, double t, double dt, const RhsFn& rhs, RKWorkspace& ws);

// Classical fourth-order scheme (stage times t, t+dt/2, t+dt/2, t+dt).
void rk4_step(FieldArray& u, double t, double dt, const RhsFn& rhs, RKWorkspace& ws);

}  // namespace wenoh
