// Benchmark problem presets: initial data, boundaries, final times, step laws,
// and reference-solution descriptors.
#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "wenoh/euler.hpp"
#include "wenoh/grid.hpp"
#include "wenoh/reconstruct.hpp"
#include "wenoh/riemann_exact.hpp"
#include "wenoh/time_integration.hpp"

namespace wenoh {

enum class ReferenceKind : std::uint8_t {
  None,          // no pointwise reference; stability-style checks only
  Analytic,      // closed-form solution of (x, y, t)
  ExactRiemann,  // exact self-similar Riemann solution
  FineGridSelf   // cached high-resolution run of a baseline scheme
};

struct ProblemSpec {
  std::string name;
  std::string description;
  int dim = 1;
  FluxModel model;
  double x0 = 0.0, x1 = 1.0, y0 = 0.0, y1 = 1.0;
  int default_n = 100;              // resolution of the short dimension
  int aspect_x = 1, aspect_y = 1;   // grid = (n * aspect_x, n * aspect_y)
  BCSet bc;
  double t_final = 1.0;
  TimeStepLaw law;
  Integrator integrator = Integrator::RK3;
  double theta = 0.25;
  ReferenceKind reference = ReferenceKind::None;
  PrimState1D riemann_left, riemann_right;  // ExactRiemann presets
  double diaphragm = 0.0;
  Scheme ref_scheme = Scheme::JS;  // FineGridSelf descriptor
  int ref_n = 3200;
  // Pointwise primitive initializer (rho, u, v, p); scalar problems put the
  // advected quantity in slot 0.
  std::function<std::array<double, 4>(double, double)> init_prim;
};

const ProblemSpec& find_problem(const std::string& name);
std::vector<std::string> problem_names();

// Grid extents for a requested short-dimension resolution (0 = preset default).
void problem_dims(const ProblemSpec& spec, int n, int& nx, int& ny);
UniformGrid problem_grid(const ProblemSpec& spec, int n);

// Cell-center sampled conserved initial state (interior; ghosts unfilled).
FieldArray init_problem(const ProblemSpec& spec, const UniformGrid& g);

// Advected profile with the singular initial data, period 2 on [-1, 1].
double advection_profile(double x);
double exact_advection(double x, double t);

// Smooth-density translating solution of the Euler equations (dim 1 or 2).
double exact_smooth_euler_density(int dim, double x, double y, double t);

}  // namespace wenoh
