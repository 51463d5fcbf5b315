#include "wenoh/problems.hpp"

#include <cmath>
#include <stdexcept>

namespace wenoh {

namespace {

constexpr double kPi = 3.14159265358979323846;

BCSet all_sides(BCKind kind) {
  BCSet bc;
  bc.left.kind = bc.right.kind = bc.bottom.kind = bc.top.kind = kind;
  return bc;
}

BoundaryCondition dirichlet(const std::array<double, 4>& conserved) {
  BoundaryCondition b;
  b.kind = BCKind::DirichletInflow;
  b.state = conserved;
  return b;
}

TimeStepLaw cfl_law(double cfl) {
  TimeStepLaw law;
  law.kind = TimeStepLaw::Kind::CFL;
  law.cfl = cfl;
  return law;
}

TimeStepLaw fixed_power_law() {
  TimeStepLaw law;
  law.kind = TimeStepLaw::Kind::FixedPower;
  law.power = 1.5;
  return law;
}

std::array<double, 4> prim4(double rho, double u, double v, double p) {
  return {rho, u, v, p};
}

// Mach-10 oblique shock into (rho, p) = (1.4, 1): post-shock primitive state
// from the normal-shock relations, velocity normal to the 60-degree front.
const double kDmrRho = 8.0;
const double kDmrU = 8.25 * std::sqrt(3.0) / 2.0;
const double kDmrV = -8.25 * 0.5;
const double kDmrP = 116.5;

std::vector<ProblemSpec> make_registry() {
  std::vector<ProblemSpec> reg;

  {
    ProblemSpec s;
    s.name = "smooth-euler-1d";
    s.description = "smooth translating density wave, 1D Euler, convergence preset";
    s.dim = 1;
    s.model = Euler1DModel{1.4};
    s.x0 = 0.0;
    s.x1 = 1.0;
    s.default_n = 200;
    s.bc = all_sides(BCKind::Periodic);
    s.t_final = 4.0;
    s.law = fixed_power_law();
    s.integrator = Integrator::RK4;
    s.reference = ReferenceKind::Analytic;
    s.init_prim = [](double x, double) {
      return prim4(1.0 + 0.5 * std::sin(4.0 * kPi * x), 1.0, 0.0, 1.0);
    };
    reg.push_back(std::move(s));
  }
  {
    ProblemSpec s;
    s.name = "smooth-euler-2d";
    s.description = "smooth oblique density wave, 2D Euler, convergence preset";
    s.dim = 2;
    s.model = Euler2DModel{1.4, false};
    s.x0 = 0.0;
    s.x1 = 1.0;
    s.y0 = 0.0;
    s.y1 = 1.0;
    s.default_n = 100;
    s.bc = all_sides(BCKind::Periodic);
    s.t_final = 4.0;
    s.law = fixed_power_law();
    s.integrator = Integrator::RK4;
    s.reference = ReferenceKind::Analytic;
    s.init_prim = [](double x, double y) {
      return prim4(1.0 + 0.5 * std::sin(4.0 * kPi * (x + y)), 1.0, -0.5, 1.0);
    };
    reg.push_back(std::move(s));
  }
  {
    ProblemSpec s;
    s.name = "advection-sing";
    s.description = "linear advection of a profile with kinks and jumps";
    s.dim = 1;
    s.model = AdvectionModel{1.0};
    s.x0 = -1.0;
    s.x1 = 1.0;
    s.default_n = 200;
    s.bc = all_sides(BCKind::Periodic);
    s.t_final = 11.0;
    s.law = cfl_law(0.4);
    s.theta = 0.1;
    s.reference = ReferenceKind::Analytic;
    s.init_prim = [](double x, double) { return prim4(advection_profile(x), 0.0, 0.0, 0.0); };
    reg.push_back(std::move(s));
  }

  auto shock_density_wave = [&](const std::string& name, double wavenumber, double amp,
                                const PrimState1D& left, int default_n, double t_final,
                                const std::string& desc) {
    ProblemSpec s;
    s.name = name;
    s.description = desc;
    s.dim = 1;
    s.model = Euler1DModel{1.4};
    s.x0 = -5.0;
    s.x1 = 5.0;
    s.default_n = default_n;
    s.bc = all_sides(BCKind::Outflow);
    s.t_final = t_final;
    s.law = cfl_law(0.5);
    s.reference = ReferenceKind::FineGridSelf;
    s.ref_scheme = Scheme::JS;
    s.ref_n = 3200;
    s.diaphragm = -4.0;
    const double rl = left.rho, ul = left.u, pl = left.p;
    s.init_prim = [rl, ul, pl, wavenumber, amp](double x, double) {
      if (x < -4.0) return prim4(rl, ul, 0.0, pl);
      return prim4(1.0 + amp * std::sin(wavenumber * x), 0.0, 0.0, 1.0);
    };
    reg.push_back(std::move(s));
  };
  shock_density_wave("shu-osher-k5", 5.0, 0.2, {3.857143, 2.629369, 10.33333}, 250, 1.8,
                     "Mach-3 shock running into a k=5 entropy wave");
  shock_density_wave("shu-osher-k10", 10.0, 0.2, {3.857143, 2.629369, 10.33333}, 500, 1.8,
                     "Mach-3 shock running into a k=10 entropy wave");
  shock_density_wave("titarev-toro", 20.0 * kPi, 0.1, {1.515695, 0.523346, 1.80500}, 1500,
                     5.0, "long-time shock / high-frequency entropy wave interaction");

  auto riemann1d = [&](const std::string& name, const PrimState1D& l, const PrimState1D& r,
                       double x0, double x1, double xd, double t_final, int default_n,
                       const std::string& desc) {
    ProblemSpec s;
    s.name = name;
    s.description = desc;
    s.dim = 1;
    s.model = Euler1DModel{1.4};
    s.x0 = x0;
    s.x1 = x1;
    s.default_n = default_n;
    s.bc = all_sides(BCKind::Outflow);
    s.t_final = t_final;
    s.law = cfl_law(0.5);
    s.reference = ReferenceKind::ExactRiemann;
    s.riemann_left = l;
    s.riemann_right = r;
    s.diaphragm = xd;
    s.init_prim = [l, r, xd](double x, double) {
      const PrimState1D& st = (x < xd) ? l : r;
      return prim4(st.rho, st.u, 0.0, st.p);
    };
    reg.push_back(std::move(s));
  };
  riemann1d("lax", {0.445, 0.698, 3.528}, {0.5, 0.0, 0.571}, -5.0, 5.0, 0.0, 0.16, 200,
            "Riemann problem with a strong right-moving shock");
  riemann1d("sod", {1.0, 0.75, 1.0}, {0.125, 0.0, 0.1}, 0.0, 1.0, 0.5, 0.2, 200,
            "classic shock-tube Riemann problem");

  {
    ProblemSpec s;
    s.name = "rti";
    s.description = "single-mode Rayleigh-Taylor instability with gravity source";
    s.dim = 2;
    const double gamma = 5.0 / 3.0;
    s.model = Euler2DModel{gamma, true};
    s.x0 = 0.0;
    s.x1 = 0.25;
    s.y0 = 0.0;
    s.y1 = 1.0;
    s.default_n = 120;
    s.aspect_x = 1;
    s.aspect_y = 4;
    s.bc.left.kind = BCKind::Reflective;
    s.bc.right.kind = BCKind::Reflective;
    s.bc.bottom = dirichlet(euler2d_conserved(2.0, 0.0, 0.0, 1.0, gamma));
    s.bc.top = dirichlet(euler2d_conserved(1.0, 0.0, 0.0, 2.5, gamma));
    s.t_final = 1.95;
    s.law = cfl_law(0.5);
    s.init_prim = [gamma](double x, double y) {
      const double rho = (y < 0.5) ? 2.0 : 1.0;
      const double p = (y < 0.5) ? 2.0 * y + 1.0 : y + 1.5;
      const double c = std::sqrt(gamma * p / rho);
      return prim4(rho, 0.0, -0.025 * c * std::cos(8.0 * kPi * x), p);
    };
    reg.push_back(std::move(s));
  }
  {
    ProblemSpec s;
    s.name = "riemann2d-config3";
    s.description = "four-quadrant 2D Riemann problem, configuration 3";
    s.dim = 2;
    s.model = Euler2DModel{1.4, false};
    s.x0 = 0.0;
    s.x1 = 1.0;
    s.y0 = 0.0;
    s.y1 = 1.0;
    s.default_n = 500;
    s.bc = all_sides(BCKind::Outflow);
    s.t_final = 0.8;
    s.law = cfl_law(0.5);
    s.init_prim = [](double x, double y) {
      if (x >= 0.8) {
        return (y >= 0.8) ? prim4(1.5, 0.0, 0.0, 1.5) : prim4(0.5323, 0.0, 1.206, 0.3);
      }
      return (y >= 0.8) ? prim4(0.5323, 1.206, 0.0, 0.3)
                        : prim4(0.138, 1.206, 1.206, 0.029);
    };
    reg.push_back(std::move(s));
  }
  {
    ProblemSpec s;
    s.name = "double-mach";
    s.description = "Mach-10 oblique-shock reflection off a wall";
    s.dim = 2;
    s.model = Euler2DModel{1.4, false};
    s.x0 = 0.0;
    s.x1 = 4.0;
    s.y0 = 0.0;
    s.y1 = 1.0;
    s.default_n = 240;
    s.aspect_x = 4;
    s.aspect_y = 1;
    const auto post = euler2d_conserved(kDmrRho, kDmrU, kDmrV, kDmrP, 1.4);
    const auto pre = euler2d_conserved(1.4, 0.0, 0.0, 1.0, 1.4);
    s.bc.left = dirichlet(post);
    s.bc.right.kind = BCKind::Outflow;
    s.bc.bottom.kind = BCKind::DoubleMachBottom;
    s.bc.bottom.state = post;
    s.bc.top.kind = BCKind::DoubleMachTop;
    s.bc.top.state = post;
    s.bc.top.state2 = pre;
    s.t_final = 0.2;
    s.law = cfl_law(0.5);
    s.init_prim = [](double x, double y) {
      const bool shocked = x < 1.0 / 6.0 + y / std::sqrt(3.0);
      return shocked ? prim4(kDmrRho, kDmrU, kDmrV, kDmrP) : prim4(1.4, 0.0, 0.0, 1.0);
    };
    reg.push_back(std::move(s));
  }
  {
    ProblemSpec s;
    s.name = "explosion";
    s.description = "cylindrical blast from a pressurized disc";
    s.dim = 2;
    s.model = Euler2DModel{1.4, false};
    s.x0 = -1.5;
    s.x1 = 1.5;
    s.y0 = -1.5;
    s.y1 = 1.5;
    s.default_n = 600;
    s.bc = all_sides(BCKind::Outflow);
    s.t_final = 3.2;
    s.law = cfl_law(0.5);
    s.init_prim = [](double x, double y) {
      const bool inside = x * x + y * y < 0.16;
      return inside ? prim4(1.0, 0.0, 0.0, 1.0) : prim4(0.125, 0.0, 0.0, 0.1);
    };
    reg.push_back(std::move(s));
  }
  return reg;
}

const std::vector<ProblemSpec>& registry() {
  static const std::vector<ProblemSpec> reg = make_registry();
  return reg;
}

}  // namespace

const ProblemSpec& find_problem(const std::string& name) {
  for (const auto& s : registry())
    if (s.name == name) return s;
  throw std::invalid_argument("unknown problem preset: " + name);
}

std::vector<std::string> problem_names() {
  std::vector<std::string> names;
  for (const auto& s : registry()) names.push_back(s.name);
  return names;
}

void problem_dims(const ProblemSpec& spec, int n, int& nx, int& ny) {
  if (n <= 0) n = spec.default_n;
  nx = n * spec.aspect_x;
  ny = (spec.dim == 2) ? n * spec.aspect_y : 1;
}

UniformGrid problem_grid(const ProblemSpec& spec, int n) {
  int nx, ny;
  problem_dims(spec, n, nx, ny);
  if (spec.dim == 1) return build_grid(spec.x0, spec.x1, nx);
  return build_grid(spec.x0, spec.x1, spec.y0, spec.y1, nx, ny);
}

FieldArray init_problem(const ProblemSpec& spec, const UniformGrid& g) {
  const int nc = model_ncomp(spec.model);
  FieldArray f(g.nx, g.dim == 2 ? g.ny : 1, g.ghost, g.dim == 2 ? g.ghost : 0, nc);
  const double gamma = model_gamma(spec.model);
  for (int j = 0; j < f.ny; ++j) {
    const double y = (g.dim == 2) ? g.y_center(j) : 0.0;
    for (int i = 0; i < f.nx; ++i) {
      const auto prim = spec.init_prim(g.x_center(i), y);
      double* q = f.cell(i, j);
      if (nc == 1) {
        q[0] = prim[0];
      } else if (nc == 3) {
        const auto c = euler1d_conserved(prim[0], prim[1], prim[3], gamma);
        q[0] = c[0];
        q[1] = c[1];
        q[2] = c[2];
      } else {
        const auto c = euler2d_conserved(prim[0], prim[1], prim[2], prim[3], gamma);
        for (int k = 0; k < 4; ++k) q[k] = c[k];
      }
    }
  }
  return f;
}

double advection_profile(double x) {
  if (x <= -1.0 / 3.0) return -x * std::sin(1.5 * kPi * x * x);
  if (x <= 1.0 / 3.0) return std::fabs(std::sin(2.0 * kPi * x));
  return 2.0 * x - 1.0 - std::sin(3.0 * kPi * x) / 6.0;
}

double exact_advection(double x, double t) {
  double w = std::fmod(x - t + 1.0, 2.0);
  if (w < 0.0) w += 2.0;
  return advection_profile(w - 1.0);
}

double exact_smooth_euler_density(int dim, double x, double y, double t) {
  if (dim == 1) return 1.0 + 0.5 * std::sin(4.0 * kPi * (x - t));
  return 1.0 + 0.5 * std::sin(4.0 * kPi * (x + y - 0.5 * t));
}

}  // namespace wenoh
