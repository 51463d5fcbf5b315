#include <cmath>
#include <set>
#include <stdexcept>

#include <doctest.h>

#include "wenoh/harness.hpp"
#include "wenoh/problems.hpp"

using namespace wenoh;

namespace {
constexpr double kPiTest = 3.14159265358979323846;
}

TEST_CASE("registry exposes the full preset catalogue") {
  const auto names = problem_names();
  const std::set<std::string> expected{
      "smooth-euler-1d", "smooth-euler-2d", "advection-sing", "shu-osher-k5",
      "shu-osher-k10",   "titarev-toro",    "lax",            "sod",
      "rti",             "riemann2d-config3", "double-mach",  "explosion"};
  CHECK(std::set<std::string>(names.begin(), names.end()) == expected);
  CHECK_THROWS_AS(find_problem("no-such-problem"), std::invalid_argument);
}

TEST_CASE("grid shapes follow the preset aspect ratios") {
  int nx, ny;
  problem_dims(find_problem("double-mach"), 120, nx, ny);
  CHECK(nx == 480);
  CHECK(ny == 120);
  problem_dims(find_problem("rti"), 60, nx, ny);
  CHECK(nx == 60);
  CHECK(ny == 240);
  problem_dims(find_problem("sod"), 0, nx, ny);
  CHECK(nx == 200);
  CHECK(ny == 1);
  problem_dims(find_problem("riemann2d-config3"), 0, nx, ny);
  CHECK(nx == 500);
  CHECK(ny == 500);
}

TEST_CASE("advected profile: frozen samples and periodic translation") {
  CHECK(advection_profile(-0.5) == doctest::Approx(0.46193976625564338).epsilon(1e-14));
  CHECK(advection_profile(0.0) == doctest::Approx(0.0));
  CHECK(advection_profile(0.25) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(advection_profile(0.5) == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
  CHECK(advection_profile(0.8) == doctest::Approx(0.4414905806174744).epsilon(1e-14));

  CHECK(exact_advection(0.3, 0.0) == doctest::Approx(advection_profile(0.3)).epsilon(1e-15));
  CHECK(exact_advection(0.3, 11.0) == doctest::Approx(0.51774176648502679).epsilon(1e-12));
  // Period 2 in time at unit speed.
  CHECK(exact_advection(-0.4, 2.0) == doctest::Approx(advection_profile(-0.4)).epsilon(1e-12));
}

TEST_CASE("smooth translating density: frozen samples") {
  CHECK(exact_smooth_euler_density(1, 0.3, 0.0, 0.0) ==
        doctest::Approx(0.70610737385376344).epsilon(1e-14));
  // Translation at unit speed.
  CHECK(exact_smooth_euler_density(1, 0.55, 0.0, 0.25) ==
        doctest::Approx(0.70610737385376344).epsilon(1e-13));
  // 2D variant rides the diagonal with speed (1, -1/2).
  CHECK(exact_smooth_euler_density(2, 0.2, 0.1, 0.0) ==
        doctest::Approx(1.0 + 0.5 * std::sin(4.0 * kPiTest * 0.3)).epsilon(1e-13));
  CHECK(exact_smooth_euler_density(2, 0.2, 0.1, 0.6) ==
        doctest::Approx(exact_smooth_euler_density(2, 0.2 - 0.6, 0.1 + 0.3, 0.0)).epsilon(1e-12));
}

TEST_CASE("initial states are physical on every preset") {
  for (const auto& name : problem_names()) {
    const auto& spec = find_problem(name);
    const UniformGrid g = problem_grid(spec, 16);
    const FieldArray q = init_problem(spec, g);
    const double gamma = model_gamma(spec.model);
    for (int j = 0; j < q.ny; ++j)
      for (int i = 0; i < q.nx; ++i) {
        const double* c = q.cell(i, j);
        REQUIRE(std::isfinite(c[0]));
        if (model_ncomp(spec.model) == 3) {
          double rho, u, p;
          euler1d_prim(c, gamma, rho, u, p);
          REQUIRE(rho > 0.0);
          REQUIRE(p > 0.0);
        } else if (model_ncomp(spec.model) == 4) {
          double rho, u, v, p;
          euler2d_prim(c, gamma, rho, u, v, p);
          REQUIRE(rho > 0.0);
          REQUIRE(p > 0.0);
        }
      }
  }
}

TEST_CASE("every preset survives a short burst of steps at a coarse grid") {
  for (const auto& name : problem_names()) {
    CAPTURE(name);
    RunConfig cfg;
    cfg.problem = name;
    cfg.scheme = Scheme::H;
    cfg.n = 16;
    const auto& spec = find_problem(name);
    // A handful of steps: enough to exercise boundaries and the source term.
    cfg.t_final = spec.t_final * 1e-3;
    const auto out = run_simulation(cfg);
    CHECK_FALSE(out.summary.aborted);
    CHECK(out.summary.steps >= 1);
    for (double v : out.state.data) REQUIRE(std::isfinite(v));
  }
}

TEST_CASE("pinned physical setups: diaphragm states and boundary kinds") {
  const auto& sod = find_problem("sod");
  CHECK(sod.reference == ReferenceKind::ExactRiemann);
  CHECK(sod.riemann_left.u == doctest::Approx(0.75));
  CHECK(sod.riemann_right.p == doctest::Approx(0.1));
  CHECK(sod.diaphragm == doctest::Approx(0.5));
  CHECK(sod.t_final == doctest::Approx(0.2));

  const auto& lax = find_problem("lax");
  CHECK(lax.riemann_left.rho == doctest::Approx(0.445));
  CHECK(lax.t_final == doctest::Approx(0.16));

  const auto& dm = find_problem("double-mach");
  CHECK(dm.bc.top.kind == BCKind::DoubleMachTop);
  CHECK(dm.bc.bottom.kind == BCKind::DoubleMachBottom);
  CHECK(dm.t_final == doctest::Approx(0.2));

  const auto& rti = find_problem("rti");
  CHECK(model_gamma(rti.model) == doctest::Approx(5.0 / 3.0));
  CHECK(std::get<Euler2DModel>(rti.model).gravity);
  CHECK(rti.bc.left.kind == BCKind::Reflective);

  const auto& smooth = find_problem("smooth-euler-1d");
  CHECK(smooth.reference == ReferenceKind::Analytic);
  CHECK(smooth.integrator == Integrator::RK4);
  CHECK(smooth.law.kind == TimeStepLaw::Kind::FixedPower);
  CHECK(smooth.t_final == doctest::Approx(4.0));

  const auto& adv = find_problem("advection-sing");
  CHECK(adv.law.cfl == doctest::Approx(0.4));
  CHECK(adv.theta == doctest::Approx(0.1));
  CHECK(adv.t_final == doctest::Approx(11.0));

  const auto& tt = find_problem("titarev-toro");
  CHECK(tt.reference == ReferenceKind::FineGridSelf);
  CHECK(tt.ref_n == 3200);
}
