#include <cmath>
#include <vector>

#include <doctest.h>

#include "wenoh/spatial.hpp"

using namespace wenoh;

namespace {

constexpr double kPi = 3.14159265358979323846;

FieldArray interior_field(const UniformGrid& g, int ncomp) {
  return FieldArray(g.nx, g.dim == 2 ? g.ny : 1, g.ghost, g.dim == 2 ? g.ghost : 0, ncomp);
}

double max_abs_interior(const FieldArray& f) {
  double m = 0.0;
  for (int j = 0; j < f.ny; ++j)
    for (int i = 0; i < f.nx; ++i)
      for (int c = 0; c < f.ncomp; ++c) m = std::max(m, std::fabs(f.at(i, j, c)));
  return m;
}

}  // namespace

TEST_CASE("uniform states have zero tendency") {
  ReconParams p;
  p.scheme = Scheme::H;
  {
    const UniformGrid g = build_grid(0.0, 1.0, 24);
    FieldArray q = interior_field(g, 1), dudt = FieldArray::like(q);
    for (int i = 0; i < g.nx; ++i) q.at(i, 0) = 2.0;
    BCSet bc;
    fill_ghosts(q, g, bc, 0.0);
    spatial_operator(dudt, q, g, FluxModel{AdvectionModel{1.0}}, p);
    CHECK(max_abs_interior(dudt) < 1e-13);
  }
  {
    const UniformGrid g = build_grid(0.0, 1.0, 0.0, 1.0, 16, 16);
    FieldArray q = interior_field(g, 4), dudt = FieldArray::like(q);
    const auto s = euler2d_conserved(1.2, 0.3, -0.2, 2.0, 1.4);
    for (int j = 0; j < g.ny; ++j)
      for (int i = 0; i < g.nx; ++i)
        for (int c = 0; c < 4; ++c) q.at(i, j, c) = s[c];
    BCSet bc;
    fill_ghosts(q, g, bc, 0.0);
    spatial_operator(dudt, q, g, FluxModel{Euler2DModel{1.4}}, p);
    CHECK(max_abs_interior(dudt) < 1e-12);
  }
}

TEST_CASE("advection tendency approximates the exact derivative at high order") {
  std::vector<double> errs;
  for (int n : {32, 64, 128}) {
    const UniformGrid g = build_grid(0.0, 1.0, n);
    FieldArray q = interior_field(g, 1), dudt = FieldArray::like(q);
    for (int i = 0; i < g.nx; ++i) q.at(i, 0) = std::sin(2.0 * kPi * g.x_center(i));
    BCSet bc;
    fill_ghosts(q, g, bc, 0.0);
    ReconParams p;
    p.scheme = Scheme::H;
    spatial_operator(dudt, q, g, FluxModel{AdvectionModel{1.0}}, p);
    double e = 0.0;
    for (int i = 0; i < g.nx; ++i) {
      const double exact = -2.0 * kPi * std::cos(2.0 * kPi * g.x_center(i));
      e = std::max(e, std::fabs(dudt.at(i, 0) - exact));
    }
    errs.push_back(e);
  }
  const double slope = std::log2(errs[0] / errs[2]) / 2.0;
  CHECK(slope > 4.5);
  CHECK(errs[2] < 1e-4);
}

TEST_CASE("periodic tendencies telescope to zero sum") {
  {
    const UniformGrid g = build_grid(-1.0, 1.0, 48);
    FieldArray q = interior_field(g, 1), dudt = FieldArray::like(q);
    for (int i = 0; i < g.nx; ++i) {
      const double x = g.x_center(i);
      q.at(i, 0) = (x > -0.3 && x < 0.4) ? 1.0 : 0.0;  // rough data on purpose
    }
    BCSet bc;
    fill_ghosts(q, g, bc, 0.0);
    ReconParams p;
    p.scheme = Scheme::H;
    spatial_operator(dudt, q, g, FluxModel{AdvectionModel{1.0}}, p);
    double sum = 0.0, scale = 0.0;
    for (int i = 0; i < g.nx; ++i) {
      sum += dudt.at(i, 0);
      scale += std::fabs(dudt.at(i, 0));
    }
    CHECK(std::fabs(sum) <= 1e-13 * std::max(1.0, scale));
  }
  {
    const UniformGrid g = build_grid(0.0, 1.0, 0.0, 1.0, 20, 20);
    FieldArray q = interior_field(g, 4), dudt = FieldArray::like(q);
    for (int j = 0; j < g.ny; ++j)
      for (int i = 0; i < g.nx; ++i) {
        const double x = g.x_center(i), y = g.y_center(j);
        const double rho = 1.0 + 0.5 * std::sin(2.0 * kPi * (x + y)) / (4.0 * kPi);
        const auto s = euler2d_conserved(rho, 1.0, -0.5, 1.0, 1.4);
        for (int c = 0; c < 4; ++c) q.at(i, j, c) = s[c];
      }
    BCSet bc;
    fill_ghosts(q, g, bc, 0.0);
    ReconParams p;
    p.scheme = Scheme::H;
    spatial_operator(dudt, q, g, FluxModel{Euler2DModel{1.4}}, p);
    for (int c = 0; c < 4; ++c) {
      double sum = 0.0, scale = 0.0;
      for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
          sum += dudt.at(i, j, c);
          scale += std::fabs(dudt.at(i, j, c));
        }
      CHECK(std::fabs(sum) <= 1e-12 * std::max(1.0, scale));
    }
  }
}

TEST_CASE("hydrostatic column balances the gravity source away from boundaries") {
  // rho = 1, p = y + 1.5: flux divergence of the y-momentum equals +rho, the
  // source term, so the tendency vanishes wherever the stencil sees clean data.
  const UniformGrid g = build_grid(0.0, 0.25, 0.0, 1.0, 16, 32);
  FieldArray q = interior_field(g, 4), dudt = FieldArray::like(q);
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) {
      const auto s = euler2d_conserved(1.0, 0.0, 0.0, g.y_center(j) + 1.5, 1.4);
      for (int c = 0; c < 4; ++c) q.at(i, j, c) = s[c];
    }
  BCSet bc;
  bc.left.kind = bc.right.kind = BCKind::Periodic;
  bc.bottom.kind = bc.top.kind = BCKind::Outflow;
  fill_ghosts(q, g, bc, 0.0);
  ReconParams p;
  p.scheme = Scheme::H;
  spatial_operator(dudt, q, g, FluxModel{Euler2DModel{1.4, true}}, p);
  double m = 0.0;
  for (int j = 6; j < g.ny - 6; ++j)  // outflow ghosts spoil linearity near walls
    for (int i = 0; i < g.nx; ++i)
      for (int c = 0; c < 4; ++c) m = std::max(m, std::fabs(dudt.at(i, j, c)));
  CHECK(m < 1e-10);
}

TEST_CASE("tendency is identical for any worker count") {
  const UniformGrid g = build_grid(0.0, 1.0, 0.0, 1.0, 20, 12);
  FieldArray q = interior_field(g, 4);
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) {
      const double x = g.x_center(i), y = g.y_center(j);
      const auto s = euler2d_conserved(1.0 + 0.3 * std::sin(2.0 * kPi * x) * std::cos(2.0 * kPi * y),
                                       0.4 * std::cos(2.0 * kPi * y), -0.2, 1.0 + 0.1 * x, 1.4);
      for (int c = 0; c < 4; ++c) q.at(i, j, c) = s[c];
    }
  BCSet bc;
  fill_ghosts(q, g, bc, 0.0);
  ReconParams p;
  p.scheme = Scheme::H;

  FieldArray serial = FieldArray::like(q);
  spatial_operator(serial, q, g, FluxModel{Euler2DModel{1.4}}, p);

  for (int workers : {2, 3, 4, 8}) {
    WorkerPool pool(workers);
    FieldArray par = FieldArray::like(q);
    ReconStats stats;
    spatial_operator(par, q, g, FluxModel{Euler2DModel{1.4}}, p, &pool, &stats);
    CHECK(par.data == serial.data);
  }

  // Same for a 1D sweep, where workers split interface slots instead of rows.
  const UniformGrid g1 = build_grid(0.0, 1.0, 40);
  FieldArray q1 = interior_field(g1, 3);
  for (int i = 0; i < g1.nx; ++i) {
    const auto s = euler1d_conserved(1.0 + 0.2 * std::sin(2.0 * kPi * g1.x_center(i)), 0.5, 1.0, 1.4);
    for (int c = 0; c < 3; ++c) q1.at(i, c) = s[c];
  }
  fill_ghosts(q1, g1, bc, 0.0);
  FieldArray serial1 = FieldArray::like(q1);
  spatial_operator(serial1, q1, g1, FluxModel{Euler1DModel{1.4}}, p);
  for (int workers : {2, 5, 8}) {
    WorkerPool pool(workers);
    FieldArray par = FieldArray::like(q1);
    spatial_operator(par, q1, g1, FluxModel{Euler1DModel{1.4}}, p, &pool, nullptr);
    CHECK(par.data == serial1.data);
  }
}

TEST_CASE("branch statistics are partition independent") {
  const UniformGrid g = build_grid(0.0, 1.0, 64);
  FieldArray q = interior_field(g, 3);
  for (int i = 0; i < g.nx; ++i) {
    const auto s = euler1d_conserved(1.0 + 0.5 * std::sin(4.0 * kPi * g.x_center(i)) / (4.0 * kPi),
                                     1.0, 1.0, 1.4);
    for (int c = 0; c < 3; ++c) q.at(i, c) = s[c];
  }
  BCSet bc;
  fill_ghosts(q, g, bc, 0.0);
  ReconParams p;
  p.scheme = Scheme::H;
  FieldArray dudt = FieldArray::like(q);

  ReconStats base;
  spatial_operator(dudt, q, g, FluxModel{Euler1DModel{1.4}}, p, nullptr, &base);
  CHECK(base.total > 0);
  for (int workers : {2, 4}) {
    WorkerPool pool(workers);
    ReconStats st;
    spatial_operator(dudt, q, g, FluxModel{Euler1DModel{1.4}}, p, &pool, &st);
    CHECK(st.total == base.total);
    CHECK(st.polynomial == base.polynomial);
    CHECK(st.hyperbolic_c1 == base.hyperbolic_c1);
    CHECK(st.trigonometric_c1 == base.trigonometric_c1);
    CHECK(st.hyperbolic_c2 == base.hyperbolic_c2);
    CHECK(st.trigonometric_c2 == base.trigonometric_c2);
  }
}

TEST_CASE("non-physical input raises instead of propagating garbage") {
  const UniformGrid g = build_grid(0.0, 1.0, 24);
  FieldArray q = interior_field(g, 3), dudt = FieldArray::like(q);
  for (int i = 0; i < g.nx; ++i) {
    const auto s = euler1d_conserved(1.0, 0.0, 1.0, 1.4);
    for (int c = 0; c < 3; ++c) q.at(i, c) = s[c];
  }
  q.at(7, 1) = 5.0;  // kinetic energy 12.5 exceeds total 2.5: negative pressure
  BCSet bc;
  fill_ghosts(q, g, bc, 0.0);
  ReconParams p;
  p.scheme = Scheme::H;
  CHECK_THROWS_AS(spatial_operator(dudt, q, g, FluxModel{Euler1DModel{1.4}}, p),
                  NonPhysicalState);
}
