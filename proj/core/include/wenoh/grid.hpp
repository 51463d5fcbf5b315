// Uniform Cartesian grids (1D/2D), ghost-padded field storage, and boundary fills.
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace wenoh {

inline constexpr int kGhost = 4;  // reconstruction stencil + one extension cell per side

struct UniformGrid {
  int dim = 1;
  double x_min = 0.0, x_max = 1.0;
  double y_min = 0.0, y_max = 1.0;
  int nx = 0, ny = 1;
  int ghost = kGhost;
  double dx = 0.0, dy = 0.0;

  double x_center(int i) const { return x_min + (i + 0.5) * dx; }
  double y_center(int j) const { return y_min + (j + 0.5) * dy; }
};

UniformGrid build_grid(double x_min, double x_max, int nx, int ghost = kGhost);
UniformGrid build_grid(double x_min, double x_max, double y_min, double y_max, int nx,
                       int ny, int ghost = kGhost);

// Cell-centered conserved state over interior + ghost cells. Row-major, y outer,
// x inner, components innermost. 1D fields carry no y padding.
struct FieldArray {
  int nx = 0, ny = 1;
  int gx = 0, gy = 0;
  int ncomp = 1;
  std::vector<double> data;

  FieldArray() = default;
  FieldArray(int nx_, int ny_, int gx_, int gy_, int ncomp_)
      : nx(nx_), ny(ny_), gx(gx_), gy(gy_), ncomp(ncomp_),
        data(static_cast<std::size_t>((nx_ + 2 * gx_) * (ny_ + 2 * gy_)) * ncomp_, 0.0) {}

  static FieldArray like(const FieldArray& f) {
    return FieldArray(f.nx, f.ny, f.gx, f.gy, f.ncomp);
  }

  int stride_x() const { return nx + 2 * gx; }
  std::size_t index(int i, int j, int c) const {
    return (static_cast<std::size_t>(j + gy) * stride_x() + (i + gx)) * ncomp + c;
  }
  double& at(int i, int j, int c) { return data[index(i, j, c)]; }
  double at(int i, int j, int c) const { return data[index(i, j, c)]; }
  double& at(int i, int c) { return data[index(i, 0, c)]; }
  double at(int i, int c) const { return data[index(i, 0, c)]; }
  double* cell(int i, int j) { return data.data() + index(i, j, 0); }
  const double* cell(int i, int j) const { return data.data() + index(i, j, 0); }
};

enum class BCKind : std::uint8_t {
  Periodic,
  Outflow,          // zero-gradient copy of the nearest interior cell
  Reflective,       // mirror; sign flip on the wall-normal momentum
  DirichletInflow,  // fixed conserved state
  DoubleMachTop,    // analytic Mach-10 oblique-shock track
  DoubleMachBottom  // post-shock for x <= 1/6, reflective wall beyond
};

struct BoundaryCondition {
  BCKind kind = BCKind::Periodic;
  std::array<double, 4> state{};   // conserved; DirichletInflow / shock-side value
  std::array<double, 4> state2{};  // DoubleMachTop: conserved state right of the shock
};

struct BCSet {
  BoundaryCondition left, right, bottom, top;
};

// Populates every ghost layer from the interior per the side's BC kind. Interior
// cells are untouched; corner ghost blocks are not needed by dimension-split sweeps
// and stay as-is. t feeds the time-dependent double-Mach top boundary.
void fill_ghosts(FieldArray& f, const UniformGrid& g, const BCSet& bc, double t);

// Mach-10 oblique-shock foot position along the top boundary (y = 1).
double double_mach_shock_x(double t);

// Visits every cell a dimension-split sweep can read: the interior plus the
// side ghost strips. Ghost corners are skipped; they are never written.
template <class Fn>
void for_each_sweep_cell(const FieldArray& f, int dim, Fn&& fn) {
  for (int j = 0; j < f.ny; ++j)
    for (int i = -f.gx; i < f.nx + f.gx; ++i) fn(f.cell(i, j));
  if (dim == 2) {
    for (int j = -f.gy; j < 0; ++j)
      for (int i = 0; i < f.nx; ++i) fn(f.cell(i, j));
    for (int j = f.ny; j < f.ny + f.gy; ++j)
      for (int i = 0; i < f.nx; ++i) fn(f.cell(i, j));
  }
}

}  // namespace wenoh
