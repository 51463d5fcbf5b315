#include "wenoh/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace wenoh {

UniformGrid build_grid(double x_min, double x_max, int nx, int ghost) {
  if (!(x_max > x_min)) throw std::invalid_argument("build_grid: x_max must exceed x_min");
  if (ghost < kGhost) throw std::invalid_argument("build_grid: ghost width below stencil need");
  if (nx < 2 * ghost) throw std::invalid_argument("build_grid: nx too small for ghost width");
  UniformGrid g;
  g.dim = 1;
  g.x_min = x_min;
  g.x_max = x_max;
  g.nx = nx;
  g.ny = 1;
  g.ghost = ghost;
  g.dx = (x_max - x_min) / nx;
  g.dy = 0.0;
  return g;
}

UniformGrid build_grid(double x_min, double x_max, double y_min, double y_max, int nx,
                       int ny, int ghost) {
  if (!(x_max > x_min) || !(y_max > y_min))
    throw std::invalid_argument("build_grid: domain bounds are inverted");
  if (ghost < kGhost) throw std::invalid_argument("build_grid: ghost width below stencil need");
  if (nx < 2 * ghost || ny < 2 * ghost)
    throw std::invalid_argument("build_grid: resolution too small for ghost width");
  UniformGrid g;
  g.dim = 2;
  g.x_min = x_min;
  g.x_max = x_max;
  g.y_min = y_min;
  g.y_max = y_max;
  g.nx = nx;
  g.ny = ny;
  g.ghost = ghost;
  g.dx = (x_max - x_min) / nx;
  g.dy = (y_max - y_min) / ny;
  return g;
}

double double_mach_shock_x(double t) {
  // 60-degree shock through (1/6, 0) moving at speed 10 normal to itself:
  // along y = 1 the foot sits at 1/6 + (1 + 20 t) / sqrt(3).
  return 1.0 / 6.0 + (1.0 + 20.0 * t) / std::sqrt(3.0);
}

namespace {

// One ghost strip along x for interior row j.
void fill_x_side(FieldArray& f, const BoundaryCondition& bc, int j, bool left) {
  const int n = f.nx, g = f.gx, nc = f.ncomp;
  for (int k = 0; k < g; ++k) {
    const int ig = left ? -1 - k : n + k;
    double* dst = f.cell(ig, j);
    switch (bc.kind) {
      case BCKind::Periodic: {
        const double* src = f.cell(left ? n - 1 - k : k, j);
        for (int c = 0; c < nc; ++c) dst[c] = src[c];
        break;
      }
      case BCKind::Outflow: {
        const double* src = f.cell(left ? 0 : n - 1, j);
        for (int c = 0; c < nc; ++c) dst[c] = src[c];
        break;
      }
      case BCKind::Reflective: {
        const double* src = f.cell(left ? k : n - 1 - k, j);
        for (int c = 0; c < nc; ++c) dst[c] = src[c];
        if (nc >= 2) dst[1] = -dst[1];  // x-momentum
        break;
      }
      case BCKind::DirichletInflow:
        for (int c = 0; c < nc; ++c) dst[c] = bc.state[c];
        break;
      default:
        throw std::invalid_argument("fill_ghosts: unsupported BC kind on an x side");
    }
  }
}

// One ghost strip along y for interior column i.
void fill_y_side(FieldArray& f, const BoundaryCondition& bc, const UniformGrid& grid, int i,
                 bool bottom, double t) {
  const int n = f.ny, g = f.gy, nc = f.ncomp;
  for (int k = 0; k < g; ++k) {
    const int jg = bottom ? -1 - k : n + k;
    double* dst = f.cell(i, jg);
    switch (bc.kind) {
      case BCKind::Periodic: {
        const double* src = f.cell(i, bottom ? n - 1 - k : k);
        for (int c = 0; c < nc; ++c) dst[c] = src[c];
        break;
      }
      case BCKind::Outflow: {
        const double* src = f.cell(i, bottom ? 0 : n - 1);
        for (int c = 0; c < nc; ++c) dst[c] = src[c];
        break;
      }
      case BCKind::Reflective: {
        const double* src = f.cell(i, bottom ? k : n - 1 - k);
        for (int c = 0; c < nc; ++c) dst[c] = src[c];
        if (nc >= 3) dst[2] = -dst[2];  // y-momentum
        break;
      }
      case BCKind::DirichletInflow:
        for (int c = 0; c < nc; ++c) dst[c] = bc.state[c];
        break;
      case BCKind::DoubleMachTop: {
        const double xs = double_mach_shock_x(t);
        const double* s = (grid.x_center(i) < xs) ? bc.state.data() : bc.state2.data();
        for (int c = 0; c < nc; ++c) dst[c] = s[c];
        break;
      }
      case BCKind::DoubleMachBottom: {
        if (grid.x_center(i) <= 1.0 / 6.0) {
          for (int c = 0; c < nc; ++c) dst[c] = bc.state[c];
        } else {
          const double* src = f.cell(i, k);
          for (int c = 0; c < nc; ++c) dst[c] = src[c];
          dst[2] = -dst[2];
        }
        break;
      }
    }
  }
}

}  // namespace

void fill_ghosts(FieldArray& f, const UniformGrid& g, const BCSet& bc, double t) {
  for (int j = 0; j < f.ny; ++j) {
    fill_x_side(f, bc.left, j, true);
    fill_x_side(f, bc.right, j, false);
  }
  if (g.dim == 2) {
    for (int i = 0; i < f.nx; ++i) {
      fill_y_side(f, bc.bottom, g, i, true, t);
      fill_y_side(f, bc.top, g, i, false, t);
    }
  }
}

}  // namespace wenoh
