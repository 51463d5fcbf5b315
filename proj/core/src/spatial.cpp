#include "wenoh/spatial.hpp"

#include <cstring>
#include <string>
#include <vector>

namespace wenoh {

namespace {

std::string cell_tag(int dir, int pencil, int along) {
  return (dir == 0) ? "(i=" + std::to_string(along) + ", j=" + std::to_string(pencil) + ")"
                    : "(i=" + std::to_string(pencil) + ", j=" + std::to_string(along) + ")";
}

// Per-characteristic-field global splitting speeds: alpha[m] bounds |lambda_m|
// over every cell a sweep can read, so the split fluxes are globally upwind.
template <int NC>
struct Alphas {
  double a[NC];
};

Alphas<1> alphas_advection(const AdvectionModel& m) { return {{std::fabs(m.speed)}}; }

Alphas<3> alphas_euler1d(const FieldArray& q, const UniformGrid& g, double gamma) {
  double am = 0.0, a0 = 0.0, ap = 0.0;
  bool bad = false;
  for_each_sweep_cell(q, g.dim, [&](const double* cell) {
    double rho, u, p;
    euler1d_prim(cell, gamma, rho, u, p);
    if (!(rho > 0.0) || !(p > 0.0)) { bad = true; return; }
    const double c = std::sqrt(gamma * p / rho);
    am = std::fmax(am, std::fabs(u - c));
    a0 = std::fmax(a0, std::fabs(u));
    ap = std::fmax(ap, std::fabs(u + c));
  });
  if (bad) throw NonPhysicalState("spatial_operator: non-physical state in wavespeed scan");
  return {{am, a0, ap}};
}

Alphas<4> alphas_euler2d(const FieldArray& q, const UniformGrid& g, double gamma, int dir) {
  double am = 0.0, a0 = 0.0, ap = 0.0;
  bool bad = false;
  for_each_sweep_cell(q, g.dim, [&](const double* cell) {
    double rho, u, v, p;
    euler2d_prim(cell, gamma, rho, u, v, p);
    if (!(rho > 0.0) || !(p > 0.0)) { bad = true; return; }
    const double c = std::sqrt(gamma * p / rho);
    const double un = (dir == 0) ? u : v;
    am = std::fmax(am, std::fabs(un - c));
    a0 = std::fmax(a0, std::fabs(un));
    ap = std::fmax(ap, std::fabs(un + c));
  });
  if (bad) throw NonPhysicalState("spatial_operator: non-physical state in wavespeed scan");
  return {{am, a0, a0, ap}};
}

// Numerical flux at one interface between pencil offsets o and o+1. qp and flx
// are AoS pencil arrays; hf receives the NC flux components. EigenFn fills the
// local characteristic frame (identity for scalar or componentwise runs).
template <int NC, class EigenFn>
inline void interface_flux(const double* qp, const double* flx, int o, const double* alpha,
                           const ReconParams& rp, EigenFn&& eigen_at, double* hf,
                           ReconStats* stats) {
  double L[NC][NC], R[NC][NC];
  eigen_at(qp + o * NC, qp + (o + 1) * NC, L, R);

  double fch[NC];
  const double* qw = qp + (o - 2) * NC;
  const double* fw = flx + (o - 2) * NC;
  for (int m = 0; m < NC; ++m) {
    double wp[6], wm[6];
    for (int w = 0; w < 6; ++w) {
      double gproj = 0.0, vproj = 0.0;
      for (int c = 0; c < NC; ++c) {
        gproj += L[m][c] * fw[w * NC + c];
        vproj += L[m][c] * qw[w * NC + c];
      }
      const double diss = alpha[m] * vproj;
      wp[w] = 0.5 * (gproj + diss);
      wm[w] = 0.5 * (gproj - diss);
    }
    fch[m] = reconstruct_interface(wp, rp, stats) +
             reconstruct_interface_negative(wm, rp, stats);
  }
  for (int c = 0; c < NC; ++c) {
    double acc = 0.0;
    for (int m = 0; m < NC; ++m) acc += R[c][m] * fch[m];
    hf[c] = acc;
  }
}

template <int NC>
inline void identity_frame(double (&L)[NC][NC], double (&R)[NC][NC]) {
  for (int i = 0; i < NC; ++i)
    for (int j = 0; j < NC; ++j) {
      L[i][j] = (i == j) ? 1.0 : 0.0;
      R[i][j] = L[i][j];
    }
}

// One directional sweep. Pencils are copied into contiguous scratch, fluxes and
// interface values computed there, then the conservative difference is
// accumulated into dudt. Work splits over whole pencils when there are several
// (2D) and over interface ranges of the single pencil otherwise (1D); both use
// a static partition with disjoint writes, so results are identical for any
// worker count.
template <int NC, class FluxFn, class EigenFn>
void sweep(FieldArray& dudt, const FieldArray& q, const UniformGrid& g, int dir,
           const double* alpha, const ReconParams& params, WorkerPool* pool,
           ReconStats* stats, FluxFn&& flux_at, EigenFn&& eigen_at) {
  const int gh = (dir == 0) ? q.gx : q.gy;
  const int m = (dir == 0) ? q.nx : q.ny;        // cells along the pencil
  const int npencil = (dir == 0) ? q.ny : q.nx;  // pencils across it
  const int mtot = m + 2 * gh;
  const double inv_d = 1.0 / ((dir == 0) ? g.dx : g.dy);

  ReconParams rp = params;
  rp.set_dx((dir == 0) ? g.dx : g.dy);

  const int nworkers = pool ? pool->workers() : 1;
  std::vector<ReconStats> wstats(static_cast<std::size_t>(nworkers));

  if (npencil > 1) {
    auto body = [&](int k) {
      ReconStats* st = stats ? &wstats[static_cast<std::size_t>(k)] : nullptr;
      int p0, p1;
      WorkerPool::chunk(npencil, nworkers, k, p0, p1);
      std::vector<double> qbuf(static_cast<std::size_t>(mtot) * NC);
      std::vector<double> fbuf(static_cast<std::size_t>(mtot) * NC);
      std::vector<double> hbuf(static_cast<std::size_t>(m + 1) * NC);

      for (int p = p0; p < p1; ++p) {
        // Gather the pencil; rows are contiguous in memory, columns strided.
        const double* qp;
        if (dir == 0) {
          qp = q.cell(-q.gx, p);
        } else {
          for (int j = -gh; j < m + gh; ++j) {
            const double* src = q.cell(p, j);
            double* dst = qbuf.data() + static_cast<std::size_t>(j + gh) * NC;
            for (int c = 0; c < NC; ++c) dst[c] = src[c];
          }
          qp = qbuf.data();
        }

        for (int o = 0; o < mtot; ++o) {
          if (!flux_at(qp + o * NC, fbuf.data() + static_cast<std::size_t>(o) * NC))
            throw NonPhysicalState("spatial_operator: non-physical state at cell " +
                                   cell_tag(dir, p, o - gh));
        }

        for (int i = -1; i < m; ++i)
          interface_flux<NC>(qp, fbuf.data(), i + gh, alpha, rp, eigen_at,
                             hbuf.data() + static_cast<std::size_t>(i + 1) * NC, st);

        for (int i = 0; i < m; ++i) {
          double* out = (dir == 0) ? dudt.cell(i, p) : dudt.cell(p, i);
          const double* hl = hbuf.data() + static_cast<std::size_t>(i) * NC;
          const double* hr = hbuf.data() + static_cast<std::size_t>(i + 1) * NC;
          for (int c = 0; c < NC; ++c) out[c] -= (hr[c] - hl[c]) * inv_d;
        }
      }
    };
    if (pool && nworkers > 1) {
      pool->run(body);
    } else {
      body(0);
    }
  } else {
    // Single pencil: fluxes and the cell update are cheap serial passes; the
    // interface loop is the expensive part and is chunked over workers writing
    // disjoint slots of one shared buffer.
    const double* qp = q.cell(-q.gx, 0);
    std::vector<double> fbuf(static_cast<std::size_t>(mtot) * NC);
    std::vector<double> hbuf(static_cast<std::size_t>(m + 1) * NC);
    for (int o = 0; o < mtot; ++o) {
      if (!flux_at(qp + o * NC, fbuf.data() + static_cast<std::size_t>(o) * NC))
        throw NonPhysicalState("spatial_operator: non-physical state at cell " +
                               cell_tag(dir, 0, o - gh));
    }

    auto body = [&](int k) {
      ReconStats* st = stats ? &wstats[static_cast<std::size_t>(k)] : nullptr;
      int s0, s1;
      WorkerPool::chunk(m + 1, nworkers, k, s0, s1);
      for (int s = s0; s < s1; ++s)
        interface_flux<NC>(qp, fbuf.data(), s - 1 + gh, alpha, rp, eigen_at,
                           hbuf.data() + static_cast<std::size_t>(s) * NC, st);
    };
    if (pool && nworkers > 1) {
      pool->run(body);
    } else {
      body(0);
    }

    for (int i = 0; i < m; ++i) {
      double* out = dudt.cell(i, 0);
      const double* hl = hbuf.data() + static_cast<std::size_t>(i) * NC;
      const double* hr = hbuf.data() + static_cast<std::size_t>(i + 1) * NC;
      for (int c = 0; c < NC; ++c) out[c] -= (hr[c] - hl[c]) * inv_d;
    }
  }

  if (stats)
    for (const auto& ws : wstats) stats->merge(ws);
}

}  // namespace

void spatial_operator(FieldArray& dudt, const FieldArray& q, const UniformGrid& g,
                      const FluxModel& model, const ReconParams& params, WorkerPool* pool,
                      ReconStats* stats) {
  std::fill(dudt.data.begin(), dudt.data.end(), 0.0);

  if (const auto* adv = std::get_if<AdvectionModel>(&model)) {
    const auto al = alphas_advection(*adv);
    const double speed = adv->speed;
    sweep<1>(dudt, q, g, 0, al.a, params, pool, stats,
             [speed](const double* qc, double* f) {
               f[0] = speed * qc[0];
               return true;
             },
             [](const double*, const double*, double (&L)[1][1], double (&R)[1][1]) {
               L[0][0] = 1.0;
               R[0][0] = 1.0;
             });
    return;
  }

  if (const auto* e1 = std::get_if<Euler1DModel>(&model)) {
    const double gamma = e1->gamma;
    const auto al = alphas_euler1d(q, g, gamma);
    const bool componentwise = params.componentwise;
    sweep<3>(dudt, q, g, 0, al.a, params, pool, stats,
             [gamma](const double* qc, double* f) {
               double rho, u, p;
               euler1d_prim(qc, gamma, rho, u, p);
               if (!(rho > 0.0) || !(p > 0.0)) return false;
               f[0] = qc[1];
               f[1] = qc[1] * u + p;
               f[2] = (qc[2] + p) * u;
               return true;
             },
             [gamma, componentwise](const double* ql, const double* qr, double (&L)[3][3],
                                    double (&R)[3][3]) {
               if (componentwise) {
                 identity_frame<3>(L, R);
                 return;
               }
               RoeAverage a = roe_average_1d(ql, qr, gamma);
               if (!a.ok) a = arithmetic_average(ql, qr, gamma, 3);
               if (!a.ok) {
                 identity_frame<3>(L, R);
                 return;
               }
               const Eigen1D e = eigensystem_1d(a, gamma);
               std::memcpy(L, e.L, sizeof(L));
               std::memcpy(R, e.R, sizeof(R));
             });
    return;
  }

  const auto& e2 = std::get<Euler2DModel>(model);
  const double gamma = e2.gamma;
  const bool componentwise = params.componentwise;
  auto flux_x = [gamma](const double* qc, double* f) {
    double rho, u, v, p;
    euler2d_prim(qc, gamma, rho, u, v, p);
    if (!(rho > 0.0) || !(p > 0.0)) return false;
    f[0] = qc[1];
    f[1] = qc[1] * u + p;
    f[2] = qc[2] * u;
    f[3] = (qc[3] + p) * u;
    return true;
  };
  auto flux_y = [gamma](const double* qc, double* f) {
    double rho, u, v, p;
    euler2d_prim(qc, gamma, rho, u, v, p);
    if (!(rho > 0.0) || !(p > 0.0)) return false;
    f[0] = qc[2];
    f[1] = qc[1] * v;
    f[2] = qc[2] * v + p;
    f[3] = (qc[3] + p) * v;
    return true;
  };
  auto make_eigen = [gamma, componentwise](int dir) {
    return [gamma, componentwise, dir](const double* ql, const double* qr,
                                       double (&L)[4][4], double (&R)[4][4]) {
      if (componentwise) {
        identity_frame<4>(L, R);
        return;
      }
      RoeAverage a = roe_average_2d(ql, qr, gamma);
      if (!a.ok) a = arithmetic_average(ql, qr, gamma, 4);
      if (!a.ok) {
        identity_frame<4>(L, R);
        return;
      }
      const Eigen2D e = eigensystem_2d(a, gamma, dir);
      std::memcpy(L, e.L, sizeof(L));
      std::memcpy(R, e.R, sizeof(R));
    };
  };

  {
    const auto ax = alphas_euler2d(q, g, gamma, 0);
    sweep<4>(dudt, q, g, 0, ax.a, params, pool, stats, flux_x, make_eigen(0));
  }
  {
    const auto ay = alphas_euler2d(q, g, gamma, 1);
    sweep<4>(dudt, q, g, 1, ay.a, params, pool, stats, flux_y, make_eigen(1));
  }

  if (e2.gravity) {
    for (int j = 0; j < q.ny; ++j)
      for (int i = 0; i < q.nx; ++i) {
        const double* qc = q.cell(i, j);
        double* out = dudt.cell(i, j);
        out[2] += qc[0];
        out[3] += qc[2];
      }
  }
}

}  // namespace wenoh
