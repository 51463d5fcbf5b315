#include "wenoh/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "wenoh/time_integration.hpp"

namespace wenoh {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string fmt_short(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6e", v);
  return buf;
}

std::array<double, 4> conserved_totals(const FieldArray& f, const UniformGrid& g) {
  std::array<double, 4> tot{};
  for (int j = 0; j < f.ny; ++j)
    for (int i = 0; i < f.nx; ++i) {
      const double* q = f.cell(i, j);
      for (int c = 0; c < f.ncomp; ++c) tot[static_cast<std::size_t>(c)] += q[c];
    }
  const double vol = (g.dim == 2) ? g.dx * g.dy : g.dx;
  for (auto& v : tot) v *= vol;
  return tot;
}

void write_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp);
    out << content;
  }
  std::filesystem::rename(tmp, path);
}

void write_fields_csv(const std::string& path, const ProblemSpec& spec,
                      const UniformGrid& g, const FieldArray& f, Scheme scheme,
                      double t_end) {
  std::ostringstream out;
  out << "# " << spec.name << " scheme=" << scheme_name(scheme) << " nx=" << g.nx;
  if (g.dim == 2) out << " ny=" << g.ny;
  out << " t=" << fmt(t_end) << " (all columns dimensionless code units)\n";

  const double gamma = model_gamma(spec.model);
  if (f.ncomp == 1) {
    out << "x,q\n";
    for (int i = 0; i < f.nx; ++i)
      out << fmt(g.x_center(i)) << ',' << fmt(f.at(i, 0)) << '\n';
  } else if (f.ncomp == 3) {
    out << "x,rho,mom_x,energy,velocity_x,pressure\n";
    for (int i = 0; i < f.nx; ++i) {
      const double* q = f.cell(i, 0);
      double rho, u, p;
      euler1d_prim(q, gamma, rho, u, p);
      out << fmt(g.x_center(i)) << ',' << fmt(q[0]) << ',' << fmt(q[1]) << ','
          << fmt(q[2]) << ',' << fmt(u) << ',' << fmt(p) << '\n';
    }
  } else {
    out << "x,y,rho,mom_x,mom_y,energy,velocity_x,velocity_y,pressure\n";
    for (int j = 0; j < f.ny; ++j)
      for (int i = 0; i < f.nx; ++i) {
        const double* q = f.cell(i, j);
        double rho, u, v, p;
        euler2d_prim(q, gamma, rho, u, v, p);
        out << fmt(g.x_center(i)) << ',' << fmt(g.y_center(j)) << ',' << fmt(q[0]) << ','
            << fmt(q[1]) << ',' << fmt(q[2]) << ',' << fmt(q[3]) << ',' << fmt(u) << ','
            << fmt(v) << ',' << fmt(p) << '\n';
      }
  }
  write_atomic(path, out.str());
}

}  // namespace

std::string run_tag(const ProblemSpec& spec, Scheme scheme, int nx, int ny) {
  std::string tag = spec.name;
  tag += '_';
  tag += scheme_name(scheme);
  tag += '_';
  if (spec.dim == 2)
    tag += std::to_string(nx) + "x" + std::to_string(ny);
  else
    tag += std::to_string(nx);
  return tag;
}

RunOutput run_simulation(const RunConfig& cfg) {
  const ProblemSpec& spec = find_problem(cfg.problem);
  RunOutput out;
  out.grid = problem_grid(spec, cfg.n);
  const UniformGrid& g = out.grid;
  out.state = init_problem(spec, g);
  FieldArray& u = out.state;

  RunSummary& s = out.summary;
  s.problem = spec.name;
  s.scheme = cfg.scheme;
  s.nx = g.nx;
  s.ny = (g.dim == 2) ? g.ny : 1;
  s.ncomp = u.ncomp;
  s.workers = cfg.workers;
  s.deterministic = cfg.deterministic;

  const double t_final = (cfg.t_final >= 0.0) ? cfg.t_final : spec.t_final;
  s.t_final = t_final;

  TimeStepLaw law = spec.law;
  if (cfg.cfl > 0.0) {
    law.kind = TimeStepLaw::Kind::CFL;
    law.cfl = cfg.cfl;
  } else if (cfg.force_fixed_power) {
    law.kind = TimeStepLaw::Kind::FixedPower;
    law.power = 1.5;
  }
  Integrator integ = spec.integrator;
  if (cfg.integrator_override == 3) integ = Integrator::RK3;
  if (cfg.integrator_override == 4) integ = Integrator::RK4;

  ReconParams params;
  params.scheme = cfg.scheme;
  params.theta = (cfg.theta >= 0.0) ? cfg.theta : spec.theta;
  params.gamma_exp = cfg.gamma_exp;
  params.eps_js = cfg.eps_js;
  params.componentwise = cfg.componentwise;

  s.totals_initial = conserved_totals(u, g);

  WorkerPool pool(cfg.workers);
  RKWorkspace ws;
  RhsFn rhs = [&](FieldArray& q, double t, FieldArray& dudt) {
    fill_ghosts(q, g, spec.bc, t);
    spatial_operator(dudt, q, g, spec.model, params, &pool, &s.stats);
  };

  double t = 0.0;
  const double t_eps = 1e-12 * std::fmax(1.0, std::fabs(t_final));
  constexpr int kMaxSteps = 10'000'000;

  const auto clock0 = std::chrono::steady_clock::now();
  try {
    while (t < t_final - t_eps) {
      if (s.steps >= kMaxSteps)
        throw std::runtime_error("step limit reached before t_final");
      fill_ghosts(u, g, spec.bc, t);
      const double dt = compute_dt(u, g, spec.model, law, t, t_final);
      if (!(dt > 0.0)) break;
      if (integ == Integrator::RK4)
        rk4_step(u, t, dt, rhs, ws);
      else
        tvd_rk3_step(u, t, dt, rhs, ws);
      t += dt;
      ++s.steps;
      s.dt_min = (s.steps == 1) ? dt : std::fmin(s.dt_min, dt);
      s.dt_max = (s.steps == 1) ? dt : std::fmax(s.dt_max, dt);
    }
  } catch (const std::exception& e) {
    s.aborted = true;
    s.abort_message = e.what();
    s.abort_step = s.steps;
    s.abort_time = t;
  }
  const auto clock1 = std::chrono::steady_clock::now();
  s.wall_seconds = std::chrono::duration<double>(clock1 - clock0).count();
  s.t_end = t;
  if (!s.aborted) s.totals_final = conserved_totals(u, g);
  return out;
}

std::vector<double> reference_density_1d(const RunConfig& cfg, const ProblemSpec& spec,
                                         const UniformGrid& g, double t_end) {
  std::vector<double> ref(static_cast<std::size_t>(g.nx));

  switch (spec.reference) {
    case ReferenceKind::Analytic: {
      const bool scalar = std::holds_alternative<AdvectionModel>(spec.model);
      for (int i = 0; i < g.nx; ++i) {
        const double x = g.x_center(i);
        ref[static_cast<std::size_t>(i)] =
            scalar ? exact_advection(x, t_end) : exact_smooth_euler_density(1, x, 0.0, t_end);
      }
      return ref;
    }
    case ReferenceKind::ExactRiemann: {
      const double gamma = model_gamma(spec.model);
      if (t_end <= 0.0) {
        for (int i = 0; i < g.nx; ++i)
          ref[static_cast<std::size_t>(i)] =
              (g.x_center(i) < spec.diaphragm) ? spec.riemann_left.rho : spec.riemann_right.rho;
        return ref;
      }
      const RiemannStar star = solve_riemann(spec.riemann_left, spec.riemann_right, gamma);
      for (int i = 0; i < g.nx; ++i) {
        const double xi = (g.x_center(i) - spec.diaphragm) / t_end;
        ref[static_cast<std::size_t>(i)] =
            sample_riemann(spec.riemann_left, spec.riemann_right, gamma, star, xi).rho;
      }
      return ref;
    }
    case ReferenceKind::FineGridSelf: {
      const std::string path = cfg.out_dir + "/ref_" + spec.name + "_" +
                               scheme_name(spec.ref_scheme) + "_" +
                               std::to_string(spec.ref_n) + ".csv";
      const std::string want_header = "# reference problem=" + spec.name +
                                      " scheme=" + scheme_name(spec.ref_scheme) +
                                      " n=" + std::to_string(spec.ref_n) +
                                      " t=" + fmt(t_end) + " version=1";
      std::vector<double> fine;
      const int nf = spec.ref_n * spec.aspect_x;
      {
        std::ifstream in(path);
        std::string header;
        if (in && std::getline(in, header) && header == want_header) {
          std::string line;
          std::getline(in, line);  // column names
          double x, r;
          char comma;
          while (in >> x >> comma >> r) fine.push_back(r);
          if (static_cast<int>(fine.size()) != nf) fine.clear();
        }
      }
      if (fine.empty()) {
        RunConfig ref_cfg = cfg;
        ref_cfg.scheme = spec.ref_scheme;
        ref_cfg.n = spec.ref_n;
        ref_cfg.t_final = t_end;
        ref_cfg.force_fixed_power = false;
        ref_cfg.integrator_override = 0;
        ref_cfg.theta = -1.0;
        RunOutput ro = run_simulation(ref_cfg);
        if (ro.summary.aborted)
          throw std::runtime_error("reference run aborted: " + ro.summary.abort_message);
        fine.resize(static_cast<std::size_t>(ro.grid.nx));
        std::ostringstream out;
        out << want_header << '\n' << "x,rho\n";
        for (int i = 0; i < ro.grid.nx; ++i) {
          fine[static_cast<std::size_t>(i)] = ro.state.at(i, 0);
          out << fmt(ro.grid.x_center(i)) << ',' << fmt(fine[static_cast<std::size_t>(i)])
              << '\n';
        }
        write_atomic(path, out.str());
      }
      // Linear interpolation from the fine cell centers onto the target grid.
      const double dxf = (spec.x1 - spec.x0) / nf;
      for (int i = 0; i < g.nx; ++i) {
        const double sp = (g.x_center(i) - spec.x0) / dxf - 0.5;
        int j0 = static_cast<int>(std::floor(sp));
        double w = sp - j0;
        if (j0 < 0) { j0 = 0; w = 0.0; }
        if (j0 > nf - 2) { j0 = nf - 2; w = 1.0; }
        ref[static_cast<std::size_t>(i)] = (1.0 - w) * fine[static_cast<std::size_t>(j0)] +
                                           w * fine[static_cast<std::size_t>(j0 + 1)];
      }
      return ref;
    }
    case ReferenceKind::None:
      break;
  }
  throw std::logic_error("reference_density_1d: preset has no reference");
}

std::optional<ErrorPair> measure_errors(const RunConfig& cfg, const ProblemSpec& spec,
                                        const UniformGrid& g, const FieldArray& state,
                                        double t_end) {
  if (spec.reference == ReferenceKind::None) return std::nullopt;

  ErrorPair e;
  if (spec.dim == 1) {
    const auto ref = reference_density_1d(cfg, spec, g, t_end);
    for (int i = 0; i < g.nx; ++i) {
      const double d = std::fabs(state.at(i, 0) - ref[static_cast<std::size_t>(i)]);
      e.l1 += d;
      e.linf = std::fmax(e.linf, d);
    }
    e.l1 *= g.dx;
    return e;
  }
  if (spec.reference != ReferenceKind::Analytic) return std::nullopt;
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) {
      const double d = std::fabs(
          state.at(i, j, 0) -
          exact_smooth_euler_density(2, g.x_center(i), g.y_center(j), t_end));
      e.l1 += d;
      e.linf = std::fmax(e.linf, d);
    }
  e.l1 *= g.dx * g.dy;
  return e;
}

namespace {

nlohmann::json summary_json(const RunSummary& s) {
  nlohmann::json j;
  j["problem"] = s.problem;
  j["scheme"] = scheme_name(s.scheme);
  j["nx"] = s.nx;
  j["ny"] = s.ny;
  j["t_final"] = s.t_final;
  j["t_end"] = s.t_end;
  j["steps"] = s.steps;
  j["dt_min"] = s.dt_min;
  j["dt_max"] = s.dt_max;
  j["wall_seconds"] = s.wall_seconds;
  j["workers"] = s.workers;
  j["deterministic"] = s.deterministic;
  j["branch_counters"] = {
      {"polynomial", s.stats.polynomial},
      {"hyperbolic_c1", s.stats.hyperbolic_c1},
      {"trigonometric_c1", s.stats.trigonometric_c1},
      {"hyperbolic_c2", s.stats.hyperbolic_c2},
      {"trigonometric_c2", s.stats.trigonometric_c2},
      {"coeff_fallback", s.stats.coeff_fallback},
      {"d_clamped", s.stats.d_clamped},
      {"total", s.stats.total},
  };
  j["conserved_totals_initial"] =
      std::vector<double>(s.totals_initial.begin(), s.totals_initial.begin() + s.ncomp);
  j["conserved_totals_final"] =
      std::vector<double>(s.totals_final.begin(), s.totals_final.begin() + s.ncomp);
  if (s.aborted) {
    j["aborted"] = {{"message", s.abort_message},
                    {"step", s.abort_step},
                    {"time", s.abort_time}};
  }
  if (s.error_l1) {
    j["error_l1"] = *s.error_l1;
    j["error_linf"] = *s.error_linf;
  }
  return j;
}

}  // namespace

RunSummary run(const RunConfig& cfg) {
  const ProblemSpec& spec = find_problem(cfg.problem);
  RunOutput out = run_simulation(cfg);
  RunSummary& s = out.summary;

  if (!s.aborted) {
    if (const auto e = measure_errors(cfg, spec, out.grid, out.state, s.t_end)) {
      s.error_l1 = e->l1;
      s.error_linf = e->linf;
    }
  }

  std::filesystem::create_directories(cfg.out_dir);
  const std::string tag = run_tag(spec, cfg.scheme, s.nx, s.ny);
  s.csv_path = cfg.out_dir + "/" + tag + ".csv";
  s.summary_path = cfg.out_dir + "/" + tag + "_summary.json";
  write_fields_csv(s.csv_path, spec, out.grid, out.state, cfg.scheme, s.t_end);
  write_atomic(s.summary_path, summary_json(s).dump(2) + "\n");
  return s;
}

std::vector<ErrorRow> convergence(const RunConfig& cfg, const std::vector<int>& n_list) {
  const ProblemSpec& spec = find_problem(cfg.problem);
  if (spec.reference != ReferenceKind::Analytic)
    throw std::invalid_argument("convergence requires a preset with an analytic reference");

  std::vector<ErrorRow> rows;
  for (std::size_t k = 0; k < n_list.size(); ++k) {
    RunConfig c = cfg;
    c.n = n_list[k];
    c.force_fixed_power = (c.cfl > 0.0) ? false : true;
    c.integrator_override = 4;
    RunOutput out = run_simulation(c);
    if (out.summary.aborted)
      throw std::runtime_error("convergence run aborted at n=" + std::to_string(c.n) + ": " +
                               out.summary.abort_message);
    const auto e = measure_errors(c, spec, out.grid, out.state, out.summary.t_end);
    ErrorRow row;
    row.scheme = cfg.scheme;
    row.n = n_list[k];
    row.l1 = e->l1;
    row.linf = e->linf;
    row.seconds = out.summary.wall_seconds;
    if (k > 0 && n_list[k] == 2 * n_list[k - 1] && rows[k - 1].l1 > 0.0 && row.l1 > 0.0) {
      row.order_l1 = std::log2(rows[k - 1].l1 / row.l1);
      row.order_linf = std::log2(rows[k - 1].linf / row.linf);
    }
    rows.push_back(row);
  }

  std::filesystem::create_directories(cfg.out_dir);
  std::ostringstream out;
  out << "# " << spec.name << " scheme=" << scheme_name(cfg.scheme)
      << " refinement study; L1/Linf density errors (dimensionless), orders from "
         "consecutive n pairs\n";
  out << "scheme,n,l1_error,l1_order,linf_error,linf_order\n";
  for (const auto& r : rows) {
    out << scheme_name(r.scheme) << ',' << r.n << ',' << fmt(r.l1) << ',';
    if (r.order_l1 != 0.0) out << fmt(r.order_l1);
    out << ',' << fmt(r.linf) << ',';
    if (r.order_linf != 0.0) out << fmt(r.order_linf);
    out << '\n';
  }
  write_atomic(cfg.out_dir + "/" + spec.name + "_" + scheme_name(cfg.scheme) +
                   "_convergence.csv",
               out.str());
  return rows;
}

std::vector<ErrorRow> efficiency(const RunConfig& cfg, const std::vector<Scheme>& schemes,
                                 const std::vector<int>& n_list) {
  const ProblemSpec& spec = find_problem(cfg.problem);
  if (spec.reference != ReferenceKind::Analytic)
    throw std::invalid_argument("efficiency requires a preset with an analytic reference");

  std::vector<ErrorRow> rows;
  for (const Scheme sch : schemes)
    for (const int n : n_list) {
      RunConfig c = cfg;
      c.scheme = sch;
      c.n = n;
      RunOutput out = run_simulation(c);
      if (out.summary.aborted)
        throw std::runtime_error("efficiency run aborted at n=" + std::to_string(n) + ": " +
                                 out.summary.abort_message);
      const auto e = measure_errors(c, spec, out.grid, out.state, out.summary.t_end);
      ErrorRow row;
      row.scheme = sch;
      row.n = n;
      row.l1 = e->l1;
      row.linf = e->linf;
      row.seconds = out.summary.wall_seconds;
      rows.push_back(row);
    }

  std::filesystem::create_directories(cfg.out_dir);
  std::ostringstream out;
  out << "# " << spec.name
      << " efficiency study; wall seconds (time loop only) vs Linf density error\n";
  out << "scheme,n,wall_seconds,linf_error\n";
  for (const auto& r : rows)
    out << scheme_name(r.scheme) << ',' << r.n << ',' << fmt_short(r.seconds) << ','
        << fmt(r.linf) << '\n';
  write_atomic(cfg.out_dir + "/" + spec.name + "_efficiency.csv", out.str());
  return rows;
}

std::string compare(const RunConfig& cfg, const std::vector<Scheme>& schemes) {
  const ProblemSpec& spec = find_problem(cfg.problem);

  std::vector<RunOutput> outs;
  for (const Scheme sch : schemes) {
    RunConfig c = cfg;
    c.scheme = sch;
    outs.push_back(run_simulation(c));
    if (outs.back().summary.aborted)
      throw std::runtime_error(std::string("compare run aborted for scheme ") +
                               scheme_name(sch) + ": " + outs.back().summary.abort_message);
  }
  const UniformGrid& g = outs.front().grid;
  const double t_end = outs.front().summary.t_end;

  const bool have_ref =
      (spec.dim == 1 && spec.reference != ReferenceKind::None) ||
      (spec.dim == 2 && spec.reference == ReferenceKind::Analytic);
  std::vector<double> ref;
  if (have_ref && spec.dim == 1) ref = reference_density_1d(cfg, spec, g, t_end);

  std::filesystem::create_directories(cfg.out_dir);
  std::ostringstream out;
  out << "# " << spec.name << " scheme comparison at t=" << fmt(t_end)
      << " (density profiles, dimensionless)\n";
  out << (spec.dim == 2 ? "x,y" : "x");
  if (have_ref) out << ",reference";
  for (const Scheme sch : schemes) out << ",rho_" << scheme_name(sch);
  if (have_ref)
    for (const Scheme sch : schemes) out << ",err_" << scheme_name(sch);
  out << '\n';

  for (int j = 0; j < ((spec.dim == 2) ? g.ny : 1); ++j)
    for (int i = 0; i < g.nx; ++i) {
      out << fmt(g.x_center(i));
      if (spec.dim == 2) out << ',' << fmt(g.y_center(j));
      double refv = 0.0;
      if (have_ref) {
        refv = (spec.dim == 1)
                   ? ref[static_cast<std::size_t>(i)]
                   : exact_smooth_euler_density(2, g.x_center(i), g.y_center(j), t_end);
        out << ',' << fmt(refv);
      }
      for (const auto& ro : outs) out << ',' << fmt(ro.state.at(i, j, 0));
      if (have_ref)
        for (const auto& ro : outs) out << ',' << fmt(ro.state.at(i, j, 0) - refv);
      out << '\n';
    }

  int nx, ny;
  problem_dims(spec, cfg.n, nx, ny);
  std::string name = spec.name + "_compare_";
  name += (spec.dim == 2) ? std::to_string(nx) + "x" + std::to_string(ny)
                          : std::to_string(nx);
  const std::string path = cfg.out_dir + "/" + name + ".csv";
  write_atomic(path, out.str());
  return path;
}

}  // namespace wenoh
