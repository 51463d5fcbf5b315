// Run orchestration: time loops, error measurement, reference solutions, and
// CSV/JSON artifact writing for the command-line front end.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "wenoh/problems.hpp"
#include "wenoh/spatial.hpp"

namespace wenoh {

struct RunConfig {
  std::string problem;
  Scheme scheme = Scheme::H;
  int n = 0;                   // short-dimension resolution; 0 = preset default
  double t_final = -1.0;       // < 0 = preset default
  double cfl = -1.0;           // > 0 replaces the preset step law with CFL(cfl)
  bool force_fixed_power = false;  // convergence studies pin dt = dx^1.5
  int integrator_override = 0;     // 0 = preset, 3 = RK3, 4 = RK4
  double theta = -1.0;         // < 0 = preset default
  double gamma_exp = 4.0;
  double eps_js = 1e-6;
  int workers = 1;
  bool deterministic = true;   // recorded; execution is deterministic either way
  bool componentwise = false;  // diagnostic: skip characteristic projection
  std::string out_dir = ".";
};

struct RunSummary {
  std::string problem;
  Scheme scheme = Scheme::H;
  int nx = 0, ny = 1;
  double t_final = 0.0, t_end = 0.0;
  int steps = 0;
  double dt_min = 0.0, dt_max = 0.0;
  double wall_seconds = 0.0;  // time loop only; excludes setup and I/O
  int workers = 1;
  bool deterministic = true;
  ReconStats stats;
  int ncomp = 1;
  std::array<double, 4> totals_initial{}, totals_final{};
  bool aborted = false;
  std::string abort_message;
  int abort_step = -1;
  double abort_time = 0.0;
  std::optional<double> error_l1, error_linf;  // density vs reference, when available
  std::string csv_path, summary_path;
};

struct RunOutput {
  RunSummary summary;
  UniformGrid grid;
  FieldArray state;
};

// Time loop only; no file output. Aborts (non-physical or non-finite states)
// are recorded in the summary, not thrown.
RunOutput run_simulation(const RunConfig& cfg);

// run_simulation plus error measurement and CSV/JSON artifacts.
RunSummary run(const RunConfig& cfg);

struct ErrorRow {
  Scheme scheme = Scheme::H;
  int n = 0;
  double l1 = 0.0, linf = 0.0;
  double order_l1 = 0.0, order_linf = 0.0;  // 0 in the first row
  double seconds = 0.0;
};

// Refinement study against the preset's analytic reference with RK4 and the
// fixed dt = dx^1.5 law; writes <problem>_<SCHEME>_convergence.csv.
std::vector<ErrorRow> convergence(const RunConfig& cfg, const std::vector<int>& n_list);

// One timed run per (scheme, n); writes <problem>_efficiency.csv with wall
// seconds and Linf errors.
std::vector<ErrorRow> efficiency(const RunConfig& cfg, const std::vector<Scheme>& schemes,
                                 const std::vector<int>& n_list);

// Aligned density profiles for several schemes on one grid, with a reference
// column when the preset provides one; returns the CSV path.
std::string compare(const RunConfig& cfg, const std::vector<Scheme>& schemes);

// Density errors of a finished run against the preset reference (1D and the
// analytic 2D preset). Empty when the preset has no reference.
struct ErrorPair {
  double l1 = 0.0, linf = 0.0;
};
std::optional<ErrorPair> measure_errors(const RunConfig& cfg, const ProblemSpec& spec,
                                        const UniformGrid& g, const FieldArray& state,
                                        double t_end);

// Reference density profile sampled at x (1D presets). For FineGridSelf this
// runs the baseline scheme once and caches the profile as a versioned CSV in
// cfg.out_dir.
std::vector<double> reference_density_1d(const RunConfig& cfg, const ProblemSpec& spec,
                                         const UniformGrid& g, double t_end);

std::string run_tag(const ProblemSpec& spec, Scheme scheme, int nx, int ny);

}  // namespace wenoh
