// Command-line front end for the WENO benchmark library.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wenoh/harness.hpp"

namespace {

using wenoh::RunConfig;
using wenoh::Scheme;

struct CliOpts {
  std::string problem;
  std::string scheme = "h";
  std::string schemes = "js,m,z,h";
  std::string n_list;
  std::string out = ".";
  std::string config;
  std::string integrator;
  int n = 0;
  int workers = 1;
  double t_final = -1.0;
  double cfl = -1.0;
  double theta = -1.0;
  double gamma_exp = 4.0;
  bool deterministic = true;
  bool componentwise = false;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) parts.push_back(item);
  return parts;
}

std::vector<int> parse_n_list(const std::string& s) {
  std::vector<int> ns;
  for (const auto& p : split(s, ',')) ns.push_back(std::stoi(p));
  if (ns.empty()) throw CLI::ValidationError("--n-list", "needs at least one value");
  return ns;
}

std::vector<Scheme> parse_schemes(const std::string& s) {
  std::vector<Scheme> out;
  for (const auto& p : split(s, ',')) {
    Scheme sch;
    if (!wenoh::parse_scheme(p, sch))
      throw CLI::ValidationError("--schemes", "unknown scheme '" + p + "'");
    out.push_back(sch);
  }
  return out;
}

// Options shared by the simulation subcommands, keyed by config-file name.
std::map<std::string, CLI::Option*> add_common(CLI::App* cmd, CliOpts& o,
                                               bool needs_problem) {
  std::map<std::string, CLI::Option*> opts;
  auto* p = cmd->add_option("--problem", o.problem, "problem preset name");
  if (needs_problem) p->required();
  opts["problem"] = p;
  opts["scheme"] = cmd->add_option("--scheme", o.scheme, "weight scheme: js, m, z, or h");
  opts["n"] = cmd->add_option("--n", o.n, "short-dimension resolution (0 = preset default)");
  opts["t-final"] = cmd->add_option("--t-final", o.t_final, "final time override");
  opts["cfl"] = cmd->add_option("--cfl", o.cfl, "CFL number override (replaces preset law)");
  opts["theta"] = cmd->add_option("--theta", o.theta, "L1 indicator blend override");
  opts["gamma-exp"] =
      cmd->add_option("--gamma-exp", o.gamma_exp, "eps = dx^gamma for the H weights");
  opts["workers"] = cmd->add_option("--workers", o.workers, "worker thread count");
  opts["deterministic"] = cmd->add_option("--deterministic", o.deterministic,
                                          "record the determinism contract flag (0/1)");
  opts["out"] = cmd->add_option("--out", o.out, "output directory");
  opts["integrator"] =
      cmd->add_option("--integrator", o.integrator, "rk3 or rk4 (default: preset)");
  opts["componentwise"] = cmd->add_flag("--componentwise", o.componentwise,
                                        "diagnostic: skip characteristic projection");
  opts["config"] = cmd->add_option("--config", o.config, "JSON config file (flags win)");
  return opts;
}

// Fills options the command line left untouched from the JSON config file.
void apply_config(const CliOpts& defaults, CliOpts& o,
                  const std::map<std::string, CLI::Option*>& opts) {
  if (o.config.empty()) return;
  std::ifstream in(o.config);
  if (!in) throw std::runtime_error("cannot open config file " + o.config);
  nlohmann::json j = nlohmann::json::parse(in);

  auto unset = [&](const char* key) {
    auto it = opts.find(key);
    return it != opts.end() && it->second->count() == 0 && j.contains(key);
  };
  if (unset("problem")) o.problem = j["problem"].get<std::string>();
  if (unset("scheme")) o.scheme = j["scheme"].get<std::string>();
  if (unset("n")) o.n = j["n"].get<int>();
  if (unset("t-final")) o.t_final = j["t-final"].get<double>();
  if (unset("cfl")) o.cfl = j["cfl"].get<double>();
  if (unset("theta")) o.theta = j["theta"].get<double>();
  if (unset("gamma-exp")) o.gamma_exp = j["gamma-exp"].get<double>();
  if (unset("workers")) o.workers = j["workers"].get<int>();
  if (unset("deterministic")) o.deterministic = j["deterministic"].get<bool>();
  if (unset("out")) o.out = j["out"].get<std::string>();
  if (unset("integrator")) o.integrator = j["integrator"].get<std::string>();
  if (unset("componentwise")) o.componentwise = j["componentwise"].get<bool>();
  if (unset("n-list")) {
    if (j["n-list"].is_array()) {
      std::string s;
      for (const auto& v : j["n-list"]) s += std::to_string(v.get<int>()) + ",";
      o.n_list = s;
    } else {
      o.n_list = j["n-list"].get<std::string>();
    }
  }
  if (unset("schemes")) {
    if (j["schemes"].is_array()) {
      std::string s;
      for (const auto& v : j["schemes"]) s += v.get<std::string>() + ",";
      o.schemes = s;
    } else {
      o.schemes = j["schemes"].get<std::string>();
    }
  }
  (void)defaults;
}

RunConfig to_run_config(const CliOpts& o) {
  RunConfig cfg;
  cfg.problem = o.problem;
  if (!wenoh::parse_scheme(o.scheme, cfg.scheme))
    throw CLI::ValidationError("--scheme", "unknown scheme '" + o.scheme + "'");
  cfg.n = o.n;
  cfg.t_final = o.t_final;
  cfg.cfl = o.cfl;
  cfg.theta = o.theta;
  cfg.gamma_exp = o.gamma_exp;
  cfg.workers = o.workers;
  cfg.deterministic = o.deterministic;
  cfg.componentwise = o.componentwise;
  cfg.out_dir = o.out;
  if (o.integrator == "rk3") cfg.integrator_override = 3;
  else if (o.integrator == "rk4") cfg.integrator_override = 4;
  else if (!o.integrator.empty())
    throw CLI::ValidationError("--integrator", "expected rk3 or rk4");
  return cfg;
}

void print_error_rows(const std::vector<wenoh::ErrorRow>& rows, bool with_seconds) {
  std::printf("%-7s %6s  %-12s %-6s  %-12s %-6s", "scheme", "n", "L1", "order", "Linf",
              "order");
  if (with_seconds) std::printf("  %-9s", "seconds");
  std::printf("\n");
  for (const auto& r : rows) {
    std::printf("%-7s %6d  %-12.4e ", wenoh::scheme_name(r.scheme), r.n, r.l1);
    if (r.order_l1 != 0.0) std::printf("%-6.2f ", r.order_l1);
    else std::printf("%-6s ", "-");
    std::printf(" %-12.4e ", r.linf);
    if (r.order_linf != 0.0) std::printf("%-6.2f", r.order_linf);
    else std::printf("%-6s", "-");
    if (with_seconds) std::printf("  %-9.3f", r.seconds);
    std::printf("\n");
  }
}

int do_run(const CliOpts& o) {
  const auto s = wenoh::run(to_run_config(o));
  std::printf("%s scheme=%s grid=%dx%d steps=%d t_end=%.6g wall=%.3fs\n", s.problem.c_str(),
              wenoh::scheme_name(s.scheme), s.nx, s.ny, s.steps, s.t_end, s.wall_seconds);
  if (s.aborted) {
    std::printf("ABORTED at step %d (t=%.6g): %s\n", s.abort_step, s.abort_time,
                s.abort_message.c_str());
    return 2;
  }
  if (s.error_l1)
    std::printf("density errors: L1=%.6e Linf=%.6e\n", *s.error_l1, *s.error_linf);
  if (s.stats.total > 0) {
    const auto& st = s.stats;
    std::printf("branches: poly=%llu hypC1=%llu trigC1=%llu hypC2=%llu trigC2=%llu "
                "(fallback=%llu, d-clamped=%llu)\n",
                static_cast<unsigned long long>(st.polynomial),
                static_cast<unsigned long long>(st.hyperbolic_c1),
                static_cast<unsigned long long>(st.trigonometric_c1),
                static_cast<unsigned long long>(st.hyperbolic_c2),
                static_cast<unsigned long long>(st.trigonometric_c2),
                static_cast<unsigned long long>(st.coeff_fallback),
                static_cast<unsigned long long>(st.d_clamped));
  }
  std::printf("wrote %s\n", s.csv_path.c_str());
  std::printf("wrote %s\n", s.summary_path.c_str());
  return 0;
}

int do_list() {
  std::printf("%-18s %-3s %-10s %-8s %-9s %s\n", "name", "dim", "grid", "t_final", "reference",
              "description");
  for (const auto& name : wenoh::problem_names()) {
    const auto& p = wenoh::find_problem(name);
    int nx, ny;
    wenoh::problem_dims(p, 0, nx, ny);
    std::string grid = std::to_string(nx);
    if (p.dim == 2) grid += "x" + std::to_string(ny);
    const char* ref = "none";
    switch (p.reference) {
      case wenoh::ReferenceKind::Analytic: ref = "analytic"; break;
      case wenoh::ReferenceKind::ExactRiemann: ref = "riemann"; break;
      case wenoh::ReferenceKind::FineGridSelf: ref = "fine-grid"; break;
      default: break;
    }
    std::printf("%-18s %-3d %-10s %-8g %-9s %s\n", p.name.c_str(), p.dim, grid.c_str(),
                p.t_final, ref, p.description.c_str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-difference WENO benchmark driver"};
  app.require_subcommand(1);

  CliOpts o;
  auto* cmd_run = app.add_subcommand("run", "run one simulation and dump artifacts");
  auto run_opts = add_common(cmd_run, o, true);

  auto* cmd_conv =
      app.add_subcommand("convergence", "refinement study against the analytic solution");
  auto conv_opts = add_common(cmd_conv, o, true);
  conv_opts["n-list"] =
      cmd_conv->add_option("--n-list", o.n_list, "comma-separated resolutions");

  auto* cmd_eff = app.add_subcommand("efficiency", "wall-time vs error for several schemes");
  auto eff_opts = add_common(cmd_eff, o, true);
  eff_opts["n-list"] =
      cmd_eff->add_option("--n-list", o.n_list, "comma-separated resolutions");
  eff_opts["schemes"] =
      cmd_eff->add_option("--schemes", o.schemes, "comma-separated scheme list");

  auto* cmd_cmp = app.add_subcommand("compare", "aligned profiles for several schemes");
  auto cmp_opts = add_common(cmd_cmp, o, true);
  cmp_opts["schemes"] =
      cmd_cmp->add_option("--schemes", o.schemes, "comma-separated scheme list");

  auto* cmd_list = app.add_subcommand("list", "list problem presets");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_list->parsed()) return do_list();

    if (cmd_run->parsed()) {
      apply_config(CliOpts{}, o, run_opts);
      return do_run(o);
    }
    if (cmd_conv->parsed()) {
      apply_config(CliOpts{}, o, conv_opts);
      if (o.n_list.empty())
        throw CLI::ValidationError("--n-list", "required for convergence");
      const auto rows = wenoh::convergence(to_run_config(o), parse_n_list(o.n_list));
      print_error_rows(rows, true);
      return 0;
    }
    if (cmd_eff->parsed()) {
      apply_config(CliOpts{}, o, eff_opts);
      if (o.n_list.empty())
        throw CLI::ValidationError("--n-list", "required for efficiency");
      const auto rows =
          wenoh::efficiency(to_run_config(o), parse_schemes(o.schemes), parse_n_list(o.n_list));
      print_error_rows(rows, true);
      return 0;
    }
    if (cmd_cmp->parsed()) {
      apply_config(CliOpts{}, o, cmp_opts);
      const auto path = wenoh::compare(to_run_config(o), parse_schemes(o.schemes));
      std::printf("wrote %s\n", path.c_str());
      return 0;
    }
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
