#include <benchmark/benchmark.h>

#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "wenoh/problems.hpp"
#include "wenoh/reconstruct.hpp"
#include "wenoh/spatial.hpp"

using namespace wenoh;

namespace {

// Windows drawn from a smooth profile so the tension selector exercises its
// exponential branches, not just the polynomial fallback.
// Spacing wide enough that the sixth difference clears the selector's zero
// floor, so the H rows pay for the exponential branch, not the fallback.
std::vector<std::array<double, 6>> smooth_windows(std::size_t count, double dx) {
  std::vector<std::array<double, 6>> ws(count);
  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> x0(0.0, 6.28);
  for (auto& w : ws) {
    const double x = x0(rng);
    for (int l = 0; l < 6; ++l) w[static_cast<std::size_t>(l)] = std::sin(x + l * dx) + 2.0;
  }
  return ws;
}

void bench_reconstruct(benchmark::State& state, Scheme scheme) {
  const auto ws = smooth_windows(1024, 0.1);
  ReconParams p;
  p.scheme = scheme;
  p.set_dx(0.1);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(reconstruct_interface(ws[i].data(), p));
    i = (i + 1) & 1023;
  }
}

}  // namespace

static void BM_ReconstructJS(benchmark::State& s) { bench_reconstruct(s, Scheme::JS); }
static void BM_ReconstructM(benchmark::State& s) { bench_reconstruct(s, Scheme::M); }
static void BM_ReconstructZ(benchmark::State& s) { bench_reconstruct(s, Scheme::Z); }
static void BM_ReconstructH(benchmark::State& s) { bench_reconstruct(s, Scheme::H); }
BENCHMARK(BM_ReconstructJS);
BENCHMARK(BM_ReconstructM);
BENCHMARK(BM_ReconstructZ);
BENCHMARK(BM_ReconstructH);

static void BM_InterfaceCoeffs(benchmark::State& state) {
  double s2 = 1e-4;
  for (auto _ : state) {
    benchmark::DoNotOptimize(interface_coeffs(BasisKind::HyperbolicC1, s2));
    s2 = s2 < 0.5 ? s2 * 1.0001 : 1e-4;
  }
}
BENCHMARK(BM_InterfaceCoeffs);

static void BM_SpatialEuler1D(benchmark::State& state) {
  const auto& spec = find_problem("smooth-euler-1d");
  const auto g = problem_grid(spec, static_cast<int>(state.range(0)));
  auto q = init_problem(spec, g);
  fill_ghosts(q, g, spec.bc, 0.0);
  ReconParams p;
  p.scheme = Scheme::H;
  p.theta = spec.theta;
  p.set_dx(g.dx);
  auto rhs = FieldArray::like(q);
  for (auto _ : state) {
    spatial_operator(rhs, q, g, spec.model, p);
    benchmark::DoNotOptimize(rhs.data.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SpatialEuler1D)->Arg(200)->Arg(800);

BENCHMARK_MAIN();
