#include <benchmark/benchmark.h>

#include <random>
#include <utility>
#include <vector>

#include "gr/audit.hpp"
#include "gr/isoperimetry.hpp"
#include "gr/ordering.hpp"
#include "gr/rearrange.hpp"

namespace {

// Values k/64 on random interior cells within distance r of the origin.
gr::LatticeFunction random_grid_function(const gr::Graph& g, int r, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(1, 64);
  std::vector<std::pair<gr::Coord, gr::Rational>> values;
  for (int y = -r; y <= r; ++y)
    for (int x = -r; x <= r; ++x)
      if (std::abs(x) + std::abs(y) <= r) values.emplace_back(gr::Coord{x, y}, gr::Rational(num(rng), 64));
  return gr::LatticeFunction::from_coords(g, values);
}

void BM_GridOracle(benchmark::State& state) {
  const auto kind = state.range(0) == 0 ? gr::BoundaryKind::Edge : gr::BoundaryKind::Vertex;
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(gr::oracle_profile(gr::FamilyKey::grid(), kind, n));
}
BENCHMARK(BM_GridOracle)->ArgsProduct({{0, 1}, {4, 5, 6}})->Unit(benchmark::kMillisecond);

void BM_Rearrange(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  const gr::Graph g = gr::Graph::grid_window(2 * r + 4);
  const gr::Ordering spiral = gr::Ordering::spiral(g);
  const gr::LatticeFunction f = random_grid_function(g, r, 7);
  for (auto _ : state) benchmark::DoNotOptimize(gr::rearrange(f, spiral));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(f.support().size()));
}
BENCHMARK(BM_Rearrange)->Arg(3)->Arg(6)->Arg(10);

void BM_GradNorm(benchmark::State& state) {
  const gr::Graph g = gr::Graph::grid_window(12);
  const gr::LatticeFunction f = random_grid_function(g, 6, 11);
  const gr::PNorm p = state.range(0) == 0 ? gr::PNorm::infinity() : gr::PNorm::finite(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gr::grad_lp_norm(f, p));
}
BENCHMARK(BM_GradNorm)->Arg(1)->Arg(2)->Arg(3)->Arg(0);

void BM_SpiralAudit(benchmark::State& state) {
  const gr::Ordering spiral = gr::Ordering::spiral(gr::Graph::grid_window(6));
  const int nmax = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gr::audit(spiral, nmax, gr::AuditSelection{true, true, true}));
}
BENCHMARK(BM_SpiralAudit)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
