#include <benchmark/benchmark.h>

#include "critgroup/critical_group.hpp"
#include "critgroup/families.hpp"
#include "critgroup/morphisms.hpp"
#include "critgroup/smith.hpp"
#include "critgroup/theorems.hpp"
#include "critgroup/transforms.hpp"

using namespace critgroup;

static void BM_CriticalGroupLineCompleteGraph(benchmark::State& state) {
  const Graph lg = line_graph(complete_graph(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(critical_group(lg));
  state.SetLabel(std::to_string(lg.vertex_count()) + " vertices");
}
BENCHMARK(BM_CriticalGroupLineCompleteGraph)->DenseRange(5, 9, 2)->Unit(benchmark::kMillisecond);

static void BM_CriticalGroupLineIcosahedron(benchmark::State& state) {
  const Graph lg = line_graph(icosahedron_graph());
  for (auto _ : state) benchmark::DoNotOptimize(critical_group(lg));
}
BENCHMARK(BM_CriticalGroupLineIcosahedron)->Unit(benchmark::kMillisecond);

// Entries beyond 64 bits take the GMP path from the start.
static void BM_SmithBigEntries(benchmark::State& state) {
  IntMatrix a = laplacian(cube_graph(4));
  for (std::size_t i = 0; i < a.rows(); ++i) a(i, i) += BigInt(1) << 70;
  for (auto _ : state) benchmark::DoNotOptimize(smith_diagonal(a));
}
BENCHMARK(BM_SmithBigEntries)->Unit(benchmark::kMillisecond);

static void BM_SmithWithTransforms(benchmark::State& state) {
  const IntMatrix a = reduced_laplacian(line_graph(petersen_graph()));
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(a));
}
BENCHMARK(BM_SmithWithTransforms)->Unit(benchmark::kMillisecond);

static void BM_KernelCokernelF(benchmark::State& state) {
  const Graph g = generate_from_spec(state.range(0) == 0 ? "petersen" : "icosahedron");
  for (auto _ : state) benchmark::DoNotOptimize(kernel_cokernel_report(morphism_f(g)));
}
BENCHMARK(BM_KernelCokernelF)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_SuiteAllTheorems(benchmark::State& state) {
  const std::vector<Graph> graphs = enumerate_connected(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    long pass = 0;
    for (const auto& g : graphs) {
      for (const auto& id : theorem_ids()) {
        for (const auto& v : run_theorem(id, g, "")) pass += v.pass;
      }
    }
    benchmark::DoNotOptimize(pass);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(graphs.size()));
}
BENCHMARK(BM_SuiteAllTheorems)->Arg(5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
