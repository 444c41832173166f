// Serial reference vs OpenMP kernel, for each parallel hot spot.

#include <benchmark/benchmark.h>

#include "rcpower/constructions.hpp"
#include "rcpower/power_graph.hpp"
#include "rcpower/verifier.hpp"

using namespace rcpower;

namespace {

const char* const kGroups[] = {"Q:8 x Z:15", "SD:27,7,2", "Z:2 x Z:4 x Z:3 x Z:5 x Z:7"};

const Group& group_at(std::size_t i) {
  static const std::vector<Group> groups = [] {
    std::vector<Group> v;
    for (const char* s : kGroups) v.push_back(build_group(parse_group_spec(s)));
    return v;
  }();
  return groups[i];
}

template <Graph (*Build)(const Group&)>
void BM_PowerGraph(benchmark::State& state) {
  const Group& g = group_at(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Build(g).edge_count());
  state.SetLabel(g.name());
}

template <RainbowCheck (*Check)(const Graph&, const EdgeColoring&)>
void BM_RainbowCheck(benchmark::State& state) {
  const Group& g = group_at(static_cast<std::size_t>(state.range(0)));
  const Graph graph = build_power_graph(g);
  const EdgeColoring c = coloring_max_m3(g, graph);
  for (auto _ : state) benchmark::DoNotOptimize(Check(graph, c).certificate.paths.size());
  state.SetLabel(g.name() + ", " + std::to_string(graph.edge_count()) + " edges");
}

template <VerificationReport (*Verify)(const std::vector<CatalogEntry>&, const Budget&,
                                       std::optional<std::size_t>)>
void BM_VerifyCatalog(benchmark::State& state) {
  const auto entries = default_catalog();
  for (auto _ : state) benchmark::DoNotOptimize(Verify(entries, Budget{}, std::nullopt).entries);
}

}  // namespace

BENCHMARK(BM_PowerGraph<build_power_graph_serial>)->Name("power_graph/serial")->DenseRange(0, 2);
BENCHMARK(BM_PowerGraph<build_power_graph>)->Name("power_graph/parallel")->DenseRange(0, 2);
BENCHMARK(BM_RainbowCheck<is_rainbow_connected_serial>)
    ->Name("rainbow_check/serial")
    ->DenseRange(0, 2)
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RainbowCheck<is_rainbow_connected>)
    ->Name("rainbow_check/parallel")
    ->DenseRange(0, 2)
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyCatalog<verify_catalog_serial>)
    ->Name("verify_catalog/serial")
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyCatalog<verify_catalog>)
    ->Name("verify_catalog/parallel")
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
