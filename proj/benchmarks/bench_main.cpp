#include <benchmark/benchmark.h>

#include "ttpack/canonical.hpp"
#include "ttpack/cover.hpp"
#include "ttpack/dense_factor.hpp"
#include "ttpack/embed.hpp"
#include "ttpack/packing.hpp"
#include "ttpack/ramsey.hpp"
#include "ttpack/rng.hpp"
#include "ttpack/tt_search.hpp"

using namespace ttpack;

static void BM_CanonicalForm(benchmark::State& state) {
  const auto t = random_tournament(static_cast<int>(state.range(0)), 1).small();
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(t));
}
BENCHMARK(BM_CanonicalForm)->DenseRange(5, 11, 2);

static void BM_MaxTransitive(benchmark::State& state) {
  const auto g = random_tournament(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(max_transitive(g));
}
BENCHMARK(BM_MaxTransitive)->RangeMultiplier(2)->Range(8, 64);

static void BM_RawScan(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ramsey::raw_scan(static_cast<int>(state.range(0)), 4));
}
BENCHMARK(BM_RawScan)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);

static void BM_FindTtFree13(benchmark::State& state) {
  ramsey::LocalSearchParams params;
  for (auto _ : state) {
    params.seed = static_cast<std::uint64_t>(state.iterations()) + 1;
    benchmark::DoNotOptimize(ramsey::find_tt_free(5, 13, params));
  }
}
BENCHMARK(BM_FindTtFree13)->Unit(benchmark::kMillisecond);

static void BM_ExactPacking(benchmark::State& state) {
  const auto g = random_tournament(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(packing::max_packing(g, PatternDag::transitive(4), packing::Mode::kExact));
  }
}
BENCHMARK(BM_ExactPacking)->DenseRange(12, 24, 4)->Unit(benchmark::kMillisecond);

static void BM_HasFactorMultipartite(benchmark::State& state) {
  const int t = static_cast<int>(state.range(0));
  std::vector<int> sizes(6, t);
  const auto g = random_orientation(UndirectedGraph::complete_multipartite(sizes), 19);
  for (auto _ : state) benchmark::DoNotOptimize(packing::has_factor(g, PatternDag::transitive(3)));
}
BENCHMARK(BM_HasFactorMultipartite)->DenseRange(2, 10, 4)->Unit(benchmark::kMillisecond);

static void BM_CoverK4(benchmark::State& state) {
  const int t = static_cast<int>(state.range(0));
  std::vector<int> sizes(26, t);
  const PartitionedHost host(random_orientation(UndirectedGraph::complete_multipartite(sizes), 4),
                             contiguous_classes(sizes));
  for (auto _ : state) benchmark::DoNotOptimize(cover::cover_multipartite(host, {.k = 4}));
}
BENCHMARK(BM_CoverK4)->DenseRange(1, 8, 7)->Unit(benchmark::kMillisecond);

static void BM_EmbedTthk(benchmark::State& state) {
  const int w = static_cast<int>(state.range(0));
  const std::vector<int> sizes = {w, w};
  const embed::LayeredInstance inst(random_layered(sizes, 0.75, 5), contiguous_classes(sizes));
  const embed::EmbedParams params{.h = 2, .k = 2, .eta = 1, .mu = Rational(1, 500), .w = w};
  for (auto _ : state) benchmark::DoNotOptimize(embed::embed_tthk(inst, params, embed::Policy::kReport));
}
BENCHMARK(BM_EmbedTthk)->Arg(250)->Arg(1000)->Unit(benchmark::kMillisecond);

static void BM_DenseTt3Factor(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto host = UndirectedGraph::complete(n);
  for (int i = 0; i + 1 < n; i += 2) host.remove_edge(i, i + 1);
  const auto g = random_orientation(host, 6);
  for (auto _ : state) benchmark::DoNotOptimize(dense::h_factor_dense(g, PatternDag::transitive(3)));
}
BENCHMARK(BM_DenseTt3Factor)->Arg(48)->Arg(192)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
