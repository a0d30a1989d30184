#include <benchmark/benchmark.h>

#include <random>

#include "smc/harness.hpp"
#include "smc/io.hpp"

using namespace smc;

namespace {

const Field F(101);

Matrix random_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long long> d(0, 100);
  Matrix m(n, n, F);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m.set(r, c, d(rng));
  return m;
}

SampleParams params(int n) {
  SampleParams p;
  p.truncation = n;
  return p;
}

}  // namespace

static void BM_Rank(benchmark::State& state) {
  const Matrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Rank)->RangeMultiplier(2)->Range(8, 128)->Complexity(benchmark::oNCubed);

static void BM_HomologySing(benchmark::State& state) {
  const SimplicialObject s = sing(direct_sum(disk(F, 1), sphere(F, 0)), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_homotopically_constant(s));
}
BENCHMARK(BM_HomologySing)->DenseRange(1, 3);

static void BM_Classify(benchmark::State& state) {
  const SimplicialMap f = sample(SampleKind::random_map, params(static_cast<int>(state.range(0))), 5);
  for (auto _ : state) benchmark::DoNotOptimize(classify(f));
}
BENCHMARK(BM_Classify)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_TotalComplex(benchmark::State& state) {
  const auto mode = static_cast<TotalMode>(state.range(1));
  const SimplicialObject x = sample(SampleKind::random_sobj, params(static_cast<int>(state.range(0))), 9).source();
  for (auto _ : state) benchmark::DoNotOptimize(total_complex(x, mode));
  state.SetLabel(to_string(mode));
}
BENCHMARK(BM_TotalComplex)->ArgsProduct({{2, 3}, {0, 1, 2}});

static void BM_Realize(benchmark::State& state) {
  const SimplicialObject y =
      sample(SampleKind::skeletal_sobj, params(static_cast<int>(state.range(0))), 4).source();
  for (auto _ : state) benchmark::DoNotOptimize(realize(y));
}
BENCHMARK(BM_Realize)->DenseRange(1, 3);

static void BM_PushoutProduct(benchmark::State& state) {
  const io::Sm7Pair pair = io::reedy_sm7_pair(2, F);
  const auto injections = builtin_injections(2, 2);
  const SSetMap& i = injections.at(static_cast<std::size_t>(state.range(0))).map;
  for (auto _ : state) benchmark::DoNotOptimize(pushout_product(pair.f, i));
  state.SetLabel(injections.at(static_cast<std::size_t>(state.range(0))).name);
}
BENCHMARK(BM_PushoutProduct)->DenseRange(0, 12, 4);

static void BM_LiftsAgainst(benchmark::State& state) {
  const SimplicialMap p = sample(SampleKind::equifibered_fibration, params(2), 3);
  const GeneratorFamily j = generators(Family::Jsecond, Window{0, 1, 1, 2}, 2, F);
  for (auto _ : state) {
    bool all = true;
    for (const auto& g : j.members) all = all && lifts_against(g.map, p);
    benchmark::DoNotOptimize(all);
  }
  state.counters["generators"] = static_cast<double>(j.members.size());
}
BENCHMARK(BM_LiftsAgainst)->Unit(benchmark::kMillisecond);

static void BM_RoundTrip(benchmark::State& state) {
  const SimplicialMap f = sample(SampleKind::random_map, params(2), 2);
  for (auto _ : state) {
    const std::string text = io::dump(io::to_json(f), false);
    benchmark::DoNotOptimize(io::parse(text));
    state.SetBytesProcessed(state.bytes_processed() + static_cast<std::int64_t>(text.size()));
  }
}
BENCHMARK(BM_RoundTrip);

BENCHMARK_MAIN();
