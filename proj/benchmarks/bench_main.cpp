#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "quiverpath/multisegments.hpp"
#include "quiverpath/partitions.hpp"
#include "quiverpath/paths.hpp"
#include "quiverpath/quiverlab.hpp"
#include "quiverpath/weights.hpp"

namespace {

using namespace quiverpath;

void BM_MayaEval(benchmark::State& state) {
  const ChargedMaya m(YoungDiagram({9, 7, 6, 4, 4, 2, 1}), -3);
  for (auto _ : state) {
    long long sum = 0;
    for (long long j = -20; j <= 20; ++j) sum += m.eval(j);
    benchmark::DoNotOptimize(sum);
  }
}
BENCHMARK(BM_MayaEval);

// Step vectors sized by the range argument; below nine entries the energy
// solver runs the exhaustive strategy, above it the matching strategy.
void BM_StepEnergy(benchmark::State& state) {
  const int size = static_cast<int>(state.range(0));
  std::vector<int> alpha, beta;
  for (int i = 0; i < size; ++i) {
    alpha.push_back((i * 5 + 1) % 3);
    beta.push_back((i * 7 + 2) % 3);
  }
  for (auto _ : state)
    benchmark::DoNotOptimize(h_energy(alpha, beta, 2));
}
BENCHMARK(BM_StepEnergy)->Arg(6)->Arg(8)->Arg(12)->Arg(16);

void BM_CanonicalTuple(benchmark::State& state) {
  const YoungDiagram y({8, 7, 5, 4, 3, 2, 1});
  const SegmentMultiset f =
      segments_of_charged_young(y, 0, SegmentMode::cyclic(2));
  const std::vector<long long> charges = {0};
  for (auto _ : state)
    benchmark::DoNotOptimize(canonical_tuple(f, charges));
}
BENCHMARK(BM_CanonicalTuple);

void BM_EnumeratePaths(benchmark::State& state) {
  const HighestWeight hw(1, {0, 0});
  const long long bound = state.range(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_paths(hw, bound));
}
BENCHMARK(BM_EnumeratePaths)->Arg(2)->Arg(3)->Arg(4);

void BM_HighestLift(benchmark::State& state) {
  const HighestWeight hw(1, {0, 1});
  const std::vector<LevelPath> paths = enumerate_paths(hw, 3);
  for (auto _ : state)
    for (const LevelPath& eta : paths)
      benchmark::DoNotOptimize(highest_lift(eta));
}
BENCHMARK(BM_HighestLift);

SegmentMultiset sample_multiset() {
  SegmentMultiset f(SegmentMode::cyclic(1));
  f.add(Segment(0, 2), 2);
  f.add(Segment(1, 1), 1);
  f.add(Segment(0, 0), 1);
  return f;
}

void BM_ConormalSample(benchmark::State& state) {
  const QuiverRep base = build_rep(sample_multiset());
  std::uint64_t seed = 1;
  for (auto _ : state)
    benchmark::DoNotOptimize(conormal_sample(base, seed++));
}
BENCHMARK(BM_ConormalSample);

void BM_Nilpotency(benchmark::State& state) {
  const QuiverRep base = build_rep(sample_multiset());
  const QuiverRep x = conormal_sample(base, 1);
  const long long length = x.total_dim() + 1;
  for (auto _ : state)
    benchmark::DoNotOptimize(is_nilpotent(x, length));
}
BENCHMARK(BM_Nilpotency);

}  // namespace

BENCHMARK_MAIN();
