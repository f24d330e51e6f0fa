// CRF inference and training-step costs over sequence length and label count.

#include <benchmark/benchmark.h>

#include <utility>
#include <vector>

#include "charcrf/crf.hpp"
#include "charcrf/rng.hpp"
#include "charcrf/text.hpp"

using namespace charcrf;

namespace {

struct Instance {
  crf::Params params;
  crf::EmissionScores emissions;
  LabelSequence labels;
};

Instance make_instance(int num_labels, int T) {
  Rng rng(7);
  Instance inst;
  inst.params = crf::Params(num_labels, 8, rng);
  inst.emissions = nn::Matrix(T, num_labels);
  for (int t = 0; t < T; ++t) {
    for (int l = 0; l < num_labels; ++l) inst.emissions(t, l) = rng.uniform(-2, 2);
  }
  inst.labels.resize(T);
  for (int t = 0; t < T; ++t) inst.labels[t] = static_cast<int>(rng.below(num_labels));
  return inst;
}

void BM_LogPartition(benchmark::State& state) {
  const Instance inst =
      make_instance(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(crf::log_partition(inst.emissions, inst.params));
  }
}

void BM_Nll(benchmark::State& state) {
  const Instance inst =
      make_instance(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(crf::nll(inst.emissions, inst.params, inst.labels));
  }
}

void BM_Viterbi(benchmark::State& state) {
  const Instance inst =
      make_instance(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(crf::viterbi(inst.emissions, inst.params));
  }
}

void BM_MaskedViterbi(benchmark::State& state) {
  const TagSet tags({"LOC", "ORG", "PER"});
  const crf::TransitionMask mask = crf::build_iobes_mask(tags);
  const Instance inst = make_instance(tags.label_count(), static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(crf::viterbi(inst.emissions, inst.params, &mask));
  }
}

void label_length_args(benchmark::internal::Benchmark* b) {
  for (int labels : {5, 13, 29}) {
    for (int T : {20, 80, 320}) b->Args({labels, T});
  }
}

}  // namespace

BENCHMARK(BM_LogPartition)->Apply(label_length_args);
BENCHMARK(BM_Nll)->Apply(label_length_args);
BENCHMARK(BM_Viterbi)->Apply(label_length_args);
BENCHMARK(BM_MaskedViterbi)->Arg(20)->Arg(80)->Arg(320);

BENCHMARK_MAIN();
