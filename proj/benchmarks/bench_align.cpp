// Match-finding and selection throughput as text length grows at a fixed
// dictionary, the regime the near-linear selection scaling targets.

#include <benchmark/benchmark.h>

#include <string>

#include "charcrf/align.hpp"
#include "charcrf/rng.hpp"

using namespace charcrf;

namespace {

align::IDFDictionary make_dict(int words, Rng& rng) {
  align::IDFDictionary dict;
  for (int w = 0; w < words; ++w) {
    std::string word;
    const int len = 2 + static_cast<int>(rng.below(4));
    for (int c = 0; c < len; ++c) word.push_back("abc"[rng.below(3)]);
    dict.set(word, 1.0 + rng.uniform());
  }
  return dict;
}

CharSequence make_text(int len, Rng& rng) {
  const std::u32string alphabet = U"abc abc";
  CharSequence text;
  text.reserve(len);
  for (int i = 0; i < len; ++i) text += alphabet[rng.below(alphabet.size())];
  return text;
}

void BM_FindMatches(benchmark::State& state) {
  Rng rng(1);
  const align::IDFDictionary dict = make_dict(50, rng);
  const align::MatchAutomaton automaton(dict);
  const CharSequence text = make_text(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(automaton.find_matches(text));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SelectMatches(benchmark::State& state) {
  Rng rng(1);
  const align::IDFDictionary dict = make_dict(50, rng);
  const align::MatchAutomaton automaton(dict);
  const CharSequence text = make_text(static_cast<int>(state.range(0)), rng);
  const auto matches = automaton.find_matches(text);
  for (auto _ : state) {
    benchmark::DoNotOptimize(align::select_matches(matches, text));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_FindMatches)->Arg(10000)->Arg(20000)->Arg(40000)->Arg(80000);
BENCHMARK(BM_SelectMatches)->Arg(10000)->Arg(20000)->Arg(40000)->Arg(80000);

BENCHMARK_MAIN();
