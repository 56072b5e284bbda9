#include <benchmark/benchmark.h>

#include <string>

#include "isg/parallel.hpp"
#include "isg/sampling.hpp"

namespace {

using namespace isg;

const SeparatedGraph& rose2f() {
  static const SeparatedGraph g = load_graph(std::string(ISG_DATA_DIR) + "/rose2f.sg");
  return g;
}

std::vector<std::vector<Token>> words(std::size_t n, std::size_t len) {
  Rng rng(97);
  std::vector<std::vector<Token>> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(random_walk(rose2f(), rng, len));
  return out;
}

void BM_NormalFormsSerial(benchmark::State& state) {
  const auto ws = words(static_cast<std::size_t>(state.range(0)), 12);
  for (auto _ : state) benchmark::DoNotOptimize(normal_forms_serial(rose2f(), ws, Level::Separated));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_NormalFormsParallel(benchmark::State& state) {
  const auto ws = words(static_cast<std::size_t>(state.range(0)), 12);
  for (auto _ : state) benchmark::DoNotOptimize(normal_forms_parallel(rose2f(), ws, Level::Separated));
  state.SetItemsProcessed(state.iterations() * state.range(0));
  state.counters["threads"] = parallel_threads();
}

void BM_CrosscheckSerial(benchmark::State& state) {
  const auto ws = words(static_cast<std::size_t>(state.range(0)), 12);
  for (auto _ : state) benchmark::DoNotOptimize(crosscheck_serial(rose2f(), ws));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_CrosscheckParallel(benchmark::State& state) {
  const auto ws = words(static_cast<std::size_t>(state.range(0)), 12);
  for (auto _ : state) benchmark::DoNotOptimize(crosscheck_parallel(rose2f(), ws));
  state.SetItemsProcessed(state.iterations() * state.range(0));
  state.counters["threads"] = parallel_threads();
}

}  // namespace

BENCHMARK(BM_NormalFormsSerial)->Arg(1000)->Arg(10000);
BENCHMARK(BM_NormalFormsParallel)->Arg(1000)->Arg(10000);
BENCHMARK(BM_CrosscheckSerial)->Arg(1000)->Arg(10000);
BENCHMARK(BM_CrosscheckParallel)->Arg(1000)->Arg(10000);

BENCHMARK_MAIN();
