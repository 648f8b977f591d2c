// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "emfsim/channel.hpp"
#include "emfsim/protocol.hpp"
#include "emfsim/simulation.hpp"

namespace {

using namespace emfsim;

void BM_CandidateReports(benchmark::State& state) {
  const auto profile = builtin_profile(Generation::FiveG);
  const auto layout = build_layout(profile);
  RandomStream rng(3);
  const auto ue = sample_ue(layout[0], rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(candidate_reports(profile, layout, ue));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(layout.size()));
}
BENCHMARK(BM_CandidateReports);

void BM_SearchCycle(benchmark::State& state) {
  const auto profile = builtin_profile(Generation::FiveG);
  const auto layout = build_layout(profile);
  RandomStream rng(4);
  const auto reports = candidate_reports(profile, layout, sample_ue(layout[5], rng));
  const ProtocolConfig cfg{0.05, 100};
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_search_cycle(reports, cfg));
  }
}
BENCHMARK(BM_SearchCycle);

void BM_Drop(benchmark::State& state) {
  RunConfig cfg;
  cfg.ues_per_sector = static_cast<std::size_t>(state.range(0));
  const auto layout = build_layout(cfg.profile);
  std::uint64_t d = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluate_drop(cfg, layout, d++));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(layout.size() * cfg.ues_per_sector));
}
BENCHMARK(BM_Drop)->Arg(1)->Arg(10);

void BM_RingAverage(benchmark::State& state) {
  const auto profile = builtin_profile(Generation::FiveG);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ring_average(profile, TissueParams{}, 55.0, static_cast<std::size_t>(state.range(0)), 1));
  }
}
BENCHMARK(BM_RingAverage)->Arg(1000)->Arg(10000);

}  // namespace

BENCHMARK_MAIN();
