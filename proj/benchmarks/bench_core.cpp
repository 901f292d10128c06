#include <benchmark/benchmark.h>

#include "hess/gkm.hpp"
#include "hess/hessenberg.hpp"
#include "hess/order.hpp"
#include "hess/patterns.hpp"
#include "hess/tables.hpp"
#include "hess/verify.hpp"

namespace {

void BM_InducedSubgraphDegrees(benchmark::State& state) {
  const auto w = hess::Permutation::parse("2134");
  const auto h = hess::HessenbergFunction::parse("3,3,4,4");
  for (auto _ : state) {
    const auto g = hess::induced_subgraph(w, h);
    benchmark::DoNotOptimize(hess::is_regular(g));
  }
}
BENCHMARK(BM_InducedSubgraphDegrees);

void BM_BruhatUpsets(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    hess::SnTable sn(n);
    hess::BruhatUpsets up(sn);
    benchmark::DoNotOptimize(up.leq(0, sn.w0_rank()));
  }
}
BENCHMARK(BM_BruhatUpsets)->Arg(5)->Arg(6);

void BM_AvoidsAllGeneral10(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto h = hess::HessenbergFunction::permutohedral(n);
  hess::SnTable sn(n);
  std::vector<hess::Permutation> perms;
  for (hess::Rank r = 0; r < sn.size(); ++r) perms.push_back(sn.permutation(r));
  for (auto _ : state) {
    int contained = 0;
    for (const auto& w : perms)
      if (!hess::avoids_all(w, h, hess::PatternSet::general10).avoids) ++contained;
    benchmark::DoNotOptimize(contained);
  }
}
BENCHMARK(BM_AvoidsAllGeneral10)->Arg(5)->Arg(6);

void BM_VerifyMain(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const auto report = hess::verify_theorem("T-main", n);
    benchmark::DoNotOptimize(report.pairs_checked);
  }
}
BENCHMARK(BM_VerifyMain)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_HIntervalGenerator(benchmark::State& state) {
  const auto w = hess::Permutation::parse("213465");
  const auto h = hess::HessenbergFunction::parse("3,3,4,5,6,6");
  const auto w0 = hess::Permutation::longest(6);
  for (auto _ : state) {
    const auto ivl = hess::h_interval(w, w0, h);
    benchmark::DoNotOptimize(ivl.size());
  }
}
BENCHMARK(BM_HIntervalGenerator);

}  // namespace

BENCHMARK_MAIN();
