#include <benchmark/benchmark.h>

#include <jacquat/identities.hpp>
#include <jacquat/quatseq.hpp>
#include <jacquat/sequences.hpp>

using namespace jacquat;

static void BM_SeqClosed(benchmark::State& state) {
  const long n = state.range(0);
  for (auto _ : state) {
    auto v = seq_closed(SeqKind::J3, n);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_SeqClosed)->Arg(256)->Arg(4096)->Arg(65536);

static void BM_SeqRecurrence(benchmark::State& state) {
  const long n = state.range(0);
  for (auto _ : state) {
    auto v = seq_recurrence(SeqKind::J3, n);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_SeqRecurrence)->Arg(256)->Arg(4096)->Arg(65536);

static void BM_BinetEval(benchmark::State& state) {
  const long n = state.range(0);
  for (auto _ : state) {
    auto v = binet_eval(SeqKind::JL3, n);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_BinetEval)->Arg(256)->Arg(4096);

static void BM_QuaternionProduct(benchmark::State& state) {
  const auto p = AlgebraParams::split();
  const QuaternionR x = jq3(p, state.range(0));
  const QuaternionR y = jlq3(p, state.range(0));
  for (auto _ : state) {
    auto v = x * y;
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_QuaternionProduct)->Arg(16)->Arg(512);

static void BM_CheckIdentity(benchmark::State& state) {
  const auto p = AlgebraParams::real();
  for (auto _ : state) {
    auto outcome = check_identity("eq5", p, CheckDomain{0, state.range(0), {}});
    benchmark::DoNotOptimize(outcome);
  }
}
BENCHMARK(BM_CheckIdentity)->Arg(16)->Arg(64);

static void BM_VerifyAll(benchmark::State& state) {
  VerifyConfig cfg;
  cfg.n_max = state.range(0);
  cfg.m_max = state.range(0) / 2;
  cfg.random_params = 2;
  cfg.threads = 1;
  for (auto _ : state) {
    auto report = verify_all(cfg);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_VerifyAll)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
