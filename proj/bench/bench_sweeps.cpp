// Serial reference sweep against the OpenMP sweep on the same checks.

#include <benchmark/benchmark.h>
#include <omp.h>

#include "lrc/verify.hpp"

namespace {

void run(benchmark::State& state, const char* check, lrc::verify::Exec exec) {
  lrc::verify::Options opt;
  opt.max_size = static_cast<int>(state.range(0));
  opt.exec = exec;
  std::size_t instances = 0;
  for (auto _ : state) {
    const auto r = lrc::verify::run_check(check, opt);
    if (!r.passed()) state.SkipWithError("check failed");
    instances = r.instances;
  }
  state.counters["instances"] = static_cast<double>(instances);
  state.counters["threads"] = exec == lrc::verify::Exec::parallel ? omp_get_max_threads() : 1;
}

#define SWEEP_PAIR(name, check, lo, hi)                                                                      \
  void BM_##name##_serial(benchmark::State& s) { run(s, check, lrc::verify::Exec::serial); }                 \
  void BM_##name##_parallel(benchmark::State& s) { run(s, check, lrc::verify::Exec::parallel); }             \
  BENCHMARK(BM_##name##_serial)->DenseRange(lo, hi)->Unit(benchmark::kMillisecond);                           \
  BENCHMARK(BM_##name##_parallel)->DenseRange(lo, hi)->Unit(benchmark::kMillisecond);

SWEEP_PAIR(involution, "involution", 6, 8)
SWEEP_PAIR(coincidence, "coincidence", 6, 8)
SWEEP_PAIR(recursion, "recursion", 6, 8)
SWEEP_PAIR(order_words, "order-words", 5, 6)
SWEEP_PAIR(skew_rsk, "skew-rsk", 4, 5)
SWEEP_PAIR(confluence, "confluence", 5, 6)

}  // namespace

BENCHMARK_MAIN();
