#include <benchmark/benchmark.h>

#include "rsg/classification.hpp"
#include "rsg/congruence.hpp"
#include "rsg/construct.hpp"
#include "rsg/corpus.hpp"
#include "rsg/cset.hpp"
#include "rsg/factorize.hpp"
#include "rsg/isomorphism.hpp"
#include "rsg/munn.hpp"

namespace {

  rsg::RSemigroup const& w_swap() {
    static rsg::RSemigroup const w = rsg::named("W(C2,V3)^1");
    return w;
  }

  void BM_classify(benchmark::State& state) {
    for (auto _ : state) {
      benchmark::DoNotOptimize(rsg::classify(w_swap()));
    }
  }
  BENCHMARK(BM_classify);

  void BM_mu(benchmark::State& state) {
    for (auto _ : state) {
      benchmark::DoNotOptimize(rsg::mu(w_swap()));
    }
  }
  BENCHMARK(BM_mu);

  void BM_c_monoid(benchmark::State& state) {
    for (auto _ : state) {
      benchmark::DoNotOptimize(rsg::c_monoid(w_swap()));
    }
  }
  BENCHMARK(BM_c_monoid);

  void BM_munn_semigroup(benchmark::State& state) {
    auto const ys = rsg::semilattices_of_order(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
      for (auto const& y : ys) {
        benchmark::DoNotOptimize(rsg::ideal_iso_semigroup(y));
      }
    }
  }
  BENCHMARK(BM_munn_semigroup)->DenseRange(2, 5);

  void BM_reconstruct(benchmark::State& state) {
    rsg::RSemigroup const w = rsg::named("W(C2,V3)");
    for (auto _ : state) {
      benchmark::DoNotOptimize(rsg::reconstruct(w));
    }
  }
  BENCHMARK(BM_reconstruct);

  void BM_isomorphism(benchmark::State& state) {
    rsg::RSemigroup const a = rsg::named("W(C2,V3)");
    rsg::RSemigroup const b = rsg::semidirect_product(rsg::swap_action());
    for (auto _ : state) {
      benchmark::DoNotOptimize(rsg::find_isomorphism(a, b));
    }
  }
  BENCHMARK(BM_isomorphism);

  void BM_enumerate_rsemigroups(benchmark::State& state) {
    for (auto _ : state) {
      benchmark::DoNotOptimize(rsg::rsemigroups_of_order(3));
    }
  }
  BENCHMARK(BM_enumerate_rsemigroups)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
