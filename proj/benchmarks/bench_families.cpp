#include <benchmark/benchmark.h>

#include "mcw/deformation.hpp"
#include "mcw/generating.hpp"
#include "mcw/gram.hpp"
#include "mcw/laguerre.hpp"
#include "mcw/measure.hpp"
#include "mcw/quadrature.hpp"

namespace {

using mcw::Rational;

void bm_laguerre(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mcw::laguerre(n, Rational(7, 3)));
  }
}
BENCHMARK(bm_laguerre)->Arg(4)->Arg(8)->Arg(12);

void bm_m_poly(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mcw::m_poly(n, Rational(7, 3), Rational(3)));
  }
}
BENCHMARK(bm_m_poly)->Arg(4)->Arg(8)->Arg(12);

void bm_m_series(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mcw::m_series(Rational(7, 3), Rational(3), order));
  }
}
BENCHMARK(bm_m_series)->Arg(6)->Arg(12);

void bm_inner_product(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const mcw::Poly a = mcw::m_poly(n, Rational(5), Rational(3));
  const mcw::Poly b = mcw::m_poly(n - 1, Rational(5), Rational(3));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mcw::inner_product(a, b, 3, Rational(5)));
  }
}
BENCHMARK(bm_inner_product)->Arg(4)->Arg(8);

void bm_weights(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mcw::weights(n, 2, Rational(7, 3)));
  }
}
BENCHMARK(bm_weights)->Arg(4)->Arg(6)->Arg(8);

void bm_quad_moment(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mcw::quad_moment(n, 2, Rational(7, 3), 1e-10));
  }
}
BENCHMARK(bm_quad_moment)->Arg(0)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
