#include <cmath>
#include <random>

#include <benchmark/benchmark.h>

#include "amspace/amgeom.hpp"
#include "amspace/matalg.hpp"
#include "amspace/pointgeom.hpp"
#include "amspace/quotient.hpp"

using namespace amspace;

static void BM_mat_exp(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  std::mt19937_64 rng(1);
  std::normal_distribution<double> d;
  Mat a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = d(rng);
  for (auto _ : st) benchmark::DoNotOptimize(mat_exp(a));
}
BENCHMARK(BM_mat_exp)->Arg(2)->Arg(4)->Arg(8);

static void BM_spectral_apply(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  const Grid t = Grid::torus(n, n);
  const CField f = sample(t, [](double x, double y) { return cplx(std::cos(x), std::sin(2 * y)); });
  for (auto _ : st)
    benchmark::DoNotOptimize(spectral_apply(f, [](int k, int l) { return cplx(-(k * k + l * l), 0); }));
}
BENCHMARK(BM_spectral_apply)->Arg(64)->Arg(128)->Arg(256);

static void BM_sectional_point(benchmark::State& st) {
  const SpdMatrix id(Mat::Identity(3, 3));
  Mat a = Mat::Zero(3, 3), b = Mat::Zero(3, 3);
  a(0, 1) = a(1, 0) = 1;
  b(0, 0) = 1;
  b(2, 2) = -1;
  for (auto _ : st) benchmark::DoNotOptimize(sectional_curvature_point(WeakStructure::dewitt(0.7), id, a, b));
}
BENCHMARK(BM_sectional_point);

static void BM_am_sectional(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  const Grid t = Grid::torus(n, n);
  const AssocPair base = base_pair(t);
  const MField a = alpha_to_form(sample(t, [](double x, double) { return cplx(std::cos(x), 0); }));
  const MField b = alpha_to_form(sample(t, [](double, double y) { return cplx(0, std::cos(2 * y)); }));
  for (auto _ : st) benchmark::DoNotOptimize(am_sectional(a, b, base));
}
BENCHMARK(BM_am_sectional)->Arg(64)->Arg(128);

static void BM_quotient_sectional(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  const Grid t = Grid::torus(n, n);
  const MField a = alpha_to_form(sample(t, [](double x, double) { return cplx(std::cos(x), 0); }));
  const MField b = alpha_to_form(sample(t, [](double, double y) { return cplx(std::cos(2 * y), 0); }));
  for (auto _ : st) benchmark::DoNotOptimize(quotient_sectional(a, b));
}
BENCHMARK(BM_quotient_sectional)->Arg(64)->Arg(128);

BENCHMARK_MAIN();
