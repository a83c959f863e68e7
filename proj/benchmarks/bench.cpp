// Microbenchmarks for the hot paths: eigensolving, root finding through
// line restrictions, majorization machinery, and the verification entry
// points. All inputs are generated outside the timed region from fixed
// seeds so runs are comparable across machines and commits.

#include <benchmark/benchmark.h>

#include "hypermaj/cone.hpp"
#include "hypermaj/lpm.hpp"
#include "hypermaj/majorization.hpp"
#include "hypermaj/polynomial.hpp"
#include "hypermaj/rng.hpp"
#include "hypermaj/spectral.hpp"
#include "hypermaj/verify.hpp"

using namespace hypermaj;

namespace {

Vec random_vec(Rng& rng, std::size_t n) {
  Vec x(n);
  for (double& v : x) v = rng.gauss();
  return x;
}

void bm_eigenvalues_sym(benchmark::State& state) {
  Rng rng(7);
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const SymmetricMatrix a = random_symmetric(rng, n);
  for (auto _ : state) benchmark::DoNotOptimize(eigenvalues_sym(a));
}
BENCHMARK(bm_eigenvalues_sym)->Arg(4)->Arg(8)->Arg(16);

void bm_directional_eigenvalues(benchmark::State& state) {
  Rng rng(11);
  const std::size_t n = 10;
  const HomogeneousPolynomial p = elementary_symmetric(n, 5);
  const Vec a(n, 1.0);
  const Vec x = random_cone_point(p, a, rng);
  for (auto _ : state) benchmark::DoNotOptimize(directional_eigenvalues(p, a, x));
}
BENCHMARK(bm_directional_eigenvalues);

void bm_cone_member(benchmark::State& state) {
  Rng rng(13);
  const std::size_t n = 6;
  const HomogeneousPolynomial p = elementary_symmetric(n, 3);
  const Vec a(n, 1.0);
  const Vec x = random_cone_point(p, a, rng);
  for (auto _ : state)
    benchmark::DoNotOptimize(cone_member(p, a, x, ConeMode::kClosed));
}
BENCHMARK(bm_cone_member);

void bm_majorizes(benchmark::State& state) {
  Rng rng(17);
  const std::size_t n = 64;
  const Vec y = random_vec(rng, n);
  const Vec x = mean_vector(y);
  for (auto _ : state) benchmark::DoNotOptimize(majorizes(x, y));
}
BENCHMARK(bm_majorizes);

void bm_witness(benchmark::State& state) {
  Rng rng(19);
  const std::size_t n = 16;
  const Vec y = random_vec(rng, n);
  const Vec x = random_doubly_stochastic(rng, n, 3).entries() * y;
  for (auto _ : state) benchmark::DoNotOptimize(doubly_stochastic_witness(x, y));
}
BENCHMARK(bm_witness);

void bm_birkhoff(benchmark::State& state) {
  Rng rng(23);
  const DoublyStochasticMatrix d = random_doubly_stochastic(rng, 8, 6);
  for (auto _ : state) benchmark::DoNotOptimize(birkhoff_decompose(d));
}
BENCHMARK(bm_birkhoff);

void bm_lpm_eval(benchmark::State& state) {
  Rng rng(29);
  const LpmPolynomial p = minor_sum_polynomial(8, 3);
  const SymmetricMatrix a = random_symmetric(rng, 8);
  for (auto _ : state) benchmark::DoNotOptimize(lpm_eval(p, a));
}
BENCHMARK(bm_lpm_eval);

void bm_reynolds(benchmark::State& state) {
  Rng rng(31);
  const SymmetricMatrix a = random_symmetric(rng, 8);
  const Partition p = random_partition(rng, 8);
  for (auto _ : state) benchmark::DoNotOptimize(reynolds_sign_average(a, p));
}
BENCHMARK(bm_reynolds);

void bm_block_pinch(benchmark::State& state) {
  Rng rng(31);  // same draws as bm_reynolds for a direct comparison
  const SymmetricMatrix a = random_symmetric(rng, 8);
  const Partition p = random_partition(rng, 8);
  for (auto _ : state) benchmark::DoNotOptimize(block_pinch(a, p));
}
BENCHMARK(bm_block_pinch);

void bm_verify_main(benchmark::State& state) {
  Rng rng(37);
  const std::size_t n = 8;
  const HomogeneousPolynomial p = elementary_symmetric(n, 4);
  const Vec lam = random_cone_point(p, Vec(n, 1.0), rng);
  const SymmetricMatrix a = matrix_with_spectrum(lam, rng.bits());
  for (auto _ : state) benchmark::DoNotOptimize(verify_main(p, a));
}
BENCHMARK(bm_verify_main);

}  // namespace

BENCHMARK_MAIN();
