#include <benchmark/benchmark.h>

#include "defcoh/chevalley_eilenberg.hpp"
#include "defcoh/deformation.hpp"
#include "defcoh/gauge.hpp"
#include "defcoh/random_instances.hpp"
#include "defcoh/two_vector.hpp"
#include "defcoh/vb_algebra.hpp"

namespace {

using namespace defcoh;

VBAlgebra sl2_on_plane() {
  return VBAlgebra(Representation(catalog_algebra("sl2"),
                                  {RationalMatrix{{Rational(0), Rational(1)}, {Rational(0), Rational(0)}},
                                   RationalMatrix{{Rational(0), Rational(0)}, {Rational(1), Rational(0)}},
                                   RationalMatrix{{Rational(1), Rational(0)}, {Rational(0), Rational(-1)}}}));
}

void BM_rref(benchmark::State& state) {
  Rng rng(1);
  const int n = static_cast<int>(state.range(0));
  RationalMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rng.next_rational(9);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_rref)->Arg(16)->Arg(48);

void BM_gerstenhaber_bracket(benchmark::State& state) {
  Rng rng(2);
  const int n = static_cast<int>(state.range(0));
  const Multiderivation a = random_multiderivation(rng, n, 2, 3);
  const Multiderivation b = random_multiderivation(rng, n, 2, 3);
  for (auto _ : state) benchmark::DoNotOptimize(gerstenhaber_bracket(a, b));
}
BENCHMARK(BM_gerstenhaber_bracket)->Arg(4)->Arg(6);

void BM_def_cohomology_sl2(benchmark::State& state) {
  const LieAlgebra sl2 = catalog_algebra("sl2");
  for (auto _ : state) {
    const DeformationComplex handle(sl2);
    benchmark::DoNotOptimize(handle.cohomology(1).dim);
  }
}
BENCHMARK(BM_def_cohomology_sl2);

void BM_cone_cohomology(benchmark::State& state) {
  const VBAlgebra vba = sl2_on_plane();
  for (auto _ : state) {
    const FiniteComplex cone = cone_complex(vba);
    std::size_t total = 0;
    for (int k = -1; k <= 1; ++k) total += cohomology(cone, k).dim;
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_cone_cohomology);

void BM_groupoid_full_complex(benchmark::State& state) {
  const LAVectorSpace lav = random_la_vector_space(7, 3);
  for (auto _ : state) benchmark::DoNotOptimize(full_complex(lav, 2).dim(2));
}
BENCHMARK(BM_groupoid_full_complex);

void BM_gauge_flow(benchmark::State& state) {
  const LieAlgebra sl2 = catalog_algebra("sl2");
  const Multiderivation b = Multiderivation::from_structure(sl2.structure());
  const Multiderivation delta = Multiderivation::from_endomorphism(sl2.ad(2));
  for (auto _ : state) benchmark::DoNotOptimize(gauge_flow(b, delta, 1.0, static_cast<int>(state.range(0))).max_mc_residual);
}
BENCHMARK(BM_gauge_flow)->Arg(100)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
