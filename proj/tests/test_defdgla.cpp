#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "defcoh/chevalley_eilenberg.hpp"
#include "defcoh/deformation.hpp"
#include "defcoh/errors.hpp"
#include "defcoh/gauge.hpp"
#include "defcoh/random_instances.hpp"
#include "test_util.hpp"

using namespace defcoh;
using defcoh::test::mat;

namespace {

long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

/// Full-permutation-sum oracle for the insertion product: summing over the
/// whole symmetric group and dividing by the block stabilizer order gives the
/// unshuffle sum, without ever enumerating unshuffles.
Multiderivation product_oracle(const Multiderivation& c1, const Multiderivation& c2) {
  const int k = c1.arity(), l = c2.arity(), n = c1.ambient();
  const int arity = k + l - 1;
  Multiderivation out(n, arity);
  if (arity > n) return out;
  const Rational norm(1, factorial(l) * factorial(k - 1));
  const auto tuples = enumerate_tuples(n, arity);
  for (std::size_t ti = 0; ti < tuples.size(); ++ti) {
    std::vector<int> perm(static_cast<std::size_t>(arity));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Rational> acc(static_cast<std::size_t>(n));
    std::sort(perm.begin(), perm.end());
    do {
      int inv = 0;
      for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
          if (perm[i] > perm[j]) ++inv;
      const int sign = inv % 2 == 0 ? 1 : -1;
      std::vector<int> first, rest;
      for (int i = 0; i < l; ++i) first.push_back(tuples[ti][static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])]);
      for (int i = l; i < arity; ++i) rest.push_back(tuples[ti][static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])]);
      const auto inner = c2.eval_indices(first);
      for (int t = 0; t < n; ++t) {
        if (inner[static_cast<std::size_t>(t)].is_zero()) continue;
        std::vector<int> args{t};
        args.insert(args.end(), rest.begin(), rest.end());
        const auto v = c1.eval_indices(args);
        for (int s = 0; s < n; ++s) acc[static_cast<std::size_t>(s)] += Rational(sign) * inner[static_cast<std::size_t>(t)] * v[static_cast<std::size_t>(s)];
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (int s = 0; s < n; ++s) out.coeff(static_cast<std::int64_t>(ti), s) = norm * acc[static_cast<std::size_t>(s)];
  }
  return out;
}

}  // namespace

TEST_CASE("insertion product: basic identities") {
  // Endomorphism applied to a vector.
  const Multiderivation phi = Multiderivation::from_endomorphism(mat({{0, 1, 0}, {0, 0, 2}, {0, 0, 0}}));
  Multiderivation v(3, 0);
  v.coeffs() = defcoh::test::vec({1, 1, 1});
  const Multiderivation pv = gerstenhaber_product(phi, v);
  CHECK(pv.arity() == 0);
  CHECK(pv.coeffs() == defcoh::test::vec({1, 2, 0}));

  // Abelian bracket composed with itself vanishes.
  const Multiderivation zero2(3, 2);
  CHECK(gerstenhaber_product(zero2, zero2).is_zero());

  // b . b evaluates to the Jacobiator on the non-Jacobi example.
  const Multiderivation b = Multiderivation::from_structure(defcoh::test::non_jacobi_tensor());
  const Multiderivation bb = gerstenhaber_product(b, b);
  CHECK(bb.eval_indices({0, 1, 2}) == defcoh::test::vec({-1, 0, 0}));
  CHECK(bb == product_oracle(b, b));

  CHECK_THROWS_AS(gerstenhaber_product(v, phi), ArityMismatch);
}

TEST_CASE("insertion product agrees with the permutation-sum oracle") {
  Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = static_cast<int>(rng.next_int(2, 4));
    const int k = static_cast<int>(rng.next_int(1, 3));
    const int l = static_cast<int>(rng.next_int(0, 2));
    const Multiderivation c1 = random_multiderivation(rng, n, k, 2);
    const Multiderivation c2 = random_multiderivation(rng, n, l, 2);
    CHECK(gerstenhaber_product(c1, c2) == product_oracle(c1, c2));
  }
}

TEST_CASE("bracket: Maurer-Cartan across the catalog and small identities") {
  for (const auto& name : {"sl2", "so3", "aff1", "heisenberg3", "abelian3"}) {
    const Multiderivation b = Multiderivation::from_structure(catalog_algebra(name).structure());
    CHECK(gerstenhaber_bracket(b, b).is_zero());
  }
  const Multiderivation phi = Multiderivation::from_endomorphism(mat({{2, 0}, {0, 3}}));
  Multiderivation v(2, 0);
  v.coeffs() = defcoh::test::vec({1, 1});
  // [[phi, v]] = phi . v (a vector cannot absorb an argument).
  CHECK(gerstenhaber_bracket(phi, v).coeffs() == defcoh::test::vec({2, 3}));
  // Two vectors bracket to zero by convention.
  CHECK(gerstenhaber_bracket(v, v).is_zero());
}

TEST_CASE("graded antisymmetry, exact, randomized") {
  Rng rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = static_cast<int>(rng.next_int(2, 4));
    const int k = static_cast<int>(rng.next_int(0, 3));
    const int l = static_cast<int>(rng.next_int(0, 3));
    const Multiderivation c1 = random_multiderivation(rng, n, k, 2);
    const Multiderivation c2 = random_multiderivation(rng, n, l, 2);
    Multiderivation rhs = gerstenhaber_bracket(c2, c1);
    if (((k - 1) * (l - 1)) % 2 == 0) rhs = -rhs;
    CHECK(gerstenhaber_bracket(c1, c2) == rhs);
  }
}

TEST_CASE("graded Jacobi, exact, randomized") {
  Rng rng(9);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = static_cast<int>(rng.next_int(2, 3));
    int k = 0, l = 0, m = 0;
    // Degree -2 does not exist; keep at most one arity-0 factor so every
    // intermediate bracket stays inside the complex.
    do {
      k = static_cast<int>(rng.next_int(0, 3));
      l = static_cast<int>(rng.next_int(0, 3));
      m = static_cast<int>(rng.next_int(0, 3));
    } while ((k == 0) + (l == 0) + (m == 0) > 1);
    const Multiderivation a = random_multiderivation(rng, n, k, 2);
    const Multiderivation b = random_multiderivation(rng, n, l, 2);
    const Multiderivation c = random_multiderivation(rng, n, m, 2);
    // [[a,[[b,c]]]] = [[[[a,b]],c]] + (-1)^{(k-1)(l-1)} [[b,[[a,c]]]]
    const Multiderivation lhs = gerstenhaber_bracket(a, gerstenhaber_bracket(b, c));
    Multiderivation rhs = gerstenhaber_bracket(gerstenhaber_bracket(a, b), c);
    Multiderivation tail = gerstenhaber_bracket(b, gerstenhaber_bracket(a, c));
    if (((k - 1) * (l - 1)) % 2 != 0) tail = -tail;
    rhs += tail;
    CHECK(lhs == rhs);
  }
}

TEST_CASE("differential: bracket route vs explicit formula, recorded scalar") {
  // Both routes agree on the nose in every degree; the recorded per-degree
  // scalar is +1 and must not depend on the input.
  Rng rng(13);
  for (const auto& name : {"sl2", "so3", "aff1", "heisenberg3"}) {
    const LieAlgebra g = catalog_algebra(name);
    const DeformationComplex handle(g);
    for (int deg = -1; deg <= g.dim() - 2; ++deg)
      for (int trial = 0; trial < 4; ++trial) {
        const Multiderivation c = random_multiderivation(rng, g.dim(), deg + 1, 3);
        CHECK(handle.differential(c) == handle.differential_explicit(c));
      }
  }
}

TEST_CASE("differential of a section is minus the adjoint operator") {
  // Both computation routes give [[b, alpha]] = -ad_alpha under the displayed
  // product conventions; the kernel (the center) is unaffected by the sign.
  const LieAlgebra sl2 = catalog_algebra("sl2");
  const DeformationComplex handle(sl2);
  for (int i = 0; i < 3; ++i) {
    Multiderivation alpha(3, 0);
    alpha.coeffs()[static_cast<std::size_t>(i)] = Rational(1);
    const Multiderivation expected = -Multiderivation::from_endomorphism(sl2.ad(i));
    CHECK(handle.differential(alpha) == expected);
    CHECK(handle.differential_explicit(alpha) == expected);
  }
}

TEST_CASE("abelian differential vanishes and inner derivations are cocycles") {
  const DeformationComplex abelian(catalog_algebra("abelian3"));
  Rng rng(19);
  for (int deg = -1; deg <= 1; ++deg) CHECK(abelian.differential(random_multiderivation(rng, 3, deg + 1, 3)).is_zero());

  const LieAlgebra sl2 = catalog_algebra("sl2");
  const DeformationComplex handle(sl2);
  const Multiderivation ad_h = Multiderivation::from_endomorphism(sl2.ad(2));
  CHECK(handle.differential(ad_h).is_zero());
  // The cocycle condition is the derivation property on basis pairs.
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const auto lhs = sl2.ad(2) * from_column(sl2.bracket(i, j));
      const auto rhs = from_column(sl2.bracket((sl2.ad(2)).column_vector(static_cast<std::size_t>(i)),
                                               [&] {
                                                 std::vector<Rational> e(3);
                                                 e[static_cast<std::size_t>(j)] = Rational(1);
                                                 return e;
                                               }())) +
                       from_column(sl2.bracket(
                           [&] {
                             std::vector<Rational> e(3);
                             e[static_cast<std::size_t>(i)] = Rational(1);
                             return e;
                           }(),
                           (sl2.ad(2)).column_vector(static_cast<std::size_t>(j))));
      CHECK(lhs == rhs);
    }
}

TEST_CASE("delta squared vanishes and delta derives the bracket") {
  Rng rng(29);
  for (const auto& name : {"sl2", "heisenberg3", "aff1"}) {
    const LieAlgebra g = catalog_algebra(name);
    const DeformationComplex handle(g);
    for (int trial = 0; trial < 10; ++trial) {
      int k = 0, l = 0;
      do {
        k = static_cast<int>(rng.next_int(0, 2));
        l = static_cast<int>(rng.next_int(0, 2));
      } while (k == 0 && l == 0);
      const Multiderivation c1 = random_multiderivation(rng, g.dim(), k, 2);
      const Multiderivation c2 = random_multiderivation(rng, g.dim(), l, 2);
      CHECK(handle.differential(handle.differential(c1)).is_zero());
      // delta [[c1,c2]] = [[delta c1, c2]] + (-1)^{k-1} [[c1, delta c2]]
      const Multiderivation lhs = handle.differential(gerstenhaber_bracket(c1, c2));
      Multiderivation tail = gerstenhaber_bracket(c1, handle.differential(c2));
      if ((k - 1) % 2 != 0) tail = -tail;
      CHECK(lhs == gerstenhaber_bracket(handle.differential(c1), c2) + tail);
    }
  }
}

TEST_CASE("maurer-cartan detection") {
  const DeformationComplex zero3(Multiderivation(3, 2));
  CHECK(zero3.is_maurer_cartan(Multiderivation(3, 2)));
  CHECK(zero3.is_maurer_cartan(Multiderivation::from_structure(catalog_algebra("sl2").structure())));
  CHECK_FALSE(zero3.is_maurer_cartan(Multiderivation::from_structure(defcoh::test::non_jacobi_tensor())));
  // Over the sl2 bracket: zero perturbation stays Maurer-Cartan.
  const DeformationComplex handle(catalog_algebra("sl2"));
  CHECK(handle.is_maurer_cartan(Multiderivation(3, 2)));
}

TEST_CASE("deformation cohomology") {
  // H^-1 is the center: zero for sl2, one-dimensional for heisenberg3.
  CHECK(DeformationComplex(catalog_algebra("sl2")).cohomology(-1).dim == 0);
  CHECK(DeformationComplex(catalog_algebra("heisenberg3")).cohomology(-1).dim == 1);
  CHECK(DeformationComplex(catalog_algebra("aff1")).cohomology(0).dim == 0);

  const DeformationComplex sl2(catalog_algebra("sl2"));
  CHECK(sl2.cohomology(-1).dim == 0);
  CHECK(sl2.cohomology(0).dim == 0);
  CHECK(sl2.cohomology(1).dim == 0);

  const DeformationComplex ab3(catalog_algebra("abelian3"));
  const std::size_t expect[] = {3, 9, 9, 3};
  for (int k = -1; k <= 2; ++k) CHECK(ab3.cohomology(k).dim == expect[k + 1]);

  // Degree shift against the adjoint Chevalley-Eilenberg cohomology.
  for (const auto& name : {"sl2", "heisenberg3", "aff1"}) {
    const LieAlgebra g = catalog_algebra(name);
    const DeformationComplex handle(g);
    const Representation adj = Representation::adjoint(g);
    for (int k = -1; k <= g.dim() - 1; ++k) CHECK(handle.cohomology(k).dim == ce_cohomology(adj, k + 1).dim);
  }
  CHECK_THROWS_AS(sl2.cohomology(5), DegreeOutOfRange);
}

TEST_CASE("pullback") {
  const Multiderivation b = Multiderivation::from_structure(catalog_algebra("sl2").structure());
  CHECK(pullback(RationalMatrix::identity(3), b) == b);

  // Scaling by 2 multiplies an arity-2 tensor by 2: one inverse on the
  // output against two forward factors on the inputs.
  const RationalMatrix two = Rational(2) * RationalMatrix::identity(3);
  CHECK(pullback(two, b) == Rational(2) * b);

  Rng rng(31);
  const DeformationComplex zero3(Multiderivation(3, 2));
  for (int trial = 0; trial < 10; ++trial) {
    const RationalMatrix phi = random_invertible(rng, 3);
    const RationalMatrix psi = random_invertible(rng, 3);
    CHECK(zero3.is_maurer_cartan(pullback(phi, b)));
    // Contravariant composition law.
    const Multiderivation c = random_multiderivation(rng, 3, 2, 2);
    CHECK(pullback(phi * psi, c) == pullback(psi, pullback(phi, c)));
    // Pullback respects the bracket.
    const Multiderivation c2 = random_multiderivation(rng, 3, static_cast<int>(rng.next_int(0, 2)), 2);
    CHECK(pullback(phi, gerstenhaber_bracket(c, c2)) == gerstenhaber_bracket(pullback(phi, c), pullback(phi, c2)));
    // Differential conjugation: phi^*(delta_b c) = delta_{phi^* b}(phi^* c).
    const DeformationComplex src(b);
    const DeformationComplex dst(pullback(phi, b));
    CHECK(pullback(phi, src.differential(c2)) == dst.differential(pullback(phi, c2)));
  }
  CHECK_THROWS_AS(pullback(mat({{1, 2, 0}, {2, 4, 0}, {0, 0, 1}}), b), Singular);
}

TEST_CASE("obstruction class") {
  // Zero cochain has zero obstruction.
  const DeformationComplex zero3(Multiderivation(3, 2));
  for (const auto& coord : zero3.obstruction_class(Multiderivation(3, 2))) CHECK(coord.is_zero());

  // Dimension two: no arity-3 room, the obstruction space is zero.
  const DeformationComplex zero2(Multiderivation(2, 2));
  Rng rng(37);
  CHECK(zero2.obstruction_class(random_multiderivation(rng, 2, 2, 2)).empty());

  // The non-Jacobi tensor over the abelian dim-3 algebra obstructs.
  const auto coords = zero3.obstruction_class(Multiderivation::from_structure(defcoh::test::non_jacobi_tensor()));
  bool nonzero = false;
  for (const auto& e : coords) nonzero = nonzero || !e.is_zero();
  CHECK(nonzero);

  // Non-cocycles are rejected.
  const DeformationComplex sl2(catalog_algebra("sl2"));
  Multiderivation c(3, 2);
  c.coeff(0, 0) = Rational(1);
  REQUIRE_FALSE(sl2.differential(c).is_zero());
  CHECK_THROWS_AS(sl2.obstruction_class(c), NotCocycle);
}

TEST_CASE("gauge flow") {
  const Multiderivation b = Multiderivation::from_structure(catalog_algebra("sl2").structure());

  // Zero generator: the endpoint is the start bracket exactly.
  Multiderivation zero_delta(3, 1);
  const auto frozen = gauge_flow(b, zero_delta, 1.0, 8);
  CHECK(max_abs_difference(frozen.endpoint, DoubleTensor::from(b)) == 0.0);

  // Inner generators are derivations: the flow is stationary and matches the
  // conjugation-pullback oracle to rounding.
  for (const auto& name : {"sl2", "so3", "aff1", "heisenberg3"}) {
    const LieAlgebra g = catalog_algebra(name);
    const Multiderivation bg = Multiderivation::from_structure(g.structure());
    for (int i = 0; i < g.dim(); ++i) {
      const Multiderivation delta = Multiderivation::from_endomorphism(g.ad(i));
      const auto flow = gauge_flow(bg, delta, 1.0, 1000);
      CHECK(max_abs_difference(flow.endpoint, gauge_conjugation_oracle(bg, delta, 1.0)) < 1e-8);
      CHECK(flow.max_mc_residual < 1e-7);
    }
  }

  // Generic generators move the bracket; the oracle solves the flow for any
  // constant generator, and the trajectory stays Maurer-Cartan.
  Rng rng(41);
  for (int trial = 0; trial < 5; ++trial) {
    const Multiderivation delta = random_multiderivation(rng, 3, 1, 1);
    const auto flow = gauge_flow(b, delta, 1.0, 1000);
    CHECK(max_abs_difference(flow.endpoint, gauge_conjugation_oracle(b, delta, 1.0)) < 1e-8);
    CHECK(flow.max_mc_residual < 1e-7);
  }

  // Fourth-order convergence: the error collapses by ~16x per halving.
  {
    RationalMatrix cyc(3, 3);
    cyc.at(0, 1) = Rational(1);
    cyc.at(1, 2) = Rational(1);
    cyc.at(2, 0) = Rational(1);
    const Multiderivation delta = Multiderivation::from_endomorphism(cyc);
    const auto oracle = gauge_conjugation_oracle(b, delta, 1.0);
    const double e10 = max_abs_difference(gauge_flow(b, delta, 1.0, 10).endpoint, oracle);
    const double e20 = max_abs_difference(gauge_flow(b, delta, 1.0, 20).endpoint, oracle);
    CHECK(e10 > 1e-8);  // the loose step count misses the tolerance
    CHECK(e10 / e20 > 10.0);
    CHECK(e10 / e20 < 22.0);
  }

  CHECK_THROWS(gauge_flow(b, zero_delta, 1.0, 0));
}
