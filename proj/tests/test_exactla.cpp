#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "defcoh/complex.hpp"
#include "defcoh/errors.hpp"
#include "defcoh/matrix.hpp"
#include "defcoh/random_instances.hpp"
#include "defcoh/tuples.hpp"
#include "test_util.hpp"

using namespace defcoh;
using defcoh::test::mat;

TEST_CASE("rational canonical form and parsing") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(0, 7).str() == "0");
  CHECK(Rational(1, 3).str() == "1/3");
  CHECK(Rational(-6, 3).str() == "-2");
  CHECK(Rational::parse("22/7") == Rational(22, 7));
  CHECK(Rational::parse("-5") == Rational(-5));
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rational::parse("x"), ParseError);
  CHECK_THROWS_AS(Rational(1) / Rational(0), Singular);
  CHECK(Rational(1, 3) + Rational(2, 5) == Rational(11, 15));
}

TEST_CASE("rref identity and rank examples") {
  const auto id = rref(RationalMatrix::identity(2));
  CHECK(id.reduced == RationalMatrix::identity(2));
  CHECK(id.pivot_cols == std::vector<std::size_t>{0, 1});
  CHECK(id.rank == 2);

  const auto r1 = rref(mat({{1, 2}, {2, 4}}));
  CHECK(r1.rank == 1);
  CHECK(r1.pivot_cols == std::vector<std::size_t>{0});

  CHECK(rref(mat({{0, 1}, {1, 0}, {1, 1}})).rank == 2);

  const auto degenerate = rref(RationalMatrix::zero(0, 3));
  CHECK(degenerate.rank == 0);
  CHECK(degenerate.reduced.cols() == 3);
}

TEST_CASE("kernel basis") {
  CHECK(kernel_basis(RationalMatrix::zero(2, 3)) == RationalMatrix::identity(3));
  CHECK(kernel_basis(RationalMatrix::identity(4)).cols() == 0);
  const auto k = kernel_basis(mat({{1, 1}}));
  REQUIRE(k.cols() == 1);
  CHECK(k.at(0, 0) == Rational(-1));
  CHECK(k.at(1, 0) == Rational(1));
}

TEST_CASE("rank-nullity on random matrices") {
  Rng rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const int r = static_cast<int>(rng.next_int(0, 5)), c = static_cast<int>(rng.next_int(0, 5));
    RationalMatrix m(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rng.next_rational(3);
    CHECK(rank(m) + kernel_basis(m).cols() == m.cols());
    CHECK((m * kernel_basis(m)).is_zero());
  }
}

TEST_CASE("column space basis is canonical for the subspace") {
  const auto b1 = column_space_basis(mat({{1, 2}, {2, 4}}));
  REQUIRE(b1.cols() == 1);
  CHECK(b1.at(1, 0) / b1.at(0, 0) == Rational(2));
  // Same span, different generators, same canonical basis.
  const auto b2 = column_space_basis(mat({{3}, {6}}));
  CHECK(b1 == b2);
}

TEST_CASE("solve and inverse") {
  const auto x = solve(mat({{1, 1}, {0, 1}}), mat({{3}, {1}}));
  REQUIRE(x.has_value());
  CHECK(x->at(0, 0) == Rational(2));
  CHECK(x->at(1, 0) == Rational(1));
  CHECK_FALSE(solve(mat({{1, 1}, {1, 1}}), mat({{0}, {1}})).has_value());
  CHECK(inverse(mat({{1, 2}, {3, 4}})) * mat({{1, 2}, {3, 4}}) == RationalMatrix::identity(2));
  CHECK_THROWS_AS(inverse(mat({{1, 2}, {2, 4}})), Singular);
}

TEST_CASE("tuple enumeration is lexicographic") {
  const auto t = enumerate_tuples(3, 2);
  REQUIRE(t.size() == 3);
  CHECK(t[0] == IndexTuple{0, 1});
  CHECK(t[1] == IndexTuple{0, 2});
  CHECK(t[2] == IndexTuple{1, 2});
  for (std::size_t i = 0; i < t.size(); ++i) CHECK(tuple_rank(t[i], 3) == static_cast<std::int64_t>(i));
  CHECK(enumerate_tuples(5, 0).size() == 1);
  CHECK_THROWS_AS(enumerate_tuples(3, 4), ArityOutOfRange);
  CHECK_THROWS_AS(enumerate_tuples(3, -1), ArityOutOfRange);
}

namespace {

/// Independent unshuffle oracle: filter all permutations by monotone blocks.
std::vector<std::pair<std::vector<int>, int>> unshuffle_oracle(int l, int m) {
  std::vector<int> perm(static_cast<std::size_t>(l + m));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::pair<std::vector<int>, int>> out;
  do {
    bool ok = true;
    for (int i = 1; i < l; ++i)
      if (perm[static_cast<std::size_t>(i - 1)] > perm[static_cast<std::size_t>(i)]) ok = false;
    for (int i = l + 1; i < l + m; ++i)
      if (perm[static_cast<std::size_t>(i - 1)] > perm[static_cast<std::size_t>(i)]) ok = false;
    if (!ok) continue;
    int inv = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j)
        if (perm[i] > perm[j]) ++inv;
    out.emplace_back(perm, inv % 2 == 0 ? 1 : -1);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

TEST_CASE("unshuffles: small cases and completeness") {
  const auto u11 = unshuffles(1, 1);
  REQUIRE(u11.size() == 2);
  CHECK(u11[0].perm == std::vector<int>{0, 1});
  CHECK(u11[0].sign == 1);
  CHECK(u11[1].perm == std::vector<int>{1, 0});
  CHECK(u11[1].sign == -1);

  const auto u21 = unshuffles(2, 1);
  REQUIRE(u21.size() == 3);
  CHECK(u21[0].sign == 1);
  CHECK(u21[1].sign == -1);
  CHECK(u21[2].sign == 1);

  for (int l = 0; l <= 3; ++l)
    for (int m = 0; m <= 3; ++m) {
      const auto ours = unshuffles(l, m);
      auto oracle = unshuffle_oracle(l, m);
      REQUIRE(ours.size() == oracle.size());
      std::sort(oracle.begin(), oracle.end());
      for (const auto& u : ours) {
        const auto it = std::lower_bound(oracle.begin(), oracle.end(), std::make_pair(u.perm, -2));
        REQUIRE(it != oracle.end());
        CHECK(it->first == u.perm);
        CHECK(it->second == u.sign);
      }
    }
}

TEST_CASE("sort_skew") {
  const auto s = sort_skew({2, 0, 1});
  REQUIRE(s.has_value());
  CHECK(s->first == IndexTuple{0, 1, 2});
  CHECK(s->second == 1);
  const auto t = sort_skew({1, 0});
  CHECK(t->second == -1);
  CHECK_FALSE(sort_skew({1, 1, 2}).has_value());
}

TEST_CASE("finite complex validates shapes and d.d = 0") {
  CHECK_THROWS(FiniteComplex(0, {1, 1, 1}, {mat({{1}}), mat({{1}})}));
  const FiniteComplex ok(0, {1, 1, 1}, {mat({{1}}), mat({{0}})});
  CHECK(ok.dim(0) == 1);
  CHECK(ok.dim(5) == 0);
  CHECK(ok.differential_out(2).rows() == 0);
}

TEST_CASE("cohomology of zero differentials is the term dimensions") {
  const std::vector<std::size_t> dims{3, 9, 9, 3};
  std::vector<RationalMatrix> diffs;
  for (std::size_t i = 0; i + 1 < dims.size(); ++i) diffs.push_back(RationalMatrix::zero(dims[i + 1], dims[i]));
  const FiniteComplex cx(-1, dims, diffs);
  for (int k = -1; k <= 2; ++k) CHECK(cohomology(cx, k).dim == dims[static_cast<std::size_t>(k + 1)]);
  CHECK_THROWS_AS(cohomology(cx, 3), DegreeOutOfRange);
}

TEST_CASE("cohomology of an isomorphism vanishes") {
  const FiniteComplex cx(0, {2, 2}, {mat({{1, 1}, {0, 1}})});
  CHECK(cohomology(cx, 0).dim == 0);
  CHECK(cohomology(cx, 1).dim == 0);
}

TEST_CASE("three-term complex of diag(1,0) via explicit matrices") {
  // d0 : Hom(V0,C) -> End C + End V0 (8x4), d1 : -> Hom(C,V0) (4x8) for the
  // map diag(1,0) on Q^2; cohomology dims computed here from ranks alone.
  const RationalMatrix d = mat({{1, 0}, {0, 0}});
  RationalMatrix d0(8, 4), d1(4, 8);
  // g -> (g d, d g) and (g1, g2) -> d g1 - g2 d, all row-major flattened.
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) {
        d0.at(static_cast<std::size_t>(i * 2 + j), static_cast<std::size_t>(i * 2 + k)) += d.at(static_cast<std::size_t>(k), static_cast<std::size_t>(j));
        d0.at(static_cast<std::size_t>(4 + i * 2 + j), static_cast<std::size_t>(k * 2 + j)) += d.at(static_cast<std::size_t>(i), static_cast<std::size_t>(k));
        d1.at(static_cast<std::size_t>(i * 2 + j), static_cast<std::size_t>(k * 2 + j)) += d.at(static_cast<std::size_t>(i), static_cast<std::size_t>(k));
        d1.at(static_cast<std::size_t>(i * 2 + j), static_cast<std::size_t>(4 + i * 2 + k)) -= d.at(static_cast<std::size_t>(k), static_cast<std::size_t>(j));
      }
  const FiniteComplex cx(-1, {4, 8, 4}, {d0, d1});
  // Rank oracle: dim H^-1 = 4 - rank d0, dim H^0 = (8 - rank d1) - rank d0,
  // dim H^1 = 4 - rank d1.
  const std::size_t r0 = rank(d0), r1 = rank(d1);
  CHECK(cohomology(cx, -1).dim == 4 - r0);
  CHECK(cohomology(cx, 0).dim == 8 - r1 - r0);
  CHECK(cohomology(cx, 1).dim == 4 - r1);
  CHECK(cohomology(cx, -1).dim == 1);
  CHECK(cohomology(cx, 0).dim == 2);
  CHECK(cohomology(cx, 1).dim == 1);
}

TEST_CASE("cohomology dims are stable under basis change") {
  Rng rng(23);
  const std::vector<std::size_t> dims{2, 4, 3};
  const RationalMatrix d0 = mat({{1, 0}, {0, 0}, {0, 0}, {0, 1}});
  const RationalMatrix d1 = mat({{0, 0, 1, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}});
  REQUIRE((d1 * d0).is_zero());
  const FiniteComplex cx(0, dims, {d0, d1});

  for (int trial = 0; trial < 10; ++trial) {
    const RationalMatrix p0 = random_invertible(rng, 2);
    const RationalMatrix p1 = random_invertible(rng, 4);
    const RationalMatrix p2 = random_invertible(rng, 3);
    const FiniteComplex conj(0, dims, {inverse(p1) * d0 * p0, inverse(p2) * d1 * p1});
    for (int k = 0; k <= 2; ++k) CHECK(cohomology(conj, k).dim == cohomology(cx, k).dim);
  }
}

TEST_CASE("representatives are cocycles and classes form a basis") {
  const RationalMatrix d0 = mat({{1, 0}, {0, 0}, {0, 0}, {0, 1}});
  const RationalMatrix d1 = mat({{0, 0, 1, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}});
  const FiniteComplex cx(0, {2, 4, 3}, {d0, d1});
  const auto h = cohomology(cx, 1);
  CHECK((cx.differential_out(1) * h.representatives).is_zero());
  // Expressing each representative against itself gives unit coordinates.
  for (std::size_t i = 0; i < h.dim; ++i) {
    const auto coords = class_coordinates(cx, 1, h.representatives.column_vector(i));
    for (std::size_t j = 0; j < coords.size(); ++j) CHECK(coords[j] == (i == j ? Rational(1) : Rational(0)));
  }
  CHECK_THROWS_AS(class_coordinates(cx, 0, std::vector<Rational>{Rational(1), Rational(0)}), NotCocycle);
}

TEST_CASE("mapping cone of zero and identity maps") {
  const FiniteComplex a(0, {2, 2}, {RationalMatrix::zero(2, 2)});
  const FiniteComplex b(0, {3, 1}, {RationalMatrix::zero(1, 3)});
  // f = 0: cohomology dims add (cone^k = b^k + a^{k+1}).
  const ComplexMap zero_map(a, b, {RationalMatrix::zero(3, 2), RationalMatrix::zero(1, 2)});
  const FiniteComplex cone0 = mapping_cone(zero_map);
  CHECK(cone0.dim(0) == 3 + 2);
  CHECK(cohomology(cone0, 0).dim == cohomology(b, 0).dim + cohomology(a, 1).dim);

  // f = identity: cohomology vanishes strictly inside the degree range.
  const FiniteComplex c(0, {2, 3, 2}, {mat({{1, 0}, {0, 0}, {0, 1}}), RationalMatrix::zero(2, 3)});
  const ComplexMap ident(c, c, {RationalMatrix::identity(2), RationalMatrix::identity(3), RationalMatrix::identity(2)});
  const FiniteComplex cone1 = mapping_cone(ident);
  CHECK(cohomology(cone1, 1).dim == 0);

  CHECK_THROWS_AS(ComplexMap(c, c, {RationalMatrix::identity(2), mat({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}), RationalMatrix::identity(2)}),
                  NonChainMap);
}

TEST_CASE("exactness check") {
  // 0 -> V -> V -> 0 with the identity.
  const auto ok = exactness_check({RationalMatrix::zero(2, 0), RationalMatrix::identity(2), RationalMatrix::zero(0, 2)});
  CHECK(ok.all_exact);
  REQUIRE(ok.nodes.size() == 2);

  // 0 -> V -> 0 with dim V > 0: defect = dim V.
  const auto bad = exactness_check({RationalMatrix::zero(3, 0), RationalMatrix::zero(0, 3)});
  CHECK_FALSE(bad.all_exact);
  REQUIRE(bad.nodes.size() == 1);
  CHECK(bad.nodes[0].dim_ker_out == 3);
  CHECK(bad.nodes[0].dim_im_in == 0);

  CHECK_THROWS_AS(exactness_check({RationalMatrix::zero(2, 1), RationalMatrix::zero(1, 3)}), ShapeMismatch);
}
