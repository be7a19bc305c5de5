#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>

#include "defcoh/errors.hpp"
#include "defcoh/io.hpp"
#include "defcoh/random_instances.hpp"
#include "test_util.hpp"

using namespace defcoh;

TEST_CASE("round trip is exact for every instance kind") {
  const auto roundtrip = [](const Instance& inst) {
    const std::string text = serialize(inst);
    const Instance back = parse_instance_text(text);
    CHECK(back.kind == inst.kind);
    CHECK(back.name == inst.name);
    CHECK(serialize(back) == text);
    return back;
  };

  const Instance lie = roundtrip(make_instance(catalog_algebra("sl2"), "sl2"));
  CHECK(lie.lie->structure() == catalog_algebra("sl2").structure());

  const Instance rep = roundtrip(make_instance(defcoh::test::sl2_standard(), "rep"));
  CHECK(rep.rep->action(2) == defcoh::test::sl2_standard().action(2));

  const Instance vb = roundtrip(make_instance(VBAlgebra(defcoh::test::sl2_standard()), "vb"));
  CHECK(vb.vb->core_dim() == 2);

  const Instance la = roundtrip(make_instance(LAVectorSpace(2, 1, defcoh::test::mat({{1, -2}})), "la"));
  CHECK(la.la->partial == defcoh::test::mat({{1, -2}}));

  // Non-integer rational entries survive exactly.
  LAVectorSpace frac(1, 1, RationalMatrix{{Rational(22, 7)}});
  const Instance fr = roundtrip(make_instance(std::move(frac), "frac"));
  CHECK(fr.la->partial.at(0, 0) == Rational(22, 7));
}

TEST_CASE("validation errors name the violated invariant and indices") {
  // A diagonal structure entry violates skewness.
  const std::string bad_skew = R"({"kind":"lie_algebra","name":"x","dim":2,"structure":[[0,0,1,"1"]]})";
  CHECK_THROWS_WITH_AS(parse_instance_text(bad_skew), doctest::Contains("skewness at (0,0)"), ValidationError);

  // A bracket violating Jacobi reports the first bad triple.
  const std::string bad_jacobi =
      R"({"kind":"lie_algebra","name":"x","dim":3,"structure":[[0,1,0,"1"],[1,2,1,"1"]]})";
  CHECK_THROWS_WITH_AS(parse_instance_text(bad_jacobi), doctest::Contains("jacobi defect at (0,1,2)"), ValidationError);

  // A non-flat action reports the offending generator pair.
  const std::string bad_flat =
      R"({"kind":"representation","name":"x","dim":1,
          "algebra":{"kind":"lie_algebra","dim":2,"structure":[[0,1,1,"1"]]},
          "action":[[["1"]],[["1"]]]})";
  CHECK_THROWS_WITH_AS(parse_instance_text(bad_flat), doctest::Contains("flatness at (0,1)"), ValidationError);

  CHECK_THROWS_AS(parse_instance_text("not json"), ParseError);
  CHECK_THROWS_AS(parse_instance_text(R"({"kind":"widget"})"), ParseError);
  CHECK_THROWS_AS(parse_instance("/nonexistent/path.json"), ParseError);
}

TEST_CASE("ambient dimension cap") {
  CHECK(ambient_dim_cap() >= 1);
  const std::string big = R"({"kind":"lie_algebra","name":"x","dim":9,"structure":[]})";
  CHECK_THROWS_AS(parse_instance_text(big), ValidationError);

  setenv("DEFCOH_MAX_DIM", "9", 1);
  CHECK(ambient_dim_cap() == 9);
  CHECK_NOTHROW(parse_instance_text(big));
  unsetenv("DEFCOH_MAX_DIM");
}

TEST_CASE("seeded generators are deterministic and validated") {
  for (const char* family : {"catalog-lie", "vb", "la", "twovect"}) {
    const Instance a = random_instance(family, 5, 4);
    const Instance b = random_instance(family, 5, 4);
    CHECK(serialize(a) == serialize(b));
    const Instance c = random_instance(family, 6, 4);
    CHECK(serialize(a) != serialize(c));
  }

  // Catalog draws validate; conjugation preserves the Jacobi identity.
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const LieAlgebra g = random_catalog_lie(seed, 4);
    CHECK(jacobi_defect(g.structure()).is_lie);
    const VBAlgebra vb = random_vb_algebra(seed, 3, 2);  // flatness asserted in the constructor
    CHECK(vb.total_dim() == vb.dim_g() + vb.core_dim());
  }
}

TEST_CASE("random invertible matrices invert exactly") {
  Rng rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = static_cast<int>(rng.next_int(1, 5));
    const RationalMatrix p = random_invertible(rng, n);
    CHECK(inverse(p) * p == RationalMatrix::identity(static_cast<std::size_t>(n)));
  }
}
