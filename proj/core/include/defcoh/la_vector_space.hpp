#pragma once

#include "defcoh/complex.hpp"
#include "defcoh/matrix.hpp"

namespace defcoh {

/// A Lie algebroid object in vector spaces: completely determined by a linear
/// map partial : C -> V0 (a p x m matrix). The same data underlies the
/// 2-vector space C x V0 with action c.v = partial c + v.
struct LAVectorSpace {
  int core_dim;  // m = dim C
  int side_dim;  // p = dim V0
  RationalMatrix partial;

  LAVectorSpace(int m, int p, RationalMatrix d);
};

/// The three-term complex Hom(V0,C) -> End C + End V0 -> Hom(C,V0) at degrees
/// -1..1, with the displayed differentials
///   d0(g) = (g.partial, partial.g),  d1(g1, g2) = partial.g1 - g2.partial.
/// Coordinates: matrices flattened row-major; degree 0 is End C then End V0.
FiniteComplex three_term_complex(const LAVectorSpace& lav);

struct ThreeTermDims {
  std::size_t h_minus1, h0, h1;
};

/// Closed forms ((p-r)(m-r), (p-r)^2+(m-r)^2, (m-r)(p-r)) with r = rank of
/// partial; trivial cohomology iff partial is injective or surjective.
ThreeTermDims three_term_closed_form(const LAVectorSpace& lav);

}  // namespace defcoh
