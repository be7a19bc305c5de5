#pragma once

#include <vector>

#include "defcoh/complex.hpp"
#include "defcoh/la_vector_space.hpp"

namespace defcoh {

/// A linear deformation cochain of the 2-vector space C x V0 in the
/// (gamma1, gamma2) coordinates. At degree k >= 0, gamma1 is a linear map
/// C^{k+1} + V0 -> C and gamma2 a linear map C^k + V0 -> V0 (the fourth
/// tangent slot of C + V0 + C + V0 forces codomain V0 for gamma2). At degree
/// -1 the cochain is a single linear map V0 -> C stored in gamma1.
struct GroupoidCochain {
  int degree;
  RationalMatrix gamma1;
  RationalMatrix gamma2;

  GroupoidCochain(const LAVectorSpace& lav, int degree);
  GroupoidCochain(int degree, RationalMatrix g1, RationalMatrix g2) : degree(degree), gamma1(std::move(g1)), gamma2(std::move(g2)) {}

  std::vector<Rational> coordinates() const;
  static GroupoidCochain from_coordinates(const LAVectorSpace& lav, int degree, const std::vector<Rational>& coords);

  static std::size_t gamma1_cols(const LAVectorSpace& lav, int degree);
  static std::size_t gamma2_cols(const LAVectorSpace& lav, int degree);
  static std::size_t dim(const LAVectorSpace& lav, int degree);
};

/// The groupoid deformation differential in the (gamma1, gamma2) model, with
/// the groupoid action c.v = partial c + v and the tangent action on the
/// fourth slot. delta . delta = 0 exactly.
GroupoidCochain groupoid_differential(const LAVectorSpace& lav, const GroupoidCochain& c);

/// The full linear deformation complex of the 2-vector space at degrees
/// [-1, max_degree].
FiniteComplex full_complex(const LAVectorSpace& lav, int max_degree);

/// The normalized subcomplex: cochains vanishing when any arrow argument is a
/// unit. Nonzero only at degrees -1..1 with terms Hom(V0,C),
/// End C + End V0, Hom(C,V0); the inclusion into the full complex is a chain
/// map. delta1_sign records the sign relating the restricted degree 0 -> 1
/// differential to the three-term complex (the two conventions differ).
struct NormalizedSubcomplex {
  FiniteComplex cx;
  ComplexMap inclusion;
  int delta0_sign;
  int delta1_sign;
};

NormalizedSubcomplex normalized_subcomplex(const LAVectorSpace& lav, int max_degree);

struct QuasiIsoReport {
  struct Node {
    int degree;
    std::size_t dim_full;
    std::size_t dim_normalized;
    bool induced_injective;
    bool ok;
  };
  std::vector<Node> nodes;
  bool all_ok;
};

/// Cohomology of the full and normalized complexes agree at degrees -1..1 and
/// the inclusion induces isomorphisms (checked on representatives).
QuasiIsoReport quasi_iso_check(const LAVectorSpace& lav);

}  // namespace defcoh
