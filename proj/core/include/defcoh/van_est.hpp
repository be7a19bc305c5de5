#pragma once

#include <vector>

#include "defcoh/la_vector_space.hpp"
#include "defcoh/two_vector.hpp"

namespace defcoh {

/// A cochain of the reduced (normalized / three-term) complex. Payloads:
/// degree -1: a = Hom(V0, C); degree 0: a = End C, b = End V0;
/// degree 1: a = Hom(C, V0).
struct ReducedCochain {
  int degree;
  RationalMatrix a;
  RationalMatrix b;

  static ReducedCochain zero(const LAVectorSpace& lav, int degree);
  std::vector<Rational> coordinates() const;
  static ReducedCochain from_coordinates(const LAVectorSpace& lav, int degree, const std::vector<Rational>& coords);
};

/// The van Est map on the reduced complex, computed from the right-invariant
/// flow of a section through the unit: the flow solves c' = sigma(partial c + v)
/// with c(0) = 0 and v constant, so only first-order jets enter and every
/// derivative is exact over the rationals. Degree -1 is literally the
/// identity on sections. The target coordinates are those of
/// three_term_complex.
ReducedCochain van_est_reduced(const LAVectorSpace& lav, const ReducedCochain& c);

struct VanEstReport {
  /// Per-degree scalar with van_est = sign * identity (degrees -1, 0, 1).
  std::vector<int> signs;
  bool identity_ok;   // a single sign fits a full payload basis at each degree
  bool chain_map_ok;  // commutes with the normalized and three-term differentials
};

VanEstReport van_est_suite(const LAVectorSpace& lav);

}  // namespace defcoh
