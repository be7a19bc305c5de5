#pragma once

#include <vector>

#include "defcoh/complex.hpp"
#include "defcoh/lie_algebra.hpp"
#include "defcoh/multiderivation.hpp"

namespace defcoh {

/// The deformation DGLA of a bracket b: multiderivations shifted by one, with
/// the differential [[b, -]]. H^-1 is the center, H^0 the outer derivations,
/// H^1 infinitesimal deformations modulo gauge, H^2 obstructions.
class DeformationComplex {
 public:
  /// Validates [[b, b]] = 0.
  explicit DeformationComplex(Multiderivation bracket);
  explicit DeformationComplex(const LieAlgebra& algebra);

  const Multiderivation& bracket() const { return bracket_; }
  int ambient() const { return bracket_.ambient(); }

  /// delta c = [[b, c]].
  Multiderivation differential(const Multiderivation& c) const;

  /// The expanded two-sum form of the differential, evaluated literally;
  /// kept as an independent oracle for the bracket-defined route.
  Multiderivation differential_explicit(const Multiderivation& c) const;

  /// delta c + 1/2 [[c, c]] = 0, cross-checked against the Jacobi defect of
  /// b + c; the two routes are asserted to agree.
  bool is_maurer_cartan(const Multiderivation& c) const;

  /// The assembled complex at degrees [-1, max_degree]; default top degree is
  /// ambient - 1 (the last degree with a nonzero term).
  FiniteComplex complex(int max_degree = -2) const;

  CohomologyResult cohomology(int k) const;

  /// Coordinates of [ 1/2 [[c, c]] ] against the pinned H^2 representative
  /// basis. Requires delta c = 0 (NotCocycle otherwise); an empty vector means
  /// the obstruction space is zero.
  std::vector<Rational> obstruction_class(const Multiderivation& c) const;

  /// Coordinate vector of a degree-k cochain in the lexicographic basis.
  static std::vector<Rational> coordinates(const Multiderivation& c);
  static Multiderivation from_coordinates(int ambient, int degree, const std::vector<Rational>& coords);

 private:
  Multiderivation bracket_;
};

}  // namespace defcoh
