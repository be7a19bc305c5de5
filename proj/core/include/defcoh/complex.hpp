#pragma once

#include <vector>

#include "defcoh/matrix.hpp"

namespace defcoh {

/// A bounded cochain complex of finite-dimensional rational vector spaces.
/// Terms are stored for every degree in [min_degree, max_degree], including
/// zero-dimensional ones, so degree bookkeeping never shifts. d^2 = 0 is
/// asserted at construction.
class FiniteComplex {
 public:
  /// dims[i] is the dimension at degree min_degree + i; diffs[i] maps degree
  /// min_degree + i to min_degree + i + 1 (one fewer entries than dims).
  FiniteComplex(int min_degree, std::vector<std::size_t> dims, std::vector<RationalMatrix> diffs);

  int min_degree() const { return min_degree_; }
  int max_degree() const { return min_degree_ + static_cast<int>(dims_.size()) - 1; }

  bool has_degree(int k) const { return k >= min_degree() && k <= max_degree(); }
  std::size_t dim(int k) const;

  /// The differential out of degree k. At max_degree (or outside the range)
  /// this is the zero map into the zero space.
  RationalMatrix differential_out(int k) const;
  /// The differential into degree k; zero map from the zero space at
  /// min_degree and outside the range.
  RationalMatrix differential_in(int k) const;

  const std::vector<std::size_t>& dims() const { return dims_; }

 private:
  int min_degree_;
  std::vector<std::size_t> dims_;
  std::vector<RationalMatrix> diffs_;
};

/// A degreewise map of complexes commuting with the differentials.
/// Source and target must share a degree range.
class ComplexMap {
 public:
  ComplexMap(FiniteComplex source, FiniteComplex target, std::vector<RationalMatrix> components);

  const FiniteComplex& source() const { return source_; }
  const FiniteComplex& target() const { return target_; }
  const RationalMatrix& component(int k) const;

 private:
  FiniteComplex source_, target_;
  std::vector<RationalMatrix> components_;
};

struct CohomologyResult {
  std::size_t dim;
  /// Columns are cocycles whose classes form a basis of H^k, pinned by the
  /// RREF-canonical complement of the image inside the kernel.
  RationalMatrix representatives;
};

CohomologyResult cohomology(const FiniteComplex& cx, int k);

/// Coordinates of the class of a cocycle against the pinned representative
/// basis at degree k. Throws NotCocycle if z is not closed.
std::vector<Rational> class_coordinates(const FiniteComplex& cx, int k, const std::vector<Rational>& cocycle);

/// Cone(f)^k = target^k + source^{k+1}, d(b, a) = (d_B b + f a, -d_A a).
FiniteComplex mapping_cone(const ComplexMap& f);

struct ExactnessNode {
  std::size_t space_dim;
  std::size_t dim_im_in;
  std::size_t dim_ker_out;
  bool exact;
};

struct ExactnessReport {
  std::vector<ExactnessNode> nodes;
  bool all_exact;
};

/// Checks exactness of V_0 -> V_1 -> ... -> V_t at the interior spaces
/// V_1 .. V_{t-1}. maps[i] is the matrix of V_i -> V_{i+1}; cap the ends
/// with zero maps to make them interior.
ExactnessReport exactness_check(const std::vector<RationalMatrix>& maps);

}  // namespace defcoh
