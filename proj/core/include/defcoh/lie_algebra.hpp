#pragma once

#include <string>
#include <vector>

#include "defcoh/matrix.hpp"

namespace defcoh {

/// Structure-constant tensor c[i][j][k] with [x_i, x_j] = sum_k c[i][j][k] x_k,
/// flattened as dim^3 entries, index (i*dim + j)*dim + k.
class StructureTensor {
 public:
  StructureTensor() : dim_(0) {}
  explicit StructureTensor(int dim) : dim_(dim), entries_(static_cast<std::size_t>(dim) * dim * dim) {}

  int dim() const { return dim_; }
  Rational& at(int i, int j, int k) { return entries_[(static_cast<std::size_t>(i) * dim_ + j) * dim_ + k]; }
  const Rational& at(int i, int j, int k) const { return entries_[(static_cast<std::size_t>(i) * dim_ + j) * dim_ + k]; }

  /// [x_i, x_j] as a coordinate vector.
  std::vector<Rational> bracket(int i, int j) const;
  /// Bracket of arbitrary coordinate vectors.
  std::vector<Rational> bracket(const std::vector<Rational>& x, const std::vector<Rational>& y) const;

  bool is_skew() const;
  bool is_zero() const;

  friend bool operator==(const StructureTensor& a, const StructureTensor& b) { return a.dim_ == b.dim_ && a.entries_ == b.entries_; }

 private:
  int dim_;
  std::vector<Rational> entries_;
};

/// A Lie algebra given by structure constants over the rationals.
/// Construction validates skewness and the Jacobi identity.
class LieAlgebra {
 public:
  LieAlgebra(StructureTensor structure, std::vector<std::string> basis_names = {});

  int dim() const { return structure_.dim(); }
  const StructureTensor& structure() const { return structure_; }
  const std::vector<std::string>& basis_names() const { return basis_names_; }

  std::vector<Rational> bracket(int i, int j) const { return structure_.bracket(i, j); }
  std::vector<Rational> bracket(const std::vector<Rational>& x, const std::vector<Rational>& y) const { return structure_.bracket(x, y); }

  /// Matrix of ad_{x_i}.
  RationalMatrix ad(int i) const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) { return a.structure_ == b.structure_; }

 private:
  StructureTensor structure_;
  std::vector<std::string> basis_names_;
};

struct JacobiReport {
  /// J[i][j][k] = [[x_i,x_j],x_k] + [[x_j,x_k],x_i] + [[x_k,x_i],x_j],
  /// one coordinate vector per triple i < j < k (lex order).
  std::vector<std::vector<Rational>> defects;
  bool is_lie;
};

/// The Jacobiator on basis triples. Throws NotSkew if the tensor is not skew.
JacobiReport jacobi_defect(const StructureTensor& structure);

/// Structure constants of the pullback algebra: [x,y]' = phi^-1 [phi x, phi y].
StructureTensor conjugate_structure(const StructureTensor& structure, const RationalMatrix& phi);

/// Built-in algebras with known structure constants. Names: abelian1..abelian6,
/// heisenberg3, aff1, sl2, so3.
LieAlgebra catalog_algebra(const std::string& name);
std::vector<std::string> catalog_names();

}  // namespace defcoh
