#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "defcoh/rational.hpp"

namespace defcoh {

/// Dense matrix over the rationals, row-major. 0xn and nx0 shapes are legal
/// and represent maps to/from the zero space.
class RationalMatrix {
 public:
  RationalMatrix() : rows_(0), cols_(0) {}
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix zero(std::size_t rows, std::size_t cols) { return RationalMatrix(rows, cols); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  const std::vector<Rational>& entries() const { return entries_; }

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  RationalMatrix transpose() const;
  RationalMatrix operator-() const;

  RationalMatrix& operator+=(const RationalMatrix& o);
  RationalMatrix& operator-=(const RationalMatrix& o);
  friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { return a += b; }
  friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) { return a -= b; }
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator*(const Rational& s, RationalMatrix m);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }
  friend bool operator!=(const RationalMatrix& a, const RationalMatrix& b) { return !(a == b); }

  RationalMatrix column(std::size_t j) const;
  std::vector<Rational> column_vector(std::size_t j) const;
  void set_column(std::size_t j, const std::vector<Rational>& v);

  /// Block [r0, r0+nrows) x [c0, c0+ncols).
  RationalMatrix block(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const;
  void set_block(std::size_t r0, std::size_t c0, const RationalMatrix& b);

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> entries_;
};

RationalMatrix hcat(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix vcat(const RationalMatrix& a, const RationalMatrix& b);

RationalMatrix from_column(const std::vector<Rational>& v);

struct RrefResult {
  RationalMatrix reduced;
  std::vector<std::size_t> pivot_cols;  // strictly increasing
  std::size_t rank;
};

/// Unique reduced row-echelon form. Degenerate shapes come back unchanged
/// with rank 0.
RrefResult rref(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

/// Columns span ker(m); the canonical RREF kernel basis (each free variable
/// set to 1 in turn, lex order of free columns). Column count equals
/// cols(m) - rank(m).
RationalMatrix kernel_basis(const RationalMatrix& m);

/// Canonical basis of the column space: the nonzero rows of rref(m^T),
/// transposed back to columns. Depends only on the subspace.
RationalMatrix column_space_basis(const RationalMatrix& m);

/// Exact solution of a x = b (b may have several columns). Free variables are
/// set to zero. Returns nullopt when the system is inconsistent.
std::optional<RationalMatrix> solve(const RationalMatrix& a, const RationalMatrix& b);

/// Inverse of a square matrix; throws Singular.
RationalMatrix inverse(const RationalMatrix& m);

}  // namespace defcoh
