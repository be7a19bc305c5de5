#include "defcoh/matrix.hpp"

#include <cstddef>

#include "defcoh/errors.hpp"

namespace defcoh {

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ShapeMismatch("RationalMatrix: ragged initializer");
    for (const auto& e : r) entries_.push_back(e);
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

bool RationalMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

RationalMatrix RationalMatrix::operator-() const {
  RationalMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) m.entries_[i] = -entries_[i];
  return m;
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatch("matrix +: shape mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

RationalMatrix& RationalMatrix::operator-=(const RationalMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatch("matrix -: shape mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw ShapeMismatch("matrix *: inner dimensions differ");
  RationalMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Rational& bkj = b.at(k, j);
        if (!bkj.is_zero()) c.at(i, j) += aik * bkj;
      }
    }
  return c;
}

RationalMatrix operator*(const Rational& s, RationalMatrix m) {
  for (auto& e : m.entries_) e *= s;
  return m;
}

RationalMatrix RationalMatrix::column(std::size_t j) const {
  RationalMatrix c(rows_, 1);
  for (std::size_t i = 0; i < rows_; ++i) c.at(i, 0) = at(i, j);
  return c;
}

std::vector<Rational> RationalMatrix::column_vector(std::size_t j) const {
  std::vector<Rational> v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

void RationalMatrix::set_column(std::size_t j, const std::vector<Rational>& v) {
  if (v.size() != rows_) throw ShapeMismatch("set_column: length mismatch");
  for (std::size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
}

RationalMatrix RationalMatrix::block(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const {
  if (r0 + nrows > rows_ || c0 + ncols > cols_) throw ShapeMismatch("block: out of range");
  RationalMatrix b(nrows, ncols);
  for (std::size_t i = 0; i < nrows; ++i)
    for (std::size_t j = 0; j < ncols; ++j) b.at(i, j) = at(r0 + i, c0 + j);
  return b;
}

void RationalMatrix::set_block(std::size_t r0, std::size_t c0, const RationalMatrix& b) {
  if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) throw ShapeMismatch("set_block: out of range");
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) at(r0 + i, c0 + j) = b.at(i, j);
}

RationalMatrix hcat(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows()) throw ShapeMismatch("hcat: row counts differ");
  RationalMatrix m(a.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  return m;
}

RationalMatrix vcat(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.cols()) throw ShapeMismatch("vcat: column counts differ");
  RationalMatrix m(a.rows() + b.rows(), a.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), 0, b);
  return m;
}

RationalMatrix from_column(const std::vector<Rational>& v) {
  RationalMatrix m(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m.at(i, 0) = v[i];
  return m;
}

RrefResult rref(const RationalMatrix& m) {
  RrefResult res{m, {}, 0};
  RationalMatrix& a = res.reduced;
  const std::size_t nr = a.rows(), nc = a.cols();
  std::size_t row = 0;
  for (std::size_t col = 0; col < nc && row < nr; ++col) {
    std::size_t pivot = nr;
    for (std::size_t i = row; i < nr; ++i) {
      if (!a.at(i, col).is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot == nr) continue;
    if (pivot != row)
      for (std::size_t j = 0; j < nc; ++j) std::swap(a.at(row, j), a.at(pivot, j));
    const Rational inv = Rational(1) / a.at(row, col);
    for (std::size_t j = col; j < nc; ++j) a.at(row, j) *= inv;
    for (std::size_t i = 0; i < nr; ++i) {
      if (i == row || a.at(i, col).is_zero()) continue;
      const Rational f = a.at(i, col);
      for (std::size_t j = col; j < nc; ++j) a.at(i, j) -= f * a.at(row, j);
    }
    res.pivot_cols.push_back(col);
    ++row;
  }
  res.rank = res.pivot_cols.size();
  return res;
}

std::size_t rank(const RationalMatrix& m) { return rref(m).rank; }

RationalMatrix kernel_basis(const RationalMatrix& m) {
  const auto r = rref(m);
  const std::size_t nc = m.cols();
  std::vector<bool> is_pivot(nc, false);
  for (auto p : r.pivot_cols) is_pivot[p] = true;

  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < nc; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);

  RationalMatrix basis(nc, free_cols.size());
  for (std::size_t fi = 0; fi < free_cols.size(); ++fi) {
    const std::size_t f = free_cols[fi];
    basis.at(f, fi) = Rational(1);
    for (std::size_t pi = 0; pi < r.pivot_cols.size(); ++pi) basis.at(r.pivot_cols[pi], fi) = -r.reduced.at(pi, f);
  }
  return basis;
}

RationalMatrix column_space_basis(const RationalMatrix& m) {
  const auto r = rref(m.transpose());
  RationalMatrix basis(m.rows(), r.rank);
  for (std::size_t i = 0; i < r.rank; ++i)
    for (std::size_t j = 0; j < m.rows(); ++j) basis.at(j, i) = r.reduced.at(i, j);
  return basis;
}

std::optional<RationalMatrix> solve(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows()) throw ShapeMismatch("solve: row counts differ");
  const auto r = rref(hcat(a, b));
  // Any pivot inside the b-block means b is not in the column space of a.
  for (auto p : r.pivot_cols)
    if (p >= a.cols()) return std::nullopt;
  RationalMatrix x(a.cols(), b.cols());
  for (std::size_t pi = 0; pi < r.pivot_cols.size(); ++pi)
    for (std::size_t j = 0; j < b.cols(); ++j) x.at(r.pivot_cols[pi], j) = r.reduced.at(pi, a.cols() + j);
  return x;
}

RationalMatrix inverse(const RationalMatrix& m) {
  if (!m.is_square()) throw ShapeMismatch("inverse: not square");
  const auto r = rref(hcat(m, RationalMatrix::identity(m.rows())));
  // Singular input pushes a pivot into the identity block.
  for (auto p : r.pivot_cols)
    if (p >= m.cols()) throw Singular("inverse: singular matrix");
  if (r.rank != m.rows()) throw Singular("inverse: singular matrix");
  return r.reduced.block(0, m.cols(), m.rows(), m.cols());
}

}  // namespace defcoh
