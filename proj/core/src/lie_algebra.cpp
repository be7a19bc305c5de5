#include "defcoh/lie_algebra.hpp"

#include <string>

#include "defcoh/errors.hpp"

namespace defcoh {

std::vector<Rational> StructureTensor::bracket(int i, int j) const {
  std::vector<Rational> v(dim_);
  for (int k = 0; k < dim_; ++k) v[k] = at(i, j, k);
  return v;
}

std::vector<Rational> StructureTensor::bracket(const std::vector<Rational>& x, const std::vector<Rational>& y) const {
  std::vector<Rational> v(dim_);
  for (int i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      const Rational f = x[i] * y[j];
      for (int k = 0; k < dim_; ++k) v[k] += f * at(i, j, k);
    }
  }
  return v;
}

bool StructureTensor::is_skew() const {
  for (int i = 0; i < dim_; ++i)
    for (int j = i; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k)
        if (at(i, j, k) != -at(j, i, k)) return false;
  return true;
}

bool StructureTensor::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

LieAlgebra::LieAlgebra(StructureTensor structure, std::vector<std::string> basis_names)
    : structure_(std::move(structure)), basis_names_(std::move(basis_names)) {
  const auto report = jacobi_defect(structure_);
  if (!report.is_lie) throw ValidationError("LieAlgebra: Jacobi identity fails");
  if (!basis_names_.empty() && basis_names_.size() != static_cast<std::size_t>(dim()))
    throw ValidationError("LieAlgebra: basis name count differs from dimension");
}

RationalMatrix LieAlgebra::ad(int i) const {
  const int n = dim();
  RationalMatrix m(n, n);
  for (int j = 0; j < n; ++j) {
    const auto v = bracket(i, j);
    for (int k = 0; k < n; ++k) m.at(k, j) = v[k];
  }
  return m;
}

JacobiReport jacobi_defect(const StructureTensor& structure) {
  if (!structure.is_skew()) throw NotSkew("jacobi_defect: structure tensor is not skew");
  const int n = structure.dim();
  JacobiReport report{{}, true};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        std::vector<Rational> d(n);
        auto add = [&](int a, int b, int c) {
          const auto inner = structure.bracket(a, b);
          const auto outer = structure.bracket(inner, [&] {
            std::vector<Rational> e(n);
            e[c] = Rational(1);
            return e;
          }());
          for (int t = 0; t < n; ++t) d[t] += outer[t];
        };
        add(i, j, k);
        add(j, k, i);
        add(k, i, j);
        for (const auto& e : d)
          if (!e.is_zero()) report.is_lie = false;
        report.defects.push_back(std::move(d));
      }
  return report;
}

StructureTensor conjugate_structure(const StructureTensor& structure, const RationalMatrix& phi) {
  const int n = structure.dim();
  if (phi.rows() != static_cast<std::size_t>(n) || phi.cols() != static_cast<std::size_t>(n))
    throw ShapeMismatch("conjugate_structure: matrix has wrong shape");
  const RationalMatrix phi_inv = inverse(phi);
  StructureTensor out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const auto b = structure.bracket(phi.column_vector(i), phi.column_vector(j));
      const auto v = (phi_inv * from_column(b)).column_vector(0);
      for (int k = 0; k < n; ++k) out.at(i, j, k) = v[k];
    }
  return out;
}

namespace {

StructureTensor abelian(int n) { return StructureTensor(n); }

void set_bracket(StructureTensor& t, int i, int j, int k, const Rational& v) {
  t.at(i, j, k) = v;
  t.at(j, i, k) = -v;
}

}  // namespace

LieAlgebra catalog_algebra(const std::string& name) {
  if (name.rfind("abelian", 0) == 0 && name.size() == 8) {
    const int n = name[7] - '0';
    if (n >= 1 && n <= 6) return LieAlgebra(abelian(n));
  }
  if (name == "heisenberg3") {
    StructureTensor t(3);
    set_bracket(t, 0, 1, 2, 1);  // [e1, e2] = e3
    return LieAlgebra(std::move(t), {"e1", "e2", "e3"});
  }
  if (name == "aff1") {
    StructureTensor t(2);
    set_bracket(t, 0, 1, 1, 1);  // [x, y] = y
    return LieAlgebra(std::move(t), {"x", "y"});
  }
  if (name == "sl2") {
    StructureTensor t(3);
    set_bracket(t, 0, 1, 2, 1);   // [e, f] = h
    set_bracket(t, 2, 0, 0, 2);   // [h, e] = 2e
    set_bracket(t, 2, 1, 1, -2);  // [h, f] = -2f
    return LieAlgebra(std::move(t), {"e", "f", "h"});
  }
  if (name == "so3") {
    StructureTensor t(3);
    set_bracket(t, 0, 1, 2, 1);  // [e1, e2] = e3
    set_bracket(t, 1, 2, 0, 1);  // [e2, e3] = e1
    set_bracket(t, 2, 0, 1, 1);  // [e3, e1] = e2
    return LieAlgebra(std::move(t), {"e1", "e2", "e3"});
  }
  throw Error("catalog_algebra: unknown name '" + name + "'");
}

std::vector<std::string> catalog_names() {
  return {"abelian1", "abelian2", "abelian3", "abelian4", "abelian5", "abelian6", "heisenberg3", "aff1", "sl2", "so3"};
}

}  // namespace defcoh
