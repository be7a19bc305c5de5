#include "defcoh/representation.hpp"

#include <string>

#include "defcoh/errors.hpp"

namespace defcoh {

Representation::Representation(LieAlgebra algebra, std::vector<RationalMatrix> action)
    : algebra_(std::move(algebra)), dim_(0), action_(std::move(action)) {
  const int n = algebra_.dim();
  if (action_.size() != static_cast<std::size_t>(n)) throw ValidationError("Representation: one action matrix per generator required");
  dim_ = n == 0 ? 0 : static_cast<int>(action_[0].rows());
  for (const auto& m : action_)
    if (m.rows() != static_cast<std::size_t>(dim_) || m.cols() != static_cast<std::size_t>(dim_))
      throw ValidationError("Representation: action matrices must be square of equal size");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const RationalMatrix commutator = action_[i] * action_[j] - action_[j] * action_[i];
      if (commutator != action_of(algebra_.bracket(i, j)))
        throw NotFlat("Representation: flatness fails on generators (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
}

RationalMatrix Representation::action_of(const std::vector<Rational>& x) const {
  RationalMatrix m(dim_, dim_);
  for (int i = 0; i < algebra_.dim(); ++i)
    if (!x[static_cast<std::size_t>(i)].is_zero()) m += x[static_cast<std::size_t>(i)] * action_[static_cast<std::size_t>(i)];
  return m;
}

Representation Representation::trivial(LieAlgebra algebra, int dim) {
  std::vector<RationalMatrix> action(static_cast<std::size_t>(algebra.dim()), RationalMatrix::zero(dim, dim));
  return Representation(std::move(algebra), std::move(action));
}

Representation Representation::adjoint(const LieAlgebra& algebra) {
  std::vector<RationalMatrix> action;
  for (int i = 0; i < algebra.dim(); ++i) action.push_back(algebra.ad(i));
  return Representation(algebra, std::move(action));
}

LieAlgebra semidirect_product(const LieAlgebra& g, const Representation& rep) {
  if (!(rep.algebra() == g)) throw AmbientMismatch("semidirect_product: representation is over a different algebra");
  const int n = g.dim();
  const int m = rep.dim();
  StructureTensor t(n + m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) t.at(i, j, k) = g.structure().at(i, j, k);
  for (int i = 0; i < n; ++i)
    for (int b = 0; b < m; ++b)
      for (int a = 0; a < m; ++a) {
        t.at(i, n + b, n + a) = rep.action(i).at(a, b);
        t.at(n + b, i, n + a) = -rep.action(i).at(a, b);
      }
  return LieAlgebra(std::move(t));
}

Representation end_representation(const Representation& rep) {
  const int n = rep.algebra().dim();
  const int m = rep.dim();
  std::vector<RationalMatrix> action;
  action.reserve(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    const RationalMatrix& rho = rep.action(v);
    RationalMatrix big(m * m, m * m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        for (int a = 0; a < m; ++a)
          for (int b = 0; b < m; ++b) {
            Rational entry;
            if (j == b) entry += rho.at(i, a);
            if (i == a) entry -= rho.at(b, j);
            if (!entry.is_zero()) big.at(i * m + j, a * m + b) = entry;
          }
    action.push_back(std::move(big));
  }
  return Representation(rep.algebra(), std::move(action));
}

Representation conjugate(const Representation& rep, const RationalMatrix& p, const RationalMatrix& q) {
  LieAlgebra algebra(conjugate_structure(rep.algebra().structure(), p), rep.algebra().basis_names().empty() ? std::vector<std::string>{} : std::vector<std::string>{});
  const RationalMatrix q_inv = inverse(q);
  std::vector<RationalMatrix> action;
  for (int i = 0; i < rep.algebra().dim(); ++i) action.push_back(q_inv * rep.action_of(p.column_vector(i)) * q);
  return Representation(std::move(algebra), std::move(action));
}

}  // namespace defcoh
