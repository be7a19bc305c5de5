#pragma once

#include <vector>

#include "defcoh/lie_algebra.hpp"
#include "defcoh/matrix.hpp"

namespace defcoh {

/// A representation of a Lie algebra on Q^m, stored as the action matrices
/// rho(x_a) of the basis generators. Flatness
/// rho([x,y]) = rho(x)rho(y) - rho(y)rho(x) is validated eagerly.
class Representation {
 public:
  Representation(LieAlgebra algebra, std::vector<RationalMatrix> action);

  const LieAlgebra& algebra() const { return algebra_; }
  int dim() const { return dim_; }
  const RationalMatrix& action(int generator) const { return action_[static_cast<std::size_t>(generator)]; }
  const std::vector<RationalMatrix>& action() const { return action_; }

  /// rho applied to an arbitrary algebra element.
  RationalMatrix action_of(const std::vector<Rational>& x) const;

  static Representation trivial(LieAlgebra algebra, int dim);
  static Representation adjoint(const LieAlgebra& algebra);

 private:
  LieAlgebra algebra_;
  int dim_;
  std::vector<RationalMatrix> action_;
};

/// The semidirect product algebra on g + C with bracket
/// [(x,c),(y,c')] = ([x,y], rho(x)c' - rho(y)c); basis ordered g first, then C.
LieAlgebra semidirect_product(const LieAlgebra& g, const Representation& rep);

/// The induced representation on End C: (v.phi)(c) = v.phi(c) - phi(v.c),
/// i.e. commutator with rho(v). Basis of End C is E_ij = e_i e_j^T in
/// row-major order (index i*m + j).
Representation end_representation(const Representation& rep);

/// Conjugated representation: algebra basis change by p, module basis change
/// by q; the new action is q^-1 rho(p x) q.
Representation conjugate(const Representation& rep, const RationalMatrix& p, const RationalMatrix& q);

}  // namespace defcoh
