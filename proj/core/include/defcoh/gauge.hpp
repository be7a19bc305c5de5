#pragma once

#include <vector>

#include "defcoh/multiderivation.hpp"

namespace defcoh {

/// Dense double-precision bracket tensor b[i][j][k], the floating-point image
/// of an arity-2 multiderivation.
struct DoubleTensor {
  int dim = 0;
  std::vector<double> entries;  // dim^3, index (i*dim + j)*dim + k

  double& at(int i, int j, int k) { return entries[(static_cast<std::size_t>(i) * dim + j) * dim + k]; }
  double at(int i, int j, int k) const { return entries[(static_cast<std::size_t>(i) * dim + j) * dim + k]; }

  static DoubleTensor from(const Multiderivation& bracket);
  double max_abs() const;
};

/// [[b, D]] for an arity-2 tensor b and an endomorphism D:
/// (x, y) -> b(Dx, y) + b(x, Dy) - D b(x, y).
DoubleTensor bracket_with_endomorphism(const DoubleTensor& b, const std::vector<std::vector<double>>& d);

struct GaugeFlowResult {
  DoubleTensor endpoint;
  /// max |[[b,b]]| seen at the sampled steps (the Maurer-Cartan residual;
  /// the flow preserves it in exact arithmetic).
  double max_mc_residual;
};

/// Classical fixed-step RK4 for db/de = [[b, Delta]] with constant Delta,
/// from b0 = the handle bracket, integrated to eps_end.
GaugeFlowResult gauge_flow(const Multiderivation& bracket, const Multiderivation& delta, double eps_end, int steps);

/// The closed-form endpoint exp(-eD) b0(exp(eD) ., exp(eD) .) where D is the
/// matrix of delta; the conjugation-pullback oracle for the gauge ODE.
DoubleTensor gauge_conjugation_oracle(const Multiderivation& bracket, const Multiderivation& delta, double eps_end);

double max_abs_difference(const DoubleTensor& a, const DoubleTensor& b);

}  // namespace defcoh
