#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "defcoh/io.hpp"
#include "defcoh/multiderivation.hpp"

namespace defcoh {

/// Deterministic RNG wrapper. Values are drawn from the raw engine output so
/// sequences are identical across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  long next_int(long lo, long hi);
  Rational next_rational(long bound);  // numerator in [-bound, bound], denominator in [1, 3]

 private:
  std::mt19937_64 engine_;
};

/// Invertible matrix built as a product of unit triangular matrices with
/// small integer entries (determinant +-1, exact inverse).
RationalMatrix random_invertible(Rng& rng, int n, long bound = 2);

Multiderivation random_multiderivation(Rng& rng, int ambient, int arity, long bound = 2);

/// A catalog algebra conjugated by a random invertible matrix. Raw random
/// structure constants almost never satisfy Jacobi, so randomness enters only
/// through catalog choice and basis conjugation.
LieAlgebra random_catalog_lie(std::uint64_t seed, int dim_cap);

/// A flat representation from the built-in stock (trivial, adjoint, standard
/// sl2, diagonal actions of abelian algebras), conjugated on both sides.
VBAlgebra random_vb_algebra(std::uint64_t seed, int dim_g_cap, int core_cap);

LAVectorSpace random_la_vector_space(std::uint64_t seed, int dim_cap);

/// Families: catalog-lie, vb, la, twovect.
Instance random_instance(const std::string& family, std::uint64_t seed, int dim_cap);

}  // namespace defcoh
