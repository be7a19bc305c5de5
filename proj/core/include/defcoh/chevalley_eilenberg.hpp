#pragma once

#include "defcoh/complex.hpp"
#include "defcoh/representation.hpp"
#include "defcoh/tuples.hpp"

namespace defcoh {

/// Matrix of the differential on alternating forms with coefficients,
/// from degree k to k+1, in the lexicographic wedge basis. Basis of the
/// degree-k term: for each k-tuple (lex order), the coefficient-space basis
/// vectors, index tuple_rank * m + component.
RationalMatrix ce_differential(const Representation& rep, int k);

/// The full complex at degrees 0..dim(g).
FiniteComplex ce_complex(const Representation& rep);

CohomologyResult ce_cohomology(const Representation& rep, int k);

}  // namespace defcoh
