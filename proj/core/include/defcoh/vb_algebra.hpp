#pragma once

#include <map>
#include <vector>

#include "defcoh/complex.hpp"
#include "defcoh/deformation.hpp"
#include "defcoh/multiderivation.hpp"
#include "defcoh/representation.hpp"

namespace defcoh {

/// A vector-bundle object in Lie algebras: a Lie algebra g acting on a core
/// space C, with total algebra the semidirect product on g + C. Basis order
/// is normative: g indices [0, n), core indices [n, n + m).
class VBAlgebra {
 public:
  explicit VBAlgebra(Representation theta);

  const LieAlgebra& g() const { return theta_.algebra(); }
  const Representation& theta() const { return theta_; }
  const LieAlgebra& total() const { return total_; }

  int dim_g() const { return theta_.algebra().dim(); }
  int core_dim() const { return theta_.dim(); }
  int total_dim() const { return dim_g() + core_dim(); }
  bool is_core_index(int i) const { return i >= dim_g(); }

  /// The scaling automorphism h_lambda: identity on g, lambda on C.
  RationalMatrix scaling(const Rational& lambda) const;

 private:
  Representation theta_;
  LieAlgebra total_;
};

/// Weight of an elementary coefficient block: (#core inputs) - [output in C].
int block_weight(const VBAlgebra& vba, const IndexTuple& tuple, int component);

/// Exact grading of a multiderivation on the total algebra by scaling weight.
/// Components are indexed by weight; all weights lie in [-1, arity] and the
/// components sum back to the input.
struct WeightDecomposition {
  std::map<int, Multiderivation> components;
  Multiderivation component(int q, int ambient, int arity) const;
};

WeightDecomposition weight_decompose(const VBAlgebra& vba, const Multiderivation& c);

/// Weight-0 part: the exact eigenprojection realizing the linearization map.
Multiderivation linearize(const VBAlgebra& vba, const Multiderivation& c);
/// Weight -1 part.
Multiderivation core_part(const VBAlgebra& vba, const Multiderivation& c);

/// The weight-0 subcomplex of the deformation complex of the total algebra,
/// at degrees [-1, dim g] (weight-0 terms vanish above). basis[k] lists, per
/// degree min_degree + k, the flat coefficient indices of the elementary
/// weight-0 cochains spanning the term.
struct LinearSubcomplex {
  FiniteComplex cx;
  std::vector<std::vector<std::size_t>> basis;

  std::vector<Rational> coordinates(const VBAlgebra& vba, const Multiderivation& c) const;
  Multiderivation cochain(const VBAlgebra& vba, int degree, const std::vector<Rational>& coords) const;
};

LinearSubcomplex linear_subcomplex(const VBAlgebra& vba);

/// An element of the forms on g with values in End C; values[t] is the m x m
/// matrix attached to the t-th arity-tuple (lex order).
struct EndValuedForm {
  int arity = 0;
  std::vector<RationalMatrix> values;

  std::vector<Rational> coordinates(int core_dim) const;
  static EndValuedForm from_coordinates(int dim_g, int core_dim, int arity, const std::vector<Rational>& coords);
};

/// Image of a weight-0 cochain under the splitting: c1 is the restriction
/// with one core argument, c2 the g-component of the restriction to g.
struct SplitCochain {
  EndValuedForm c1;
  Multiderivation c2;
};

/// Splits a weight-0 multiderivation of arity k+1 into
/// (c1 in C^k(g, End C), c2 in C^k_def(g)). Throws NotLinear when c has
/// components outside weight 0.
SplitCochain splitting_iso(const VBAlgebra& vba, const Multiderivation& c);

/// Rebuilds the weight-0 multiderivation from its split components.
Multiderivation splitting_inverse(const VBAlgebra& vba, const SplitCochain& s);

/// The map obtained from theta by extension of scalars, as a chain map from
/// the shifted deformation complex of g (differential negated by the shift)
/// to the forms on g with End C coefficients:
/// Theta(c)(v_1,..,v_j)(chi) = (-1)^{j-1} theta(c(v_1,..,v_j)) chi.
ComplexMap theta_cochain_map(const VBAlgebra& vba);

/// Cone(Theta); degreewise isomorphic to the linear subcomplex.
FiniteComplex cone_complex(const VBAlgebra& vba);

/// Transported differential of the linear subcomplex, written in split
/// coordinates, compared against the cone differential degree by degree.
struct SplitTransportReport {
  std::vector<int> degrees;
  std::vector<int> signs;  // per degree, the scalar with transported = sign * cone
  bool consistent;         // a single sign fit every entry at every degree
};

SplitTransportReport splitting_transport_check(const VBAlgebra& vba);

/// One node of the long exact sequence check.
struct LesNode {
  int degree;
  std::string space;  // "end", "cone", "def"
  std::size_t dim;
  std::size_t dim_im_in;
  std::size_t dim_ker_out;
  bool exact;
};

struct LesReport {
  std::vector<LesNode> nodes;
  bool all_exact;
};

/// Builds H(g, End C), H(Cone Theta) and H_def(g) with the induced inclusion,
/// projection and connecting maps, and checks exactness at every node with
/// degree in [lo, hi].
LesReport les_check(const VBAlgebra& vba, int lo, int hi);

}  // namespace defcoh
