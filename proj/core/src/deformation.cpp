#include "defcoh/deformation.hpp"

#include <string>

#include "defcoh/errors.hpp"
#include "defcoh/tuples.hpp"

namespace defcoh {

DeformationComplex::DeformationComplex(Multiderivation bracket) : bracket_(std::move(bracket)) {
  if (bracket_.arity() != 2) throw ArityMismatch("DeformationComplex: bracket must have arity 2");
  if (!gerstenhaber_bracket(bracket_, bracket_).is_zero())
    throw ValidationError("DeformationComplex: [[b, b]] != 0 (Jacobi fails)");
}

DeformationComplex::DeformationComplex(const LieAlgebra& algebra)
    : DeformationComplex(Multiderivation::from_structure(algebra.structure())) {}

Multiderivation DeformationComplex::differential(const Multiderivation& c) const {
  if (c.ambient() != ambient()) throw AmbientMismatch("differential: ambient mismatch");
  return gerstenhaber_bracket(bracket_, c);
}

Multiderivation DeformationComplex::differential_explicit(const Multiderivation& c) const {
  if (c.ambient() != ambient()) throw AmbientMismatch("differential_explicit: ambient mismatch");
  const int n = ambient();
  const int a = c.arity();
  Multiderivation out(n, a + 1);
  if (a + 1 > n) return out;

  const auto tuples = enumerate_tuples(n, a + 1);
  for (std::size_t ti = 0; ti < tuples.size(); ++ti) {
    const IndexTuple& args = tuples[ti];
    std::vector<Rational> value(n);
    // sum_i (-1)^i [x_i, c(.. x_i omitted ..)]
    for (int i = 0; i <= a; ++i) {
      std::vector<int> rest;
      rest.reserve(static_cast<std::size_t>(a));
      for (int p = 0; p <= a; ++p)
        if (p != i) rest.push_back(args[static_cast<std::size_t>(p)]);
      const auto inner = c.eval_indices(rest);
      std::vector<int> pair(2);
      pair[0] = args[static_cast<std::size_t>(i)];
      for (int t = 0; t < n; ++t) {
        if (inner[static_cast<std::size_t>(t)].is_zero()) continue;
        pair[1] = t;
        const auto br = bracket_.eval_indices(pair);
        const Rational f = (i % 2 == 0 ? Rational(1) : Rational(-1)) * inner[static_cast<std::size_t>(t)];
        for (int s = 0; s < n; ++s) value[static_cast<std::size_t>(s)] += f * br[static_cast<std::size_t>(s)];
      }
    }
    // sum_{i<j} (-1)^{i+j} c([x_i, x_j], .. both omitted ..)
    for (int i = 0; i <= a; ++i)
      for (int j = i + 1; j <= a; ++j) {
        const auto br = bracket_.eval_indices({args[static_cast<std::size_t>(i)], args[static_cast<std::size_t>(j)]});
        std::vector<int> rest;
        rest.reserve(static_cast<std::size_t>(a));
        rest.push_back(0);  // placeholder for the bracket slot
        for (int p = 0; p <= a; ++p)
          if (p != i && p != j) rest.push_back(args[static_cast<std::size_t>(p)]);
        for (int t = 0; t < n; ++t) {
          if (br[static_cast<std::size_t>(t)].is_zero()) continue;
          rest[0] = t;
          const auto v = c.eval_indices(rest);
          const Rational f = ((i + j) % 2 == 0 ? Rational(1) : Rational(-1)) * br[static_cast<std::size_t>(t)];
          for (int s = 0; s < n; ++s) value[static_cast<std::size_t>(s)] += f * v[static_cast<std::size_t>(s)];
        }
      }
    for (int s = 0; s < n; ++s) out.coeff(static_cast<std::int64_t>(ti), s) = value[static_cast<std::size_t>(s)];
  }
  return out;
}

bool DeformationComplex::is_maurer_cartan(const Multiderivation& c) const {
  if (c.arity() != 2) throw ArityMismatch("is_maurer_cartan: arity 2 required");
  if (c.ambient() != ambient()) throw AmbientMismatch("is_maurer_cartan: ambient mismatch");
  const Multiderivation mc = differential(c) + Rational(1, 2) * gerstenhaber_bracket(c, c);
  const bool via_dgla = mc.is_zero();

  const Multiderivation total = bracket_ + c;
  const bool via_jacobi = jacobi_defect(total.to_structure()).is_lie;
  if (via_dgla != via_jacobi) throw Error("is_maurer_cartan: the two routes disagree");
  return via_dgla;
}

FiniteComplex DeformationComplex::complex(int max_degree) const {
  const int n = ambient();
  const int top = max_degree == -2 ? n - 1 : max_degree;
  if (top < -1 || top > n - 1) throw DegreeOutOfRange("DeformationComplex::complex: bad top degree");

  std::vector<std::size_t> dims;
  for (int k = -1; k <= top; ++k) dims.push_back(static_cast<std::size_t>(binomial(n, k + 1)) * n);

  std::vector<RationalMatrix> diffs;
  for (int k = -1; k < top; ++k) {
    const std::size_t in_dim = dims[static_cast<std::size_t>(k + 1)];
    const std::size_t out_dim = dims[static_cast<std::size_t>(k + 2)];
    RationalMatrix d(out_dim, in_dim);
    for (std::size_t col = 0; col < in_dim; ++col) {
      Multiderivation basis(n, k + 1);
      basis.coeffs()[col] = Rational(1);
      const Multiderivation image = differential(basis);
      d.set_column(col, image.coeffs());
    }
    diffs.push_back(std::move(d));
  }
  return FiniteComplex(-1, std::move(dims), std::move(diffs));
}

CohomologyResult DeformationComplex::cohomology(int k) const {
  const int n = ambient();
  if (k < -1 || k > n - 1) throw DegreeOutOfRange("DeformationComplex::cohomology: degree " + std::to_string(k));
  return defcoh::cohomology(complex(), k);
}

std::vector<Rational> DeformationComplex::obstruction_class(const Multiderivation& c) const {
  if (c.arity() != 2) throw ArityMismatch("obstruction_class: arity 2 required");
  if (!differential(c).is_zero()) throw NotCocycle("obstruction_class: delta c != 0");
  const Multiderivation z = Rational(1, 2) * gerstenhaber_bracket(c, c);
  const FiniteComplex cx = complex();
  if (!cx.has_degree(2)) return {};
  return class_coordinates(cx, 2, z.coeffs());
}

std::vector<Rational> DeformationComplex::coordinates(const Multiderivation& c) { return c.coeffs(); }

Multiderivation DeformationComplex::from_coordinates(int ambient, int degree, const std::vector<Rational>& coords) {
  Multiderivation c(ambient, degree + 1);
  if (coords.size() != c.coeff_count()) throw ShapeMismatch("from_coordinates: wrong length");
  c.coeffs() = coords;
  return c;
}

}  // namespace defcoh
