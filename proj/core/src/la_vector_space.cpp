#include "defcoh/la_vector_space.hpp"

#include "defcoh/errors.hpp"

namespace defcoh {

LAVectorSpace::LAVectorSpace(int m, int p, RationalMatrix d) : core_dim(m), side_dim(p), partial(std::move(d)) {
  if (m < 0 || p < 0) throw ValidationError("LAVectorSpace: negative dimension");
  if (partial.rows() != static_cast<std::size_t>(p) || partial.cols() != static_cast<std::size_t>(m))
    throw ValidationError("LAVectorSpace: partial must be side_dim x core_dim");
}

namespace {

// Matrix of X -> A * X on row-major flattened r x c inputs (A is r x r).
RationalMatrix left_mul_operator(const RationalMatrix& a, std::size_t c) {
  const std::size_t r = a.cols();
  RationalMatrix op(a.rows() * c, r * c);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < r; ++k)
      for (std::size_t j = 0; j < c; ++j) op.at(i * c + j, k * c + j) = a.at(i, k);
  return op;
}

// Matrix of X -> X * A on row-major flattened r x c inputs (A is c x c').
RationalMatrix right_mul_operator(const RationalMatrix& a, std::size_t r) {
  const std::size_t c = a.rows();
  RationalMatrix op(r * a.cols(), r * c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < c; ++k)
      for (std::size_t j = 0; j < a.cols(); ++j) op.at(i * a.cols() + j, i * c + k) = a.at(k, j);
  return op;
}

}  // namespace

FiniteComplex three_term_complex(const LAVectorSpace& lav) {
  const std::size_t m = static_cast<std::size_t>(lav.core_dim);
  const std::size_t p = static_cast<std::size_t>(lav.side_dim);
  const RationalMatrix& d = lav.partial;

  // d0 : Hom(V0, C) -> End C + End V0, g -> (g.partial, partial.g)
  RationalMatrix d0(m * m + p * p, m * p);
  d0.set_block(0, 0, right_mul_operator(d, m));
  d0.set_block(m * m, 0, left_mul_operator(d, p));

  // d1 : End C + End V0 -> Hom(C, V0), (g1, g2) -> partial.g1 - g2.partial
  RationalMatrix d1(p * m, m * m + p * p);
  d1.set_block(0, 0, left_mul_operator(d, m));
  d1.set_block(0, m * m, -right_mul_operator(d, p));

  return FiniteComplex(-1, {m * p, m * m + p * p, p * m}, {std::move(d0), std::move(d1)});
}

ThreeTermDims three_term_closed_form(const LAVectorSpace& lav) {
  const std::size_t r = rank(lav.partial);
  const std::size_t m = static_cast<std::size_t>(lav.core_dim);
  const std::size_t p = static_cast<std::size_t>(lav.side_dim);
  return ThreeTermDims{(p - r) * (m - r), (p - r) * (p - r) + (m - r) * (m - r), (m - r) * (p - r)};
}

}  // namespace defcoh
