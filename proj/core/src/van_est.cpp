#include "defcoh/van_est.hpp"

#include <string>

#include "defcoh/errors.hpp"

namespace defcoh {

namespace {

using Vec = std::vector<Rational>;

/// An affine vector field z -> lin z + constant on V1 = C + V0.
struct AffineField {
  RationalMatrix lin;
  RationalMatrix constant;  // column vector

  static AffineField zero(std::size_t n) { return {RationalMatrix::zero(n, n), RationalMatrix::zero(n, 1)}; }
};

AffineField field_bracket(const AffineField& x, const AffineField& y) {
  AffineField out;
  out.lin = y.lin * x.lin - x.lin * y.lin;
  out.constant = y.lin * x.constant - x.lin * y.constant;
  return out;
}

/// A section of the algebroid of C x V0: an affine map V0 -> C.
struct Section {
  RationalMatrix lin;       // m x p
  RationalMatrix constant;  // m x 1
};

/// The right-invariant vector field of a section:
/// (c, v) -> (sigma(partial c + v), 0).
AffineField right_invariant(const LAVectorSpace& lav, const Section& sigma) {
  const std::size_t m = static_cast<std::size_t>(lav.core_dim);
  const std::size_t p = static_cast<std::size_t>(lav.side_dim);
  AffineField f = AffineField::zero(m + p);
  f.lin.set_block(0, 0, sigma.lin * lav.partial);
  f.lin.set_block(0, m, sigma.lin);
  f.constant.set_block(0, 0, sigma.constant);
  return f;
}

/// A degree-0 deformation cochain of the 2-vector space, possibly with an
/// affine part (those arise as intermediate values of the van Est
/// compositions): the vector field (c0, v) -> (A c0 + E v + e0, F v + f0).
struct AffineZeroCochain {
  RationalMatrix a;   // m x m
  RationalMatrix e;   // m x p
  RationalMatrix e0;  // m x 1
  RationalMatrix f;   // p x p
  RationalMatrix f0;  // p x 1

  AffineField field(const LAVectorSpace& lav) const {
    const std::size_t m = static_cast<std::size_t>(lav.core_dim);
    const std::size_t p = static_cast<std::size_t>(lav.side_dim);
    AffineField out = AffineField::zero(m + p);
    out.lin.set_block(0, 0, a);
    out.lin.set_block(0, m, e);
    out.lin.set_block(m, m, f);
    out.constant.set_block(0, 0, e0);
    out.constant.set_block(m, 0, f0);
    return out;
  }
};

/// R_sigma at degree 0: the Lie bracket [c, right-invariant sigma] restricted
/// to units, read back as a section of the algebroid. The V0 components must
/// vanish there.
Section r_degree0(const LAVectorSpace& lav, const AffineZeroCochain& c, const Section& sigma) {
  const std::size_t m = static_cast<std::size_t>(lav.core_dim);
  const std::size_t p = static_cast<std::size_t>(lav.side_dim);
  const AffineField br = field_bracket(c.field(lav), right_invariant(lav, sigma));
  if (!br.lin.block(m, m, p, p).is_zero() || !br.constant.block(m, 0, p, 1).is_zero())
    throw Error("van Est: bracket with a right-invariant field is not tangent to the units");
  return Section{br.lin.block(0, m, m, p), br.constant.block(0, 0, m, 1)};
}

/// R_sigma at degree 1: (-1) d/de at 0 of c evaluated against the inverse of
/// the flow arrow through the unit; the first-order jet of the flow is
/// e -> e sigma(v).
AffineZeroCochain r_degree1(const LAVectorSpace& lav, const GroupoidCochain& c, const Section& sigma) {
  const std::size_t m = static_cast<std::size_t>(lav.core_dim);
  const std::size_t p = static_cast<std::size_t>(lav.side_dim);
  if (c.degree != 1) throw DegreeOutOfRange("r_degree1: degree 1 cochain required");

  // gamma1 = [A0 A1 | E], gamma2 = [B1 | F].
  const RationalMatrix a1 = c.gamma1.block(0, m, m, m);
  const RationalMatrix e = c.gamma1.block(0, 2 * m, m, p);
  const RationalMatrix b1 = c.gamma2.block(0, 0, p, m);
  const RationalMatrix f = c.gamma2.block(0, m, p, p);

  // d/de gamma1(c1, -c_e, partial c_e + v) = gamma1(0, -sigma(v), partial sigma(v)),
  // and the same pattern for gamma2; R flips the sign.
  AffineZeroCochain out;
  out.a = RationalMatrix::zero(m, m);
  out.e = a1 * sigma.lin - e * lav.partial * sigma.lin;
  out.e0 = a1 * sigma.constant - e * lav.partial * sigma.constant;
  out.f = b1 * sigma.lin - f * lav.partial * sigma.lin;
  out.f0 = b1 * sigma.constant - f * lav.partial * sigma.constant;
  return out;
}

Section basis_linear_section(const LAVectorSpace& lav, int i, int l) {
  Section s{RationalMatrix::zero(static_cast<std::size_t>(lav.core_dim), static_cast<std::size_t>(lav.side_dim)),
            RationalMatrix::zero(static_cast<std::size_t>(lav.core_dim), 1)};
  s.lin.at(static_cast<std::size_t>(i), static_cast<std::size_t>(l)) = Rational(1);
  return s;
}

Section basis_constant_section(const LAVectorSpace& lav, int i) {
  Section s{RationalMatrix::zero(static_cast<std::size_t>(lav.core_dim), static_cast<std::size_t>(lav.side_dim)),
            RationalMatrix::zero(static_cast<std::size_t>(lav.core_dim), 1)};
  s.constant.at(static_cast<std::size_t>(i), 0) = Rational(1);
  return s;
}

/// Recovers the pair (phi1, phi2) of a derivation D from its values on
/// constant and linear sections: D(const chi) = -phi1 chi and
/// D(alpha) = alpha phi2 - phi1 alpha.
ReducedCochain extract_degree0(const LAVectorSpace& lav, const AffineZeroCochain& c) {
  const std::size_t m = static_cast<std::size_t>(lav.core_dim);
  const std::size_t p = static_cast<std::size_t>(lav.side_dim);

  ReducedCochain out{0, RationalMatrix::zero(m, m), RationalMatrix::zero(p, p)};
  for (std::size_t j = 0; j < m; ++j) {
    const Section s = r_degree0(lav, c, basis_constant_section(lav, static_cast<int>(j)));
    if (!s.lin.is_zero()) throw Error("van Est: value on a constant section is not constant");
    for (std::size_t i = 0; i < m; ++i) out.a.at(i, j) = -s.constant.at(i, 0);
  }
  for (std::size_t l = 0; l < p && m > 0; ++l) {
    for (std::size_t i = 0; i < m; ++i) {
      const Section s = r_degree0(lav, c, basis_linear_section(lav, static_cast<int>(i), static_cast<int>(l)));
      if (!s.constant.is_zero()) throw Error("van Est: value on a linear section has a constant part");
      // alpha phi2 = D(alpha) + phi1 alpha with alpha = E_il: row i carries
      // row l of phi2, every other row must vanish.
      RationalMatrix alpha(m, p);
      alpha.at(i, l) = Rational(1);
      const RationalMatrix t = s.lin + out.a * alpha;
      for (std::size_t r = 0; r < m; ++r)
        for (std::size_t jj = 0; jj < p; ++jj) {
          if (r == i) {
            if (i == 0)
              out.b.at(l, jj) = t.at(r, jj);
            else if (t.at(r, jj) != out.b.at(l, jj))
              throw Error("van Est: inconsistent derivation data across linear sections");
          } else if (!t.at(r, jj).is_zero()) {
            throw Error("van Est: derivation of a rank-one section has extra rows");
          }
        }
    }
  }
  return out;
}

}  // namespace

ReducedCochain ReducedCochain::zero(const LAVectorSpace& lav, int degree) {
  const std::size_t m = static_cast<std::size_t>(lav.core_dim);
  const std::size_t p = static_cast<std::size_t>(lav.side_dim);
  switch (degree) {
    case -1:
      return {degree, RationalMatrix::zero(m, p), RationalMatrix()};
    case 0:
      return {degree, RationalMatrix::zero(m, m), RationalMatrix::zero(p, p)};
    case 1:
      return {degree, RationalMatrix::zero(p, m), RationalMatrix()};
    default:
      throw DegreeOutOfRange("ReducedCochain: degree " + std::to_string(degree));
  }
}

std::vector<Rational> ReducedCochain::coordinates() const {
  std::vector<Rational> out = a.entries();
  const auto& be = b.entries();
  out.insert(out.end(), be.begin(), be.end());
  return out;
}

ReducedCochain ReducedCochain::from_coordinates(const LAVectorSpace& lav, int degree, const std::vector<Rational>& coords) {
  ReducedCochain out = zero(lav, degree);
  const std::size_t a_len = out.a.rows() * out.a.cols();
  if (coords.size() != a_len + out.b.rows() * out.b.cols()) throw ShapeMismatch("ReducedCochain: wrong coordinate count");
  for (std::size_t i = 0; i < a_len; ++i) out.a.at(i / out.a.cols(), i % out.a.cols()) = coords[i];
  for (std::size_t i = a_len; i < coords.size(); ++i) out.b.at((i - a_len) / out.b.cols(), (i - a_len) % out.b.cols()) = coords[i];
  return out;
}

ReducedCochain van_est_reduced(const LAVectorSpace& lav, const ReducedCochain& c) {
  const std::size_t m = static_cast<std::size_t>(lav.core_dim);
  const std::size_t p = static_cast<std::size_t>(lav.side_dim);

  switch (c.degree) {
    case -1:
      // Both sides are the sections Hom(V0, C) literally.
      return c;
    case 0: {
      if (m == 0) return ReducedCochain::zero(lav, 0);
      AffineZeroCochain z;
      z.a = c.a;
      z.e = RationalMatrix::zero(m, p);
      z.e0 = RationalMatrix::zero(m, 1);
      z.f = c.b;
      z.f0 = RationalMatrix::zero(p, 1);
      return extract_degree0(lav, z);
    }
    case 1: {
      ReducedCochain out = ReducedCochain::zero(lav, 1);
      if (m == 0 || p == 0) return out;
      // Normalized degree-1 cochain: gamma1 = 0, gamma2 = [B | 0].
      GroupoidCochain g(lav, 1);
      g.gamma2.set_block(0, 0, c.a);

      // VE(c)(sigma0, sigma1) = R_{sigma1} R_{sigma0}(c) - R_{sigma0} R_{sigma1}(c),
      // evaluated on (linear, constant) pairs: the value is the constant
      // section alpha(B' chi) in the three-term coordinates.
      for (std::size_t l = 0; l < p; ++l)
        for (std::size_t col = 0; col < m; ++col) {
          const Section alpha = basis_linear_section(lav, 0, static_cast<int>(l));
          const Section chi = basis_constant_section(lav, static_cast<int>(col));
          const Section s1 = r_degree0(lav, r_degree1(lav, g, alpha), chi);
          const Section s2 = r_degree0(lav, r_degree1(lav, g, chi), alpha);
          const RationalMatrix lin = s1.lin - s2.lin;
          const RationalMatrix val = s1.constant - s2.constant;
          if (!lin.is_zero()) throw Error("van Est: value on a (linear, constant) pair is not constant");
          // val = alpha(B' chi) = e_0 (B' chi)_l with alpha = E_0l.
          for (std::size_t r = 1; r < m; ++r)
            if (!val.at(r, 0).is_zero()) throw Error("van Est: rank-one structure violated at degree 1");
          out.a.at(l, col) = val.at(0, 0);
        }
      return out;
    }
    default:
      throw DegreeOutOfRange("van_est_reduced: degree " + std::to_string(c.degree));
  }
}

VanEstReport van_est_suite(const LAVectorSpace& lav) {
  VanEstReport report{{0, 0, 0}, true, true};
  const std::size_t m = static_cast<std::size_t>(lav.core_dim);
  const std::size_t p = static_cast<std::size_t>(lav.side_dim);

  // Degreewise constant sign against the identity, over a full payload basis.
  for (int deg = -1; deg <= 1; ++deg) {
    const std::size_t dim = ReducedCochain::zero(lav, deg).coordinates().size();
    int sign = 0;
    for (std::size_t i = 0; i < dim; ++i) {
      std::vector<Rational> unit(dim);
      unit[i] = Rational(1);
      const ReducedCochain in = ReducedCochain::from_coordinates(lav, deg, unit);
      const auto out = van_est_reduced(lav, in).coordinates();
      int this_sign = 0;
      if (out == unit) this_sign = 1;
      std::vector<Rational> neg(unit.size());
      for (std::size_t j = 0; j < unit.size(); ++j) neg[j] = -unit[j];
      if (out == neg) this_sign = this_sign == 0 ? -1 : this_sign;
      if (this_sign == 0 || (sign != 0 && this_sign != sign)) {
        report.identity_ok = false;
        sign = this_sign == 0 ? sign : this_sign;
      } else {
        sign = this_sign;
      }
    }
    report.signs[static_cast<std::size_t>(deg + 1)] = sign == 0 ? 1 : sign;
  }

  // Chain map: VE delta_norm = delta_three VE on a payload basis, degrees
  // -1 -> 0 and 0 -> 1 (the normalized complex vanishes above 1).
  const FiniteComplex three = three_term_complex(lav);
  const NormalizedSubcomplex norm = normalized_subcomplex(lav, 2);
  for (int deg = -1; deg <= 0; ++deg) {
    const std::size_t dim = ReducedCochain::zero(lav, deg).coordinates().size();
    for (std::size_t i = 0; i < dim; ++i) {
      std::vector<Rational> unit(dim);
      unit[i] = Rational(1);
      // Source route: normalized differential, then VE.
      const auto d_norm = norm.cx.differential_out(deg) * from_column(unit);
      const ReducedCochain d_in = ReducedCochain::from_coordinates(lav, deg + 1, d_norm.column_vector(0));
      const auto left = van_est_reduced(lav, d_in).coordinates();
      // Target route: VE, then the three-term differential.
      const auto ve = van_est_reduced(lav, ReducedCochain::from_coordinates(lav, deg, unit)).coordinates();
      const auto right = (three.differential_out(deg) * from_column(ve)).column_vector(0);
      if (left != right) report.chain_map_ok = false;
    }
  }
  if (m + p == 0) report.identity_ok = true;
  return report;
}

}  // namespace defcoh
