#include "defcoh/two_vector.hpp"

#include <string>

#include "defcoh/errors.hpp"

namespace defcoh {

namespace {

using Vec = std::vector<Rational>;

Vec matvec(const RationalMatrix& m, const Vec& v) {
  if (m.cols() != v.size()) throw ShapeMismatch("matvec: shape mismatch");
  Vec out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!v[j].is_zero()) out[i] += m.at(i, j) * v[j];
  return out;
}

Vec add(Vec a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

Vec scale(int s, Vec a) {
  if (s == 1) return a;
  for (auto& e : a) e = Rational(s) * e;
  return a;
}

/// gamma1 applied to (x_0, .., x_k | w).
Vec eval_g1(const GroupoidCochain& c, const std::vector<Vec>& xs, const Vec& w) {
  Vec arg;
  for (const auto& x : xs) arg.insert(arg.end(), x.begin(), x.end());
  arg.insert(arg.end(), w.begin(), w.end());
  return matvec(c.gamma1, arg);
}

/// gamma2 applied to (x_1, .., x_k | w).
Vec eval_g2(const GroupoidCochain& c, const std::vector<Vec>& xs, const Vec& w) {
  Vec arg;
  for (const auto& x : xs) arg.insert(arg.end(), x.begin(), x.end());
  arg.insert(arg.end(), w.begin(), w.end());
  return matvec(c.gamma2, arg);
}

}  // namespace

GroupoidCochain::GroupoidCochain(const LAVectorSpace& lav, int deg) : degree(deg) {
  if (deg < -1) throw DegreeOutOfRange("GroupoidCochain: degree < -1");
  const std::size_t m = static_cast<std::size_t>(lav.core_dim);
  const std::size_t p = static_cast<std::size_t>(lav.side_dim);
  gamma1 = RationalMatrix(m, gamma1_cols(lav, deg));
  gamma2 = deg == -1 ? RationalMatrix(0, 0) : RationalMatrix(p, gamma2_cols(lav, deg));
}

std::size_t GroupoidCochain::gamma1_cols(const LAVectorSpace& lav, int degree) {
  const std::size_t m = static_cast<std::size_t>(lav.core_dim);
  const std::size_t p = static_cast<std::size_t>(lav.side_dim);
  return degree == -1 ? p : static_cast<std::size_t>(degree + 1) * m + p;
}

std::size_t GroupoidCochain::gamma2_cols(const LAVectorSpace& lav, int degree) {
  const std::size_t m = static_cast<std::size_t>(lav.core_dim);
  const std::size_t p = static_cast<std::size_t>(lav.side_dim);
  return degree == -1 ? 0 : static_cast<std::size_t>(degree) * m + p;
}

std::size_t GroupoidCochain::dim(const LAVectorSpace& lav, int degree) {
  const std::size_t m = static_cast<std::size_t>(lav.core_dim);
  const std::size_t p = static_cast<std::size_t>(lav.side_dim);
  return m * gamma1_cols(lav, degree) + (degree == -1 ? 0 : p * gamma2_cols(lav, degree));
}

std::vector<Rational> GroupoidCochain::coordinates() const {
  std::vector<Rational> out = gamma1.entries();
  const auto& g2 = gamma2.entries();
  out.insert(out.end(), g2.begin(), g2.end());
  return out;
}

GroupoidCochain GroupoidCochain::from_coordinates(const LAVectorSpace& lav, int degree, const std::vector<Rational>& coords) {
  GroupoidCochain c(lav, degree);
  if (coords.size() != dim(lav, degree)) throw ShapeMismatch("GroupoidCochain: wrong coordinate count");
  const std::size_t g1_len = c.gamma1.rows() * c.gamma1.cols();
  for (std::size_t i = 0; i < g1_len; ++i) c.gamma1.at(i / c.gamma1.cols(), i % c.gamma1.cols()) = coords[i];
  for (std::size_t i = g1_len; i < coords.size(); ++i) {
    const std::size_t r = (i - g1_len) / c.gamma2.cols();
    c.gamma2.at(r, (i - g1_len) % c.gamma2.cols()) = coords[i];
  }
  return c;
}

GroupoidCochain groupoid_differential(const LAVectorSpace& lav, const GroupoidCochain& c) {
  const int m = lav.core_dim;
  const int p = lav.side_dim;
  const RationalMatrix& d = lav.partial;

  if (c.degree == -1) {
    // delta gamma = ((c0, v) -> gamma(partial c0), v -> partial gamma(v)).
    GroupoidCochain out(lav, 0);
    const RationalMatrix a0 = c.gamma1 * d;
    const RationalMatrix f = d * c.gamma1;
    out.gamma1.set_block(0, 0, a0);
    out.gamma2.set_block(0, 0, f);
    return out;
  }

  const int k = c.degree;
  GroupoidCochain out(lav, k + 1);

  const auto zero_c = [&] { return Vec(static_cast<std::size_t>(m)); };
  const auto zero_v = [&] { return Vec(static_cast<std::size_t>(p)); };
  const auto basis_c = [&](int t) {
    Vec e(static_cast<std::size_t>(m));
    e[static_cast<std::size_t>(t)] = Rational(1);
    return e;
  };
  const auto basis_v = [&](int t) {
    Vec e(static_cast<std::size_t>(p));
    e[static_cast<std::size_t>(t)] = Rational(1);
    return e;
  };

  // Gamma1 on (c_0, .., c_{k+1} | v):
  //   -gamma1(c_0, 0, .., 0 | 0)
  //   + sum_{i=1..k} (-1)^{i-1} gamma1(c_0, .., c_i + c_{i+1}, .., c_{k+1} | v)
  //   + (-1)^k gamma1(c_0, .., c_k | partial c_{k+1} + v)
  const auto eval_big_g1 = [&](const std::vector<Vec>& cs, const Vec& v) {
    Vec acc(static_cast<std::size_t>(m));
    {
      std::vector<Vec> args(static_cast<std::size_t>(k + 1), zero_c());
      args[0] = cs[0];
      acc = add(acc, scale(-1, eval_g1(c, args, zero_v())));
    }
    for (int i = 1; i <= k; ++i) {
      std::vector<Vec> args;
      args.reserve(static_cast<std::size_t>(k + 1));
      for (int t = 0; t < i; ++t) args.push_back(cs[static_cast<std::size_t>(t)]);
      args.push_back(add(cs[static_cast<std::size_t>(i)], cs[static_cast<std::size_t>(i + 1)]));
      for (int t = i + 2; t <= k + 1; ++t) args.push_back(cs[static_cast<std::size_t>(t)]);
      acc = add(acc, scale((i - 1) % 2 == 0 ? 1 : -1, eval_g1(c, args, v)));
    }
    {
      std::vector<Vec> args(cs.begin(), cs.begin() + (k + 1));
      const Vec acted = add(matvec(d, cs[static_cast<std::size_t>(k + 1)]), v);
      acc = add(acc, scale(k % 2 == 0 ? 1 : -1, eval_g1(c, args, acted)));
    }
    return acc;
  };

  // Gamma2 on (c_1, .., c_{k+1} | v):
  //   -(partial gamma1(c_1, .., c_{k+1} | v) + gamma2(c_2, .., c_{k+1} | v))
  //   + sum_{i=1..k} (-1)^{i-1} gamma2(c_1, .., c_i + c_{i+1}, .., c_{k+1} | v)
  //   + (-1)^k gamma2(c_1, .., c_k | partial c_{k+1} + v)
  // The first line is the tangent action of the Tm-bar fourth slot.
  const auto eval_big_g2 = [&](const std::vector<Vec>& cs, const Vec& v) {
    // cs holds c_1 .. c_{k+1} here.
    Vec acc(static_cast<std::size_t>(p));
    {
      const Vec g1v = eval_g1(c, cs, v);
      std::vector<Vec> tail(cs.begin() + 1, cs.end());
      const Vec g2v = eval_g2(c, tail, v);
      acc = add(acc, scale(-1, add(matvec(d, g1v), g2v)));
    }
    for (int i = 1; i <= k; ++i) {
      std::vector<Vec> args;
      args.reserve(static_cast<std::size_t>(k));
      for (int t = 0; t < i - 1; ++t) args.push_back(cs[static_cast<std::size_t>(t)]);
      args.push_back(add(cs[static_cast<std::size_t>(i - 1)], cs[static_cast<std::size_t>(i)]));
      for (int t = i + 1; t <= k; ++t) args.push_back(cs[static_cast<std::size_t>(t)]);
      acc = add(acc, scale((i - 1) % 2 == 0 ? 1 : -1, eval_g2(c, args, v)));
    }
    {
      std::vector<Vec> args(cs.begin(), cs.begin() + k);
      const Vec acted = add(matvec(d, cs[static_cast<std::size_t>(k)]), v);
      acc = add(acc, scale(k % 2 == 0 ? 1 : -1, eval_g2(c, args, acted)));
    }
    return acc;
  };

  // Assemble Gamma1 column by column over the basis of C^{k+2} + V0.
  for (int slot = 0; slot < k + 2; ++slot)
    for (int t = 0; t < m; ++t) {
      std::vector<Vec> cs(static_cast<std::size_t>(k + 2), zero_c());
      cs[static_cast<std::size_t>(slot)] = basis_c(t);
      const Vec col = eval_big_g1(cs, zero_v());
      for (int i = 0; i < m; ++i) out.gamma1.at(static_cast<std::size_t>(i), static_cast<std::size_t>(slot * m + t)) = col[static_cast<std::size_t>(i)];
    }
  for (int t = 0; t < p; ++t) {
    const std::vector<Vec> cs(static_cast<std::size_t>(k + 2), zero_c());
    const Vec col = eval_big_g1(cs, basis_v(t));
    for (int i = 0; i < m; ++i) out.gamma1.at(static_cast<std::size_t>(i), static_cast<std::size_t>((k + 2) * m + t)) = col[static_cast<std::size_t>(i)];
  }

  // Assemble Gamma2 column by column over the basis of C^{k+1} + V0.
  for (int slot = 0; slot < k + 1; ++slot)
    for (int t = 0; t < m; ++t) {
      std::vector<Vec> cs(static_cast<std::size_t>(k + 1), zero_c());
      cs[static_cast<std::size_t>(slot)] = basis_c(t);
      const Vec col = eval_big_g2(cs, zero_v());
      for (int i = 0; i < p; ++i) out.gamma2.at(static_cast<std::size_t>(i), static_cast<std::size_t>(slot * m + t)) = col[static_cast<std::size_t>(i)];
    }
  for (int t = 0; t < p; ++t) {
    const std::vector<Vec> cs(static_cast<std::size_t>(k + 1), zero_c());
    const Vec col = eval_big_g2(cs, basis_v(t));
    for (int i = 0; i < p; ++i) out.gamma2.at(static_cast<std::size_t>(i), static_cast<std::size_t>((k + 1) * m + t)) = col[static_cast<std::size_t>(i)];
  }

  return out;
}

FiniteComplex full_complex(const LAVectorSpace& lav, int max_degree) {
  if (max_degree < 1) throw DegreeOutOfRange("full_complex: max_degree must be >= 1");
  std::vector<std::size_t> dims;
  for (int k = -1; k <= max_degree; ++k) dims.push_back(GroupoidCochain::dim(lav, k));

  std::vector<RationalMatrix> diffs;
  for (int k = -1; k < max_degree; ++k) {
    const std::size_t in_dim = dims[static_cast<std::size_t>(k + 1)];
    const std::size_t out_dim = dims[static_cast<std::size_t>(k + 2)];
    RationalMatrix d(out_dim, in_dim);
    for (std::size_t col = 0; col < in_dim; ++col) {
      std::vector<Rational> unit(in_dim);
      unit[col] = Rational(1);
      const GroupoidCochain image = groupoid_differential(lav, GroupoidCochain::from_coordinates(lav, k, unit));
      d.set_column(col, image.coordinates());
    }
    diffs.push_back(std::move(d));
  }
  return FiniteComplex(-1, std::move(dims), std::move(diffs));
}

namespace {

/// Embedding of the normalized payloads into full coordinates.
GroupoidCochain embed_normalized(const LAVectorSpace& lav, int degree, const std::vector<Rational>& payload) {
  const std::size_t m = static_cast<std::size_t>(lav.core_dim);
  const std::size_t p = static_cast<std::size_t>(lav.side_dim);
  GroupoidCochain c(lav, degree);
  if (degree == -1) {
    for (std::size_t i = 0; i < m * p; ++i) c.gamma1.at(i / p, i % p) = payload[i];
  } else if (degree == 0) {
    // payload = (A0 in End C, F in End V0); gamma1 = [A0 | 0], gamma2 = [F].
    for (std::size_t i = 0; i < m * m; ++i) c.gamma1.at(i / m, i % m) = payload[i];
    for (std::size_t i = 0; i < p * p; ++i) c.gamma2.at(i / p, i % p) = payload[m * m + i];
  } else if (degree == 1) {
    // payload = B1 in Hom(C, V0); gamma1 = 0, gamma2 = [B1 | 0].
    for (std::size_t i = 0; i < p * m; ++i) c.gamma2.at(i / m, i % m) = payload[i];
  } else {
    throw DegreeOutOfRange("normalized cochains vanish above degree 1");
  }
  return c;
}

/// Extraction (the partial inverse of embed_normalized); throws when the
/// cochain is not normalized.
std::vector<Rational> extract_normalized(const LAVectorSpace& lav, const GroupoidCochain& c) {
  const std::size_t m = static_cast<std::size_t>(lav.core_dim);
  const std::size_t p = static_cast<std::size_t>(lav.side_dim);
  std::vector<Rational> payload;
  if (c.degree == -1) {
    payload = c.gamma1.entries();
  } else if (c.degree == 0) {
    payload = c.gamma1.block(0, 0, m, m).entries();
    const auto f = c.gamma2.entries();
    payload.insert(payload.end(), f.begin(), f.end());
  } else if (c.degree == 1) {
    payload = c.gamma2.block(0, 0, p, m).entries();
  } else {
    payload = {};
  }
  const GroupoidCochain back = c.degree > 1 ? GroupoidCochain(lav, c.degree) : embed_normalized(lav, c.degree, payload);
  if (!(back.gamma1 == c.gamma1) || !(back.gamma2 == c.gamma2))
    throw Error("extract_normalized: cochain is not normalized at degree " + std::to_string(c.degree));
  return payload;
}

int matrix_sign_match(const RationalMatrix& a, const RationalMatrix& b) {
  if (a == b) return 1;
  if (a == -b) return -1;
  return 0;
}

}  // namespace

NormalizedSubcomplex normalized_subcomplex(const LAVectorSpace& lav, int max_degree) {
  if (max_degree < 1) throw DegreeOutOfRange("normalized_subcomplex: max_degree must be >= 1");
  const std::size_t m = static_cast<std::size_t>(lav.core_dim);
  const std::size_t p = static_cast<std::size_t>(lav.side_dim);

  std::vector<std::size_t> dims;
  for (int k = -1; k <= max_degree; ++k) {
    if (k == -1 || k == 1)
      dims.push_back(m * p);
    else if (k == 0)
      dims.push_back(m * m + p * p);
    else
      dims.push_back(0);
  }

  std::vector<RationalMatrix> diffs;
  std::vector<RationalMatrix> incl;
  FiniteComplex full = full_complex(lav, max_degree);
  for (int k = -1; k < max_degree; ++k) {
    const std::size_t in_dim = dims[static_cast<std::size_t>(k + 1)];
    const std::size_t out_dim = dims[static_cast<std::size_t>(k + 2)];
    RationalMatrix d(out_dim, in_dim);
    for (std::size_t col = 0; col < in_dim; ++col) {
      std::vector<Rational> unit(in_dim);
      unit[col] = Rational(1);
      const GroupoidCochain image = groupoid_differential(lav, embed_normalized(lav, k, unit));
      const auto payload = extract_normalized(lav, image);
      d.set_column(col, payload);
    }
    diffs.push_back(std::move(d));
  }
  for (int k = -1; k <= max_degree; ++k) {
    RationalMatrix f(full.dim(k), dims[static_cast<std::size_t>(k + 1)]);
    for (std::size_t col = 0; col < f.cols(); ++col) {
      std::vector<Rational> unit(f.cols());
      unit[col] = Rational(1);
      f.set_column(col, embed_normalized(lav, k, unit).coordinates());
    }
    incl.push_back(std::move(f));
  }

  FiniteComplex norm(-1, dims, diffs);
  ComplexMap inclusion(norm, std::move(full), std::move(incl));

  const FiniteComplex three = three_term_complex(lav);
  const int s0 = matrix_sign_match(diffs[0], three.differential_out(-1));
  const int s1 = matrix_sign_match(diffs[1], three.differential_out(0));
  return NormalizedSubcomplex{std::move(norm), std::move(inclusion), s0, s1};
}

QuasiIsoReport quasi_iso_check(const LAVectorSpace& lav) {
  // H^1 of the full complex needs the differential into degree 2.
  NormalizedSubcomplex norm = normalized_subcomplex(lav, 2);
  const FiniteComplex& full = norm.inclusion.target();

  QuasiIsoReport report{{}, true};
  for (int k = -1; k <= 1; ++k) {
    const auto hn = cohomology(norm.cx, k);
    const auto hf = cohomology(full, k);
    RationalMatrix induced(hf.dim, hn.dim);
    for (std::size_t col = 0; col < hn.dim; ++col) {
      const auto image = norm.inclusion.component(k) * hn.representatives.column(col);
      induced.set_column(col, class_coordinates(full, k, image.column_vector(0)));
    }
    const bool injective = rank(induced) == hn.dim;
    const bool ok = injective && hn.dim == hf.dim;
    report.nodes.push_back({k, hf.dim, hn.dim, injective, ok});
    report.all_ok = report.all_ok && ok;
  }
  return report;
}

}  // namespace defcoh
