#include "defcoh/vb_algebra.hpp"

#include <string>

#include "defcoh/chevalley_eilenberg.hpp"
#include "defcoh/errors.hpp"
#include "defcoh/tuples.hpp"

namespace defcoh {

VBAlgebra::VBAlgebra(Representation theta) : theta_(std::move(theta)), total_(semidirect_product(theta_.algebra(), theta_)) {
  // The action recovered from the total bracket must be theta itself.
  const int n = dim_g();
  const int m = core_dim();
  for (int i = 0; i < n; ++i)
    for (int b = 0; b < m; ++b) {
      const auto v = total_.bracket(i, n + b);
      for (int a = 0; a < m; ++a)
        if (v[static_cast<std::size_t>(n + a)] != theta_.action(i).at(a, b))
          throw ValidationError("VBAlgebra: core representation of the total algebra differs from theta");
    }
}

RationalMatrix VBAlgebra::scaling(const Rational& lambda) const {
  RationalMatrix h = RationalMatrix::identity(static_cast<std::size_t>(total_dim()));
  for (int i = dim_g(); i < total_dim(); ++i) h.at(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) = lambda;
  return h;
}

int block_weight(const VBAlgebra& vba, const IndexTuple& tuple, int component) {
  int w = 0;
  for (int t : tuple)
    if (vba.is_core_index(t)) ++w;
  if (vba.is_core_index(component)) --w;
  return w;
}

Multiderivation WeightDecomposition::component(int q, int ambient, int arity) const {
  const auto it = components.find(q);
  if (it != components.end()) return it->second;
  return Multiderivation(ambient, arity);
}

WeightDecomposition weight_decompose(const VBAlgebra& vba, const Multiderivation& c) {
  if (c.ambient() != vba.total_dim()) throw AmbientMismatch("weight_decompose: ambient is not the total algebra");
  WeightDecomposition out;
  const int n = c.ambient();
  if (c.arity() > n) return out;
  const auto tuples = enumerate_tuples(n, c.arity());
  for (std::size_t ti = 0; ti < tuples.size(); ++ti)
    for (int comp = 0; comp < n; ++comp) {
      const Rational& v = c.coeff(static_cast<std::int64_t>(ti), comp);
      if (v.is_zero()) continue;
      const int q = block_weight(vba, tuples[ti], comp);
      auto it = out.components.find(q);
      if (it == out.components.end()) it = out.components.emplace(q, Multiderivation(n, c.arity())).first;
      it->second.coeff(static_cast<std::int64_t>(ti), comp) = v;
    }
  return out;
}

Multiderivation linearize(const VBAlgebra& vba, const Multiderivation& c) {
  return weight_decompose(vba, c).component(0, c.ambient(), c.arity());
}

Multiderivation core_part(const VBAlgebra& vba, const Multiderivation& c) {
  return weight_decompose(vba, c).component(-1, c.ambient(), c.arity());
}

std::vector<Rational> LinearSubcomplex::coordinates(const VBAlgebra& vba, const Multiderivation& c) const {
  const int degree = c.arity() - 1;
  if (degree < cx.min_degree() || degree > cx.max_degree()) throw DegreeOutOfRange("linear coordinates: degree out of range");
  const auto& idx = basis[static_cast<std::size_t>(degree - cx.min_degree())];
  std::vector<Rational> coords(idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i) coords[i] = c.coeffs()[idx[i]];
  // No mass outside the weight-0 block may be dropped.
  Multiderivation check = cochain(vba, degree, coords);
  if (!(check == c)) throw NotLinear("linear coordinates: cochain has components outside weight 0");
  return coords;
}

Multiderivation LinearSubcomplex::cochain(const VBAlgebra& vba, int degree, const std::vector<Rational>& coords) const {
  if (degree < cx.min_degree() || degree > cx.max_degree()) throw DegreeOutOfRange("linear cochain: degree out of range");
  const auto& idx = basis[static_cast<std::size_t>(degree - cx.min_degree())];
  if (coords.size() != idx.size()) throw ShapeMismatch("linear cochain: wrong coordinate count");
  Multiderivation c(vba.total_dim(), degree + 1);
  for (std::size_t i = 0; i < idx.size(); ++i) c.coeffs()[idx[i]] = coords[i];
  return c;
}

LinearSubcomplex linear_subcomplex(const VBAlgebra& vba) {
  const int n = vba.dim_g();
  const int total = vba.total_dim();
  const int top = n;  // weight-0 terms vanish above degree dim g
  const DeformationComplex handle(vba.total());

  LinearSubcomplex sub{FiniteComplex(-1, {0}, {}), {}};
  std::vector<std::size_t> dims;
  std::vector<std::vector<std::size_t>> basis;
  for (int k = -1; k <= top; ++k) {
    std::vector<std::size_t> idx;
    if (k + 1 <= total) {
      const auto tuples = enumerate_tuples(total, k + 1);
      for (std::size_t ti = 0; ti < tuples.size(); ++ti)
        for (int comp = 0; comp < total; ++comp)
          if (block_weight(vba, tuples[ti], comp) == 0) idx.push_back(ti * static_cast<std::size_t>(total) + static_cast<std::size_t>(comp));
    }
    dims.push_back(idx.size());
    basis.push_back(std::move(idx));
  }

  std::vector<RationalMatrix> diffs;
  for (int k = -1; k < top; ++k) {
    const auto& in_idx = basis[static_cast<std::size_t>(k + 1)];
    const auto& out_idx = basis[static_cast<std::size_t>(k + 2)];
    RationalMatrix d(out_idx.size(), in_idx.size());
    for (std::size_t col = 0; col < in_idx.size(); ++col) {
      Multiderivation e(total, k + 1);
      e.coeffs()[in_idx[col]] = Rational(1);
      const Multiderivation image = handle.differential(e);
      // delta preserves weight, so the image must live on the weight-0 block.
      std::vector<Rational> coords(out_idx.size());
      for (std::size_t i = 0; i < out_idx.size(); ++i) coords[i] = image.coeffs()[out_idx[i]];
      Multiderivation rebuilt(total, k + 2);
      for (std::size_t i = 0; i < out_idx.size(); ++i) rebuilt.coeffs()[out_idx[i]] = coords[i];
      if (!(rebuilt == image)) throw Error("linear_subcomplex: differential leaks outside weight 0");
      d.set_column(col, coords);
    }
    diffs.push_back(std::move(d));
  }
  sub.cx = FiniteComplex(-1, std::move(dims), std::move(diffs));
  sub.basis = std::move(basis);
  return sub;
}

std::vector<Rational> EndValuedForm::coordinates(int core_dim) const {
  std::vector<Rational> out;
  out.reserve(values.size() * static_cast<std::size_t>(core_dim) * core_dim);
  for (const auto& v : values)
    for (std::size_t i = 0; i < v.rows(); ++i)
      for (std::size_t j = 0; j < v.cols(); ++j) out.push_back(v.at(i, j));
  return out;
}

EndValuedForm EndValuedForm::from_coordinates(int dim_g, int core_dim, int arity, const std::vector<Rational>& coords) {
  EndValuedForm f;
  f.arity = arity;
  const std::int64_t count = arity < 0 ? 0 : binomial(dim_g, arity);
  if (coords.size() != static_cast<std::size_t>(count) * core_dim * core_dim)
    throw ShapeMismatch("EndValuedForm: wrong coordinate count");
  std::size_t pos = 0;
  for (std::int64_t t = 0; t < count; ++t) {
    RationalMatrix m(static_cast<std::size_t>(core_dim), static_cast<std::size_t>(core_dim));
    for (int i = 0; i < core_dim; ++i)
      for (int j = 0; j < core_dim; ++j) m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = coords[pos++];
    f.values.push_back(std::move(m));
  }
  return f;
}

SplitCochain splitting_iso(const VBAlgebra& vba, const Multiderivation& c) {
  if (c.ambient() != vba.total_dim()) throw AmbientMismatch("splitting_iso: ambient is not the total algebra");
  {
    const auto dec = weight_decompose(vba, c);
    for (const auto& [q, comp] : dec.components)
      if (q != 0 && !comp.is_zero()) throw NotLinear("splitting_iso: cochain has weight-" + std::to_string(q) + " components");
  }
  const int n = vba.dim_g();
  const int m = vba.core_dim();
  const int a = c.arity();

  SplitCochain out;
  out.c1.arity = a - 1;
  if (a >= 1 && a - 1 <= n) {
    for (const auto& I : enumerate_tuples(n, a - 1)) {
      RationalMatrix val(static_cast<std::size_t>(m), static_cast<std::size_t>(m));
      for (int b = 0; b < m; ++b) {
        IndexTuple args = I;
        args.push_back(n + b);  // g-indices sort before core indices
        const auto v = c.value_on(args);
        for (int i = 0; i < m; ++i) val.at(static_cast<std::size_t>(i), static_cast<std::size_t>(b)) = v[static_cast<std::size_t>(n + i)];
      }
      out.c1.values.push_back(std::move(val));
    }
  }

  out.c2 = Multiderivation(n, a);
  if (a <= n) {
    const auto tuples = enumerate_tuples(n, a);
    for (std::size_t ti = 0; ti < tuples.size(); ++ti) {
      const auto v = c.value_on(tuples[ti]);
      for (int i = 0; i < n; ++i) out.c2.coeff(static_cast<std::int64_t>(ti), i) = v[static_cast<std::size_t>(i)];
    }
  }
  return out;
}

Multiderivation splitting_inverse(const VBAlgebra& vba, const SplitCochain& s) {
  const int n = vba.dim_g();
  const int m = vba.core_dim();
  const int a = s.c1.arity + 1;
  if (s.c2.arity() != a || s.c2.ambient() != n) throw ShapeMismatch("splitting_inverse: component arities disagree");
  const int total = n + m;
  Multiderivation c(total, a);

  if (a <= n) {
    const auto g_tuples = enumerate_tuples(n, a);
    for (std::size_t ti = 0; ti < g_tuples.size(); ++ti) {
      const std::int64_t rank = tuple_rank(g_tuples[ti], total);  // g-indices coincide in the big index set
      for (int i = 0; i < n; ++i) c.coeff(rank, i) = s.c2.coeff(static_cast<std::int64_t>(ti), i);
    }
  }
  if (a >= 1 && a - 1 <= n) {
    const auto base_tuples = enumerate_tuples(n, a - 1);
    for (std::size_t ti = 0; ti < base_tuples.size(); ++ti)
      for (int b = 0; b < m; ++b) {
        IndexTuple args = base_tuples[ti];
        args.push_back(n + b);
        const std::int64_t rank = tuple_rank(args, total);
        for (int i = 0; i < m; ++i) c.coeff(rank, n + i) = s.c1.values[ti].at(static_cast<std::size_t>(i), static_cast<std::size_t>(b));
      }
  }
  return c;
}

namespace {

/// Forms on g with End C values, re-indexed over [-1, dim g + 1].
FiniteComplex end_forms_complex(const VBAlgebra& vba) {
  const Representation end_rep = end_representation(vba.theta());
  const FiniteComplex ce = ce_complex(end_rep);
  const int n = vba.dim_g();
  std::vector<std::size_t> dims;
  std::vector<RationalMatrix> diffs;
  dims.push_back(0);  // degree -1
  for (int k = 0; k <= n; ++k) dims.push_back(ce.dim(k));
  dims.push_back(0);  // degree n + 1
  diffs.push_back(RationalMatrix::zero(ce.dim(0), 0));
  for (int k = 0; k < n; ++k) diffs.push_back(ce.differential_out(k));
  diffs.push_back(RationalMatrix::zero(0, ce.dim(n)));
  return FiniteComplex(-1, std::move(dims), std::move(diffs));
}

/// The deformation complex of g shifted down by one: degree k holds the
/// arity-k multiderivations, and the differential picks up the shift sign.
FiniteComplex shifted_def_complex(const VBAlgebra& vba) {
  const DeformationComplex handle(vba.g());
  const FiniteComplex def = handle.complex();
  const int n = vba.dim_g();
  std::vector<std::size_t> dims;
  std::vector<RationalMatrix> diffs;
  for (int k = -1; k <= n + 1; ++k) dims.push_back(k < 0 || k > n ? 0 : def.dim(k - 1));
  for (int k = -1; k <= n; ++k) {
    if (k < 0) {
      diffs.push_back(RationalMatrix::zero(dims[static_cast<std::size_t>(k + 2)], 0));
    } else if (k >= n) {
      diffs.push_back(RationalMatrix::zero(0, dims[static_cast<std::size_t>(k + 1)]));
    } else {
      diffs.push_back(-def.differential_out(k - 1));
    }
  }
  return FiniteComplex(-1, std::move(dims), std::move(diffs));
}

}  // namespace

ComplexMap theta_cochain_map(const VBAlgebra& vba) {
  const int n = vba.dim_g();
  const int m = vba.core_dim();
  FiniteComplex source = shifted_def_complex(vba);
  FiniteComplex target = end_forms_complex(vba);

  std::vector<RationalMatrix> components;
  for (int k = -1; k <= n + 1; ++k) {
    RationalMatrix f(target.dim(k), source.dim(k));
    if (k >= 0 && k <= n) {
      const int sign = ((k - 1) % 2 == 0) ? 1 : -1;  // (-1)^{arity - 1}
      const std::int64_t count = binomial(n, k);
      for (std::int64_t t = 0; t < count; ++t)
        for (int v = 0; v < n; ++v) {
          const RationalMatrix& rho = vba.theta().action(v);
          for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
              if (rho.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).is_zero()) continue;
              f.at(static_cast<std::size_t>(t) * m * m + static_cast<std::size_t>(i) * m + j,
                   static_cast<std::size_t>(t) * n + static_cast<std::size_t>(v)) =
                  Rational(sign) * rho.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
            }
        }
    }
    components.push_back(std::move(f));
  }
  return ComplexMap(std::move(source), std::move(target), std::move(components));
}

FiniteComplex cone_complex(const VBAlgebra& vba) { return mapping_cone(theta_cochain_map(vba)); }

SplitTransportReport splitting_transport_check(const VBAlgebra& vba) {
  const int n = vba.dim_g();
  const int m = vba.core_dim();
  const FiniteComplex cone = cone_complex(vba);
  const DeformationComplex handle(vba.total());

  const auto to_cone_coords = [&](const SplitCochain& s) {
    std::vector<Rational> coords = s.c1.coordinates(m);
    const auto& c2 = s.c2.coeffs();
    coords.insert(coords.end(), c2.begin(), c2.end());
    return coords;
  };
  const auto from_cone_coords = [&](int degree, const std::vector<Rational>& coords) {
    const std::size_t c1_len = static_cast<std::size_t>(degree < 0 ? 0 : binomial(n, degree)) * m * m;
    SplitCochain s;
    s.c1 = EndValuedForm::from_coordinates(n, m, degree, std::vector<Rational>(coords.begin(), coords.begin() + static_cast<std::ptrdiff_t>(c1_len)));
    s.c2 = Multiderivation(n, degree + 1);
    s.c2.coeffs() = std::vector<Rational>(coords.begin() + static_cast<std::ptrdiff_t>(c1_len), coords.end());
    return s;
  };

  SplitTransportReport report{{}, {}, true};
  for (int k = -1; k < n; ++k) {
    const RationalMatrix d_cone = cone.differential_out(k);
    RationalMatrix transported(d_cone.rows(), d_cone.cols());
    for (std::size_t col = 0; col < d_cone.cols(); ++col) {
      std::vector<Rational> unit(d_cone.cols());
      unit[col] = Rational(1);
      const Multiderivation c = splitting_inverse(vba, from_cone_coords(k, unit));
      const SplitCochain image = splitting_iso(vba, handle.differential(c));
      transported.set_column(col, to_cone_coords(image));
    }
    int sign = 0;
    if (transported == d_cone)
      sign = 1;
    else if (transported == -d_cone)
      sign = -1;
    report.degrees.push_back(k);
    report.signs.push_back(sign);
    if (sign == 0) report.consistent = false;
  }
  return report;
}

namespace {

RationalMatrix induced_map(const FiniteComplex& source_cx, int source_deg, const FiniteComplex& target_cx, int target_deg,
                           const RationalMatrix& cochain_map) {
  const auto src = cohomology(source_cx, source_deg);
  const auto tgt = cohomology(target_cx, target_deg);
  RationalMatrix out(tgt.dim, src.dim);
  for (std::size_t col = 0; col < src.dim; ++col) {
    const auto image = cochain_map * src.representatives.column(col);
    out.set_column(col, class_coordinates(target_cx, target_deg, image.column_vector(0)));
  }
  return out;
}

}  // namespace

LesReport les_check(const VBAlgebra& vba, int lo, int hi) {
  const int n = vba.dim_g();
  if (lo < -1 || hi > n || lo > hi) throw DegreeOutOfRange("les_check: degree window out of range");

  const ComplexMap theta = theta_cochain_map(vba);
  const FiniteComplex& a_shift = theta.source();
  const FiniteComplex& b_forms = theta.target();
  const FiniteComplex cone = mapping_cone(theta);

  // Cochain-level blocks of the short exact sequence through the cone.
  const auto inclusion_at = [&](int k) {
    RationalMatrix f(cone.dim(k), b_forms.dim(k));
    f.set_block(0, 0, RationalMatrix::identity(b_forms.dim(k)));
    return f;
  };
  const auto projection_at = [&](int k) {
    RationalMatrix f(a_shift.dim(k + 1), cone.dim(k));
    f.set_block(0, b_forms.dim(k), RationalMatrix::identity(a_shift.dim(k + 1)));
    return f;
  };

  std::vector<RationalMatrix> maps;
  std::vector<LesNode> nodes;
  // Connecting map into the window start (zero-dimensional source at lo = -1).
  maps.push_back(induced_map(a_shift, lo, b_forms, lo, theta.component(lo)));
  for (int k = lo; k <= hi; ++k) {
    maps.push_back(induced_map(b_forms, k, cone, k, inclusion_at(k)));
    maps.push_back(induced_map(cone, k, a_shift, k + 1, projection_at(k)));
    maps.push_back(induced_map(a_shift, k + 1, b_forms, k + 1, theta.component(k + 1)));
  }

  const auto check = exactness_check(maps);
  LesReport report{{}, check.all_exact};
  static const char* kSpaces[] = {"end", "cone", "def"};
  for (std::size_t i = 0; i < check.nodes.size(); ++i) {
    const int degree = lo + static_cast<int>(i) / 3;
    LesNode node{degree, kSpaces[i % 3], check.nodes[i].space_dim, check.nodes[i].dim_im_in, check.nodes[i].dim_ker_out,
                 check.nodes[i].exact};
    report.nodes.push_back(node);
  }
  return report;
}

}  // namespace defcoh
