#include "defcoh/complex.hpp"

#include <string>

#include "defcoh/errors.hpp"

namespace defcoh {

FiniteComplex::FiniteComplex(int min_degree, std::vector<std::size_t> dims, std::vector<RationalMatrix> diffs)
    : min_degree_(min_degree), dims_(std::move(dims)), diffs_(std::move(diffs)) {
  if (dims_.empty()) throw ShapeMismatch("FiniteComplex: no terms");
  if (diffs_.size() + 1 != dims_.size()) throw ShapeMismatch("FiniteComplex: need one differential per adjacent pair");
  for (std::size_t i = 0; i < diffs_.size(); ++i) {
    if (diffs_[i].rows() != dims_[i + 1] || diffs_[i].cols() != dims_[i])
      throw ShapeMismatch("FiniteComplex: differential at degree " + std::to_string(min_degree_ + static_cast<int>(i)) + " has wrong shape");
  }
  for (std::size_t i = 0; i + 1 < diffs_.size(); ++i) {
    if (!(diffs_[i + 1] * diffs_[i]).is_zero())
      throw Error("FiniteComplex: d.d != 0 at degree " + std::to_string(min_degree_ + static_cast<int>(i)));
  }
}

std::size_t FiniteComplex::dim(int k) const {
  if (!has_degree(k)) return 0;
  return dims_[static_cast<std::size_t>(k - min_degree_)];
}

RationalMatrix FiniteComplex::differential_out(int k) const {
  if (k >= min_degree() && k < max_degree()) return diffs_[static_cast<std::size_t>(k - min_degree_)];
  return RationalMatrix::zero(dim(k + 1), dim(k));
}

RationalMatrix FiniteComplex::differential_in(int k) const { return differential_out(k - 1); }

ComplexMap::ComplexMap(FiniteComplex source, FiniteComplex target, std::vector<RationalMatrix> components)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components)) {
  if (source_.min_degree() != target_.min_degree() || source_.max_degree() != target_.max_degree())
    throw ShapeMismatch("ComplexMap: degree ranges differ");
  if (components_.size() != source_.dims().size()) throw ShapeMismatch("ComplexMap: need one component per degree");
  for (int k = source_.min_degree(); k <= source_.max_degree(); ++k) {
    const auto& f = component(k);
    if (f.rows() != target_.dim(k) || f.cols() != source_.dim(k))
      throw ShapeMismatch("ComplexMap: component at degree " + std::to_string(k) + " has wrong shape");
  }
  for (int k = source_.min_degree(); k < source_.max_degree(); ++k) {
    if (component(k + 1) * source_.differential_out(k) != target_.differential_out(k) * component(k))
      throw NonChainMap("ComplexMap: does not commute with differentials at degree " + std::to_string(k));
  }
}

const RationalMatrix& ComplexMap::component(int k) const {
  if (!source_.has_degree(k)) throw DegreeOutOfRange("ComplexMap: degree " + std::to_string(k));
  return components_[static_cast<std::size_t>(k - source_.min_degree())];
}

CohomologyResult cohomology(const FiniteComplex& cx, int k) {
  if (!cx.has_degree(k)) throw DegreeOutOfRange("cohomology: degree " + std::to_string(k) + " out of range");
  const RationalMatrix dk = cx.differential_out(k);
  const RationalMatrix dkm1 = cx.differential_in(k);

  const RationalMatrix ker = kernel_basis(dk);
  const RationalMatrix im = column_space_basis(dkm1);
  const std::size_t h = ker.cols() - im.cols();

  // Image columns enter first, so pivots land on them; the kernel columns
  // that still produce pivots extend the image to a basis of the kernel.
  const auto r = rref(hcat(im, ker));
  RationalMatrix reps(cx.dim(k), h);
  std::size_t out = 0;
  for (auto p : r.pivot_cols) {
    if (p < im.cols()) continue;
    for (std::size_t i = 0; i < cx.dim(k); ++i) reps.at(i, out) = ker.at(i, p - im.cols());
    ++out;
  }
  if (out != h) throw Error("cohomology: image not contained in kernel");
  return CohomologyResult{h, reps};
}

std::vector<Rational> class_coordinates(const FiniteComplex& cx, int k, const std::vector<Rational>& cocycle) {
  if (!cx.has_degree(k)) throw DegreeOutOfRange("class_coordinates: degree out of range");
  if (cocycle.size() != cx.dim(k)) throw ShapeMismatch("class_coordinates: vector has wrong length");
  const RationalMatrix z = from_column(cocycle);
  if (!(cx.differential_out(k) * z).is_zero()) throw NotCocycle("class_coordinates: input is not closed");
  const auto coh = cohomology(cx, k);
  const auto sol = solve(hcat(coh.representatives, cx.differential_in(k)), z);
  if (!sol) throw Error("class_coordinates: cocycle not spanned by representatives and coboundaries");
  std::vector<Rational> coords(coh.dim);
  for (std::size_t i = 0; i < coh.dim; ++i) coords[i] = sol->at(i, 0);
  return coords;
}

FiniteComplex mapping_cone(const ComplexMap& f) {
  const FiniteComplex& a = f.source();
  const FiniteComplex& b = f.target();
  const int lo = a.min_degree(), hi = a.max_degree();

  std::vector<std::size_t> dims;
  for (int k = lo; k <= hi; ++k) dims.push_back(b.dim(k) + a.dim(k + 1));

  std::vector<RationalMatrix> diffs;
  for (int k = lo; k < hi; ++k) {
    RationalMatrix d(b.dim(k + 1) + a.dim(k + 2), b.dim(k) + a.dim(k + 1));
    d.set_block(0, 0, b.differential_out(k));
    d.set_block(0, b.dim(k), f.component(k + 1));
    d.set_block(b.dim(k + 1), b.dim(k), -a.differential_out(k + 1));
    diffs.push_back(std::move(d));
  }
  return FiniteComplex(lo, std::move(dims), std::move(diffs));
}

ExactnessReport exactness_check(const std::vector<RationalMatrix>& maps) {
  if (maps.size() < 2) throw ShapeMismatch("exactness_check: need at least two maps");
  for (std::size_t i = 0; i + 1 < maps.size(); ++i)
    if (maps[i + 1].cols() != maps[i].rows()) throw ShapeMismatch("exactness_check: maps not composable");

  ExactnessReport report{{}, true};
  for (std::size_t i = 0; i + 1 < maps.size(); ++i) {
    const RationalMatrix& in = maps[i];
    const RationalMatrix& out = maps[i + 1];
    ExactnessNode node{};
    node.space_dim = in.rows();
    node.dim_im_in = rank(in);
    node.dim_ker_out = in.rows() - rank(out);
    node.exact = (out * in).is_zero() && node.dim_im_in == node.dim_ker_out;
    report.all_exact = report.all_exact && node.exact;
    report.nodes.push_back(node);
  }
  return report;
}

}  // namespace defcoh
