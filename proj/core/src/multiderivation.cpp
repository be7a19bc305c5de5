#include "defcoh/multiderivation.hpp"

#include <string>

#include "defcoh/errors.hpp"

namespace defcoh {

Multiderivation::Multiderivation(int ambient, int arity) : ambient_(ambient), arity_(arity) {
  if (ambient < 0 || arity < 0) throw ArityOutOfRange("Multiderivation: negative ambient or arity");
  coeffs_.assign(static_cast<std::size_t>(binomial(ambient, arity)) * ambient, Rational(0));
}

Multiderivation Multiderivation::from_structure(const StructureTensor& t) {
  const int n = t.dim();
  if (!t.is_skew()) throw NotSkew("Multiderivation::from_structure: tensor not skew");
  Multiderivation c(n, 2);
  if (n < 2) return c;
  const auto tuples = enumerate_tuples(n, 2);
  for (std::size_t idx = 0; idx < tuples.size(); ++idx)
    for (int k = 0; k < n; ++k) c.coeff(static_cast<std::int64_t>(idx), k) = t.at(tuples[idx][0], tuples[idx][1], k);
  return c;
}

Multiderivation Multiderivation::from_vector(std::vector<Rational> v) {
  Multiderivation c(static_cast<int>(v.size()), 0);
  c.coeffs_ = std::move(v);
  return c;
}

Multiderivation Multiderivation::from_endomorphism(const RationalMatrix& m) {
  if (!m.is_square()) throw ShapeMismatch("from_endomorphism: matrix not square");
  const int n = static_cast<int>(m.rows());
  Multiderivation c(n, 1);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) c.coeff(j, i) = m.at(i, j);
  return c;
}

std::vector<Rational> Multiderivation::value_on(const IndexTuple& t) const {
  std::vector<Rational> v(ambient_);
  const std::int64_t r = tuple_rank(t, ambient_);
  for (int i = 0; i < ambient_; ++i) v[static_cast<std::size_t>(i)] = coeff(r, i);
  return v;
}

std::vector<Rational> Multiderivation::eval_indices(const std::vector<int>& indices) const {
  if (static_cast<int>(indices.size()) != arity_) throw ArityMismatch("eval_indices: wrong argument count");
  const auto sorted = sort_skew(indices);
  if (!sorted) return std::vector<Rational>(ambient_);
  auto v = value_on(sorted->first);
  if (sorted->second < 0)
    for (auto& e : v) e = -e;
  return v;
}

std::vector<Rational> Multiderivation::eval_vectors(const std::vector<std::vector<Rational>>& args) const {
  if (static_cast<int>(args.size()) != arity_) throw ArityMismatch("eval_vectors: wrong argument count");
  std::vector<Rational> out(ambient_);
  std::vector<int> idx(arity_);
  // Multilinear expansion over all index assignments; ambient stays small.
  const auto expand = [&](auto&& self, int pos, const Rational& factor) -> void {
    if (factor.is_zero()) return;
    if (pos == arity_) {
      const auto v = eval_indices(idx);
      for (int i = 0; i < ambient_; ++i) out[static_cast<std::size_t>(i)] += factor * v[static_cast<std::size_t>(i)];
      return;
    }
    for (int i = 0; i < ambient_; ++i) {
      idx[static_cast<std::size_t>(pos)] = i;
      self(self, pos + 1, factor * args[static_cast<std::size_t>(pos)][static_cast<std::size_t>(i)]);
    }
  };
  expand(expand, 0, Rational(1));
  return out;
}

StructureTensor Multiderivation::to_structure() const {
  if (arity_ != 2) throw ArityMismatch("to_structure: arity 2 required");
  StructureTensor t(ambient_);
  if (ambient_ < 2) return t;
  const auto tuples = enumerate_tuples(ambient_, 2);
  for (std::size_t idx = 0; idx < tuples.size(); ++idx)
    for (int k = 0; k < ambient_; ++k) {
      t.at(tuples[idx][0], tuples[idx][1], k) = coeff(static_cast<std::int64_t>(idx), k);
      t.at(tuples[idx][1], tuples[idx][0], k) = -coeff(static_cast<std::int64_t>(idx), k);
    }
  return t;
}

bool Multiderivation::is_zero() const {
  for (const auto& e : coeffs_)
    if (!e.is_zero()) return false;
  return true;
}

Multiderivation Multiderivation::operator-() const {
  Multiderivation c = *this;
  for (auto& e : c.coeffs_) e = -e;
  return c;
}

Multiderivation& Multiderivation::operator+=(const Multiderivation& o) {
  if (ambient_ != o.ambient_ || arity_ != o.arity_) throw AmbientMismatch("multiderivation +: shape mismatch");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

Multiderivation& Multiderivation::operator-=(const Multiderivation& o) {
  if (ambient_ != o.ambient_ || arity_ != o.arity_) throw AmbientMismatch("multiderivation -: shape mismatch");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

Multiderivation operator*(const Rational& s, Multiderivation m) {
  for (auto& e : m.coeffs_) e *= s;
  return m;
}

namespace {

/// c1(w, rest...) expanded over the components of w.
std::vector<Rational> insert_first(const Multiderivation& c1, const std::vector<Rational>& w, const std::vector<int>& rest) {
  const int n = c1.ambient();
  std::vector<Rational> out(n);
  std::vector<int> idx(static_cast<std::size_t>(c1.arity()));
  for (std::size_t p = 0; p < rest.size(); ++p) idx[p + 1] = rest[p];
  for (int t = 0; t < n; ++t) {
    if (w[static_cast<std::size_t>(t)].is_zero()) continue;
    idx[0] = t;
    const auto v = c1.eval_indices(idx);
    for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] += w[static_cast<std::size_t>(t)] * v[static_cast<std::size_t>(i)];
  }
  return out;
}

}  // namespace

Multiderivation gerstenhaber_product(const Multiderivation& c1, const Multiderivation& c2) {
  if (c1.ambient() != c2.ambient()) throw AmbientMismatch("gerstenhaber_product: different ambient spaces");
  const int k = c1.arity(), l = c2.arity(), n = c1.ambient();
  if (k < 1) throw ArityMismatch("gerstenhaber_product: left factor needs at least one slot");
  const int out_arity = k + l - 1;
  Multiderivation out(n, out_arity);
  if (out_arity > n) return out;

  const auto shuffles = unshuffles(l, k - 1);
  const auto tuples = enumerate_tuples(n, out_arity);
  for (std::size_t ti = 0; ti < tuples.size(); ++ti) {
    const IndexTuple& args = tuples[ti];
    std::vector<Rational> value(n);
    for (const auto& u : shuffles) {
      IndexTuple first(static_cast<std::size_t>(l));
      std::vector<int> rest(static_cast<std::size_t>(k - 1));
      for (int p = 0; p < l; ++p) first[static_cast<std::size_t>(p)] = args[static_cast<std::size_t>(u.perm[static_cast<std::size_t>(p)])];
      for (int p = 0; p < k - 1; ++p) rest[static_cast<std::size_t>(p)] = args[static_cast<std::size_t>(u.perm[static_cast<std::size_t>(l + p)])];
      const auto inner = c2.value_on(first);  // blocks of an unshuffle stay sorted
      const auto term = insert_first(c1, inner, rest);
      for (int i = 0; i < n; ++i) {
        if (u.sign > 0)
          value[static_cast<std::size_t>(i)] += term[static_cast<std::size_t>(i)];
        else
          value[static_cast<std::size_t>(i)] -= term[static_cast<std::size_t>(i)];
      }
    }
    for (int i = 0; i < n; ++i) out.coeff(static_cast<std::int64_t>(ti), i) = value[static_cast<std::size_t>(i)];
  }
  return out;
}

Multiderivation gerstenhaber_bracket(const Multiderivation& c1, const Multiderivation& c2) {
  if (c1.ambient() != c2.ambient()) throw AmbientMismatch("gerstenhaber_bracket: different ambient spaces");
  const int k = c1.arity(), l = c2.arity();
  if (k == 0 && l == 0) return Multiderivation(c1.ambient(), 0);

  Multiderivation first = k >= 1 ? gerstenhaber_product(c1, c2) : Multiderivation(c1.ambient(), k + l - 1);
  Multiderivation second = l >= 1 ? gerstenhaber_product(c2, c1) : Multiderivation(c1.ambient(), k + l - 1);
  const bool flip = ((k - 1) * (l - 1)) % 2 != 0;
  if (flip) first = -first;
  return first - second;
}

Multiderivation pullback(const RationalMatrix& phi, const Multiderivation& c) {
  const int n = c.ambient();
  if (phi.rows() != static_cast<std::size_t>(n) || phi.cols() != static_cast<std::size_t>(n))
    throw ShapeMismatch("pullback: matrix has wrong shape");
  const RationalMatrix phi_inv = inverse(phi);

  const int k = c.arity();
  Multiderivation out(n, k);
  if (k > n) return out;
  const auto tuples = enumerate_tuples(n, k);
  for (std::size_t ti = 0; ti < tuples.size(); ++ti) {
    std::vector<std::vector<Rational>> args;
    args.reserve(static_cast<std::size_t>(k));
    for (int p = 0; p < k; ++p) args.push_back(phi.column_vector(static_cast<std::size_t>(tuples[ti][static_cast<std::size_t>(p)])));
    const auto v = c.eval_vectors(args);
    const auto w = (phi_inv * from_column(v)).column_vector(0);
    for (int i = 0; i < n; ++i) out.coeff(static_cast<std::int64_t>(ti), i) = w[static_cast<std::size_t>(i)];
  }
  return out;
}

}  // namespace defcoh
