#pragma once

#include <cstdint>
#include <vector>

#include "defcoh/lie_algebra.hpp"
#include "defcoh/matrix.hpp"
#include "defcoh/tuples.hpp"

namespace defcoh {

/// A skew k-linear map from the k-th exterior power of Q^n to Q^n, stored as
/// one coordinate vector per sorted k-tuple (lex order). Arity 0 is a plain
/// vector; over a point base there is no symbol data. Deformation cochains of
/// degree d are multiderivations of arity d + 1.
class Multiderivation {
 public:
  Multiderivation() : ambient_(0), arity_(0) {}
  Multiderivation(int ambient, int arity);

  static Multiderivation from_structure(const StructureTensor& t);
  static Multiderivation from_vector(std::vector<Rational> v);
  /// Arity 1 from an endomorphism matrix.
  static Multiderivation from_endomorphism(const RationalMatrix& m);

  int ambient() const { return ambient_; }
  int arity() const { return arity_; }
  int degree() const { return arity_ - 1; }

  std::int64_t tuple_count() const { return binomial(ambient_, arity_); }
  std::size_t coeff_count() const { return coeffs_.size(); }

  Rational& coeff(std::int64_t tuple_index, int component) { return coeffs_[static_cast<std::size_t>(tuple_index) * ambient_ + component]; }
  const Rational& coeff(std::int64_t tuple_index, int component) const { return coeffs_[static_cast<std::size_t>(tuple_index) * ambient_ + component]; }

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  std::vector<Rational>& coeffs() { return coeffs_; }

  /// Value on a sorted tuple.
  std::vector<Rational> value_on(const IndexTuple& t) const;
  /// Skew-symmetric evaluation on an arbitrary index sequence (repeats give 0).
  std::vector<Rational> eval_indices(const std::vector<int>& indices) const;
  /// Full multilinear evaluation on arbitrary coordinate vectors.
  std::vector<Rational> eval_vectors(const std::vector<std::vector<Rational>>& args) const;

  /// The arity-2 case written back as a structure tensor.
  StructureTensor to_structure() const;

  bool is_zero() const;

  Multiderivation operator-() const;
  Multiderivation& operator+=(const Multiderivation& o);
  Multiderivation& operator-=(const Multiderivation& o);
  friend Multiderivation operator+(Multiderivation a, const Multiderivation& b) { return a += b; }
  friend Multiderivation operator-(Multiderivation a, const Multiderivation& b) { return a -= b; }
  friend Multiderivation operator*(const Rational& s, Multiderivation m);
  friend bool operator==(const Multiderivation& a, const Multiderivation& b) {
    return a.ambient_ == b.ambient_ && a.arity_ == b.arity_ && a.coeffs_ == b.coeffs_;
  }

 private:
  int ambient_;
  int arity_;
  std::vector<Rational> coeffs_;  // tuple_count * ambient
};

/// Insertion product over (l, k-1)-unshuffles:
/// (c1 . c2)(e_1, .., e_{k+l-1}) = sum_tau sign(tau) c1(c2(e_tau(1..l)), e_tau(l+1..)).
/// Throws ArityMismatch when c1 has no slot to insert into.
Multiderivation gerstenhaber_product(const Multiderivation& c1, const Multiderivation& c2);

/// [[c1, c2]] = (-1)^{(k-1)(l-1)} c1.c2 - c2.c1, with the convention that an
/// insertion into an arity-0 factor is zero (two arity-0 inputs give zero).
Multiderivation gerstenhaber_bracket(const Multiderivation& c1, const Multiderivation& c2);

/// (phi^* c)(e_1, .., e_k) = phi^-1 (c(phi e_1, .., phi e_k)).
/// Throws Singular when phi is not invertible.
Multiderivation pullback(const RationalMatrix& phi, const Multiderivation& c);

}  // namespace defcoh
