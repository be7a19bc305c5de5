#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>

#include "defcoh/errors.hpp"

namespace defcoh {

/// Exact rational scalar with arbitrary-precision numerator and denominator.
/// Always canonical: denominator > 0, fraction reduced, zero stored as 0/1.
class Rational {
 public:
  Rational() : value_(0) {}
  Rational(long n) : value_(static_cast<signed long>(n)) {}  // NOLINT(google-explicit-constructor)
  Rational(int n) : value_(n) {}                             // NOLINT(google-explicit-constructor)
  Rational(long num, long den) : value_(static_cast<signed long>(num), static_cast<signed long>(den)) {
    if (den == 0) throw Error("Rational: zero denominator");
    value_.canonicalize();
  }
  explicit Rational(const mpq_class& q) : value_(q) { value_.canonicalize(); }

  /// Parses "p" or "p/q" with optional sign; throws ParseError on malformed input.
  static Rational parse(const std::string& text);

  const mpq_class& raw() const { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  bool is_zero() const { return mpq_sgn(value_.get_mpq_t()) == 0; }
  int sign() const { return mpq_sgn(value_.get_mpq_t()); }
  double to_double() const { return value_.get_d(); }

  /// Renders "p" when the denominator is 1, otherwise "p/q".
  std::string str() const;

  Rational operator-() const { return Rational(mpq_class(-value_)); }

  Rational& operator+=(const Rational& o) {
    value_ += o.value_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    value_ -= o.value_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    value_ *= o.value_;
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw Singular("Rational: division by zero");
    value_ /= o.value_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.value_.get_mpq_t(), b.value_.get_mpq_t()) != 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.value_.get_mpq_t(), b.value_.get_mpq_t()) < 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class value_;
};

inline std::string Rational::str() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

inline Rational Rational::parse(const std::string& text) {
  if (text.empty()) throw ParseError("Rational: empty literal");
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      mpz_class num(text);
      return Rational(mpq_class(num));
    }
    mpz_class num(text.substr(0, slash));
    mpz_class den(text.substr(slash + 1));
    if (den == 0) throw ParseError("Rational: zero denominator in '" + text + "'");
    mpq_class q(num, den);
    q.canonicalize();
    return Rational(q);
  } catch (const std::invalid_argument&) {
    throw ParseError("Rational: malformed literal '" + text + "'");
  }
}

}  // namespace defcoh
