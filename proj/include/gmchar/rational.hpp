// rational.hpp: exact arbitrary-precision integers and rationals.
//
// Thin value wrappers over GMP.  Every Rational is kept in canonical form
// (reduced, denominator > 0); serialization is "p/q", or just "p" when the
// denominator is 1, with a leading '-' on the numerator only.
#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "gmchar/errors.hpp"

namespace gmchar {

using Int = mpz_class;

class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(static_cast<signed long>(n)) {}
  Rational(const Int& n) : v_(n) {}
  // Unevaluated GMP integer expressions (sums/products of Int) bind here,
  // keeping Rational(expr) unambiguous.
  template <class U>
  Rational(const __gmp_expr<__mpz_struct[1], U>& e) : v_(Int(e)) {}
  Rational(const Int& num, const Int& den);
  Rational(long num, long den) : Rational(Int(num), Int(den)) {}

  // Parses canonical form ("p" or "p/q"); reduces if the input is not.
  static Rational parse(std::string_view s);

  Int num() const { return v_.get_num(); }
  Int den() const { return v_.get_den(); }
  bool is_integer() const { return v_.get_den() == 1; }
  bool is_zero() const { return v_ == 0; }
  int sign() const { return sgn(v_); }

  std::string str() const { return v_.get_str(); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

// Canonical integer serialization (decimal, leading '-' if negative).
inline std::string to_string(const Int& n) { return n.get_str(); }
inline std::string to_string(const Rational& r) { return r.str(); }

// Exact division: throws DomainError unless b divides a.
Int exact_div(const Int& a, const Int& b);

}  // namespace gmchar
