// rational.cpp
#include "gmchar/rational.hpp"

namespace gmchar {

Rational::Rational(const Int& num, const Int& den) {
  if (den == 0) throw DomainError("Rational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view s) {
  mpq_class v;
  if (v.set_str(std::string(s), 10) != 0)
    throw DomainError("Rational::parse: malformed rational '" + std::string(s) + "'");
  if (v.get_den() == 0) throw DomainError("Rational::parse: zero denominator");
  v.canonicalize();
  Rational r;
  r.v_ = v;
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.v_ == 0) throw DomainError("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Int exact_div(const Int& a, const Int& b) {
  if (b == 0) throw DomainError("exact_div: division by zero");
  Int q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (r != 0) throw DomainError("exact_div: " + a.get_str() + " not divisible by " + b.get_str());
  return q;
}

}  // namespace gmchar
