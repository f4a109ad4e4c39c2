// hilbert_mumford.cpp
#include "gmchar/hilbert_mumford.hpp"

namespace gmchar {

namespace {

void validate_query(long g, long n, long m) {
  if (g < 2) throw OutOfRange("hilbert-mumford: need g >= 2");
  if (n < 1) throw OutOfRange("hilbert-mumford: need n >= 1");
  if (m < 2) throw OutOfRange("hilbert-mumford: need m >= 2");
}

}  // namespace

Rational hm_index_hilbert(const HMQuery& q) {
  validate_query(q.g, q.n, q.m);
  const Rational g(q.g), n(q.n), m(q.m);
  if (q.n == 1) {
    const Rational bracket =
        ((Rational(4) * g + 2) * m - g + 1) * q.chi_lambda - g * m / Rational(2) * q.chi_delta;
    return q.chi_lambda + (m - 1) * bracket;
  }
  const Rational bracket =
      (Rational(6) * m * n * n - Rational(2) * m * n - Rational(2) * n + 1) * q.chi_lambda -
      m * n * n / Rational(2) * q.chi_delta;
  return (m - 1) * (g - 1) * bracket;
}

Rational hm_index_chow(const Rational& chi_lambda, const Rational& chi_delta, long g, long n) {
  validate_query(g, n, 2);
  const Rational G(g), N(n);
  if (n == 1) return (Rational(4) * G + 2) * chi_lambda - G / Rational(2) * chi_delta;
  return (G - 1) * N * ((Rational(6) * N - 2) * chi_lambda - N / Rational(2) * chi_delta);
}

StabilityVerdict ribbon_stability(long g, long ell, long n, long m) {
  validate_query(g, n, m);
  const Character chi = chi_ribbon(g, ell);  // enforces g >= 3, 1 <= ell <= g-2
  HMQuery q;
  q.chi_lambda = Rational(chi.chi_lambda());
  q.chi_delta = Rational(chi.chi_delta());
  q.g = g;
  q.n = n;
  q.m = m;
  StabilityVerdict v;
  v.index = hm_index_hilbert(q);
  v.status = v.index.is_zero() ? Stability::StrictlySemistableWitness : Stability::Unstable;
  v.scale_vanishes = n == 1 && g + m - g * m == 0;
  return v;
}

}  // namespace gmchar
