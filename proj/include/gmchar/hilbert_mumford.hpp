// hilbert_mumford.hpp: Hilbert-Mumford indices of Hilbert and Chow points
// of n-canonically embedded curves with respect to a one-parameter
// subgroup rho acting with characters (chi_lambda, chi_delta).
//
// A zero index certifies strict semistability with respect to rho only;
// a nonzero index certifies instability.  No claim of semistability with
// respect to the full group is ever made.
#pragma once

#include "gmchar/character.hpp"
#include "gmchar/singularities.hpp"

namespace gmchar {

struct HMQuery {
  Rational chi_lambda;
  Rational chi_delta;
  long g = 2;  // arithmetic genus, >= 2
  long n = 1;  // canonical embedding power, >= 1
  long m = 2;  // Hilbert point index, >= 2
};

// Index of the m-th Hilbert point of the n-canonical embedding, divided by
// the common positive normalization:
//   n = 1: chi_lambda + (m-1)[((4g+2)m - g + 1) chi_lambda - (gm/2) chi_delta]
//   n > 1: (m-1)(g-1)[(6mn^2 - 2mn - 2n + 1) chi_lambda - (mn^2/2) chi_delta]
Rational hm_index_hilbert(const HMQuery& q);

// Chow limit:
//   n = 1: (4g+2) chi_lambda - (g/2) chi_delta
//   n > 1: (g-1) n [(6n-2) chi_lambda - (n/2) chi_delta]
Rational hm_index_chow(const Rational& chi_lambda, const Rational& chi_delta, long g, long n);

enum class Stability {
  Unstable,                   // index != 0
  StrictlySemistableWitness,  // index = 0 with respect to this rho
};

struct StabilityVerdict {
  Stability status;
  Rational index;
  // n = 1 degenerate corner: the scale factor g + m - gm of the ribbon
  // index vanishes iff g = m = 2, outside the valid ribbon range g >= 3;
  // flagged explicitly rather than folded into the verdict.
  bool scale_vanishes = false;
};

// Verdict for the ribbon C_ell of genus g under the m-th Hilbert point of
// the n-canonical embedding.  At n = 1 the index is
// g(g + m - gm)(ell - (g-1)/2), so the witness line is ell = (g-1)/2.
StabilityVerdict ribbon_stability(long g, long ell, long n, long m);

}  // namespace gmchar
