// intersection.hpp: one-parameter families in M_g-bar and their
// intersection numbers with the tautological divisor classes.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gmchar/character.hpp"

namespace gmchar {

// Intersection numbers of the divisor classes with a one-parameter
// family B, plus bookkeeping: deg_b is the degree of the map from the
// parameter line to the base of the corresponding singularity family
// (2 for the bielliptic-style families below), kappa when catalogued.
struct FamilyIntersection {
  std::string name;
  Rational lambda;
  Rational delta0;
  std::vector<Rational> psi;          // psi_i . B at the marked sections
  std::map<long, Rational> delta_higher;  // delta_h . B, h > 0 (absent = 0)
  long deg_b = 1;
  std::optional<Rational> kappa;
  std::optional<Int> genus;           // tail genus, when meaningful

  Rational psi_total() const;
  Rational delta_total() const;       // delta0 + sum_h delta_h
};

// Hyperelliptic-tail family: genus-k tails over a pencil of A_{2k+1}
// curves attached at two points.
FamilyIntersection family_bk(long k);

// One-point variant: tail attached at a single dangling point.
FamilyIntersection family_hk(long k);

// Trielliptic-style family with three sections (degree-2 base).
FamilyIntersection family_trik(long k);

// Two-section variant of family_trik (degree-2 base).
FamilyIntersection family_bhk(long k);

// Pencil of toric-tail curves x^(pb) = y^(qb); requires gcd(p, q) = 1,
// p, q >= 1 and (pb, qb) != (1, 1).
//   lambda.Z = (b/12)((pqb-p-q)^2 + pq(pqb^2-pb-qb+1) - 1)
//   delta0.Z = pqb (pqb^2 - pb - qb + 1),  psi.Z = b (total)
//   g = (pqb^2 - pb - qb - b + 2)/2
FamilyIntersection family_toric(long p, long q, long b);

// The two slopes of the family of curves with a monomial T_{p,q} tail
// (p, q >= 2 coprime): pointed keeps the attaching section (subtracts
// psi), unpointed forgets it.
struct ToricSlopes {
  Rational pointed;    // 12(pq(p-1)(q-1)-1) / ((p-1)(q-1)(2pq-p-q-1))
  Rational unpointed;  // 12pq / (2pq-p-q-1)
};
ToricSlopes toric_slopes(long p, long q);

// Slope 36(g+1)/(5g+1) of the family of curves with a <3, g+1> monomial
// singularity, defined for g >= 3 with g = 0, 1 mod 3 (WrongResidue
// otherwise).  Matches delta/lambda of the isolated <3, g+1> curve.
Rational stankova_slope(long g);

// alpha-threshold 2 - 13*lambda.B / delta_eff.B at which the family
// leaves the alpha-stable locus, with delta_eff = delta_total - psi_total.
// Throws ZeroDelta when the effective delta-degree vanishes.
Rational negativity_threshold(const FamilyIntersection& fi);

}  // namespace gmchar
