// intersection.cpp
#include "gmchar/intersection.hpp"

#include <numeric>

namespace gmchar {

Rational FamilyIntersection::psi_total() const {
  Rational t;
  for (const auto& v : psi) t += v;
  return t;
}

Rational FamilyIntersection::delta_total() const {
  Rational t = delta0;
  for (const auto& [h, v] : delta_higher) t += v;
  return t;
}

namespace {

void require_series_index(long k) {
  if (k < 1) throw OutOfRange("family index k must be >= 1");
}

}  // namespace

FamilyIntersection family_bk(long k) {
  require_series_index(k);
  FamilyIntersection fi;
  fi.name = "B_" + std::to_string(k);
  fi.lambda = Rational(Int(k) * (k + 1), Int(2));
  fi.delta0 = Rational(Int(2 * k + 1) * (2 * k + 2));
  fi.psi = {Rational(1), Rational(1)};
  fi.deg_b = 1;
  fi.kappa = Rational(2 * (Int(k) * k - 1));
  return fi;
}

FamilyIntersection family_hk(long k) {
  require_series_index(k);
  FamilyIntersection fi = family_bk(k);
  fi.name = "H_" + std::to_string(k);
  fi.psi = {Rational(1)};
  return fi;
}

FamilyIntersection family_trik(long k) {
  require_series_index(k);
  FamilyIntersection fi;
  fi.name = "Tri_" + std::to_string(k);
  fi.lambda = Rational(Int(k) * (k + 1));
  fi.delta0 = Rational(2 * Int(2 * k + 1) * (2 * k + 2));
  fi.psi = {Rational(2), Rational(2), Rational(2 * k)};
  fi.deg_b = 2;
  fi.kappa = Rational(4 * (Int(k) * k - 1));
  return fi;
}

FamilyIntersection family_bhk(long k) {
  require_series_index(k);
  FamilyIntersection fi = family_trik(k);
  fi.name = "BH_" + std::to_string(k);
  fi.psi = {Rational(2), Rational(2 * k)};
  return fi;
}

FamilyIntersection family_toric(long p, long q, long b) {
  if (p < 1 || q < 1 || b < 1) throw OutOfRange("family_toric: p, q, b must be >= 1");
  if (std::gcd(p, q) != 1) throw NotCoprime("family_toric: gcd(p, q) != 1");
  if (p * b == 1 && q * b == 1) throw OutOfRange("family_toric: smooth branch, no singularity");
  const Int P(p), Q(q), B(b);
  const Int s = P * Q * B - P - Q;
  const Int d = P * Q * B * B - P * B - Q * B + 1;
  FamilyIntersection fi;
  fi.name = "Z(" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(b) + ")";
  fi.lambda = Rational(B * (s * s + P * Q * d - 1), Int(12));
  fi.delta0 = Rational(P * Q * B * d);
  fi.psi = {Rational(B)};
  fi.deg_b = 1;
  fi.kappa = Rational(B * s * s);
  fi.genus = exact_div(d - B + 1, 2);
  return fi;
}

ToricSlopes toric_slopes(long p, long q) {
  if (p < 2 || q < 2) throw OutOfRange("toric_slopes: p, q must be >= 2");
  if (std::gcd(p, q) != 1) throw NotCoprime("toric_slopes: gcd(p, q) != 1");
  const Int P(p), Q(q);
  const Int m = (P - 1) * (Q - 1);
  const Int t = 2 * P * Q - P - Q - 1;
  ToricSlopes s;
  s.pointed = Rational(12 * (P * Q * m - 1), m * t);
  s.unpointed = Rational(12 * P * Q, t);
  return s;
}

Rational stankova_slope(long g) {
  if (g < 3) throw OutOfRange("stankova_slope: g must be >= 3");
  if (g % 3 == 2) throw WrongResidue("stankova_slope: g = 2 mod 3 not covered");
  return Rational(36 * Int(g + 1), 5 * Int(g) + 1);
}

Rational negativity_threshold(const FamilyIntersection& fi) {
  Rational delta_eff = fi.delta_total() - fi.psi_total();
  if (delta_eff.is_zero()) throw ZeroDelta("negativity_threshold: effective delta-degree is 0");
  return Rational(2) - Rational(13) * fi.lambda / delta_eff;
}

}  // namespace gmchar
