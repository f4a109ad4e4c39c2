// character.hpp: G_m-characters of (lambda, lambda_2, delta) and the
// derived alpha-value / slope invariants.
//
// A Character stores the weights chi_lambda and chi_lambda2 of the induced
// action on the determinants of H^0(omega) and H^0(omega^2); everything
// else is forced:
//   chi_delta = 13*chi_lambda - chi_lambda2
//   chi_K     = 13*chi_lambda - 2*chi_delta
// An optional breakdown of chi_delta over the boundary classes delta_i is
// carried when known (key 0 = delta_0, key h = delta_h); its values must
// sum to chi_delta.
#pragma once

#include <map>
#include <optional>

#include "gmchar/rational.hpp"

namespace gmchar {

using DeltaParts = std::map<long, Int>;

class Character {
 public:
  Character() : lambda_(0), lambda2_(0) {}  // the trivial character

  static Character from_lambda_lambda2(Int lambda, Int lambda2,
                                       std::optional<DeltaParts> parts = std::nullopt);
  static Character from_lambda_delta(Int lambda, Int delta,
                                     std::optional<DeltaParts> parts = std::nullopt);

  const Int& chi_lambda() const { return lambda_; }
  const Int& chi_lambda2() const { return lambda2_; }
  Int chi_delta() const { return 13 * lambda_ - lambda2_; }
  Int chi_K() const { return 2 * lambda2_ - 13 * lambda_; }
  const std::optional<DeltaParts>& delta_parts() const { return parts_; }

  bool is_trivial() const { return lambda_ == 0 && lambda2_ == 0; }

  Character negated() const;

  friend bool operator==(const Character& a, const Character& b) {
    return a.lambda_ == b.lambda_ && a.lambda2_ == b.lambda2_;
  }

 private:
  Character(Int lambda, Int lambda2, std::optional<DeltaParts> parts);
  Int lambda_;
  Int lambda2_;
  std::optional<DeltaParts> parts_;
};

// alpha_value outcome: either a rational or the distinguished trivial case
// chi_lambda = chi_lambda2 = 0, where alpha is undefined.
struct AlphaResult {
  std::optional<Rational> value;
  bool trivial() const { return !value.has_value(); }
};

// alpha = (13*chi1 - 2*chi2) / (13*chi1 - chi2).  Trivial character yields
// the trivial outcome; a vanishing denominator on a nontrivial character
// throws DegenerateDenominator.
AlphaResult alpha_value(const Character& c);

// slope = chi_delta / chi_lambda; throws ZeroLambda when chi_lambda = 0.
Rational slope(const Character& c);

// alpha = 2 - 13*lambda/delta for a divisor class lambda*L - delta*D;
// throws ZeroDelta when delta = 0.
Rational alpha_from_lambda_delta(const Rational& lambda, const Rational& delta);

}  // namespace gmchar
