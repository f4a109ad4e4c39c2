// character.cpp
#include "gmchar/character.hpp"

namespace gmchar {

Character::Character(Int lambda, Int lambda2, std::optional<DeltaParts> parts)
    : lambda_(std::move(lambda)), lambda2_(std::move(lambda2)), parts_(std::move(parts)) {
  if (parts_) {
    Int sum = 0;
    for (const auto& [idx, v] : *parts_) {
      if (idx < 0) throw DeltaPartsMismatch("delta_parts: negative boundary index");
      sum += v;
    }
    if (sum != chi_delta())
      throw DeltaPartsMismatch("delta_parts sum " + to_string(sum) +
                               " != chi_delta " + to_string(chi_delta()));
  }
}

Character Character::from_lambda_lambda2(Int lambda, Int lambda2,
                                         std::optional<DeltaParts> parts) {
  return Character(std::move(lambda), std::move(lambda2), std::move(parts));
}

Character Character::from_lambda_delta(Int lambda, Int delta,
                                       std::optional<DeltaParts> parts) {
  Int lambda2 = 13 * lambda - delta;
  return Character(std::move(lambda), std::move(lambda2), std::move(parts));
}

Character Character::negated() const {
  std::optional<DeltaParts> parts;
  if (parts_) {
    parts.emplace();
    for (const auto& [idx, v] : *parts_) parts->emplace(idx, -v);
  }
  return Character(-lambda_, -lambda2_, std::move(parts));
}

AlphaResult alpha_value(const Character& c) {
  if (c.is_trivial()) return AlphaResult{std::nullopt};
  Int den = 13 * c.chi_lambda() - c.chi_lambda2();
  if (den == 0)
    throw DegenerateDenominator("alpha_value: 13*chi1 - chi2 = 0 on nontrivial character");
  Int num = 13 * c.chi_lambda() - 2 * c.chi_lambda2();
  return AlphaResult{Rational(num, den)};
}

Rational slope(const Character& c) {
  if (c.chi_lambda() == 0) throw ZeroLambda("slope: chi_lambda = 0");
  return Rational(c.chi_delta(), c.chi_lambda());
}

Rational alpha_from_lambda_delta(const Rational& lambda, const Rational& delta) {
  if (delta.is_zero()) throw ZeroDelta("alpha_from_lambda_delta: delta = 0");
  return Rational(2) - Rational(13) * lambda / delta;
}

}  // namespace gmchar
