#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gmchar/character.hpp"
#include "gmchar/errors.hpp"
#include "gmchar/rational.hpp"

using namespace gmchar;

TEST_CASE("rational canonical serialization") {
  CHECK(Rational(Int(4), Int(6)).str() == "2/3");
  CHECK(Rational(Int(-4), Int(6)).str() == "-2/3");
  CHECK(Rational(Int(4), Int(-6)).str() == "-2/3");
  CHECK(Rational(Int(-4), Int(-6)).str() == "2/3");
  CHECK(Rational(Int(0), Int(5)).str() == "0");
  CHECK(Rational(7).str() == "7");
  CHECK(Rational(Int(14), Int(2)).str() == "7");
  CHECK(Rational(Int(-9), Int(3)).str() == "-3");
  CHECK(to_string(Rational(Int(22), Int(7))) == "22/7");
  CHECK(to_string(Int(-12)) == "-12");
}

TEST_CASE("rational parse round trips") {
  for (const char* s : {"0", "7", "-3", "2/3", "-2/3", "22/7", "251/31"}) {
    CHECK(Rational::parse(s).str() == s);
  }
  CHECK(Rational::parse("3/6") == Rational(Int(1), Int(2)));
  CHECK(Rational::parse("-14/21").str() == "-2/3");
  CHECK_THROWS_AS(Rational::parse("1/0"), DomainError);
  CHECK_THROWS_AS(Rational(Int(1), Int(0)), DomainError);
}

TEST_CASE("rational arithmetic and comparison") {
  const Rational a(Int(1), Int(3)), b(Int(1), Int(6));
  CHECK(a + b == Rational(Int(1), Int(2)));
  CHECK(a - b == b);
  CHECK(a * b == Rational(Int(1), Int(18)));
  CHECK(a / b == Rational(2));
  CHECK(-a == Rational(Int(-1), Int(3)));
  CHECK(a > b);
  CHECK(b < a);
  CHECK(a != b);
  CHECK(Rational(Int(2), Int(4)) == Rational(Int(3), Int(6)));
  CHECK_THROWS_AS(a / Rational(0), DomainError);
  CHECK(Rational(Int(5), Int(2)).num() == 5);
  CHECK(Rational(Int(5), Int(2)).den() == 2);
  CHECK(Rational(6).is_integer());
  CHECK(!Rational(Int(5), Int(2)).is_integer());
  CHECK(Rational(0).is_zero());
  CHECK(Rational(-3).sign() == -1);
}

TEST_CASE("exact division") {
  CHECK(exact_div(Int(12), Int(4)) == 3);
  CHECK(exact_div(Int(-12), Int(4)) == -3);
  CHECK_THROWS_AS(exact_div(Int(13), Int(4)), DomainError);
  CHECK_THROWS_AS(exact_div(Int(1), Int(0)), DomainError);
}

TEST_CASE("character invariants") {
  const Character e6 = Character::from_lambda_lambda2(Int(8), Int(33));
  CHECK(e6.chi_lambda() == 8);
  CHECK(e6.chi_lambda2() == 33);
  CHECK(e6.chi_delta() == 71);
  CHECK(e6.chi_K() == -38);
  CHECK(!e6.is_trivial());
  CHECK(e6.negated().chi_lambda() == -8);
  CHECK(e6.negated().chi_delta() == -71);
  CHECK(e6.negated().negated() == e6);

  const Character via_delta = Character::from_lambda_delta(Int(8), Int(71));
  CHECK(via_delta == e6);

  CHECK(Character().is_trivial());
  CHECK(Character::from_lambda_lambda2(Int(0), Int(0)).is_trivial());
}

TEST_CASE("delta parts validation") {
  DeltaParts parts;
  parts[0] = 30;
  parts[1] = -1;
  parts[2] = -1;
  const Character c = Character::from_lambda_delta(Int(3), Int(28), parts);
  CHECK(c.chi_delta() == 28);
  REQUIRE(c.delta_parts().has_value());
  CHECK(c.delta_parts()->at(0) == 30);
  CHECK(!Character::from_lambda_delta(Int(3), Int(28)).delta_parts().has_value());

  DeltaParts bad = parts;
  bad[1] = -2;  // parts now sum to 27, not 28
  CHECK_THROWS_AS(Character::from_lambda_delta(Int(3), Int(28), bad), DeltaPartsMismatch);
  DeltaParts neg;
  neg[-1] = 28;
  CHECK_THROWS_AS(Character::from_lambda_delta(Int(3), Int(28), neg), DeltaPartsMismatch);
}

TEST_CASE("alpha values") {
  auto alpha = [](long l, long l2) {
    return alpha_value(Character::from_lambda_lambda2(Int(l), Int(l2)));
  };
  CHECK(*alpha(8, 33).value == Rational(Int(38), Int(71)));
  CHECK(*alpha(14, 63).value == Rational(Int(8), Int(17)));
  CHECK(*alpha(1, 2).value == Rational(Int(9), Int(11)));
  CHECK(*alpha(0, 5).value == Rational(2));
  CHECK(alpha(0, 0).trivial());
  CHECK(!alpha(0, 0).value.has_value());
  // chi_delta = 13*1 - 13 = 0 while chi_lambda != 0.
  CHECK_THROWS_AS(alpha(1, 13), DegenerateDenominator);
}

TEST_CASE("slope and divisor-route alpha") {
  const Character e6 = Character::from_lambda_lambda2(Int(8), Int(33));
  CHECK(slope(e6) == Rational(Int(71), Int(8)));
  CHECK_THROWS_AS(slope(Character::from_lambda_lambda2(Int(0), Int(5))), ZeroLambda);
  CHECK(alpha_from_lambda_delta(Rational(8), Rational(71)) == Rational(Int(38), Int(71)));
  CHECK(alpha_from_lambda_delta(Rational(-2), Rational(-18)) == Rational(Int(5), Int(9)));
  CHECK_THROWS_AS(alpha_from_lambda_delta(Rational(1), Rational(0)), ZeroDelta);
}

TEST_CASE("alpha relations on random characters") {
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<long> dist(-50, 50);
  int checked = 0;
  for (int t = 0; t < 500; ++t) {
    const long l = dist(rng), l2 = dist(rng);
    const Character c = Character::from_lambda_lambda2(Int(l), Int(l2));
    if (c.chi_delta() == 0 && l != 0) {
      CHECK_THROWS_AS(alpha_value(c), DegenerateDenominator);
      continue;
    }
    const auto a = alpha_value(c);
    const auto an = alpha_value(c.negated());
    CHECK(a.trivial() == an.trivial());
    if (!a.trivial()) CHECK(*a.value == *an.value);
    if (l != 0 && c.chi_delta() != 0) {
      CHECK(*a.value == Rational(2) - Rational(13) / slope(c));
      CHECK(*a.value == alpha_from_lambda_delta(Rational(c.chi_lambda()),
                                                Rational(c.chi_delta())));
      ++checked;
    }
  }
  CHECK(checked > 400);
}
