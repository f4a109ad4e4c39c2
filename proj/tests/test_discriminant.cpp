#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gmchar/discriminant.hpp"
#include "gmchar/errors.hpp"

using namespace gmchar;

TEST_CASE("weighted degree closed form") {
  CHECK(disc_weighted_degree(2, 1) == 2);
  CHECK(disc_weighted_degree(5, 2) == 40);   // A_4 total: 8k^2+4k at k=2
  CHECK(disc_weighted_degree(6, 1) == 30);   // A_5 total: (2k+1)(2k+2) at k=2
  CHECK(disc_weighted_degree(7, 2) == 84);   // A_6 total: 8k^2+4k at k=3
  CHECK_THROWS_AS(disc_weighted_degree(1, 1), OutOfRange);
  CHECK_THROWS_AS(disc_weighted_degree(3, 0), OutOfRange);
}

TEST_CASE("symbolic oracle agrees with the closed form") {
  for (long n = 2; n <= 5; ++n)
    for (long w = 1; w <= 2; ++w) CHECK(disc_oracle(n, w) == disc_weighted_degree(n, w));
  CHECK_THROWS_AS(disc_oracle(9, 1), OutOfRange);
  CHECK_THROWS_AS(disc_oracle(1, 1), OutOfRange);
}

TEST_CASE("resultant evaluation matches classical discriminants") {
  // n = 2: Res(f, f') = 4a_0 - a_1^2 = -disc.
  CHECK(resultant_eval(2, {Int(2), Int(3)}) == -1);
  CHECK(resultant_eval(2, {Int(2), Int(-3)}) == -1);
  CHECK(resultant_eval(2, {Int(1), Int(0)}) == 4);
  // n = 3, f = x^3 + px + q: disc = -4p^3 - 27q^2, Res = -disc.
  CHECK(resultant_eval(3, {Int(1), Int(1), Int(0)}) == 31);
  CHECK(resultant_eval(3, {Int(-1), Int(0), Int(0)}) == 27);
  // Split polynomials with known discriminants; sign (-1)^(n(n-1)/2).
  // (x-1)(x-2)(x-3)(x-4): disc = (1!2!3!)^2 = 144, Res = +144.
  CHECK(resultant_eval(4, {Int(24), Int(-50), Int(35), Int(-10)}) == 144);
  // (x-1)...(x-5): disc = (1!2!3!4!)^2 = 82944, Res = +82944.
  CHECK(resultant_eval(5, {Int(-120), Int(274), Int(-225), Int(85), Int(-15)}) == 82944);
  // Repeated root kills the resultant: (x-1)^2(x-2) = x^3-4x^2+5x-2.
  CHECK(resultant_eval(3, {Int(-2), Int(5), Int(-4)}) == 0);
  CHECK_THROWS_AS(resultant_eval(3, {Int(1), Int(2)}), OutOfRange);
}

TEST_CASE("chi_delta0 from models") {
  const auto de2 = SingularityModel::d_even(2);
  CHECK(chi_delta0_from_model(de2, AttachmentConfig::all_of(de2)) == 26);
  CHECK(chi_delta0_from_model(de2, AttachmentConfig::subset({1, 2})) == 27);
  CHECK(chi_delta0_from_model(de2, AttachmentConfig::subset({1})) == 28);
  const auto ao2 = SingularityModel::a_odd(2);
  CHECK(chi_delta0_from_model(ao2, AttachmentConfig::none()) == 30);
  CHECK(chi_delta0_from_model(ao2, AttachmentConfig::subset({1})) == 29);
}

TEST_CASE("T^1 weight decomposition for A_even") {
  const auto t1 = t1_decomposition_a_even(3);
  REQUIRE(t1.deformation_weights.size() == 6);
  CHECK(t1.deformation_weights.front() == -14);
  CHECK(t1.deformation_weights.back() == -4);
  CHECK(t1.node_weights == std::vector<Int>{Int(1)});
  CHECK(t1.crimping_weights == std::vector<Int>{Int(1), Int(3)});
  CHECK(t1.total() == -49);
  CHECK_THROWS_AS(t1_decomposition_a_even(1), OutOfRange);
}

TEST_CASE("chi_K dual route for A_even") {
  for (long k = 2; k <= 10; ++k) {
    const Int K(k);
    const auto m = SingularityModel::a_even(k);
    const Int via_char = chi_family(m, AttachmentConfig::all_of(m)).chi_K();
    CHECK(chi_k_direct_a_even(k) == -3 * K * K - 8 * K + 2);
    CHECK(chi_k_direct_a_even(k) == via_char);
    CHECK(t1_decomposition_a_even(k).total() == via_char);
  }
}
