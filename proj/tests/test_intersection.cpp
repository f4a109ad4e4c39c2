#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "gmchar/crosscheck.hpp"
#include "gmchar/errors.hpp"
#include "gmchar/intersection.hpp"

using namespace gmchar;

TEST_CASE("family intersection numbers") {
  const auto b2 = family_bk(2);
  CHECK(b2.lambda == Rational(3));
  CHECK(b2.delta0 == Rational(30));
  CHECK(b2.psi == std::vector<Rational>{Rational(1), Rational(1)});
  CHECK(b2.psi_total() == Rational(2));
  CHECK(*b2.kappa == Rational(6));
  CHECK(b2.deg_b == 1);

  const auto h2 = family_hk(2);
  CHECK(h2.lambda == Rational(3));
  CHECK(h2.delta0 == Rational(30));
  CHECK(h2.psi == std::vector<Rational>{Rational(1)});

  const auto t2 = family_trik(2);
  CHECK(t2.lambda == Rational(6));
  CHECK(t2.delta0 == Rational(60));
  CHECK(t2.psi == std::vector<Rational>{Rational(2), Rational(2), Rational(4)});
  CHECK(t2.deg_b == 2);
  CHECK(*t2.kappa == Rational(12));

  const auto bh2 = family_bhk(2);
  CHECK(bh2.psi == std::vector<Rational>{Rational(2), Rational(4)});
  CHECK(bh2.deg_b == 2);

  CHECK_THROWS_AS(family_bk(0), OutOfRange);
}

TEST_CASE("toric family") {
  const auto z = family_toric(3, 4, 1);
  CHECK(z.lambda == Rational(8));
  CHECK(z.delta0 == Rational(72));
  CHECK(z.psi_total() == Rational(1));
  CHECK(*z.genus == 3);
  CHECK(*z.kappa == Rational(25));  // b s^2, s = pqb - p - q = 5

  const auto y = family_toric(2, 1, 3);
  CHECK(y.lambda == Rational(7));
  CHECK(y.delta0 == Rational(60));
  CHECK(y.psi_total() == Rational(3));
  CHECK(*y.genus == 4);

  CHECK(family_toric(3, 7, 1).lambda == Rational(31));
  CHECK(family_toric(3, 8, 1).lambda == Rational(42));

  CHECK_THROWS_AS(family_toric(2, 4, 1), NotCoprime);
  CHECK_THROWS_AS(family_toric(1, 1, 1), OutOfRange);
  CHECK_THROWS_AS(family_toric(0, 1, 2), OutOfRange);

  // Specialization: the tail of Z(k+1, 1, 2) is the A_{2k+1} pencil.
  for (long k = 1; k <= 10; ++k) {
    const auto zz = family_toric(k + 1, 1, 2);
    const auto bb = family_bk(k);
    CHECK(zz.lambda == bb.lambda);
    CHECK(zz.delta0 == bb.delta0);
    CHECK(zz.psi_total() == bb.psi_total());
  }
}

TEST_CASE("mumford relations") {
  for (long k = 1; k <= 10; ++k)
    for (const auto& fi : {family_bk(k), family_hk(k), family_trik(k), family_bhk(k)})
      CHECK(Rational(12) * fi.lambda - fi.delta0 == *fi.kappa);
  for (long p = 1; p <= 8; ++p)
    for (long q = 1; q <= 8; ++q) {
      if (std::gcd(p, q) != 1) continue;
      for (long b = 1; b <= 3; ++b) {
        if (p * b == 1 && q * b == 1) continue;
        const auto fi = family_toric(p, q, b);
        CHECK(Rational(12) * fi.lambda - fi.delta0 == *fi.kappa - Rational(Int(b)));
      }
    }
}

TEST_CASE("toric slopes") {
  const auto s23 = toric_slopes(2, 3);
  CHECK(s23.pointed == Rational(11));
  CHECK(s23.unpointed == Rational(12));
  const auto s35 = toric_slopes(3, 5);
  CHECK(s35.pointed == Rational(Int(17), Int(2)));
  CHECK(s35.unpointed == Rational(Int(60), Int(7)));
  const auto s25 = toric_slopes(2, 5);
  CHECK(s25.pointed == Rational(Int(39), Int(4)));
  CHECK(s25.unpointed == Rational(10));
  CHECK_THROWS_AS(toric_slopes(2, 4), NotCoprime);
  CHECK_THROWS_AS(toric_slopes(1, 3), OutOfRange);
}

TEST_CASE("stankova slope") {
  CHECK(stankova_slope(3) == Rational(9));
  CHECK(stankova_slope(4) == Rational(Int(60), Int(7)));
  CHECK(stankova_slope(6) == Rational(Int(252), Int(31)));
  CHECK_THROWS_AS(stankova_slope(5), WrongResidue);
  CHECK_THROWS_AS(stankova_slope(2), OutOfRange);
}

TEST_CASE("negativity thresholds") {
  CHECK(negativity_threshold(family_bk(1)) == Rational(Int(7), Int(10)));
  CHECK(negativity_threshold(family_hk(2)) == Rational(Int(19), Int(29)));
  CHECK(negativity_threshold(family_bhk(2)) == Rational(Int(5), Int(9)));
  for (long k = 1; k <= 10; ++k) {
    const Int K(k);
    CHECK(negativity_threshold(family_bk(k)) == Rational(3 * K + 11, 8 * K + 12));
    CHECK(negativity_threshold(family_hk(k)) ==
          Rational(3 * K * K + 11 * K + 4, 8 * K * K + 12 * K + 2));
    CHECK(negativity_threshold(family_bhk(k)) ==
          Rational(3 * K * K + 7 * K + 4, 8 * K * K + 10 * K + 2));
  }
}

TEST_CASE("crosschecks against the catalog characters") {
  const auto ao2 = SingularityModel::a_odd(2);
  auto rep = crosscheck(ao2, AttachmentConfig::all_of(ao2));
  CHECK(rep.agrees);
  CHECK(rep.family_name == family_bk(2).name);
  CHECK(rep.catalog == rep.from_family);
  CHECK(rep.catalog.chi_delta() == 28);

  rep = crosscheck(ao2, AttachmentConfig::subset({1}));
  CHECK(rep.agrees);
  CHECK(rep.from_family.chi_delta() == 29);

  const auto de2 = SingularityModel::d_even(2);
  rep = crosscheck(de2, AttachmentConfig::all_of(de2));
  CHECK(rep.agrees);
  CHECK(rep.from_family.chi_lambda() == 3);
  CHECK(rep.from_family.chi_delta() == 26);

  rep = crosscheck(de2, AttachmentConfig::subset({1, 2}));
  CHECK(rep.agrees);
  CHECK(rep.from_family.chi_delta() == 27);

  const auto t = SingularityModel::toric(3, 4, 1);
  rep = crosscheck(t, AttachmentConfig::all_of(t));
  CHECK(rep.agrees);
  CHECK(rep.catalog.chi_lambda() == 8);

  const auto u = SingularityModel::unibranch({1, 2, 5});
  rep = crosscheck(u, AttachmentConfig::all_of(u));
  CHECK(rep.agrees);
  CHECK(rep.family_name == family_toric(3, 4, 1).name);

  const auto y = SingularityModel::toric(2, 1, 3);
  rep = crosscheck(y, AttachmentConfig::all_of(y));
  CHECK(rep.agrees);
  CHECK(rep.catalog.chi_lambda() == 7);
  CHECK(rep.catalog.chi_delta() == 57);
}

TEST_CASE("combinations without an associated family") {
  const auto ae = SingularityModel::a_even(2);
  CHECK_THROWS_AS(crosscheck(ae, AttachmentConfig::all_of(ae)), NoAssociatedFamily);
  const auto ao = SingularityModel::a_odd(2);
  CHECK_THROWS_AS(crosscheck(ao, AttachmentConfig::subset({2})), NoAssociatedFamily);
  CHECK_THROWS_AS(crosscheck(ao, AttachmentConfig::none()), NoAssociatedFamily);
  const auto de = SingularityModel::d_even(2);
  CHECK_THROWS_AS(crosscheck(de, AttachmentConfig::subset({1})), NoAssociatedFamily);
  // Symmetric gap list of a three-generated semigroup: no toric family.
  const auto u = SingularityModel::unibranch({1, 2, 3, 7});
  CHECK_THROWS_AS(crosscheck(u, AttachmentConfig::all_of(u)), NoAssociatedFamily);
}
