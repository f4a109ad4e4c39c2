#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "gmchar/errors.hpp"
#include "gmchar/semigroup.hpp"

using namespace gmchar;

TEST_CASE("gap scan on small pairs") {
  CHECK(gaps_two_generated(2, 3).gaps == std::vector<long>{1});
  CHECK(gaps_two_generated(3, 4).gaps == std::vector<long>{1, 2, 5});
  CHECK(gaps_two_generated(3, 5).gaps == std::vector<long>{1, 2, 4, 7});
  CHECK(gaps_two_generated(2, 7).gaps == std::vector<long>{1, 3, 5});
  const auto sg = gaps_two_generated(3, 7);
  CHECK(sg.frobenius() == 11);
  CHECK(sg.genus() == 6);
  CHECK(sum_of_gaps(sg.gaps) == 31);
}

TEST_CASE("argument order does not matter") {
  CHECK(gaps_two_generated(4, 3).gaps == gaps_two_generated(3, 4).gaps);
  CHECK(gaps_two_generated(7, 2).gaps == gaps_two_generated(2, 7).gaps);
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(gaps_two_generated(4, 6), NotCoprime);
  CHECK_THROWS_AS(gaps_two_generated(1, 5), OutOfRange);
  CHECK_THROWS_AS(gaps_two_generated(0, 3), OutOfRange);
  CHECK_THROWS_AS(apery_set(6, 4), NotCoprime);
  CHECK_THROWS_AS(sum_of_gaps_closed_form(2, 4), NotCoprime);
}

TEST_CASE("apery sets") {
  CHECK(apery_set(3, 4) == std::vector<long>{0, 9, 6, 3});
  CHECK(apery_set(2, 3) == std::vector<long>{0, 4, 2});
  CHECK(apery_set(2, 5) == std::vector<long>{0, 6, 2, 8, 4});
}

TEST_CASE("apery route equals scan route") {
  for (auto [p, q] : {std::pair<long, long>{2, 3}, {3, 4}, {5, 7}, {8, 9}, {33, 35}, {45, 97}}) {
    CHECK(gaps_via_apery(p, q) == gaps_two_generated(p, q).gaps);
  }
}

TEST_CASE("sum of gaps closed form on a sweep") {
  for (long p = 2; p <= 60; ++p)
    for (long q = p + 1; q <= 60; ++q) {
      if (std::gcd(p, q) != 1) continue;
      CHECK(sum_of_gaps(gaps_two_generated(p, q).gaps) == sum_of_gaps_closed_form(p, q));
    }
}

TEST_CASE("symmetry detection") {
  CHECK(is_symmetric({1}));
  CHECK(is_symmetric({1, 3}));  // <2,5>
  CHECK(is_symmetric({1, 2, 5}));
  CHECK(is_symmetric({1, 2, 4, 7}));
  CHECK(is_symmetric({1, 4, 5, 7}));  // symmetric but not the gap set of a semigroup
  CHECK(is_symmetric({2, 3}));        // symmetric as a bare list (not a semigroup gap set)
  CHECK(!is_symmetric({1, 2}));
  CHECK(!is_symmetric({1, 4}));       // gap beyond 2k - 1
  CHECK(!is_symmetric({1, 2, 3}));
}

TEST_CASE("generator recovery from gaps") {
  for (auto [p, q] : {std::pair<long, long>{2, 3}, {3, 4}, {2, 7}, {4, 5}, {5, 9}}) {
    const auto rec = two_generators_from_gaps(gaps_two_generated(p, q).gaps);
    REQUIRE(rec.has_value());
    CHECK(rec->first == p);
    CHECK(rec->second == q);
  }
  // <3,4,5> has gaps {1,2}: three minimal generators.
  CHECK(!two_generators_from_gaps({1, 2}).has_value());
  // <4,5,6> has gaps {1,2,3,7}: symmetric, but three minimal generators.
  CHECK(!two_generators_from_gaps({1, 2, 3, 7}).has_value());
  // Symmetric gap candidate whose complement is not closed under addition.
  CHECK(!two_generators_from_gaps({1, 4, 5, 7}).has_value());
}
