#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "partcount/part_set.hpp"

using namespace partcount;
using VL = std::vector<long long>;

TEST_CASE("primality helper") {
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));  // 7 * 13
}

TEST_CASE("finite sets normalize and validate") {
  PartSet s = PartSet::finite({3, 1, 2, 2});
  CHECK(s.kind() == SetKind::Finite);
  CHECK(s.stored_elements() == VL{1, 2, 3});
  CHECK(s.describe() == "finite:1,2,3");
  CHECK_THROWS_AS(PartSet::finite({}), std::invalid_argument);
  CHECK_THROWS_AS(PartSet::finite({0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(PartSet::finite({-3}), std::invalid_argument);
}

TEST_CASE("parse accepts every kind and round-trips describe") {
  for (const char* spec :
       {"naturals", "primes", "odds", "finite:2", "finite:1,2,3", "ppowers:2",
        "ppowers:5", "complement:finite:2,3"}) {
    PartSet s = PartSet::parse(spec);
    CHECK(s.describe() == spec);
    PartSet again = PartSet::parse(s.describe());
    CHECK(again.describe() == s.describe());
    CHECK(again.kind() == s.kind());
  }
  CHECK(PartSet::parse("finite:3,1,1") .describe() == "finite:1,3");
}

TEST_CASE("parse rejects malformed specs") {
  CHECK_THROWS_AS(PartSet::parse("bogus"), std::invalid_argument);
  CHECK_THROWS_AS(PartSet::parse("finite:"), std::invalid_argument);
  CHECK_THROWS_AS(PartSet::parse("finite:1,x"), std::invalid_argument);
  CHECK_THROWS_AS(PartSet::parse("finite:1,,2"), std::invalid_argument);
  CHECK_THROWS_AS(PartSet::parse("ppowers:"), std::invalid_argument);
  CHECK_THROWS_AS(PartSet::parse("ppowers:4"), std::invalid_argument);
  CHECK_THROWS_AS(PartSet::parse("complement:primes"), std::invalid_argument);
  CHECK_THROWS_AS(PartSet::parse(""), std::invalid_argument);
}

TEST_CASE("elements_up_to enumerates ascending") {
  CHECK(PartSet::naturals().elements_up_to(5) == VL{1, 2, 3, 4, 5});
  CHECK(PartSet::primes().elements_up_to(13) == VL{2, 3, 5, 7, 11, 13});
  CHECK(PartSet::prime_powers(2).elements_up_to(20) == VL{1, 2, 4, 8, 16});
  CHECK(PartSet::prime_powers(3).elements_up_to(30) == VL{1, 3, 9, 27});
  CHECK(PartSet::odds().elements_up_to(9) == VL{1, 3, 5, 7, 9});
  CHECK(PartSet::finite({2, 5, 9}).elements_up_to(6) == VL{2, 5});
  CHECK(PartSet::complement_of({2, 3}).elements_up_to(6) == VL{1, 4, 5, 6});
  CHECK(PartSet::naturals().elements_up_to(0).empty());
  CHECK(PartSet::primes().elements_up_to(-7).empty());
  CHECK(PartSet::finite({4}).elements_up_to(3).empty());
}

TEST_CASE("contains per kind") {
  CHECK(PartSet::naturals().contains(7));
  CHECK_FALSE(PartSet::naturals().contains(0));
  CHECK(PartSet::primes().contains(2));
  CHECK(PartSet::primes().contains(13));
  CHECK_FALSE(PartSet::primes().contains(1));
  CHECK_FALSE(PartSet::primes().contains(4));
  CHECK(PartSet::prime_powers(2).contains(8));
  CHECK(PartSet::prime_powers(2).contains(1));  // p^0 belongs
  CHECK_FALSE(PartSet::prime_powers(2).contains(6));
  CHECK(PartSet::odds().contains(1));
  CHECK_FALSE(PartSet::odds().contains(4));
  CHECK(PartSet::finite({1, 2, 3}).contains(2));
  CHECK_FALSE(PartSet::finite({1, 2, 3}).contains(4));
  CHECK(PartSet::complement_of({2}).contains(4));
  CHECK_FALSE(PartSet::complement_of({2}).contains(2));
}

TEST_CASE("without removes a member when a representation exists") {
  PartSet no3 = PartSet::naturals().without(3);
  CHECK(no3.kind() == SetKind::Complement);
  CHECK(no3.describe() == "complement:finite:3");
  CHECK(no3.contains(2));
  CHECK_FALSE(no3.contains(3));

  CHECK(PartSet::finite({1, 2, 3}).without(2).describe() == "finite:1,3");
  CHECK(PartSet::complement_of({2}).without(4).describe() ==
        "complement:finite:2,4");

  CHECK_THROWS_AS(PartSet::finite({1, 2, 3}).without(5), std::domain_error);
  CHECK_THROWS_AS(PartSet::finite({2}).without(2), std::domain_error);
  CHECK_THROWS_AS(PartSet::complement_of({2}).without(2), std::domain_error);
  CHECK_THROWS_AS(PartSet::primes().without(2), UnsupportedOperation);
  CHECK_THROWS_AS(PartSet::prime_powers(2).without(4), UnsupportedOperation);
  CHECK_THROWS_AS(PartSet::odds().without(3), UnsupportedOperation);
}

TEST_CASE("prime_powers validates the base") {
  CHECK_THROWS_AS(PartSet::prime_powers(1), std::invalid_argument);
  CHECK_THROWS_AS(PartSet::prime_powers(6), std::invalid_argument);
  CHECK(PartSet::prime_powers(7).prime() == 7);
}
