#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <stdexcept>
#include <vector>

#include "partcount/series.hpp"

using namespace partcount;

namespace {
std::vector<BigInt> row(const Series& s) { return s.coeffs(); }

std::vector<BigInt> big(std::vector<long long> v) {
  return std::vector<BigInt>(v.begin(), v.end());
}
}  // namespace

TEST_CASE("construction and access") {
  Series z(4);
  CHECK(z.trunc() == 4);
  for (long long n = 0; n <= 4; ++n) CHECK(z[n] == 0);
  Series one = Series::one(3);
  CHECK(one[0] == 1);
  CHECK(one[3] == 0);
  Series f = Series::from_coeffs(big({1, 2, 3}));
  CHECK(f.trunc() == 2);
  CHECK(f[2] == 3);
  CHECK_THROWS_AS(Series(-1), std::invalid_argument);
}

TEST_CASE("add, sub, and truncation discipline") {
  Series f = Series::from_coeffs(big({1, 2, 3}));
  Series g = Series::from_coeffs(big({4, 5, 6}));
  CHECK(row(series_add(f, g)) == big({5, 7, 9}));
  CHECK(row(series_sub(f, g)) == big({-3, -3, -3}));
  Series shorter = Series::from_coeffs(big({1, 1}));
  CHECK_THROWS_AS(series_add(f, shorter), std::invalid_argument);
  CHECK_THROWS_AS(series_mul(f, shorter), std::invalid_argument);
}

TEST_CASE("multiplication matches hand expansion") {
  Series f = Series::from_coeffs(big({1, 1, 0, 0}));       // 1 + x
  Series g = Series::from_coeffs(big({1, 1, 1, 0}));       // 1 + x + x^2
  CHECK(row(series_mul(f, g)) == big({1, 2, 2, 1}));
  // Truncation drops everything above x^3.
  Series h = Series::from_coeffs(big({0, 0, 1, 1}));       // x^2 + x^3
  CHECK(row(series_mul(g, h)) == big({0, 0, 1, 2}));
}

TEST_CASE("inversion: geometric series and sign -1") {
  Series f(5);
  f.coeff(0) = 1;
  f.coeff(1) = -1;  // 1 - x
  CHECK(row(series_invert(f)) == big({1, 1, 1, 1, 1, 1}));

  Series g(4);
  g.coeff(0) = -1;
  g.coeff(1) = 1;  // -1 + x = -(1 - x)
  CHECK(row(series_invert(g)) == big({-1, -1, -1, -1, -1}));

  Series bad(3);
  bad.coeff(0) = 2;
  CHECK_THROWS_AS(series_invert(bad), std::domain_error);
  Series zero(3);
  CHECK_THROWS_AS(series_invert(zero), std::domain_error);
}

TEST_CASE("inversion is a two-sided inverse on pseudo-random units") {
  std::mt19937 rng(42);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int trial = 0; trial < 10; ++trial) {
    Series f(30);
    f.coeff(0) = trial % 2 == 0 ? 1 : -1;
    for (long long n = 1; n <= 30; ++n) f.coeff(n) = coeff(rng);
    Series g = series_invert(f);
    Series prod = series_mul(f, g);
    CHECK(prod[0] == 1);
    for (long long n = 1; n <= 30; ++n) CHECK(prod[n] == 0);
  }
}

TEST_CASE("product_family frozen rows") {
  const PartSet nat = PartSet::naturals();
  // Partition numbers.
  CHECK(row(product_family(nat, 10, ProductMode::InvMinus)) ==
        big({1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42}));
  // Distinct-part partition numbers.
  CHECK(row(product_family(nat, 10, ProductMode::Plus)) ==
        big({1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10}));
  // prod (1 - x^n): pentagonal-number signs.
  CHECK(row(product_family(nat, 12, ProductMode::Minus)) ==
        big({1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1}));
  // 1 / prod (1 + x^n).
  CHECK(row(product_family(nat, 5, ProductMode::InvPlus)) ==
        big({1, -1, 0, -1, 1, -1}));
  // Two-element set: p_{1,2}(n) = floor(n/2) + 1.
  CHECK(row(product_family(PartSet::finite({1, 2}), 7, ProductMode::InvMinus)) ==
        big({1, 1, 2, 2, 3, 3, 4, 4}));
  // Inverted and direct factors cancel.
  Series direct = product_family(nat, 20, ProductMode::Minus);
  Series inverted = product_family(nat, 20, ProductMode::InvMinus);
  Series prod = series_mul(direct, inverted);
  CHECK(prod[0] == 1);
  for (long long n = 1; n <= 20; ++n) CHECK(prod[n] == 0);
  Series direct_p = product_family(nat, 20, ProductMode::Plus);
  Series inverted_p = product_family(nat, 20, ProductMode::InvPlus);
  Series prod_p = series_mul(direct_p, inverted_p);
  CHECK(prod_p[0] == 1);
  for (long long n = 1; n <= 20; ++n) CHECK(prod_p[n] == 0);
}

TEST_CASE("lambert_sum rows are divisor sums") {
  const PartSet nat = PartSet::naturals();
  CHECK(row(lambert_sum(nat, 6, LambertWeight::Count,
                        LambertSign::MinusDenominator)) ==
        big({0, 1, 2, 2, 3, 2, 4}));
  CHECK(row(lambert_sum(nat, 6, LambertWeight::Sum,
                        LambertSign::MinusDenominator)) ==
        big({0, 1, 3, 4, 7, 6, 12}));
  CHECK(row(lambert_sum(nat, 6, LambertWeight::Count,
                        LambertSign::PlusDenominator)) ==
        big({0, 1, 0, 2, -1, 2, 0}));
  CHECK(row(lambert_sum(nat, 6, LambertWeight::Sum,
                        LambertSign::PlusDenominator)) ==
        big({0, 1, 1, 4, 1, 6, 4}));
  // Restricted to odd parts: only odd divisors contribute.
  CHECK(row(lambert_sum(PartSet::odds(), 6, LambertWeight::Count,
                        LambertSign::MinusDenominator)) ==
        big({0, 1, 1, 2, 1, 2, 2}));
}
