#pragma once

#include <vector>

#include "partcount/bigint.hpp"
#include "partcount/part_set.hpp"

namespace partcount {

// Formal power series over the integers, truncated at a fixed degree.
// Coefficients are exact; index n is the coefficient of x^n.
class Series {
 public:
  explicit Series(long long trunc);  // zero series
  static Series one(long long trunc);
  static Series from_coeffs(std::vector<BigInt> coeffs);

  long long trunc() const { return trunc_; }
  const BigInt& operator[](long long n) const;
  BigInt& coeff(long long n);
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  std::vector<BigInt> into_coeffs() && { return std::move(coeffs_); }

 private:
  long long trunc_;
  std::vector<BigInt> coeffs_;  // size trunc_ + 1
};

// Operands must share the same truncation; mismatches throw
// std::invalid_argument.
Series series_add(const Series& f, const Series& g);
Series series_sub(const Series& f, const Series& g);
Series series_mul(const Series& f, const Series& g);
// Requires f[0] in {+1, -1}; otherwise throws std::domain_error.
Series series_invert(const Series& f);

// prod over a in A, a <= trunc of:
//   InvMinus: 1/(1-x^a)   Plus: (1+x^a)   InvPlus: 1/(1+x^a)   Minus: (1-x^a)
// Factors above the truncation order cannot affect kept coefficients, so
// enumerating A up to trunc is exact.
enum class ProductMode { InvMinus, Plus, InvPlus, Minus };
Series product_family(const PartSet& s, long long trunc, ProductMode mode);

// sum over a in A, a <= trunc of  w(a) * x^a / (1 -+ x^a), expanded as
// sum_{k>=1} (+-1)^(k-1) w(a) x^(k a); w is 1 (Count) or a (Sum).
enum class LambertWeight { Count, Sum };
enum class LambertSign { MinusDenominator, PlusDenominator };
Series lambert_sum(const PartSet& s, long long trunc, LambertWeight weight,
                   LambertSign sign);

}  // namespace partcount
