#pragma once

#include <string>
#include <vector>

#include "partcount/bigint.hpp"
#include "partcount/part_set.hpp"
#include "partcount/partition_tables.hpp"

namespace partcount {

// A finite part set {a_1 < ... < a_k} with gcd 1, the hypothesis under
// which p_A and np_A restricted to a residue class mod period become
// polynomials in the block index. period = a_1 * ... * a_k.
struct FiniteSetA {
  std::vector<long long> elements;
  long long k = 0;
  long long period = 0;

  // Throws std::invalid_argument if s is not finite, std::domain_error if
  // gcd != 1.
  static FiniteSetA from(const PartSet& s);
  static FiniteSetA from_elements(std::vector<long long> elements);
  PartSet part_set() const;
};

struct LeadingCoefficient {
  // Leading coefficient of np(period*l + r) as a degree-k polynomial in l:
  //   (sum_i a_i^(k-2) * prod_{j != i} a_j^(k-1)) / k!
  BigRational in_l;
  // Constant c in np(n) ~ c n^k:  (1/k!) * (sum_i 1/a_i) / (prod_j a_j).
  // Satisfies in_l == in_n * period^k (asserted).
  BigRational in_n;
};
LeadingCoefficient leading_coefficient(const FiniteSetA& a);

// p_A(n) ~ n^(k-1) / (period * (k-1)!); returns 1/(period*(k-1)!).
BigRational netto_coefficient(const FiniteSetA& a);

enum class QuasiTarget { PartitionCount, PartsCount };  // p_A vs np_A

// Exact finite-difference polynomiality check along one residue class:
// sample f(period*l + r) for l = l0..l0+window, difference `degree` times
// (degree = k-1 for PartitionCount, k for PartsCount) and require the top
// row to be constant and equal to
//   PartitionCount: period^(k-2)        PartsCount: k! * in_l
struct QuasiPolyReport {
  std::string set;
  QuasiTarget target = QuasiTarget::PartitionCount;
  long long r = 0;
  long long l0 = 0;
  long long window = 0;  // number of l steps; window+1 samples
  long long degree = 0;
  std::vector<BigInt> samples;
  std::vector<BigInt> top_differences;
  BigRational expected;
  bool match = false;
};

// `values` must cover period*(l0+window) + r; window must be >= degree + 2.
// Violations throw std::invalid_argument.
QuasiPolyReport quasi_poly_check(const SequenceTable& values,
                                 const FiniteSetA& a, QuasiTarget target,
                                 long long r, long long l0, long long window);
// Convenience overload that computes the needed table itself.
QuasiPolyReport quasi_poly_check(const FiniteSetA& a, QuasiTarget target,
                                 long long r, long long l0, long long window);

// np(n) / (c n^k) as an exact rational plus a rounded decimal rendering.
// Reported as evidence; carries no pass/fail claim.
struct RatioRow {
  long long n = 0;
  BigRational ratio;
  std::string decimal;
};
std::vector<RatioRow> ratio_report(const SequenceTable& np_values,
                                   const FiniteSetA& a,
                                   const std::vector<long long>& n_points);
std::vector<RatioRow> ratio_report(const FiniteSetA& a,
                                   const std::vector<long long>& n_points);

// {"set":…,"target":…,"r":…,"l0":…,"window":…,"degree":…,
//  "top_difference":…,"expected":…,"match":…}  (one line)
std::string report_to_json(const QuasiPolyReport& r);

}  // namespace partcount
