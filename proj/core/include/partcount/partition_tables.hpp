#pragma once

#include <string>
#include <utility>
#include <vector>

#include "partcount/bigint.hpp"
#include "partcount/part_set.hpp"

namespace partcount {

// Values of one arithmetic function on 0..n_max.
// Conventions, fixed once here and relied on everywhere: the empty
// partition counts (p(0) = q(0) = 1), total part counts start empty
// (np(0) = nq(0) = 0), and every function is 0 below 0.
struct SequenceTable {
  std::string fn_name;
  std::string set;
  std::vector<BigInt> values;

  long long n_max() const { return static_cast<long long>(values.size()) - 1; }
  const BigInt& at(long long n) const;  // bounds-checked
};

struct Mismatch {
  long long n = 0;
  BigInt lhs;
  BigInt rhs;
};

// Outcome of replaying a recurrence over 1..n_max; empty mismatches == pass.
struct CheckRecord {
  std::string what;
  std::string set;
  long long n_max = 0;
  std::vector<Mismatch> mismatches;

  bool ok() const { return mismatches.empty(); }
};

enum class Flavor { Partition, Distinct };

// Partition counts with parts in A, and distinct-part partition counts.
SequenceTable p_table(const PartSet& s, long long n_max);
SequenceTable q_table(const PartSet& s, long long n_max);

// (even #parts) - (odd #parts), over all partitions (Partition flavor) or
// distinct-part partitions (Distinct flavor).
SequenceTable parity_diff_table(const PartSet& s, long long n_max,
                                Flavor flavor);
// The even/odd halves recovered as ((p +- diff) / 2, ...).
std::pair<SequenceTable, SequenceTable> parity_split(const PartSet& s,
                                                     long long n_max,
                                                     Flavor flavor);

// Total number of parts over all partitions of n (np) or all distinct-part
// partitions of n (nq). Two independent routes that must agree:
//   *_gf:   series product times a Lambert-type sum;
//   *_conv: direct convolution of the count table with a divisor sum,
//           no series multiplication involved.
SequenceTable np_table_gf(const PartSet& s, long long n_max);
SequenceTable nq_table_gf(const PartSet& s, long long n_max);
SequenceTable np_table_conv(const PartSet& s, long long n_max);
SequenceTable nq_table_conv(const PartSet& s, long long n_max);

// Total multiplicity of the fixed part b over all partitions of n:
//   Partition: sum_{k>=1} k * p_{A\{b}}(n - k b)
//   Distinct:  q_{A\{b}}(n - b)
SequenceTable part_multiplicity(const PartSet& s, long long b, long long n_max,
                                Flavor flavor);

// Replay of the part-removal recurrences for a designated member of A,
// both sides computed from independently built tables:
//   np(n) - np(n - member) == p(n - member) + np_{A\{member}}(n)
// and the distinct-part analogue with strictly alternating signs
//   sum_{j>=0} (-1)^j nq(n - j member)
//     == nq_{A\{member}}(n) + sum_{j>=1} (-1)^(j-1) q_{A\{member}}(n - j member)
// where terms with negative argument are dropped.
CheckRecord np_recurrence_over_set(const PartSet& s, long long member,
                                   long long n_max);
CheckRecord nq_recurrence_over_set(const PartSet& s, long long member,
                                   long long n_max);

}  // namespace partcount
