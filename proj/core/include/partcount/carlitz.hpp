#pragma once

#include "partcount/partition_tables.hpp"

namespace partcount {

// Number of compositions of n with parts in A in which no two adjacent
// parts are equal; cl(0) = 1 (the empty composition).
// Two independent routes that must agree:
//   _gf:  series inversion of 1 - sum over a in A of x^a/(1+x^a);
//   _rec: cl(n) = sum_{k=0}^{n-1} cl(k) * tau_signed(n-k).
SequenceTable carlitz_table_gf(const PartSet& s, long long n_max);
SequenceTable carlitz_table_rec(const PartSet& s, long long n_max);

// Replays, for n = 1..n_max:
//   sum_{k=0}^{n} cl(k) q(n-k) - sum_{t=0}^{n-1} cl(t) nq(n-t) == q(n)
CheckRecord verify_carlitz_q_identity(const PartSet& s, long long n_max);

// Power-of-two parts: replays, for n = 1..n_max, both
//   cl(n) == sum_{k=0}^{n-1} cl(k) * (1 - v2(n-k))        (v2 = 2-adic valuation)
//   sum_{k=0}^{n} cl(k) * (1 - h(n-k)) == 1               (h = binary digit sum)
CheckRecord verify_carlitz_binary(long long n_max);

}  // namespace partcount
