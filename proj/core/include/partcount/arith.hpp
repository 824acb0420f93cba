#pragma once

#include "partcount/bigint.hpp"
#include "partcount/part_set.hpp"

namespace partcount {

// Divisor sums restricted to a part set: sum over divisors a of n with
// a in A of w(a), where w is 1 (Count) or a (Sum); the signed variants
// attach (-1)^(n/a - 1) to each divisor's contribution.
enum class DivisorWeight { Count, Sum };
struct DivisorFnKind {
  DivisorWeight weight = DivisorWeight::Count;
  bool sign_alternates = false;
};

long long divisor_fn(DivisorFnKind kind, const PartSet& s, long long n);
long long tau(const PartSet& s, long long n);
long long tau_signed(const PartSet& s, long long n);
long long sigma(const PartSet& s, long long n);
long long sigma_signed(const PartSet& s, long long n);

// Binary digit sum; hamming_weight(0) == 0.
int hamming_weight(long long n);

// Exponent of the prime p in n (n >= 1). Throws std::invalid_argument if p
// is not prime.
int p_adic_valuation(long long p, long long n);

// Pentagonal-number weight: (-1)^k when 2m == 3k^2 -+ k for a positive
// integer k, 1 when m == 0, else 0. Solved exactly via integer sqrt.
int pentagonal_omega(long long m);

// Number of partitions of m into distinct odd parts (coefficient m of
// prod over odd a of (1+x^a)). Requires m <= trunc.
BigInt distinct_odd_count(long long m, long long trunc);

}  // namespace partcount
