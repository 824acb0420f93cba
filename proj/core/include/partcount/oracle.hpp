#pragma once

#include <string>
#include <vector>

#include "partcount/bigint.hpp"
#include "partcount/part_set.hpp"

namespace partcount {

// Brute-force enumeration baseline. Exponential by design; the guardrails
// keep accidental big-n calls from hanging a test run and can be raised
// deliberately for long runs.
struct OracleLimits {
  long long partitions = 40;
  long long carlitz = 25;
};

struct OracleCounts {
  long long n = 0;
  std::string set;
  BigInt p;              // partitions
  BigInt q;              // distinct-part partitions
  BigInt np;             // total parts over all partitions
  BigInt nq;             // total parts over distinct-part partitions
  BigInt p_parity_diff;  // (even #parts) - (odd #parts) over partitions
  BigInt q_parity_diff;  // same over distinct-part partitions
  BigInt cl;             // compositions with no equal adjacent parts
};

// All partitions of n with parts in s, each as a non-increasing part list;
// n == 0 yields one empty partition. Throws std::out_of_range above the
// guardrail, std::invalid_argument for n < 0.
std::vector<std::vector<long long>> enumerate_partitions(
    long long n, const PartSet& s, bool distinct,
    const OracleLimits& limits = {});

// All compositions of n with parts in s and no equal adjacent parts, in
// lexicographic order.
std::vector<std::vector<long long>> enumerate_carlitz(
    long long n, const PartSet& s, const OracleLimits& limits = {});

// All seven counts by direct enumeration (no materialized lists).
OracleCounts oracle_counts(long long n, const PartSet& s,
                           const OracleLimits& limits = {});

}  // namespace partcount
