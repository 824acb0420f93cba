#include "partcount/oracle.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

namespace partcount {

namespace {

void check_bounds(long long n, long long limit, const char* what) {
  if (n < 0)
    throw std::invalid_argument(std::string(what) + ": n must be >= 0, got " +
                                std::to_string(n));
  if (n > limit)
    throw std::out_of_range(std::string(what) + ": n = " + std::to_string(n) +
                            " exceeds the guardrail " + std::to_string(limit) +
                            " (raise OracleLimits / PARTCOUNT_GUARDRAIL "
                            "for long runs)");
}

// Parts are chosen from `parts` (descending) starting at index i, so every
// partition comes out exactly once, in non-increasing part order.
void walk_partitions(const std::vector<long long>& parts, size_t i,
                     long long remaining, bool distinct,
                     std::vector<long long>& cur,
                     const std::function<void(const std::vector<long long>&)>&
                         visit) {
  if (remaining == 0) {
    visit(cur);
    return;
  }
  for (size_t j = i; j < parts.size(); ++j) {
    if (parts[j] > remaining) continue;
    cur.push_back(parts[j]);
    walk_partitions(parts, distinct ? j + 1 : j, remaining - parts[j], distinct,
                    cur, visit);
    cur.pop_back();
  }
}

// `parts` ascending; compositions come out in lexicographic order.
void walk_carlitz(const std::vector<long long>& parts, long long remaining,
                  long long last, std::vector<long long>& cur,
                  const std::function<void(const std::vector<long long>&)>&
                      visit) {
  if (remaining == 0) {
    visit(cur);
    return;
  }
  for (long long a : parts) {
    if (a > remaining) break;
    if (a == last) continue;
    cur.push_back(a);
    walk_carlitz(parts, remaining - a, a, cur, visit);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<long long>> enumerate_partitions(
    long long n, const PartSet& s, bool distinct, const OracleLimits& limits) {
  check_bounds(n, limits.partitions, "enumerate_partitions");
  std::vector<long long> parts = s.elements_up_to(n);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  std::vector<std::vector<long long>> out;
  std::vector<long long> cur;
  walk_partitions(parts, 0, n, distinct, cur,
                  [&](const std::vector<long long>& part) {
                    out.push_back(part);
                  });
  return out;
}

std::vector<std::vector<long long>> enumerate_carlitz(
    long long n, const PartSet& s, const OracleLimits& limits) {
  check_bounds(n, limits.carlitz, "enumerate_carlitz");
  std::vector<long long> parts = s.elements_up_to(n);
  std::vector<std::vector<long long>> out;
  std::vector<long long> cur;
  walk_carlitz(parts, n, 0, cur, [&](const std::vector<long long>& comp) {
    out.push_back(comp);
  });
  return out;
}

OracleCounts oracle_counts(long long n, const PartSet& s,
                           const OracleLimits& limits) {
  check_bounds(n, limits.partitions, "oracle_counts");
  check_bounds(n, limits.carlitz, "oracle_counts");
  OracleCounts c;
  c.n = n;
  c.set = s.describe();
  std::vector<long long> desc = s.elements_up_to(n);
  std::sort(desc.begin(), desc.end(), std::greater<>());
  std::vector<long long> cur;
  walk_partitions(desc, 0, n, false, cur,
                  [&](const std::vector<long long>& part) {
                    c.p += 1;
                    c.np += static_cast<long long>(part.size());
                    c.p_parity_diff += part.size() % 2 == 0 ? 1 : -1;
                  });
  walk_partitions(desc, 0, n, true, cur,
                  [&](const std::vector<long long>& part) {
                    c.q += 1;
                    c.nq += static_cast<long long>(part.size());
                    c.q_parity_diff += part.size() % 2 == 0 ? 1 : -1;
                  });
  std::vector<long long> asc = s.elements_up_to(n);
  walk_carlitz(asc, n, 0, cur,
               [&](const std::vector<long long>&) { c.cl += 1; });
  return c;
}

}  // namespace partcount
