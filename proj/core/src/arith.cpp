#include "partcount/arith.hpp"

#include <bit>
#include <cassert>
#include <cmath>
#include <stdexcept>
#include <string>

#include "partcount/series.hpp"

namespace partcount {

long long divisor_fn(DivisorFnKind kind, const PartSet& s, long long n) {
  assert(n >= 1);
  long long total = 0;
  auto add_divisor = [&](long long a) {
    if (!s.contains(a)) return;
    long long term = kind.weight == DivisorWeight::Sum ? a : 1;
    if (kind.sign_alternates && (n / a - 1) % 2 != 0) term = -term;
    total += term;
  };
  for (long long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    add_divisor(d);
    if (d != n / d) add_divisor(n / d);
  }
  return total;
}

long long tau(const PartSet& s, long long n) {
  return divisor_fn({DivisorWeight::Count, false}, s, n);
}

long long tau_signed(const PartSet& s, long long n) {
  return divisor_fn({DivisorWeight::Count, true}, s, n);
}

long long sigma(const PartSet& s, long long n) {
  return divisor_fn({DivisorWeight::Sum, false}, s, n);
}

long long sigma_signed(const PartSet& s, long long n) {
  return divisor_fn({DivisorWeight::Sum, true}, s, n);
}

int hamming_weight(long long n) {
  assert(n >= 0);
  return std::popcount(static_cast<unsigned long long>(n));
}

int p_adic_valuation(long long p, long long n) {
  if (!is_prime(p))
    throw std::invalid_argument("valuation base " + std::to_string(p) +
                                " is not prime");
  assert(n >= 1);
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

int pentagonal_omega(long long m) {
  assert(m >= 0);
  if (m == 0) return 1;
  // 2m == 3k^2 -+ k has a positive integer root iff 24m+1 is a square s^2
  // with s == -+1 (mod 6); at most one of the two shapes can match.
  const long long d = 24 * m + 1;
  long long s = static_cast<long long>(std::sqrt(static_cast<double>(d)));
  while (s * s > d) --s;
  while ((s + 1) * (s + 1) <= d) ++s;
  if (s * s != d) return 0;
  if ((s + 1) % 6 == 0) {
    const long long k = (s + 1) / 6;
    if (3 * k * k - k == 2 * m) return k % 2 == 0 ? 1 : -1;
  }
  if ((s - 1) % 6 == 0) {
    const long long k = (s - 1) / 6;
    if (3 * k * k + k == 2 * m) return k % 2 == 0 ? 1 : -1;
  }
  return 0;
}

BigInt distinct_odd_count(long long m, long long trunc) {
  if (m < 0 || m > trunc)
    throw std::invalid_argument("distinct_odd_count: m = " + std::to_string(m) +
                                " outside [0, " + std::to_string(trunc) + "]");
  return product_family(PartSet::odds(), trunc, ProductMode::Plus)[m];
}

}  // namespace partcount
