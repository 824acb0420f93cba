#include "partcount/carlitz.hpp"

#include "partcount/arith.hpp"
#include "partcount/series.hpp"

namespace partcount {

SequenceTable carlitz_table_gf(const PartSet& s, long long n_max) {
  Series denom = series_sub(
      Series::one(n_max),
      lambert_sum(s, n_max, LambertWeight::Count, LambertSign::PlusDenominator));
  return {"cl", s.describe(), series_invert(denom).into_coeffs()};
}

SequenceTable carlitz_table_rec(const PartSet& s, long long n_max) {
  std::vector<long long> taus(static_cast<size_t>(n_max) + 1, 0);
  for (long long m = 1; m <= n_max; ++m)
    taus[static_cast<size_t>(m)] = tau_signed(s, m);
  SequenceTable out{"cl", s.describe(),
                    std::vector<BigInt>(static_cast<size_t>(n_max) + 1)};
  out.values[0] = 1;
  for (long long n = 1; n <= n_max; ++n) {
    BigInt acc = 0;
    for (long long k = 0; k < n; ++k)
      acc += out.values[static_cast<size_t>(k)] *
             taus[static_cast<size_t>(n - k)];
    out.values[static_cast<size_t>(n)] = std::move(acc);
  }
  return out;
}

CheckRecord verify_carlitz_q_identity(const PartSet& s, long long n_max) {
  SequenceTable cl = carlitz_table_gf(s, n_max);
  SequenceTable q = q_table(s, n_max);
  SequenceTable nq = nq_table_conv(s, n_max);
  CheckRecord rec{"carlitz-q-interplay", s.describe(), n_max, {}};
  for (long long n = 1; n <= n_max; ++n) {
    BigInt lhs = 0;
    for (long long k = 0; k <= n; ++k)
      lhs += cl.values[static_cast<size_t>(k)] *
             q.values[static_cast<size_t>(n - k)];
    for (long long t = 0; t < n; ++t)
      lhs -= cl.values[static_cast<size_t>(t)] *
             nq.values[static_cast<size_t>(n - t)];
    const BigInt& rhs = q.values[static_cast<size_t>(n)];
    if (lhs != rhs) rec.mismatches.push_back({n, lhs, rhs});
  }
  return rec;
}

CheckRecord verify_carlitz_binary(long long n_max) {
  PartSet s = PartSet::prime_powers(2);
  SequenceTable cl = carlitz_table_gf(s, n_max);
  CheckRecord rec{"carlitz-binary", s.describe(), n_max, {}};
  for (long long n = 1; n <= n_max; ++n) {
    BigInt rhs_rec = 0;
    for (long long k = 0; k < n; ++k)
      rhs_rec += cl.values[static_cast<size_t>(k)] *
                 (1 - p_adic_valuation(2, n - k));
    if (cl.values[static_cast<size_t>(n)] != rhs_rec)
      rec.mismatches.push_back({n, cl.values[static_cast<size_t>(n)], rhs_rec});
    BigInt lhs_sum = 0;
    for (long long k = 0; k <= n; ++k)
      lhs_sum += cl.values[static_cast<size_t>(k)] *
                 (1 - hamming_weight(n - k));
    if (lhs_sum != 1) rec.mismatches.push_back({n, lhs_sum, BigInt(1)});
  }
  return rec;
}

}  // namespace partcount
