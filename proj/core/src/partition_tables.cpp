#include "partcount/partition_tables.hpp"

#include <cassert>
#include <stdexcept>

#include "partcount/arith.hpp"
#include "partcount/series.hpp"

namespace partcount {

const BigInt& SequenceTable::at(long long n) const {
  if (n < 0 || n > n_max())
    throw std::out_of_range("table '" + fn_name + "' has no index " +
                            std::to_string(n));
  return values[static_cast<size_t>(n)];
}

namespace {

SequenceTable table_from(std::string fn, const PartSet& s, Series ser) {
  return {std::move(fn), s.describe(), std::move(ser).into_coeffs()};
}

// Divisor-sum values 1..n_max as a flat vector (index 0 unused, = 0).
std::vector<long long> divisor_row(DivisorFnKind kind, const PartSet& s,
                                   long long n_max) {
  std::vector<long long> row(static_cast<size_t>(n_max) + 1, 0);
  for (long long m = 1; m <= n_max; ++m) row[static_cast<size_t>(m)] =
      divisor_fn(kind, s, m);
  return row;
}

}  // namespace

SequenceTable p_table(const PartSet& s, long long n_max) {
  return table_from("p", s, product_family(s, n_max, ProductMode::InvMinus));
}

SequenceTable q_table(const PartSet& s, long long n_max) {
  return table_from("q", s, product_family(s, n_max, ProductMode::Plus));
}

SequenceTable parity_diff_table(const PartSet& s, long long n_max,
                                Flavor flavor) {
  if (flavor == Flavor::Partition)
    return table_from("p-parity-diff", s,
                      product_family(s, n_max, ProductMode::InvPlus));
  return table_from("q-parity-diff", s,
                    product_family(s, n_max, ProductMode::Minus));
}

std::pair<SequenceTable, SequenceTable> parity_split(const PartSet& s,
                                                     long long n_max,
                                                     Flavor flavor) {
  SequenceTable total = flavor == Flavor::Partition ? p_table(s, n_max)
                                                    : q_table(s, n_max);
  SequenceTable diff = parity_diff_table(s, n_max, flavor);
  SequenceTable even{total.fn_name + "-even", total.set,
                     std::vector<BigInt>(total.values.size())};
  SequenceTable odd{total.fn_name + "-odd", total.set,
                    std::vector<BigInt>(total.values.size())};
  for (size_t i = 0; i < total.values.size(); ++i) {
    BigInt e = total.values[i] + diff.values[i];
    BigInt o = total.values[i] - diff.values[i];
    assert(e % 2 == 0 && o % 2 == 0);  // count and difference share parity
    even.values[i] = e / 2;
    odd.values[i] = o / 2;
  }
  return {std::move(even), std::move(odd)};
}

SequenceTable np_table_gf(const PartSet& s, long long n_max) {
  Series prod = product_family(s, n_max, ProductMode::InvMinus);
  Series lam = lambert_sum(s, n_max, LambertWeight::Count,
                           LambertSign::MinusDenominator);
  return table_from("np", s, series_mul(prod, lam));
}

SequenceTable nq_table_gf(const PartSet& s, long long n_max) {
  Series prod = product_family(s, n_max, ProductMode::Plus);
  Series lam = lambert_sum(s, n_max, LambertWeight::Count,
                           LambertSign::PlusDenominator);
  return table_from("nq", s, series_mul(prod, lam));
}

SequenceTable np_table_conv(const PartSet& s, long long n_max) {
  SequenceTable p = p_table(s, n_max);
  auto tau_row = divisor_row({DivisorWeight::Count, false}, s, n_max);
  SequenceTable out{"np", s.describe(),
                    std::vector<BigInt>(static_cast<size_t>(n_max) + 1)};
  for (long long n = 1; n <= n_max; ++n) {
    BigInt acc = 0;
    for (long long k = 0; k < n; ++k)
      acc += p.values[static_cast<size_t>(k)] *
             tau_row[static_cast<size_t>(n - k)];
    out.values[static_cast<size_t>(n)] = std::move(acc);
  }
  return out;
}

SequenceTable nq_table_conv(const PartSet& s, long long n_max) {
  SequenceTable q = q_table(s, n_max);
  auto taus_row = divisor_row({DivisorWeight::Count, true}, s, n_max);
  SequenceTable out{"nq", s.describe(),
                    std::vector<BigInt>(static_cast<size_t>(n_max) + 1)};
  for (long long n = 1; n <= n_max; ++n) {
    BigInt acc = 0;
    for (long long k = 0; k < n; ++k)
      acc += q.values[static_cast<size_t>(k)] *
             taus_row[static_cast<size_t>(n - k)];
    out.values[static_cast<size_t>(n)] = std::move(acc);
  }
  return out;
}

SequenceTable part_multiplicity(const PartSet& s, long long b, long long n_max,
                                Flavor flavor) {
  if (!s.contains(b))
    throw std::domain_error(std::to_string(b) + " is not a member of " +
                            s.describe());
  PartSet rest = s.without(b);
  SequenceTable out{
      std::string(flavor == Flavor::Partition ? "np" : "nq") +
          "[b=" + std::to_string(b) + "]",
      s.describe(), std::vector<BigInt>(static_cast<size_t>(n_max) + 1)};
  if (flavor == Flavor::Partition) {
    SequenceTable pr = p_table(rest, n_max);
    for (long long n = 0; n <= n_max; ++n) {
      BigInt acc = 0;
      for (long long k = 1; n - k * b >= 0; ++k)
        acc += k * pr.values[static_cast<size_t>(n - k * b)];
      out.values[static_cast<size_t>(n)] = std::move(acc);
    }
  } else {
    SequenceTable qr = q_table(rest, n_max);
    for (long long n = b; n <= n_max; ++n)
      out.values[static_cast<size_t>(n)] =
          qr.values[static_cast<size_t>(n - b)];
  }
  return out;
}

CheckRecord np_recurrence_over_set(const PartSet& s, long long member,
                                   long long n_max) {
  if (!s.contains(member))
    throw std::domain_error(std::to_string(member) + " is not a member of " +
                            s.describe());
  PartSet rest = s.without(member);
  SequenceTable np = np_table_gf(s, n_max);
  SequenceTable p = p_table(s, n_max);
  SequenceTable np_rest = np_table_gf(rest, n_max);
  CheckRecord rec{"np-recurrence[member=" + std::to_string(member) + "]",
                  s.describe(), n_max, {}};
  for (long long n = 1; n <= n_max; ++n) {
    BigInt lhs = np.values[static_cast<size_t>(n)];
    if (n - member >= 0) lhs -= np.values[static_cast<size_t>(n - member)];
    BigInt rhs = np_rest.values[static_cast<size_t>(n)];
    if (n - member >= 0) rhs += p.values[static_cast<size_t>(n - member)];
    if (lhs != rhs) rec.mismatches.push_back({n, lhs, rhs});
  }
  return rec;
}

CheckRecord nq_recurrence_over_set(const PartSet& s, long long member,
                                   long long n_max) {
  if (!s.contains(member))
    throw std::domain_error(std::to_string(member) + " is not a member of " +
                            s.describe());
  PartSet rest = s.without(member);
  SequenceTable nq = nq_table_gf(s, n_max);
  SequenceTable nq_rest = nq_table_gf(rest, n_max);
  SequenceTable q_rest = q_table(rest, n_max);
  CheckRecord rec{"nq-recurrence[member=" + std::to_string(member) + "]",
                  s.describe(), n_max, {}};
  // Multiplying the generating identity through by 1/(1 + x^member) forces
  // strictly alternating signs on both sides.
  for (long long n = 1; n <= n_max; ++n) {
    BigInt lhs = 0;
    long long sign = 1;
    for (long long m = n; m >= 0; m -= member, sign = -sign)
      lhs += sign * nq.values[static_cast<size_t>(m)];
    BigInt rhs = nq_rest.values[static_cast<size_t>(n)];
    sign = 1;
    for (long long m = n - member; m >= 0; m -= member, sign = -sign)
      rhs += sign * q_rest.values[static_cast<size_t>(m)];
    if (lhs != rhs) rec.mismatches.push_back({n, lhs, rhs});
  }
  return rec;
}

}  // namespace partcount
