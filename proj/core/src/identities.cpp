#include "partcount/identities.hpp"

#include <set>
#include <stdexcept>
#include <utility>

#include "json.hpp"
#include "partcount/carlitz.hpp"
#include "partcount/partition_tables.hpp"
#include "partcount/series.hpp"

namespace partcount {

namespace {

using Row = std::vector<BigInt>;
using Status = IdentityReport::Status;

Row coeffs_of(Series s) { return std::move(s).into_coeffs(); }

Row p_row(const PartSet& s, long long n) {
  return coeffs_of(product_family(s, n, ProductMode::InvMinus));
}
Row q_row(const PartSet& s, long long n) {
  return coeffs_of(product_family(s, n, ProductMode::Plus));
}
Row pdiff_row(const PartSet& s, long long n) {
  return coeffs_of(product_family(s, n, ProductMode::InvPlus));
}
Row qdiff_row(const PartSet& s, long long n) {
  return coeffs_of(product_family(s, n, ProductMode::Minus));
}
Row np_gf_row(const PartSet& s, long long n) {
  return coeffs_of(series_mul(product_family(s, n, ProductMode::InvMinus),
                              lambert_sum(s, n, LambertWeight::Count,
                                          LambertSign::MinusDenominator)));
}
Row nq_gf_row(const PartSet& s, long long n) {
  return coeffs_of(series_mul(product_family(s, n, ProductMode::Plus),
                              lambert_sum(s, n, LambertWeight::Count,
                                          LambertSign::PlusDenominator)));
}
Row odd_distinct_row(long long n) {
  return coeffs_of(product_family(PartSet::odds(), n, ProductMode::Plus));
}

Row hook_row(const EvalHooks& h, DivisorFnKind kind, const PartSet& s,
             long long n_max) {
  Row row(static_cast<size_t>(n_max) + 1);
  for (long long m = 1; m <= n_max; ++m)
    row[static_cast<size_t>(m)] = h.divisor(kind, s, m);
  return row;
}

// Parts-count values by convolution of a count row with a divisor row;
// the hook keeps this route sensitive to the substituted divisor function.
Row conv_row(const Row& counts, const Row& divisors, long long n_max) {
  Row out(static_cast<size_t>(n_max) + 1);
  for (long long n = 1; n <= n_max; ++n) {
    BigInt acc = 0;
    for (long long k = 0; k < n; ++k)
      acc += counts[static_cast<size_t>(k)] *
             divisors[static_cast<size_t>(n - k)];
    out[static_cast<size_t>(n)] = std::move(acc);
  }
  return out;
}

int omega_distinct(long long m) {
  int count = 0;
  for (long long d = 2; d * d <= m; ++d) {
    if (m % d != 0) continue;
    ++count;
    while (m % d == 0) m /= d;
  }
  if (m > 1) ++count;
  return count;
}

long long legendre_val2_factorial(long long n) {
  long long acc = 0;
  while (n > 0) {
    n >>= 1;
    acc += n;
  }
  return acc;
}

long long sign_pm(long long exponent) { return exponent % 2 == 0 ? 1 : -1; }

template <class Sides>  // Sides: (long long n) -> std::pair<BigInt, BigInt>
IdentityReport scan(const std::string& id, const std::string& set_desc,
                    long long n_max, long long n_start, Sides&& sides) {
  IdentityReport rep{id, set_desc, n_max, Status::AllHold, std::nullopt, ""};
  for (long long n = n_start; n <= n_max; ++n) {
    auto [lhs, rhs] = sides(n);
    if (lhs != rhs) {
      rep.status = Status::Failure;
      rep.first_failure = FirstFailure{n, std::move(lhs), std::move(rhs)};
      break;
    }
  }
  return rep;
}

IdentityReport from_records(const std::string& id, const std::string& set_desc,
                            long long n_max,
                            const std::vector<CheckRecord>& records) {
  IdentityReport rep{id, set_desc, n_max, Status::AllHold, std::nullopt, ""};
  for (const CheckRecord& rec : records) {
    if (rec.ok()) continue;
    const Mismatch& m = rec.mismatches.front();
    rep.status = Status::Failure;
    rep.first_failure = FirstFailure{m.n, m.lhs, m.rhs};
    break;
  }
  return rep;
}

// --- entry bodies ---------------------------------------------------------

IdentityReport run_np_conv(const std::string& id, const PartSet& s,
                           long long N, const EvalHooks& h) {
  Row np = np_gf_row(s, N);
  Row p = p_row(s, N);
  Row tau_r = hook_row(h, {DivisorWeight::Count, false}, s, N);
  return scan(id, s.describe(), N, 1, [&](long long n) {
    BigInt rhs = 0;
    for (long long k = 0; k < n; ++k)
      rhs += p[static_cast<size_t>(k)] * tau_r[static_cast<size_t>(n - k)];
    return std::pair{np[static_cast<size_t>(n)], std::move(rhs)};
  });
}

IdentityReport run_nq_conv(const std::string& id, const PartSet& s,
                           long long N, const EvalHooks& h) {
  Row nq = nq_gf_row(s, N);
  Row q = q_row(s, N);
  Row taus_r = hook_row(h, {DivisorWeight::Count, true}, s, N);
  return scan(id, s.describe(), N, 1, [&](long long n) {
    BigInt rhs = 0;
    for (long long k = 0; k < n; ++k)
      rhs += q[static_cast<size_t>(k)] * taus_r[static_cast<size_t>(n - k)];
    return std::pair{nq[static_cast<size_t>(n)], std::move(rhs)};
  });
}

IdentityReport run_logdiff_p(const std::string& id, const PartSet& s,
                             long long N, const EvalHooks& h) {
  Row np = np_gf_row(s, N);
  Row p = p_row(s, N);
  Row tau_r = hook_row(h, {DivisorWeight::Count, false}, s, N);
  Row sigma_r = hook_row(h, {DivisorWeight::Sum, false}, s, N);
  Row npc = conv_row(p, tau_r, N);
  return scan(id, s.describe(), N, 1, [&](long long n) {
    BigInt rhs = 0;
    for (long long k = 1; k < n; ++k)
      rhs += npc[static_cast<size_t>(k)] * sigma_r[static_cast<size_t>(n - k)];
    for (long long t = 1; t <= n; ++t)
      rhs += t * tau_r[static_cast<size_t>(t)] * p[static_cast<size_t>(n - t)];
    return std::pair{BigInt(n * np[static_cast<size_t>(n)]), std::move(rhs)};
  });
}

IdentityReport run_logdiff_q(const std::string& id, const PartSet& s,
                             long long N, const EvalHooks& h) {
  Row nq = nq_gf_row(s, N);
  Row q = q_row(s, N);
  Row taus_r = hook_row(h, {DivisorWeight::Count, true}, s, N);
  Row sigmas_r = hook_row(h, {DivisorWeight::Sum, true}, s, N);
  Row nqc = conv_row(q, taus_r, N);
  return scan(id, s.describe(), N, 1, [&](long long n) {
    BigInt rhs = 0;
    for (long long k = 1; k < n; ++k)
      rhs += nqc[static_cast<size_t>(k)] *
             sigmas_r[static_cast<size_t>(n - k)];
    for (long long t = 1; t <= n; ++t)
      rhs += t * taus_r[static_cast<size_t>(t)] *
             q[static_cast<size_t>(n - t)];
    return std::pair{BigInt(n * nq[static_cast<size_t>(n)]), std::move(rhs)};
  });
}

IdentityReport run_removal_recurrence(const std::string& id, const PartSet& s,
                                      long long N, bool distinct) {
  std::vector<long long> members = s.elements_up_to(N);
  if (members.size() > 4) members.resize(4);
  std::vector<CheckRecord> records;
  for (long long member : members)
    records.push_back(distinct ? nq_recurrence_over_set(s, member, N)
                               : np_recurrence_over_set(s, member, N));
  return from_records(id, s.describe(), N, records);
}

std::vector<IdentityEntry> build_catalog() {
  std::vector<IdentityEntry> entries;
  auto add = [&entries](std::string id, std::string description,
                        SetConstraint constraint,
                        std::vector<PartSet> builtins,
                        std::function<IdentityReport(
                            const PartSet&, long long, const EvalHooks&)>
                            run) {
    entries.push_back({std::move(id), std::move(description), constraint,
                       std::move(builtins), std::move(run)});
  };
  const PartSet nat = PartSet::naturals();
  const PartSet pri = PartSet::primes();
  const PartSet pp2 = PartSet::prime_powers(2);
  const PartSet pp3 = PartSet::prime_powers(3);

  add("T2.1b", "np(n) = sum_{k<n} p(k) tau(n-k): series route vs divisor "
      "convolution",
      SetConstraint::Any, {nat},
      [](const PartSet& s, long long N, const EvalHooks& h) {
        return run_np_conv("T2.1b", s, N, h);
      });

  add("T2.1d", "nq(n) = sum_{k<n} q(k) tau_signed(n-k): series route vs "
      "divisor convolution",
      SetConstraint::Any, {nat},
      [](const PartSet& s, long long N, const EvalHooks& h) {
        return run_nq_conv("T2.1d", s, N, h);
      });

  add("C-np-nat", "all parts allowed: np(n) = sum_{k<n} p(k) tau(n-k)",
      SetConstraint::NaturalsOnly, {nat},
      [](const PartSet& s, long long N, const EvalHooks& h) {
        return run_np_conv("C-np-nat", s, N, h);
      });

  add("C-nq-nat", "all parts allowed: nq(n) = sum_{k<n} q(k) tau_signed(n-k)",
      SetConstraint::NaturalsOnly, {nat},
      [](const PartSet& s, long long N, const EvalHooks& h) {
        return run_nq_conv("C-nq-nat", s, N, h);
      });

  add("C-omega", "prime parts: np(n) = sum_{k<n} p(k) omega(n-k), omega = "
      "number of distinct prime divisors (by factorization)",
      SetConstraint::PrimesOnly, {pri},
      [](const PartSet& s, long long N, const EvalHooks&) {
        Row np = np_gf_row(s, N);
        Row p = p_row(s, N);
        return scan("C-omega", s.describe(), N, 1, [&](long long n) {
          BigInt rhs = 0;
          for (long long k = 0; k < n; ++k)
            rhs += p[static_cast<size_t>(k)] * omega_distinct(n - k);
          return std::pair{np[static_cast<size_t>(n)], std::move(rhs)};
        });
      });

  add("C-vp", "prime-power parts: np(n) = sum_{k<n} p(k) (v_p(n-k) + 1)",
      SetConstraint::PrimePowersOnly, {pp2, pp3},
      [](const PartSet& s, long long N, const EvalHooks&) {
        const long long base = s.prime();
        Row np = np_gf_row(s, N);
        Row p = p_row(s, N);
        return scan("C-vp", s.describe(), N, 1, [&](long long n) {
          BigInt rhs = 0;
          for (long long k = 0; k < n; ++k)
            rhs += p[static_cast<size_t>(k)] *
                   (p_adic_valuation(base, n - k) + 1);
          return std::pair{np[static_cast<size_t>(n)], std::move(rhs)};
        });
      });

  add("C-hamming", "binary digit sum recurrence h(n) = h(n-1) + 1 - v2(n)",
      SetConstraint::BuiltinOnly, {pp2},
      [](const PartSet& s, long long N, const EvalHooks&) {
        return scan("C-hamming", s.describe(), N, 2, [&](long long n) {
          return std::pair{
              BigInt(hamming_weight(n)),
              BigInt(hamming_weight(n - 1) + 1 - p_adic_valuation(2, n))};
        });
      });

  add("C-hamming-factorial",
      "v2(n!) = n - h(n), the 2-adic valuation of n! via the floor sum",
      SetConstraint::BuiltinOnly, {pp2},
      [](const PartSet& s, long long N, const EvalHooks&) {
        return scan("C-hamming-factorial", s.describe(), N, 1,
                    [&](long long n) {
                      return std::pair{BigInt(legendre_val2_factorial(n)),
                                       BigInt(n - hamming_weight(n))};
                    });
      });

  add("T2.2a", "inversion: sum_{k=1}^{n} np(k) qdiff(n-k) = tau(n), qdiff = "
      "(even-odd distinct-partition counts)",
      SetConstraint::Any, {nat},
      [](const PartSet& s, long long N, const EvalHooks& h) {
        Row np = np_gf_row(s, N);
        Row qd = qdiff_row(s, N);
        Row tau_r = hook_row(h, {DivisorWeight::Count, false}, s, N);
        return scan("T2.2a", s.describe(), N, 1, [&](long long n) {
          BigInt lhs = 0;
          for (long long k = 1; k <= n; ++k)
            lhs += np[static_cast<size_t>(k)] * qd[static_cast<size_t>(n - k)];
          return std::pair{std::move(lhs), BigInt(tau_r[static_cast<size_t>(n)])};
        });
      });

  add("T2.2b", "inversion: sum_{k=1}^{n} nq(k) pdiff(n-k) = tau_signed(n), "
      "pdiff = (even-odd partition counts)",
      SetConstraint::Any, {nat},
      [](const PartSet& s, long long N, const EvalHooks& h) {
        Row nq = nq_gf_row(s, N);
        Row pd = pdiff_row(s, N);
        Row taus_r = hook_row(h, {DivisorWeight::Count, true}, s, N);
        return scan("T2.2b", s.describe(), N, 1, [&](long long n) {
          BigInt lhs = 0;
          for (long long k = 1; k <= n; ++k)
            lhs += nq[static_cast<size_t>(k)] * pd[static_cast<size_t>(n - k)];
          return std::pair{std::move(lhs),
                           BigInt(taus_r[static_cast<size_t>(n)])};
        });
      });

  add("C-NOP", "pentagonal weights: sum_{k=1}^{n} np(k) omega_pent(n-k) = "
      "tau(n)",
      SetConstraint::NaturalsOnly, {nat},
      [](const PartSet& s, long long N, const EvalHooks& h) {
        Row np = np_gf_row(s, N);
        Row tau_r = hook_row(h, {DivisorWeight::Count, false}, s, N);
        return scan("C-NOP", s.describe(), N, 1, [&](long long n) {
          BigInt lhs = 0;
          for (long long k = 1; k <= n; ++k) {
            int w = pentagonal_omega(n - k);
            if (w != 0) lhs += w * np[static_cast<size_t>(k)];
          }
          return std::pair{std::move(lhs), BigInt(tau_r[static_cast<size_t>(n)])};
        });
      });

  add("C-odd-distinct", "sum_{k=1}^{n} (-1)^(n-k) nq(k) o(n-k) = "
      "tau_signed(n), o = distinct-odd-part partition count",
      SetConstraint::NaturalsOnly, {nat},
      [](const PartSet& s, long long N, const EvalHooks& h) {
        Row nq = nq_gf_row(s, N);
        Row o = odd_distinct_row(N);
        Row taus_r = hook_row(h, {DivisorWeight::Count, true}, s, N);
        return scan("C-odd-distinct", s.describe(), N, 1, [&](long long n) {
          BigInt lhs = 0;
          for (long long k = 1; k <= n; ++k)
            lhs += sign_pm(n - k) * nq[static_cast<size_t>(k)] *
                   o[static_cast<size_t>(n - k)];
          return std::pair{std::move(lhs),
                           BigInt(taus_r[static_cast<size_t>(n)])};
        });
      });

  add("C-omega-inversion", "prime parts: sum_{k=1}^{n} np(k) qdiff(n-k) = "
      "omega(n)",
      SetConstraint::PrimesOnly, {pri},
      [](const PartSet& s, long long N, const EvalHooks&) {
        Row np = np_gf_row(s, N);
        Row qd = qdiff_row(s, N);
        return scan("C-omega-inversion", s.describe(), N, 1, [&](long long n) {
          BigInt lhs = 0;
          for (long long k = 1; k <= n; ++k)
            lhs += np[static_cast<size_t>(k)] * qd[static_cast<size_t>(n - k)];
          return std::pair{std::move(lhs), BigInt(omega_distinct(n))};
        });
      });

  add("C-vp-inversion", "prime-power parts: sum_{k=1}^{n} np(k) qdiff(n-k) = "
      "v_p(n) + 1",
      SetConstraint::PrimePowersOnly, {pp2, pp3},
      [](const PartSet& s, long long N, const EvalHooks&) {
        const long long base = s.prime();
        Row np = np_gf_row(s, N);
        Row qd = qdiff_row(s, N);
        return scan("C-vp-inversion", s.describe(), N, 1, [&](long long n) {
          BigInt lhs = 0;
          for (long long k = 1; k <= n; ++k)
            lhs += np[static_cast<size_t>(k)] * qd[static_cast<size_t>(n - k)];
          return std::pair{std::move(lhs),
                           BigInt(p_adic_valuation(base, n) + 1)};
        });
      });

  add("C-binary-s", "power-of-two parts: sum_{k=1}^{n} np(k) s(n-k) = v2(n) + "
      "1 with s(0)=1, s(m)=(-1)^h(m)",
      SetConstraint::BuiltinOnly, {pp2},
      [](const PartSet& s, long long N, const EvalHooks&) {
        Row np = np_gf_row(s, N);
        return scan("C-binary-s", s.describe(), N, 1, [&](long long n) {
          BigInt lhs = 0;
          for (long long k = 1; k <= n; ++k)
            lhs += sign_pm(hamming_weight(n - k)) *
                   np[static_cast<size_t>(k)];
          return std::pair{std::move(lhs),
                           BigInt(p_adic_valuation(2, n) + 1)};
        });
      });

  add("T2.3a", "complement inversion: sum_{k=1}^{n} np_A(k) omega_pent(n-k) "
      "= sum_{k=1}^{n} tau_A(k) qdiff_{N\\A}(n-k), A finite",
      SetConstraint::FiniteOnly,
      {PartSet::finite({2}), PartSet::finite({1, 2}), PartSet::finite({2, 3})},
      [](const PartSet& s, long long N, const EvalHooks& h) {
        PartSet comp = PartSet::complement_of(s.stored_elements());
        Row np = np_gf_row(s, N);
        Row qdc = qdiff_row(comp, N);
        Row tau_r = hook_row(h, {DivisorWeight::Count, false}, s, N);
        return scan("T2.3a", s.describe(), N, 1, [&](long long n) {
          BigInt lhs = 0;
          for (long long k = 1; k <= n; ++k) {
            int w = pentagonal_omega(n - k);
            if (w != 0) lhs += w * np[static_cast<size_t>(k)];
          }
          BigInt rhs = 0;
          for (long long k = 1; k <= n; ++k)
            rhs += tau_r[static_cast<size_t>(k)] *
                   qdc[static_cast<size_t>(n - k)];
          return std::pair{std::move(lhs), std::move(rhs)};
        });
      });

  add("T2.3b", "complement inversion: sum_{k=1}^{n} (-1)^(n-k) nq_A(k) "
      "o(n-k) = sum_{k=1}^{n} tau_signed_A(k) pdiff_{N\\A}(n-k), A finite",
      SetConstraint::FiniteOnly,
      {PartSet::finite({2}), PartSet::finite({1, 2}), PartSet::finite({2, 3})},
      [](const PartSet& s, long long N, const EvalHooks& h) {
        PartSet comp = PartSet::complement_of(s.stored_elements());
        Row nq = nq_gf_row(s, N);
        Row o = odd_distinct_row(N);
        Row pdc = pdiff_row(comp, N);
        Row taus_r = hook_row(h, {DivisorWeight::Count, true}, s, N);
        return scan("T2.3b", s.describe(), N, 1, [&](long long n) {
          BigInt lhs = 0;
          for (long long k = 1; k <= n; ++k)
            lhs += sign_pm(n - k) * nq[static_cast<size_t>(k)] *
                   o[static_cast<size_t>(n - k)];
          BigInt rhs = 0;
          for (long long k = 1; k <= n; ++k)
            rhs += taus_r[static_cast<size_t>(k)] *
                   pdc[static_cast<size_t>(n - k)];
          return std::pair{std::move(lhs), std::move(rhs)};
        });
      });

  add("E-sigma", "n p(n) = sum_{k=1}^{n} sigma(k) p(n-k); the sum starts at "
      "k = 1 because sigma(0) is undefined",
      SetConstraint::NaturalsOnly, {nat},
      [](const PartSet& s, long long N, const EvalHooks& h) {
        Row p = p_row(s, N);
        Row sigma_r = hook_row(h, {DivisorWeight::Sum, false}, s, N);
        return scan("E-sigma", s.describe(), N, 1, [&](long long n) {
          BigInt rhs = 0;
          for (long long k = 1; k <= n; ++k)
            rhs += sigma_r[static_cast<size_t>(k)] *
                   p[static_cast<size_t>(n - k)];
          return std::pair{BigInt(n * p[static_cast<size_t>(n)]),
                           std::move(rhs)};
        });
      });

  add("T2.4a", "log-derivative: n np(n) = sum_{k<n} np(k) sigma(n-k) + "
      "sum_{t<=n} t tau(t) p(n-t)",
      SetConstraint::Any, {nat},
      [](const PartSet& s, long long N, const EvalHooks& h) {
        return run_logdiff_p("T2.4a", s, N, h);
      });

  add("T2.4b", "log-derivative: n nq(n) = sum_{k<n} nq(k) sigma_signed(n-k) "
      "+ sum_{t<=n} t tau_signed(t) q(n-t)",
      SetConstraint::Any, {nat},
      [](const PartSet& s, long long N, const EvalHooks& h) {
        return run_logdiff_q("T2.4b", s, N, h);
      });

  add("C-logdiff-p", "all parts allowed: n np(n) = sum_{k<n} np(k) "
      "sigma(n-k) + sum_{t<=n} t tau(t) p(n-t)",
      SetConstraint::NaturalsOnly, {nat},
      [](const PartSet& s, long long N, const EvalHooks& h) {
        return run_logdiff_p("C-logdiff-p", s, N, h);
      });

  add("C-logdiff-q", "all parts allowed: n nq(n) = sum_{k<n} nq(k) "
      "sigma_signed(n-k) + sum_{t<=n} t tau_signed(t) q(n-t)",
      SetConstraint::NaturalsOnly, {nat},
      [](const PartSet& s, long long N, const EvalHooks& h) {
        return run_logdiff_q("C-logdiff-q", s, N, h);
      });

  add("C-logdiff-binary", "power-of-two parts via valuations: n np(n) = "
      "sum_{k<n} np(k) (2^(v2(n-k)+1) - 1) + sum_{t<=n} t (v2(t)+1) p(n-t)",
      SetConstraint::BuiltinOnly, {pp2},
      [](const PartSet& s, long long N, const EvalHooks&) {
        Row np = np_gf_row(s, N);
        Row p = p_row(s, N);
        // Second route for np built purely from valuations.
        Row npb(static_cast<size_t>(N) + 1);
        for (long long n = 1; n <= N; ++n) {
          BigInt acc = 0;
          for (long long k = 0; k < n; ++k)
            acc += p[static_cast<size_t>(k)] *
                   (p_adic_valuation(2, n - k) + 1);
          npb[static_cast<size_t>(n)] = std::move(acc);
        }
        return scan("C-logdiff-binary", s.describe(), N, 1, [&](long long n) {
          BigInt rhs = 0;
          for (long long k = 1; k < n; ++k)
            rhs += npb[static_cast<size_t>(k)] *
                   ((1LL << (p_adic_valuation(2, n - k) + 1)) - 1);
          for (long long t = 1; t <= n; ++t)
            rhs += t * (p_adic_valuation(2, t) + 1) *
                   p[static_cast<size_t>(n - t)];
          return std::pair{BigInt(n * np[static_cast<size_t>(n)]),
                           std::move(rhs)};
        });
      });

  add("T2.5p", "part removal: np_A(n) - np_A(n-b) = p_A(n-b) + np_{A\\b}(n) "
      "for the first members b of A",
      SetConstraint::Removable, {nat},
      [](const PartSet& s, long long N, const EvalHooks&) {
        return run_removal_recurrence("T2.5p", s, N, false);
      });

  add("T2.5q", "part removal, distinct flavor, alternating signs: "
      "sum_j (-1)^j nq_A(n-jb) = nq_{A\\b}(n) + sum_{j>=1} (-1)^(j-1) "
      "q_{A\\b}(n-jb)",
      SetConstraint::Removable, {nat},
      [](const PartSet& s, long long N, const EvalHooks&) {
        return run_removal_recurrence("T2.5q", s, N, true);
      });

  add("T2.6a", "no-equal-adjacent compositions: cl(n) = sum_{k<n} cl(k) "
      "tau_signed(n-k), against the series-inversion route",
      SetConstraint::Any, {nat},
      [](const PartSet& s, long long N, const EvalHooks& h) {
        Row gf = carlitz_table_gf(s, N).values;
        Row taus_r = hook_row(h, {DivisorWeight::Count, true}, s, N);
        Row rec(static_cast<size_t>(N) + 1);
        rec[0] = 1;
        for (long long n = 1; n <= N; ++n) {
          BigInt acc = 0;
          for (long long k = 0; k < n; ++k)
            acc += rec[static_cast<size_t>(k)] *
                   taus_r[static_cast<size_t>(n - k)];
          rec[static_cast<size_t>(n)] = std::move(acc);
        }
        return scan("T2.6a", s.describe(), N, 1, [&](long long n) {
          return std::pair{gf[static_cast<size_t>(n)],
                           rec[static_cast<size_t>(n)]};
        });
      });

  add("T2.6b", "sum_{k<=n} cl(k) q(n-k) - sum_{t<n} cl(t) nq(n-t) = q(n)",
      SetConstraint::Any, {nat},
      [](const PartSet& s, long long N, const EvalHooks& h) {
        Row cl = carlitz_table_gf(s, N).values;
        Row q = q_row(s, N);
        Row taus_r = hook_row(h, {DivisorWeight::Count, true}, s, N);
        Row nqc = conv_row(q, taus_r, N);
        return scan("T2.6b", s.describe(), N, 1, [&](long long n) {
          BigInt lhs = 0;
          for (long long k = 0; k <= n; ++k)
            lhs += cl[static_cast<size_t>(k)] * q[static_cast<size_t>(n - k)];
          for (long long t = 0; t < n; ++t)
            lhs -= cl[static_cast<size_t>(t)] *
                   nqc[static_cast<size_t>(n - t)];
          return std::pair{std::move(lhs), q[static_cast<size_t>(n)]};
        });
      });

  add("C-carlitz-binary-rec", "power-of-two parts: cl(n) = sum_{k<n} cl(k) "
      "(1 - v2(n-k))",
      SetConstraint::BuiltinOnly, {pp2},
      [](const PartSet& s, long long N, const EvalHooks&) {
        Row cl = carlitz_table_gf(s, N).values;
        return scan("C-carlitz-binary-rec", s.describe(), N, 1,
                    [&](long long n) {
                      BigInt rhs = 0;
                      for (long long k = 0; k < n; ++k)
                        rhs += cl[static_cast<size_t>(k)] *
                               (1 - p_adic_valuation(2, n - k));
                      return std::pair{cl[static_cast<size_t>(n)],
                                       std::move(rhs)};
                    });
      });

  add("C-carlitz-binary-sum", "power-of-two parts: sum_{k<=n} cl(k) "
      "(1 - h(n-k)) = 1",
      SetConstraint::BuiltinOnly, {pp2},
      [](const PartSet& s, long long N, const EvalHooks&) {
        Row cl = carlitz_table_gf(s, N).values;
        return scan("C-carlitz-binary-sum", s.describe(), N, 1,
                    [&](long long n) {
                      BigInt lhs = 0;
                      for (long long k = 0; k <= n; ++k)
                        lhs += cl[static_cast<size_t>(k)] *
                               (1 - hamming_weight(n - k));
                      return std::pair{std::move(lhs), BigInt(1)};
                    });
      });

  return entries;
}

}  // namespace

const char* constraint_name(SetConstraint c) {
  switch (c) {
    case SetConstraint::Any: return "any";
    case SetConstraint::NaturalsOnly: return "naturals-only";
    case SetConstraint::PrimesOnly: return "primes-only";
    case SetConstraint::PrimePowersOnly: return "prime-powers-only";
    case SetConstraint::FiniteOnly: return "finite-only";
    case SetConstraint::Removable: return "removable";
    case SetConstraint::BuiltinOnly: return "built-in-sets-only";
  }
  return "?";
}

EvalHooks EvalHooks::defaults() {
  EvalHooks h;
  h.divisor = [](DivisorFnKind kind, const PartSet& s, long long n) {
    return divisor_fn(kind, s, n);
  };
  return h;
}

const std::vector<IdentityEntry>& catalog() {
  static const std::vector<IdentityEntry> entries = build_catalog();
  return entries;
}

std::vector<PartSet> default_catalog_sets() {
  return {PartSet::naturals(),       PartSet::finite({2}),
          PartSet::finite({1, 2}),   PartSet::finite({2, 3}),
          PartSet::finite({1, 2, 3}), PartSet::finite({3, 4, 5}),
          PartSet::primes(),         PartSet::prime_powers(2),
          PartSet::prime_powers(3),  PartSet::odds()};
}

bool set_satisfies(const IdentityEntry& entry, const PartSet& s) {
  switch (entry.constraint) {
    case SetConstraint::Any:
      return true;
    case SetConstraint::NaturalsOnly:
      return s.kind() == SetKind::Naturals;
    case SetConstraint::PrimesOnly:
      return s.kind() == SetKind::Primes;
    case SetConstraint::PrimePowersOnly:
      return s.kind() == SetKind::PrimePowers;
    case SetConstraint::FiniteOnly:
      return s.kind() == SetKind::Finite;
    case SetConstraint::Removable:
      return s.kind() == SetKind::Naturals ||
             s.kind() == SetKind::Complement ||
             (s.kind() == SetKind::Finite && s.stored_elements().size() >= 2);
    case SetConstraint::BuiltinOnly:
      for (const PartSet& b : entry.builtin_sets)
        if (b.describe() == s.describe()) return true;
      return false;
  }
  return false;
}

IdentityReport verify(const std::string& id, const PartSet& s, long long n_max,
                      const EvalHooks& hooks) {
  for (const IdentityEntry& entry : catalog()) {
    if (entry.id != id) continue;
    if (!set_satisfies(entry, s))
      throw std::invalid_argument(
          "identity '" + id + "' requires sets satisfying '" +
          constraint_name(entry.constraint) + "'; got '" + s.describe() + "'");
    return entry.run(s, n_max, hooks);
  }
  throw std::invalid_argument("unknown identity id '" + id + "'");
}

std::vector<IdentityReport> verify_all(const std::vector<PartSet>& sets,
                                       long long n_max,
                                       const EvalHooks& hooks) {
  const std::vector<PartSet> effective =
      sets.empty() ? default_catalog_sets() : sets;
  std::vector<IdentityReport> out;
  for (const IdentityEntry& entry : catalog()) {
    std::set<std::string> ran;
    bool any_compatible = false;
    for (const PartSet& s : effective) {
      if (set_satisfies(entry, s)) {
        any_compatible = true;
        if (ran.insert(s.describe()).second)
          out.push_back(entry.run(s, n_max, hooks));
      } else {
        IdentityReport skip{entry.id, s.describe(), n_max,
                            Status::Skipped, std::nullopt,
                            std::string("requires ") +
                                constraint_name(entry.constraint)};
        out.push_back(std::move(skip));
      }
    }
    // An entry with no compatible supplied set still runs, on the sets it
    // is stated for.
    if (!any_compatible)
      for (const PartSet& b : entry.builtin_sets)
        if (ran.insert(b.describe()).second)
          out.push_back(entry.run(b, n_max, hooks));
  }
  return out;
}

std::string report_to_json(const IdentityReport& r) {
  nlohmann::ordered_json j;
  j["id"] = r.id;
  j["set"] = r.set;
  j["n_max"] = r.n_max;
  j["status"] = r.status == Status::AllHold    ? "all-hold"
                : r.status == Status::Failure ? "failure"
                                               : "skipped";
  if (r.first_failure) {
    nlohmann::ordered_json f;
    f["n"] = r.first_failure->n;
    f["lhs"] = r.first_failure->lhs.str();
    f["rhs"] = r.first_failure->rhs.str();
    j["first_failure"] = std::move(f);
  }
  if (!r.note.empty()) j["note"] = r.note;
  return j.dump();
}

}  // namespace partcount
