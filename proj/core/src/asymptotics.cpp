#include "partcount/asymptotics.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "json.hpp"

namespace partcount {

namespace {

BigInt bigint_pow(const BigInt& base, long long exp) {
  BigInt acc = 1;
  for (long long i = 0; i < exp; ++i) acc *= base;
  return acc;
}

BigInt factorial(long long n) {
  BigInt acc = 1;
  for (long long i = 2; i <= n; ++i) acc *= i;
  return acc;
}

// Round-half-up rendering with six fractional digits.
std::string decimal6(const BigRational& q) {
  BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  const bool neg = num < 0;
  if (neg) num = -num;
  const BigInt scaled = (num * 2000000 + den) / (den * 2);
  const BigInt whole = scaled / 1000000;
  std::string frac = BigInt(scaled % 1000000).str();
  frac.insert(0, 6 - frac.size(), '0');
  return (neg ? "-" : "") + whole.str() + "." + frac;
}

}  // namespace

FiniteSetA FiniteSetA::from(const PartSet& s) {
  if (s.kind() != SetKind::Finite)
    throw std::invalid_argument(
        "polynomial-growth analysis needs a finite part set; got '" +
        s.describe() + "'");
  return from_elements(s.stored_elements());
}

FiniteSetA FiniteSetA::from_elements(std::vector<long long> elements) {
  // PartSet::finite normalizes (sort, dedupe) and validates positivity.
  const PartSet normalized = PartSet::finite(std::move(elements));
  FiniteSetA a;
  a.elements = normalized.stored_elements();
  a.k = static_cast<long long>(a.elements.size());
  long long g = 0;
  for (long long e : a.elements) g = std::gcd(g, e);
  if (g != 1) throw std::domain_error("gcd(A) must be 1");
  a.period = 1;
  for (long long e : a.elements) {
    if (a.period > std::numeric_limits<long long>::max() / e)
      throw std::invalid_argument("period overflow: product of elements");
    a.period *= e;
  }
  return a;
}

PartSet FiniteSetA::part_set() const { return PartSet::finite(elements); }

LeadingCoefficient leading_coefficient(const FiniteSetA& a) {
  LeadingCoefficient lc;
  BigInt num = 0;
  for (long long i = 0; i < a.k; ++i) {
    BigInt term = bigint_pow(a.elements[static_cast<size_t>(i)], a.k - 2);
    for (long long j = 0; j < a.k; ++j)
      if (j != i)
        term *= bigint_pow(a.elements[static_cast<size_t>(j)], a.k - 1);
    num += term;
  }
  const BigInt kfact = factorial(a.k);
  lc.in_l = BigRational(num, kfact);
  BigRational inv_sum = 0;
  for (long long e : a.elements) inv_sum += BigRational(1, e);
  lc.in_n = inv_sum / BigRational(kfact * a.period);
  if (lc.in_l != lc.in_n * BigRational(bigint_pow(a.period, a.k)))
    throw std::logic_error("leading coefficient forms disagree");
  return lc;
}

BigRational netto_coefficient(const FiniteSetA& a) {
  return BigRational(1, factorial(a.k - 1) * a.period);
}

QuasiPolyReport quasi_poly_check(const SequenceTable& values,
                                 const FiniteSetA& a, QuasiTarget target,
                                 long long r, long long l0,
                                 long long window) {
  if (r < 0 || r >= a.period)
    throw std::invalid_argument("residue r must lie in [0, period)");
  if (l0 < 0) throw std::invalid_argument("l0 must be >= 0");
  const long long degree =
      target == QuasiTarget::PartitionCount ? a.k - 1 : a.k;
  if (window < degree + 2)
    throw std::invalid_argument(
        "window too small: need >= degree + 2 = " +
        std::to_string(degree + 2));
  const long long needed = a.period * (l0 + window) + r;
  if (values.n_max() < needed)
    throw std::invalid_argument(
        "insufficient truncation: table covers n <= " +
        std::to_string(values.n_max()) + ", check needs n = " +
        std::to_string(needed));

  QuasiPolyReport rep;
  rep.set = a.part_set().describe();
  rep.target = target;
  rep.r = r;
  rep.l0 = l0;
  rep.window = window;
  rep.degree = degree;
  for (long long l = l0; l <= l0 + window; ++l)
    rep.samples.push_back(values.at(a.period * l + r));

  std::vector<BigInt> diffs = rep.samples;
  for (long long d = 0; d < degree; ++d)
    for (size_t i = 0; i + 1 < diffs.size(); ++i) diffs[i] = diffs[i + 1] - diffs[i];
  diffs.resize(diffs.size() - static_cast<size_t>(degree));
  rep.top_differences = std::move(diffs);

  if (target == QuasiTarget::PartitionCount) {
    rep.expected = a.k >= 2 ? BigRational(bigint_pow(a.period, a.k - 2))
                            : BigRational(1);
  } else {
    rep.expected = BigRational(factorial(a.k)) * leading_coefficient(a).in_l;
  }

  bool ok = true;
  for (const BigInt& d : rep.top_differences)
    if (d != rep.top_differences.front()) ok = false;
  if (ok && BigRational(rep.top_differences.front()) != rep.expected)
    ok = false;
  rep.match = ok;
  return rep;
}

QuasiPolyReport quasi_poly_check(const FiniteSetA& a, QuasiTarget target,
                                 long long r, long long l0,
                                 long long window) {
  const long long needed = a.period * (l0 + window) + r;
  const PartSet s = a.part_set();
  const SequenceTable values = target == QuasiTarget::PartitionCount
                                   ? p_table(s, needed)
                                   : np_table_gf(s, needed);
  return quasi_poly_check(values, a, target, r, l0, window);
}

std::vector<RatioRow> ratio_report(const SequenceTable& np_values,
                                   const FiniteSetA& a,
                                   const std::vector<long long>& n_points) {
  const LeadingCoefficient lc = leading_coefficient(a);
  std::vector<RatioRow> rows;
  for (long long n : n_points) {
    if (n < 1 || n > np_values.n_max())
      throw std::invalid_argument("ratio point " + std::to_string(n) +
                                  " outside table range 1.." +
                                  std::to_string(np_values.n_max()));
    RatioRow row;
    row.n = n;
    row.ratio = BigRational(np_values.at(n)) /
                (lc.in_n * BigRational(bigint_pow(n, a.k)));
    row.decimal = decimal6(row.ratio);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<RatioRow> ratio_report(const FiniteSetA& a,
                                   const std::vector<long long>& n_points) {
  long long n_max = 1;
  for (long long n : n_points) n_max = std::max(n_max, n);
  return ratio_report(np_table_gf(a.part_set(), n_max), a, n_points);
}

std::string report_to_json(const QuasiPolyReport& r) {
  nlohmann::ordered_json j;
  j["set"] = r.set;
  j["target"] = r.target == QuasiTarget::PartitionCount ? "p" : "np";
  j["r"] = r.r;
  j["l0"] = r.l0;
  j["window"] = r.window;
  j["degree"] = r.degree;
  j["top_difference"] = r.top_differences.front().str();
  j["expected"] = rational_str(r.expected);
  j["match"] = r.match;
  return j.dump();
}

}  // namespace partcount
