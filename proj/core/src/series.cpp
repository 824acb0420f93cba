#include "partcount/series.hpp"

#include <cassert>
#include <stdexcept>
#include <string>

namespace partcount {

Series::Series(long long trunc) : trunc_(trunc) {
  if (trunc < 0)
    throw std::invalid_argument("series truncation must be >= 0, got " +
                                std::to_string(trunc));
  coeffs_.resize(static_cast<size_t>(trunc) + 1);
}

Series Series::one(long long trunc) {
  Series s(trunc);
  s.coeffs_[0] = 1;
  return s;
}

Series Series::from_coeffs(std::vector<BigInt> coeffs) {
  if (coeffs.empty())
    throw std::invalid_argument("a series needs at least its constant term");
  Series s(static_cast<long long>(coeffs.size()) - 1);
  s.coeffs_ = std::move(coeffs);
  return s;
}

const BigInt& Series::operator[](long long n) const {
  assert(n >= 0 && n <= trunc_);
  return coeffs_[static_cast<size_t>(n)];
}

BigInt& Series::coeff(long long n) {
  assert(n >= 0 && n <= trunc_);
  return coeffs_[static_cast<size_t>(n)];
}

namespace {

void require_same_trunc(const Series& f, const Series& g) {
  if (f.trunc() != g.trunc())
    throw std::invalid_argument(
        "series truncation mismatch: " + std::to_string(f.trunc()) + " vs " +
        std::to_string(g.trunc()));
}

}  // namespace

Series series_add(const Series& f, const Series& g) {
  require_same_trunc(f, g);
  Series r(f.trunc());
  for (long long n = 0; n <= f.trunc(); ++n) r.coeff(n) = f[n] + g[n];
  return r;
}

Series series_sub(const Series& f, const Series& g) {
  require_same_trunc(f, g);
  Series r(f.trunc());
  for (long long n = 0; n <= f.trunc(); ++n) r.coeff(n) = f[n] - g[n];
  return r;
}

Series series_mul(const Series& f, const Series& g) {
  require_same_trunc(f, g);
  const long long N = f.trunc();
  Series r(N);
  for (long long i = 0; i <= N; ++i) {
    const BigInt& fi = f[i];
    if (fi.is_zero()) continue;
    for (long long j = 0; j + i <= N; ++j) {
      if (g[j].is_zero()) continue;
      r.coeff(i + j) += fi * g[j];
    }
  }
  return r;
}

Series series_invert(const Series& f) {
  const BigInt& f0 = f[0];
  if (f0 != 1 && f0 != -1)
    throw std::domain_error(
        "series is not invertible here: constant term must be +1 or -1");
  const long long N = f.trunc();
  Series g(N);
  // f*g = 1: for n >= 1, f0*g_n = -sum_{i=1}^{n} f_i g_{n-i}, and 1/f0 = f0.
  g.coeff(0) = f0;
  for (long long n = 1; n <= N; ++n) {
    BigInt acc = 0;
    for (long long i = 1; i <= n; ++i) {
      if (f[i].is_zero()) continue;
      acc += f[i] * g[n - i];
    }
    g.coeff(n) = -f0 * acc;
  }
  return g;
}

Series product_family(const PartSet& s, long long trunc, ProductMode mode) {
  Series f = Series::one(trunc);
  // One sparse in-place pass per factor. For the direct factors the update
  // must run downward (the new value at n-a must not feed n); for the
  // inverted factors upward, where feeding forward is exactly the point:
  //   g = c / (1 -+ x^a)  <=>  g_n = c_n +- g_{n-a}.
  for (long long a : s.elements_up_to(trunc)) {
    switch (mode) {
      case ProductMode::Minus:
        for (long long n = trunc; n >= a; --n) f.coeff(n) -= f[n - a];
        break;
      case ProductMode::Plus:
        for (long long n = trunc; n >= a; --n) f.coeff(n) += f[n - a];
        break;
      case ProductMode::InvMinus:
        for (long long n = a; n <= trunc; ++n) f.coeff(n) += f[n - a];
        break;
      case ProductMode::InvPlus:
        for (long long n = a; n <= trunc; ++n) f.coeff(n) -= f[n - a];
        break;
    }
  }
  return f;
}

Series lambert_sum(const PartSet& s, long long trunc, LambertWeight weight,
                   LambertSign sign) {
  Series out(trunc);
  for (long long a : s.elements_up_to(trunc)) {
    const long long w = weight == LambertWeight::Sum ? a : 1;
    long long term = w;
    for (long long m = a; m <= trunc; m += a) {
      out.coeff(m) += term;
      if (sign == LambertSign::PlusDenominator) term = -term;
    }
  }
  return out;
}

}  // namespace partcount
