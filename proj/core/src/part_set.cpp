#include "partcount/part_set.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace partcount {

bool is_prime(long long n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (long long d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

namespace {

std::vector<long long> normalized(std::vector<long long> v,
                                  const char* what) {
  if (v.empty())
    throw std::invalid_argument(std::string(what) + " must not be empty");
  for (long long a : v)
    if (a < 1)
      throw std::invalid_argument(std::string(what) +
                                  " elements must be >= 1, got " +
                                  std::to_string(a));
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

long long parse_number(const std::string& token) {
  long long value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last)
    throw std::invalid_argument("malformed number '" + token + "' in set spec");
  return value;
}

std::vector<long long> parse_number_list(const std::string& body) {
  if (body.empty())
    throw std::invalid_argument("empty element list in set spec");
  std::vector<long long> out;
  size_t start = 0;
  while (true) {
    size_t comma = body.find(',', start);
    out.push_back(parse_number(body.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

PartSet::PartSet(SetKind kind, std::vector<long long> elements, long long p)
    : kind_(kind), elements_(std::move(elements)), p_(p) {}

PartSet PartSet::finite(std::vector<long long> elements) {
  return PartSet(SetKind::Finite, normalized(std::move(elements), "finite set"),
                 0);
}

PartSet PartSet::naturals() { return PartSet(SetKind::Naturals, {}, 0); }

PartSet PartSet::primes() { return PartSet(SetKind::Primes, {}, 0); }

PartSet PartSet::prime_powers(long long p) {
  if (!is_prime(p))
    throw std::invalid_argument("prime-powers parameter " + std::to_string(p) +
                                " is not prime");
  return PartSet(SetKind::PrimePowers, {}, p);
}

PartSet PartSet::odds() { return PartSet(SetKind::Odds, {}, 0); }

PartSet PartSet::complement_of(std::vector<long long> excluded) {
  return PartSet(SetKind::Complement,
                 normalized(std::move(excluded), "complement base"), 0);
}

PartSet PartSet::parse(const std::string& spec) {
  if (spec == "naturals") return naturals();
  if (spec == "primes") return primes();
  if (spec == "odds") return odds();
  const std::string finite_prefix = "finite:";
  const std::string ppowers_prefix = "ppowers:";
  const std::string complement_prefix = "complement:";
  if (spec.rfind(finite_prefix, 0) == 0)
    return finite(parse_number_list(spec.substr(finite_prefix.size())));
  if (spec.rfind(ppowers_prefix, 0) == 0)
    return prime_powers(parse_number(spec.substr(ppowers_prefix.size())));
  if (spec.rfind(complement_prefix, 0) == 0) {
    std::string body = spec.substr(complement_prefix.size());
    if (body.rfind(finite_prefix, 0) != 0)
      throw std::invalid_argument(
          "complement expects 'complement:finite:<a1>,...', got '" + spec +
          "'");
    return complement_of(parse_number_list(body.substr(finite_prefix.size())));
  }
  throw std::invalid_argument("unrecognized set spec '" + spec + "'");
}

std::vector<long long> PartSet::elements_up_to(long long n) const {
  std::vector<long long> out;
  if (n < 1) return out;
  switch (kind_) {
    case SetKind::Finite:
      for (long long a : elements_) {
        if (a > n) break;
        out.push_back(a);
      }
      break;
    case SetKind::Naturals:
      out.resize(static_cast<size_t>(n));
      std::iota(out.begin(), out.end(), 1);
      break;
    case SetKind::Primes: {
      std::vector<bool> composite(static_cast<size_t>(n) + 1, false);
      for (long long i = 2; i <= n; ++i) {
        if (composite[static_cast<size_t>(i)]) continue;
        out.push_back(i);
        for (long long j = i * i; j <= n; j += i)
          composite[static_cast<size_t>(j)] = true;
      }
      break;
    }
    case SetKind::PrimePowers:
      for (long long q = 1; q <= n; q *= p_) {
        out.push_back(q);
        if (q > n / p_) break;  // next power would overflow past n
      }
      break;
    case SetKind::Odds:
      for (long long a = 1; a <= n; a += 2) out.push_back(a);
      break;
    case SetKind::Complement: {
      size_t skip = 0;
      for (long long a = 1; a <= n; ++a) {
        if (skip < elements_.size() && elements_[skip] == a) {
          ++skip;
          continue;
        }
        out.push_back(a);
      }
      break;
    }
  }
  return out;
}

bool PartSet::contains(long long a) const {
  if (a < 1) return false;
  switch (kind_) {
    case SetKind::Finite:
      return std::binary_search(elements_.begin(), elements_.end(), a);
    case SetKind::Naturals:
      return true;
    case SetKind::Primes:
      return is_prime(a);
    case SetKind::PrimePowers: {
      long long q = a;
      while (q % p_ == 0) q /= p_;
      return q == 1;
    }
    case SetKind::Odds:
      return a % 2 == 1;
    case SetKind::Complement:
      return !std::binary_search(elements_.begin(), elements_.end(), a);
  }
  return false;
}

PartSet PartSet::without(long long b) const {
  if (!contains(b))
    throw std::domain_error(std::to_string(b) + " is not a member of " +
                            describe());
  switch (kind_) {
    case SetKind::Finite: {
      if (elements_.size() == 1)
        throw std::domain_error("removing " + std::to_string(b) +
                                " would leave the set empty");
      std::vector<long long> rest;
      rest.reserve(elements_.size() - 1);
      for (long long a : elements_)
        if (a != b) rest.push_back(a);
      return finite(std::move(rest));
    }
    case SetKind::Naturals:
      return complement_of({b});
    case SetKind::Complement: {
      std::vector<long long> excluded = elements_;
      excluded.push_back(b);
      return complement_of(std::move(excluded));
    }
    case SetKind::Primes:
    case SetKind::PrimePowers:
    case SetKind::Odds:
      throw UnsupportedOperation("cannot remove an element from '" +
                                 describe() +
                                 "': no finite representation of the result");
  }
  throw std::logic_error("unreachable");
}

std::string PartSet::describe() const {
  auto join = [](const std::vector<long long>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(v[i]);
    }
    return s;
  };
  switch (kind_) {
    case SetKind::Finite:
      return "finite:" + join(elements_);
    case SetKind::Naturals:
      return "naturals";
    case SetKind::Primes:
      return "primes";
    case SetKind::PrimePowers:
      return "ppowers:" + std::to_string(p_);
    case SetKind::Odds:
      return "odds";
    case SetKind::Complement:
      return "complement:finite:" + join(elements_);
  }
  return "";
}

}  // namespace partcount
