#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace partcount {

// Thrown when an operation is well-formed but not representable for the
// receiver, e.g. removing an element from an infinite generator family.
struct UnsupportedOperation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool is_prime(long long n);

enum class SetKind { Finite, Naturals, Primes, PrimePowers, Odds, Complement };

// A set of allowed parts. Finite sets store their elements; infinite
// families are generated on demand and are only ever consumed through
// elements_up_to(), so every computation stays finite. Complement holds
// the naturals minus a finite excluded base, which is also what removing
// an element from the naturals produces.
class PartSet {
 public:
  static PartSet finite(std::vector<long long> elements);
  static PartSet naturals();
  static PartSet primes();
  static PartSet prime_powers(long long p);  // {1, p, p^2, ...}
  static PartSet odds();
  static PartSet complement_of(std::vector<long long> excluded);

  // Mini-language: "finite:1,2,3" | "naturals" | "primes" | "ppowers:2" |
  // "odds" | "complement:finite:2,3"
  static PartSet parse(const std::string& spec);

  SetKind kind() const { return kind_; }
  // Finite: the elements. Complement: the excluded base. Others: empty.
  const std::vector<long long>& stored_elements() const { return elements_; }
  long long prime() const { return p_; }  // PrimePowers only

  // All members <= n, ascending. Never throws; n <= 0 yields an empty list.
  std::vector<long long> elements_up_to(long long n) const;
  bool contains(long long a) const;

  // The set minus {b}. Throws std::domain_error if b is not a member or the
  // removal would leave a finite set empty, UnsupportedOperation for the
  // infinite generator kinds other than naturals/complement.
  PartSet without(long long b) const;

  // Round-trips through parse().
  std::string describe() const;

 private:
  PartSet(SetKind kind, std::vector<long long> elements, long long p);

  SetKind kind_;
  std::vector<long long> elements_;
  long long p_ = 0;
};

}  // namespace partcount
