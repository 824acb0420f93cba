#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "partcount/arith.hpp"
#include "partcount/bigint.hpp"
#include "partcount/part_set.hpp"

namespace partcount {

// Which part sets an identity is stated for. BuiltinOnly entries run only
// on the specific sets they carry (e.g. the base-2 digit-sum laws).
enum class SetConstraint {
  Any,
  NaturalsOnly,
  PrimesOnly,
  PrimePowersOnly,
  FiniteOnly,
  Removable,  // an element can be removed: finite with >= 2 elements,
              // naturals, or a complement set
  BuiltinOnly,
};

const char* constraint_name(SetConstraint c);

// Replaceable inputs for identity evaluation. Tests substitute a perturbed
// divisor function to prove the harness actually depends on each input.
struct EvalHooks {
  std::function<long long(DivisorFnKind, const PartSet&, long long)> divisor;
  static EvalHooks defaults();
};

struct FirstFailure {
  long long n = 0;
  BigInt lhs;
  BigInt rhs;
};

struct IdentityReport {
  enum class Status { AllHold, Failure, Skipped };

  std::string id;
  std::string set;
  long long n_max = 0;
  Status status = Status::AllHold;
  std::optional<FirstFailure> first_failure;  // set iff status == Failure
  std::string note;                           // skip reason

  bool failed() const { return status == Status::Failure; }
};

struct IdentityEntry {
  std::string id;  // stable key, safe to reference from tests and scripts
  std::string description;
  SetConstraint constraint = SetConstraint::Any;
  // Sets the identity is stated for; used when no compatible set is
  // supplied, and exclusively for BuiltinOnly entries.
  std::vector<PartSet> builtin_sets;
  std::function<IdentityReport(const PartSet&, long long, const EvalHooks&)>
      run;
};

// The full identity catalog, fixed order, stable ids.
const std::vector<IdentityEntry>& catalog();

// The sets verify_all() runs on when none are supplied.
std::vector<PartSet> default_catalog_sets();

bool set_satisfies(const IdentityEntry& entry, const PartSet& s);

// Evaluate one identity on one set, exactly, short-circuiting at the first
// failing n. Unknown id or a set violating the entry's constraint throws
// std::invalid_argument.
IdentityReport verify(const std::string& id, const PartSet& s,
                      long long n_max,
                      const EvalHooks& hooks = EvalHooks::defaults());

// Evaluate the whole catalog against the given sets (or the defaults if
// empty). Incompatible (entry, set) pairs yield Skipped reports rather than
// being dropped; entries left with no compatible set run on their built-in
// sets so every identity is always exercised. Deterministic report order.
std::vector<IdentityReport> verify_all(
    const std::vector<PartSet>& sets, long long n_max,
    const EvalHooks& hooks = EvalHooks::defaults());

// One JSON object (single line, no trailing newline) per report:
// {"id":…,"set":…,"n_max":…,"status":…[,"first_failure":{…}][,"note":…]}
std::string report_to_json(const IdentityReport& r);

}  // namespace partcount
