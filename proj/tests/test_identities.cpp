#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "partcount/identities.hpp"

using namespace partcount;

TEST_CASE("catalog shape") {
  const auto& entries = catalog();
  CHECK(entries.size() == 29);
  CHECK(entries.size() >= 24);

  std::set<std::string> ids;
  for (const IdentityEntry& e : entries) {
    CHECK(!e.id.empty());
    CHECK(!e.description.empty());
    CHECK(!e.builtin_sets.empty());
    CHECK(ids.insert(e.id).second);  // unique
    CHECK(e.run != nullptr);
    for (const PartSet& b : e.builtin_sets) CHECK(set_satisfies(e, b));
  }
  // Ids other tools depend on.
  for (const char* id : {"T2.1b", "T2.1d", "T2.2a", "T2.2b", "T2.3a", "T2.3b",
                         "T2.4a", "T2.4b", "T2.5p", "T2.5q", "T2.6a", "T2.6b",
                         "C-NOP", "C-hamming", "C-omega", "C-vp",
                         "C-binary-s", "E-sigma"})
    CHECK(ids.count(id) == 1);
}

TEST_CASE("default sets are distinct and parseable") {
  std::vector<PartSet> sets = default_catalog_sets();
  CHECK(sets.size() == 10);
  std::set<std::string> descs;
  for (const PartSet& s : sets) {
    CHECK(descs.insert(s.describe()).second);
    CHECK(PartSet::parse(s.describe()).describe() == s.describe());
  }
}

TEST_CASE("verify runs one identity and reports all-hold") {
  IdentityReport r = verify("T2.1b", PartSet::naturals(), 40);
  CHECK(r.id == "T2.1b");
  CHECK(r.set == "naturals");
  CHECK(r.n_max == 40);
  CHECK(r.status == IdentityReport::Status::AllHold);
  CHECK_FALSE(r.failed());
  CHECK_FALSE(r.first_failure.has_value());

  CHECK(verify("T2.3a", PartSet::finite({2, 3}), 40).status ==
        IdentityReport::Status::AllHold);
  CHECK(verify("T2.5p", PartSet::finite({2, 3, 5}), 40).status ==
        IdentityReport::Status::AllHold);
  CHECK(verify("C-vp", PartSet::prime_powers(3), 40).status ==
        IdentityReport::Status::AllHold);
}

TEST_CASE("verify rejects unknown ids and incompatible sets") {
  CHECK_THROWS_AS(verify("nope", PartSet::naturals(), 10),
                  std::invalid_argument);
  // Finite-only identity on an infinite set.
  CHECK_THROWS_AS(verify("T2.3a", PartSet::naturals(), 10),
                  std::invalid_argument);
  // Naturals-only identity on a finite set.
  CHECK_THROWS_AS(verify("C-np-nat", PartSet::finite({1, 2}), 10),
                  std::invalid_argument);
  // Built-in-only identity on anything but its stated set.
  CHECK_THROWS_AS(verify("C-hamming", PartSet::naturals(), 10),
                  std::invalid_argument);
  CHECK_THROWS_AS(verify("C-hamming", PartSet::prime_powers(3), 10),
                  std::invalid_argument);
  // Removal needs a second element to survive.
  CHECK_THROWS_AS(verify("T2.5p", PartSet::finite({2}), 10),
                  std::invalid_argument);
}

TEST_CASE("constraint names are stable") {
  CHECK(std::string(constraint_name(SetConstraint::Any)) == "any");
  CHECK(std::string(constraint_name(SetConstraint::FiniteOnly)) ==
        "finite-only");
  CHECK(std::string(constraint_name(SetConstraint::BuiltinOnly)) ==
        "built-in-sets-only");
}

TEST_CASE("verify_all covers every identity with at least one real run") {
  std::vector<IdentityReport> reports = verify_all({}, 50);
  std::set<std::string> with_run, with_failure;
  for (const IdentityReport& r : reports) {
    if (r.status == IdentityReport::Status::AllHold) with_run.insert(r.id);
    if (r.failed()) with_failure.insert(r.id);
    if (r.status == IdentityReport::Status::Skipped) {
      CHECK(!r.note.empty());
      CHECK(r.note.rfind("requires ", 0) == 0);
    }
  }
  CHECK(with_failure.empty());
  CHECK(with_run.size() == catalog().size());
}

TEST_CASE("verify_all falls back to stated sets when none supplied match") {
  // Only a finite set supplied: naturals-only entries must still run,
  // on the set they are stated for.
  std::vector<IdentityReport> reports =
      verify_all({PartSet::finite({1, 2})}, 30);
  bool np_nat_ran = false, t21b_on_12 = false, t23a_skip_free = true;
  for (const IdentityReport& r : reports) {
    if (r.id == "C-np-nat" && r.set == "naturals" &&
        r.status == IdentityReport::Status::AllHold)
      np_nat_ran = true;
    if (r.id == "T2.1b" && r.set == "finite:1,2" &&
        r.status == IdentityReport::Status::AllHold)
      t21b_on_12 = true;
    if (r.id == "T2.3a" && r.status == IdentityReport::Status::Skipped)
      t23a_skip_free = false;
  }
  CHECK(np_nat_ran);
  CHECK(t21b_on_12);
  // finite:1,2 satisfies FiniteOnly, so T2.3a has a compatible set and no
  // skip marker.
  CHECK(t23a_skip_free);

  // The same run must also produce skip markers for incompatible entries.
  bool hamming_skipped = false, hamming_ran_builtin = false;
  for (const IdentityReport& r : reports) {
    if (r.id != "C-hamming") continue;
    if (r.status == IdentityReport::Status::Skipped && r.set == "finite:1,2")
      hamming_skipped = true;
    if (r.status == IdentityReport::Status::AllHold && r.set == "ppowers:2")
      hamming_ran_builtin = true;
  }
  CHECK(hamming_skipped);
  CHECK(hamming_ran_builtin);
}

TEST_CASE("verify_all is deterministic") {
  std::vector<IdentityReport> a = verify_all({}, 25);
  std::vector<IdentityReport> b = verify_all({}, 25);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].id == b[i].id);
    CHECK(a[i].set == b[i].set);
    CHECK(a[i].status == b[i].status);
  }
}

TEST_CASE("a perturbed divisor input is caught by exactly the routes using it") {
  EvalHooks hooks = EvalHooks::defaults();
  hooks.divisor = [](DivisorFnKind kind, const PartSet& s, long long n) {
    long long v = divisor_fn(kind, s, n);
    if (kind.weight == DivisorWeight::Count && !kind.sign_alternates &&
        s.describe() == "naturals" && n == 5)
      v += 1;
    return v;
  };
  std::vector<IdentityReport> reports = verify_all({}, 30, hooks);
  std::set<std::string> failed;
  for (const IdentityReport& r : reports)
    if (r.failed()) {
      failed.insert(r.id);
      CHECK(r.set == "naturals");
      REQUIRE(r.first_failure.has_value());
      CHECK(r.first_failure->lhs != r.first_failure->rhs);
    }
  const std::set<std::string> expected = {"T2.1b",  "C-np-nat", "T2.2a",
                                          "C-NOP",  "T2.4a",    "C-logdiff-p"};
  CHECK(failed == expected);
}

TEST_CASE("a perturbed signed divisor input is caught by the signed routes") {
  EvalHooks hooks = EvalHooks::defaults();
  hooks.divisor = [](DivisorFnKind kind, const PartSet& s, long long n) {
    long long v = divisor_fn(kind, s, n);
    if (kind.weight == DivisorWeight::Count && kind.sign_alternates &&
        s.describe() == "naturals" && n == 4)
      v -= 1;
    return v;
  };
  std::vector<IdentityReport> reports = verify_all({}, 30, hooks);
  std::set<std::string> failed;
  for (const IdentityReport& r : reports)
    if (r.failed()) failed.insert(r.id);
  const std::set<std::string> expected = {"T2.1d",  "C-nq-nat", "T2.2b",
                                          "C-odd-distinct", "T2.4b",
                                          "C-logdiff-q", "T2.6a", "T2.6b"};
  CHECK(failed == expected);
}

TEST_CASE("first failure pinpoints the earliest divergence") {
  EvalHooks hooks = EvalHooks::defaults();
  hooks.divisor = [](DivisorFnKind kind, const PartSet& s, long long n) {
    long long v = divisor_fn(kind, s, n);
    if (kind.weight == DivisorWeight::Count && !kind.sign_alternates &&
        s.describe() == "naturals" && n == 5)
      v += 1;
    return v;
  };
  IdentityReport r = verify("T2.1b", PartSet::naturals(), 30, hooks);
  REQUIRE(r.failed());
  REQUIRE(r.first_failure.has_value());
  // tau(5) enters the convolution first at n = 5 (k = 0 term).
  CHECK(r.first_failure->n == 5);
  CHECK(r.first_failure->rhs - r.first_failure->lhs == 1);
}

TEST_CASE("report json shape") {
  IdentityReport ok = verify("T2.2a", PartSet::naturals(), 20);
  auto j = nlohmann::json::parse(report_to_json(ok));
  CHECK(j["id"] == "T2.2a");
  CHECK(j["set"] == "naturals");
  CHECK(j["n_max"] == 20);
  CHECK(j["status"] == "all-hold");
  CHECK_FALSE(j.contains("first_failure"));

  IdentityReport skip{"X", "odds", 5, IdentityReport::Status::Skipped,
                      std::nullopt, "requires finite-only"};
  auto js = nlohmann::json::parse(report_to_json(skip));
  CHECK(js["status"] == "skipped");
  CHECK(js["note"] == "requires finite-only");

  IdentityReport bad{"Y", "naturals", 9, IdentityReport::Status::Failure,
                     FirstFailure{7, BigInt(10), BigInt(11)}, ""};
  auto jb = nlohmann::json::parse(report_to_json(bad));
  CHECK(jb["status"] == "failure");
  CHECK(jb["first_failure"]["n"] == 7);
  CHECK(jb["first_failure"]["lhs"] == "10");
  CHECK(jb["first_failure"]["rhs"] == "11");
}
