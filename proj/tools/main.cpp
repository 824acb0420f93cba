#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "partcount/arith.hpp"
#include "partcount/asymptotics.hpp"
#include "partcount/carlitz.hpp"
#include "partcount/identities.hpp"
#include "partcount/oracle.hpp"
#include "partcount/part_set.hpp"
#include "partcount/partition_tables.hpp"

namespace {

using namespace partcount;
using ordered_json = nlohmann::ordered_json;

struct ComputeArgs {
  std::string fn;
  std::string set = "naturals";
  long long n_max = 0;
  std::string route = "gf";
  bool route_given = false;
  std::string format = "json";
};

struct VerifyArgs {
  std::string identity;
  std::vector<std::string> sets;
  long long n_max = 100;
};

struct AsymptoticsArgs {
  std::string set;
  std::string target = "np";
  std::vector<long long> residues;
  long long l0 = 1;
  long long l_max = -1;
  bool l_max_given = false;
  bool strict = false;
  std::vector<long long> ratio_points;
  bool ratio_given = false;
};

struct OracleDiffArgs {
  std::string set = "naturals";
  long long n_max = 0;
};

// Sequence values for one compute fn; first_n is 0 for counting sequences
// (which have a defined value at 0) and 1 for the divisor-type functions.
struct ComputeRows {
  std::string set_desc;
  long long first_n = 0;
  std::vector<std::string> values;  // index 0 corresponds to first_n
};

ComputeRows rows_from_table(const SequenceTable& t, long long first_n) {
  ComputeRows rows;
  rows.set_desc = t.set;
  rows.first_n = first_n;
  for (long long n = first_n; n <= t.n_max(); ++n)
    rows.values.push_back(t.at(n).str());
  return rows;
}

ComputeRows compute_rows(const ComputeArgs& a) {
  const PartSet s = PartSet::parse(a.set);
  const bool routed = a.fn == "np" || a.fn == "nq" || a.fn == "cl";
  if (a.route_given && !routed)
    throw std::invalid_argument("--route applies only to fn np, nq, cl");

  if (a.fn == "p") return rows_from_table(p_table(s, a.n_max), 0);
  if (a.fn == "q") return rows_from_table(q_table(s, a.n_max), 0);
  if (a.fn == "p-parity-diff")
    return rows_from_table(parity_diff_table(s, a.n_max, Flavor::Partition),
                           0);
  if (a.fn == "q-parity-diff")
    return rows_from_table(parity_diff_table(s, a.n_max, Flavor::Distinct), 0);
  if (a.fn == "np" || a.fn == "nq") {
    if (a.route != "gf" && a.route != "conv")
      throw std::invalid_argument("fn '" + a.fn +
                                  "' supports --route gf or conv");
    const SequenceTable t =
        a.fn == "np" ? (a.route == "gf" ? np_table_gf(s, a.n_max)
                                        : np_table_conv(s, a.n_max))
                     : (a.route == "gf" ? nq_table_gf(s, a.n_max)
                                        : nq_table_conv(s, a.n_max));
    return rows_from_table(t, 1);
  }
  if (a.fn == "cl") {
    if (a.route != "gf" && a.route != "rec")
      throw std::invalid_argument("fn 'cl' supports --route gf or rec");
    return rows_from_table(a.route == "gf" ? carlitz_table_gf(s, a.n_max)
                                           : carlitz_table_rec(s, a.n_max),
                           0);
  }
  if (a.fn == "tau" || a.fn == "tau-s" || a.fn == "sigma" ||
      a.fn == "sigma-s") {
    DivisorFnKind kind;
    kind.weight = (a.fn == "tau" || a.fn == "tau-s") ? DivisorWeight::Count
                                                     : DivisorWeight::Sum;
    kind.sign_alternates = a.fn == "tau-s" || a.fn == "sigma-s";
    ComputeRows rows;
    rows.set_desc = s.describe();
    rows.first_n = 1;
    for (long long n = 1; n <= a.n_max; ++n)
      rows.values.push_back(std::to_string(divisor_fn(kind, s, n)));
    return rows;
  }
  if (a.fn == "hamming") {
    ComputeRows rows;
    rows.set_desc = s.describe();
    rows.first_n = 0;
    for (long long n = 0; n <= a.n_max; ++n)
      rows.values.push_back(std::to_string(hamming_weight(n)));
    return rows;
  }
  if (a.fn == "vp") {
    if (s.kind() != SetKind::PrimePowers)
      throw std::invalid_argument(
          "fn 'vp' needs a prime-power set, e.g. --set ppowers:2");
    ComputeRows rows;
    rows.set_desc = s.describe();
    rows.first_n = 1;
    for (long long n = 1; n <= a.n_max; ++n)
      rows.values.push_back(std::to_string(p_adic_valuation(s.prime(), n)));
    return rows;
  }
  throw std::invalid_argument("unknown fn '" + a.fn + "'");
}

int run_compute(const ComputeArgs& a, std::ostream& out) {
  const ComputeRows rows = compute_rows(a);
  if (a.format == "csv") {
    out << "n,value\n";
    for (size_t i = 0; i < rows.values.size(); ++i)
      out << rows.first_n + static_cast<long long>(i) << "," << rows.values[i]
          << "\n";
    return 0;
  }
  for (size_t i = 0; i < rows.values.size(); ++i) {
    ordered_json j;
    j["fn"] = a.fn;
    j["set"] = rows.set_desc;
    j["n"] = rows.first_n + static_cast<long long>(i);
    j["value"] = rows.values[i];
    out << j.dump() << "\n";
  }
  return 0;
}

int run_verify(const VerifyArgs& a, std::ostream& out) {
  std::vector<PartSet> sets;
  for (const std::string& spec : a.sets) sets.push_back(PartSet::parse(spec));

  std::vector<IdentityReport> reports;
  if (a.identity == "all") {
    reports = verify_all(sets, a.n_max);
  } else if (!sets.empty()) {
    for (const PartSet& s : sets)
      reports.push_back(verify(a.identity, s, a.n_max));
  } else {
    // No set supplied: run the identity on the sets it is stated for.
    const IdentityEntry* entry = nullptr;
    for (const IdentityEntry& e : catalog())
      if (e.id == a.identity) entry = &e;
    if (entry == nullptr)
      throw std::invalid_argument("unknown identity id '" + a.identity + "'");
    for (const PartSet& s : entry->builtin_sets)
      reports.push_back(verify(a.identity, s, a.n_max));
  }

  long long held = 0, skipped = 0, failures = 0;
  for (const IdentityReport& r : reports) {
    out << report_to_json(r) << "\n";
    if (r.status == IdentityReport::Status::AllHold) ++held;
    else if (r.status == IdentityReport::Status::Skipped) ++skipped;
    else ++failures;
  }
  std::cerr << reports.size() << (reports.size() == 1 ? " report: " : " reports: ")
            << held << " all-hold, " << skipped << " skipped, " << failures
            << (failures == 1 ? " failure\n" : " failures\n");
  return failures == 0 ? 0 : 1;
}

int run_asymptotics(const AsymptoticsArgs& a, std::ostream& out) {
  const FiniteSetA fs = FiniteSetA::from(PartSet::parse(a.set));
  const QuasiTarget target = a.target == "p" ? QuasiTarget::PartitionCount
                                             : QuasiTarget::PartsCount;
  const long long degree = target == QuasiTarget::PartitionCount ? fs.k - 1
                                                                 : fs.k;
  const long long l_max = a.l_max_given ? a.l_max : a.l0 + degree + 3;
  if (l_max <= a.l0)
    throw std::invalid_argument("--l-max must exceed --l0");
  const long long window = l_max - a.l0;

  std::vector<long long> residues = a.residues;
  if (residues.empty())
    for (long long r = 0; r < fs.period; ++r) residues.push_back(r);

  const LeadingCoefficient lc = leading_coefficient(fs);
  ordered_json head;
  head["set"] = fs.part_set().describe();
  head["target"] = target == QuasiTarget::PartitionCount ? "p" : "np";
  head["k"] = fs.k;
  head["period"] = fs.period;
  head["degree"] = degree;
  head["leading_in_l"] = rational_str(lc.in_l);
  head["leading_in_n"] = rational_str(lc.in_n);
  head["netto"] = rational_str(netto_coefficient(fs));
  out << head.dump() << "\n";

  long long max_r = 0;
  for (long long r : residues) max_r = std::max(max_r, r);
  const long long needed = fs.period * l_max + max_r;
  const PartSet ps = fs.part_set();
  const SequenceTable values = target == QuasiTarget::PartitionCount
                                   ? p_table(ps, needed)
                                   : np_table_gf(ps, needed);

  bool all_match = true;
  for (long long r : residues) {
    const QuasiPolyReport rep =
        quasi_poly_check(values, fs, target, r, a.l0, window);
    out << report_to_json(rep) << "\n";
    if (!rep.match) all_match = false;
    if (a.strict && a.l0 != 0) {
      // Informational: the same residue from the very first block.
      const QuasiPolyReport rep0 =
          quasi_poly_check(values, fs, target, r, 0, window);
      out << report_to_json(rep0) << "\n";
    }
  }

  if (target == QuasiTarget::PartsCount) {
    std::vector<long long> points = a.ratio_points;
    if (!a.ratio_given) points = {100, 1000};
    if (!points.empty()) {
      for (const RatioRow& row : ratio_report(fs, points)) {
        ordered_json j;
        j["set"] = fs.part_set().describe();
        j["n"] = row.n;
        j["ratio"] = rational_str(row.ratio);
        j["decimal"] = row.decimal;
        out << j.dump() << "\n";
      }
    }
  } else if (a.ratio_given) {
    throw std::invalid_argument("--ratio-n applies to --target np");
  }
  return all_match ? 0 : 1;
}

int run_oracle_diff(const OracleDiffArgs& a, std::ostream& out) {
  OracleLimits limits;
  if (const char* env = std::getenv("PARTCOUNT_GUARDRAIL")) {
    const std::string text(env);
    long long v = 0;
    auto [ptr, ec] =
        std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size())
      throw std::invalid_argument(
          "PARTCOUNT_GUARDRAIL must be an integer; got '" + text + "'");
    limits.partitions = std::max(limits.partitions, v);
    limits.carlitz = std::max(limits.carlitz, v);
  }
  if (a.n_max > limits.partitions || a.n_max > limits.carlitz)
    throw std::invalid_argument(
        "n-max " + std::to_string(a.n_max) +
        " exceeds the enumeration guardrail (partitions " +
        std::to_string(limits.partitions) + ", adjacent-distinct " +
        std::to_string(limits.carlitz) +
        "); set PARTCOUNT_GUARDRAIL to raise it");

  const PartSet s = PartSet::parse(a.set);
  const SequenceTable p = p_table(s, a.n_max);
  const SequenceTable q = q_table(s, a.n_max);
  const SequenceTable np = np_table_gf(s, a.n_max);
  const SequenceTable nq = nq_table_gf(s, a.n_max);
  const SequenceTable pd = parity_diff_table(s, a.n_max, Flavor::Partition);
  const SequenceTable qd = parity_diff_table(s, a.n_max, Flavor::Distinct);
  const SequenceTable cl = carlitz_table_gf(s, a.n_max);

  long long mismatches = 0;
  for (long long n = 0; n <= a.n_max; ++n) {
    const OracleCounts oc = oracle_counts(n, s, limits);
    const BigInt np_engine = n >= 1 ? np.at(n) : BigInt(0);
    const BigInt nq_engine = n >= 1 ? nq.at(n) : BigInt(0);
    const std::pair<const char*, std::pair<BigInt, BigInt>> fields[] = {
        {"p", {oc.p, p.at(n)}},
        {"q", {oc.q, q.at(n)}},
        {"np", {oc.np, np_engine}},
        {"nq", {oc.nq, nq_engine}},
        {"p-parity-diff", {oc.p_parity_diff, pd.at(n)}},
        {"q-parity-diff", {oc.q_parity_diff, qd.at(n)}},
        {"cl", {oc.cl, cl.at(n)}},
    };
    bool match = true;
    for (const auto& f : fields)
      if (f.second.first != f.second.second) match = false;
    if (!match) ++mismatches;

    ordered_json j;
    j["n"] = n;
    j["match"] = match;
    for (const auto& f : fields) {
      ordered_json pairj;
      pairj["oracle"] = f.second.first.str();
      pairj["engine"] = f.second.second.str();
      j[f.first] = std::move(pairj);
    }
    out << j.dump() << "\n";
  }
  std::cerr << "checked n = 0.." << a.n_max << " on '" << s.describe()
            << "': "
            << (mismatches == 0 ? "all counts agree"
                                : std::to_string(mismatches) +
                                      " n values disagree")
            << "\n";
  return mismatches == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact tables, identity verification, and polynomial-growth checks "
      "for counting parts of partitions with restricted part sets"};
  app.require_subcommand(1);

  ComputeArgs cargs;
  VerifyArgs vargs;
  AsymptoticsArgs aargs;
  OracleDiffArgs oargs;
  std::string out_path;

  CLI::App* compute =
      app.add_subcommand("compute", "Print values of one sequence");
  compute->add_option("--fn", cargs.fn, "Sequence to compute")
      ->required()
      ->check(CLI::IsMember({"p", "q", "np", "nq", "p-parity-diff",
                             "q-parity-diff", "tau", "tau-s", "sigma",
                             "sigma-s", "cl", "hamming", "vp"}));
  compute->add_option("--set", cargs.set,
                      "Part set, e.g. naturals | finite:1,2,3 | primes | "
                      "ppowers:2 | odds | complement:finite:2,3");
  compute->add_option("--n-max", cargs.n_max, "Largest n to print")
      ->required()
      ->check(CLI::NonNegativeNumber);
  CLI::Option* route_opt = compute->add_option(
      "--route", cargs.route, "Computation route: gf (default), conv (np/nq), rec (cl)");
  route_opt->check(CLI::IsMember({"gf", "conv", "rec"}));
  compute->add_option("--format", cargs.format, "json (default) or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  compute->add_option("--out", out_path, "Also write the output to this file");

  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "Check identities from the catalog and report per set");
  verify_cmd
      ->add_option("--identity", vargs.identity,
                   "Identity id (see --list in README) or 'all'")
      ->required();
  verify_cmd->add_option("--set", vargs.sets,
                         "Part set spec; repeatable. Defaults to the sets "
                         "each identity is stated for");
  verify_cmd->add_option("--n-max", vargs.n_max, "Check n = 1..n-max")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--out", out_path,
                         "Also write the output to this file");

  CLI::App* asym = app.add_subcommand(
      "asymptotics",
      "Finite-difference polynomial checks and growth-constant ratios");
  asym->add_option("--set", aargs.set, "Finite part set with gcd 1")
      ->required();
  asym->add_option("--target", aargs.target,
                   "p (partition counts) or np (part counts; default)")
      ->check(CLI::IsMember({"p", "np"}));
  asym->add_option("--r", aargs.residues,
                   "Residue class(es) mod the period; default: all");
  asym->add_option("--l0", aargs.l0, "First block index sampled (default 1)")
      ->check(CLI::NonNegativeNumber);
  CLI::Option* lmax_opt =
      asym->add_option("--l-max", aargs.l_max,
                       "Last block index sampled (default l0 + degree + 3)");
  asym->add_flag("--strict", aargs.strict,
                 "Also print informational reports anchored at l0 = 0");
  CLI::Option* ratio_opt = asym->add_option(
      "--ratio-n", aargs.ratio_points,
      "n values for np(n)/(c n^k) ratio rows (default 100, 1000)");
  asym->add_option("--out", out_path, "Also write the output to this file");

  CLI::App* odiff = app.add_subcommand(
      "oracle-diff",
      "Compare every engine count against brute-force enumeration");
  odiff->add_option("--set", oargs.set, "Part set spec");
  odiff->add_option("--n-max", oargs.n_max, "Check n = 0..n-max")
      ->required()
      ->check(CLI::NonNegativeNumber);
  odiff->add_option("--out", out_path, "Also write the output to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  cargs.route_given = route_opt->count() > 0;
  aargs.l_max_given = lmax_opt->count() > 0;
  aargs.ratio_given = ratio_opt->count() > 0;

  try {
    std::ostringstream out;
    int rc = 0;
    if (compute->parsed()) rc = run_compute(cargs, out);
    else if (verify_cmd->parsed()) rc = run_verify(vargs, out);
    else if (asym->parsed()) rc = run_asymptotics(aargs, out);
    else if (odiff->parsed()) rc = run_oracle_diff(oargs, out);
    std::cout << out.str();
    if (!out_path.empty()) {
      std::ofstream f(out_path, std::ios::binary);
      if (!f) throw std::invalid_argument("cannot open output file '" +
                                          out_path + "'");
      f << out.str();
    }
    return rc;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
