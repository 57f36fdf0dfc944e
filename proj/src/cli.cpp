#include "qcyc/cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qcyc/cyclicity.hpp"
#include "qcyc/errors.hpp"
#include "qcyc/jobs.hpp"
#include "qcyc/paper_tables.hpp"
#include "qcyc/root_system.hpp"
#include "qcyc/selftest.hpp"
#include "qcyc/spectral.hpp"

namespace qcyc::cli {

namespace {

using nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ordered_json to_json(const ExponentSet& s) {
  ordered_json a = ordered_json::array();
  for (auto k : s) a.push_back(k);
  return a;
}

int cmd_check(const std::string& path, bool timing, std::ostream& out, std::ostream& err) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    err << "error: " << path << ": invalid JSON: " << e.what() << "\n";
    return kInputError;
  }
  JobSpec job;
  try {
    job = parse_job(doc, std::filesystem::path(path).parent_path().string());
  } catch (const JobError& e) {
    err << "error: " << (e.pointer().empty() ? "/" : e.pointer()) << ": " << e.what() << "\n";
    return kInputError;
  } catch (const WordInvalid& e) {
    const char* where = doc.contains("options") && doc["options"].contains("word_file")
                            ? "/options/word_file"
                            : "/options/word";
    err << "error: " << where << ": WordInvalid: " << e.what() << "\n";
    return kInputError;
  }
  const auto t0 = std::chrono::steady_clock::now();
  const CyclicityVerdict v = check_cyclic(job.type, job.factors, job.env, job.word, job.options);
  std::optional<double> ms;
  if (timing) {
    ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  }
  out << make_report(job, v, ms).dump(2) << "\n";
  return v.holds ? kOk : kViolated;
}

// The two-string composition formula applied to a tabulated base set.
ExponentSet compose_tabulated(LieType t, const ExponentSet& tab, Node i1, int m1, Node i2, int m2) {
  const CartanData cd = cartan_data(t);
  const int d1 = cd.d(i1), d2 = cd.d(i2);
  const ExponentSet core =
      tabulated_normalization(t) == TableNormalization::Core ? tab : translate(tab, -2 * d2);
  const std::int64_t big_d = d1 * m1 + d2 * m2 + d1 + d2;
  ExponentSet out;
  for (int p = 1; p <= m1; ++p) {
    for (auto k : translate(core, big_d - 2 * d1 * p)) out.insert(k);
  }
  return out;
}

int cmd_sset(const std::string& type, Node i1, Node i2, std::optional<int> m1,
             std::optional<int> m2, bool paper, BraidRule rule, std::ostream& out) {
  const LieType t = LieType::parse(type);
  const CartanData cd = cartan_data(t);
  cd.require_node(i1);
  cd.require_node(i2);
  const bool fundamental = !m1 && !m2;
  const int a = m1.value_or(1), b = m2.value_or(1);
  const ExponentSet computed = fundamental ? s_set(t, i1, i2, rule)
                                           : forbidden_ratios(t, i1, a, i2, b, rule);
  out << to_string(computed) << "\n";
  if (!paper) return kOk;
  const TableEntry e = paper_entry(t, i1, i2);
  auto expected = [&](const ExponentSet& s) {
    return fundamental ? s : compose_tabulated(t, s, i1, a, i2, b);
  };
  const ExponentSet tab = expected(e.set);
  out << "tabulated " << to_string(tab);
  if (tab == computed) {
    out << " match";
  } else if (e.alt && expected(*e.alt) == computed) {
    out << " match (alternative reading " << to_string(expected(*e.alt)) << ")";
  } else {
    out << " mismatch";
    if (e.alt) out << " (alternative reading " << to_string(expected(*e.alt)) << ")";
  }
  out << "\n";
  return kOk;
}

ordered_json diff_json(const DiffReport& r) {
  ordered_json j;
  j["type"] = r.type.name();
  j["tabulated"] = r.tabulated;
  j["computed_pairs"] = r.computed_pairs;
  j["matches"] = r.matches;
  j["adjudicated"] = r.adjudicated;
  j["mismatches"] = r.mismatches;
  j["entries"] = ordered_json::array();
  for (const DiffEntry& d : r.entries) {
    ordered_json e;
    e["i1"] = d.i1;
    e["i2"] = d.i2;
    e["status"] = to_string(d.status);
    e["computed"] = to_json(d.computed);
    e["tabulated"] = to_json(d.tabulated);
    if (d.alt) {
      e["alt"] = to_json(*d.alt);
      e["matches_alt"] = d.matches_alt;
    }
    e["flags"] = d.flags;
    e["provenance"] = d.provenance;
    if (!d.note.empty()) e["note"] = d.note;
    j["entries"].push_back(std::move(e));
  }
  return j;
}

ordered_json table_json(const STable& s) {
  ordered_json j;
  j["type"] = s.type.name();
  j["entries"] = ordered_json::array();
  for (const auto& [pair, e] : s.entries) {
    j["entries"].push_back({{"i1", pair.first}, {"i2", pair.second}, {"set", to_json(e.set)}});
  }
  return j;
}

std::vector<LieType> table_types(const std::string& type) {
  if (type != "all") return {LieType::parse(type)};
  return all_types(6, true);
}

int cmd_tables(const std::string& type, bool diff, const std::string& allowlist_arg, bool quiet,
               bool serial, BraidRule rule, std::ostream& out, std::ostream& err) {
  Allowlist allow;
  if (allowlist_arg == "builtin") {
    allow = embedded_allowlist();
  } else if (!allowlist_arg.empty()) {
    allow = parse_allowlist(read_file(allowlist_arg));
  }
  ordered_json doc = ordered_json::array();
  bool ok = true;
  for (const LieType& t : table_types(type)) {
    const STable computed = serial ? compute_table_serial(t, rule) : compute_table_parallel(t, rule);
    if (!diff) {
      doc.push_back(table_json(computed));
      continue;
    }
    const DiffReport r = diff_tables(computed, paper_table(t), allow);
    doc.push_back(diff_json(r));
    ok = ok && r.ok();
    err << t.name() << ": " << r.matches << "/" << r.tabulated << " match, " << r.adjudicated
        << " adjudicated, " << r.mismatches << " mismatched\n";
    for (const DiffEntry& d : r.entries) {
      if (d.status == DiffStatus::Match) continue;
      err << "  (" << d.i1 << "," << d.i2 << ") " << to_string(d.status) << ": computed "
          << to_string(d.computed) << ", tabulated " << to_string(d.tabulated);
      if (d.alt) err << ", alternative " << to_string(*d.alt);
      if (!d.note.empty()) err << " -- " << d.note;
      err << "\n";
    }
  }
  if (!quiet) out << doc.dump(2) << "\n";
  return ok ? kOk : kInputError;
}

int cmd_w0(const std::string& type, bool verify, std::ostream& out) {
  const LieType t = LieType::parse(type);
  const WeylWord w = longest_word(t);
  out << w.to_string() << "\n";
  if (!verify) return kOk;
  const bool reduced = is_reduced(cartan_data(t), w);
  const auto n = static_cast<std::size_t>(positive_root_count(t));
  out << "length " << w.size() << (w.size() == n ? "" : " (expected " + std::to_string(n) + ")")
      << ", " << (reduced ? "reduced" : "not reduced") << "\n";
  return reduced && w.size() == n ? kOk : kInputError;
}

int cmd_braid(const std::string& type, const std::string& word, BraidRule rule, std::ostream& out) {
  const LieType t = LieType::parse(type);
  const CartanData cd = cartan_data(t);
  const WeylWord w = WeylWord::parse(word);
  require_letters(cd, w);
  out << to_diagnostic_text(braid_word(cd, w, SpectralVector::formal(t.rank), rule));
  return kOk;
}

int cmd_rules(const std::string& type, std::ostream& out) {
  const CartanData cd = cartan_data(LieType::parse(type));
  const auto list = rule_discrepancies(cd);
  if (list.empty()) out << "rules agree on " << cd.type().name() << "\n";
  for (const RuleDiscrepancy& r : list) {
    out << "T_" << r.i << " on component " << r.j << ": symmetrized";
    for (auto s : r.matrix_shifts) out << " " << s;
    out << ", printed";
    for (auto s : r.printed_shifts) out << " " << s;
    out << "\n";
  }
  return kOk;
}

int cmd_selftest(const SuiteOptions& o, const std::string& only, std::ostream& out) {
  int failed = 0, run = 0;
  for (const NamedSuite& s : all_suites()) {
    if (!only.empty() && s.name != only) continue;
    const auto t0 = std::chrono::steady_clock::now();
    const SuiteResult r = s.run(o);
    const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    ++run;
    if (!r.ok()) ++failed;
    out << (r.ok() ? "PASS " : "FAIL ") << s.name << ": " << r.cases - r.failures << "/" << r.cases
        << " (" << std::fixed << std::setprecision(2) << sec << " s)";
    if (!r.first_failure.empty()) out << " first failure: " << r.first_failure;
    out << "\n";
  }
  if (run == 0) throw ParseError("no suite named '" + only + "'");
  out << (run - failed) << "/" << run << " suites passed\n";
  return failed == 0 ? kOk : kInputError;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cyclicity of tensor products of fundamental-type modules"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::string type, job, word, allowlist, only, rule_text = "symmetrized";
  Node i1 = 0, i2 = 0;
  std::optional<int> m1, m2;
  bool timing = false, paper = false, diff = false, quiet = false, serial = false, verify = false;
  SuiteOptions so;

  auto rule_opt = [&](CLI::App* c) {
    c->add_option("--braid-rule,--rule", rule_text, "symmetrized or printed")
        ->check(CLI::IsMember({"symmetrized", "printed"}));
  };

  auto* check = app.add_subcommand("check", "evaluate the cyclicity condition for a JSON job");
  check->add_option("job", job, "job file")->required();
  check->add_flag("--timing", timing, "include timing_ms in the report");

  auto* sset = app.add_subcommand("sset", "forbidden ratios of a pair of fundamental-type modules");
  sset->add_option("--type", type)->required();
  sset->add_option("--i1", i1)->required();
  sset->add_option("--i2", i2)->required();
  sset->add_option("--m1", m1)->check(CLI::PositiveNumber);
  sset->add_option("--m2", m2)->check(CLI::PositiveNumber);
  sset->add_flag("--paper", paper, "compare with the tabulated set");
  rule_opt(sset);

  auto* tables = app.add_subcommand("tables", "compute S tables, optionally diffed against the reference");
  tables->add_option("--type", type, "type name or 'all'")->required();
  tables->add_flag("--diff", diff);
  tables->add_option("--allowlist", allowlist, "errata file, or 'builtin'");
  tables->add_flag("--quiet", quiet, "summary only");
  tables->add_flag("--serial", serial, "disable the parallel kernel");
  rule_opt(tables);

  auto* w0 = app.add_subcommand("w0", "the fixed reduced word for the longest element");
  w0->add_option("--type", type)->required();
  w0->add_flag("--verify", verify);

  auto* braid = app.add_subcommand("braid", "T_w applied to the formal vector");
  braid->add_option("--type", type)->required();
  braid->add_option("--word", word)->required();
  rule_opt(braid);

  auto* rules = app.add_subcommand("rules", "where the two shift rules differ");
  rules->add_option("--type", type)->required();

  auto* selftest = app.add_subcommand("selftest", "run the property suites");
  selftest->add_option("--seed", so.seed);
  selftest->add_option("--cases", so.random_cases)->check(CLI::PositiveNumber);
  selftest->add_option("--suite", only);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    const BraidRule rule = parse_braid_rule(rule_text);
    if (check->parsed()) return cmd_check(job, timing, out, err);
    if (sset->parsed()) return cmd_sset(type, i1, i2, m1, m2, paper, rule, out);
    if (tables->parsed()) return cmd_tables(type, diff, allowlist, quiet, serial, rule, out, err);
    if (w0->parsed()) return cmd_w0(type, verify, out);
    if (braid->parsed()) return cmd_braid(type, word, rule, out);
    if (rules->parsed()) return cmd_rules(type, out);
    if (selftest->parsed()) return cmd_selftest(so, only, out);
  } catch (const EntryMissing& e) {
    err << "EntryMissing: " << e.what() << "\n";
    return kEntryMissing;
  } catch (const Error& e) {
    err << e.kind() << ": " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace qcyc::cli
