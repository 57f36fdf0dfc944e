#include <algorithm>

#include "doctest.h"
#include "qcyc/errors.hpp"
#include "qcyc/paper_tables.hpp"

using namespace qcyc;

namespace {

bool has_flag(const std::vector<std::string>& flags, const std::string& f) {
  return std::any_of(flags.begin(), flags.end(), [&](const std::string& x) { return x.find(f) != std::string::npos; });
}

const DiffEntry& entry(const DiffReport& r, Node i1, Node i2) {
  for (const DiffEntry& d : r.entries) {
    if (d.i1 == i1 && d.i2 == i2) return d;
  }
  throw std::out_of_range("no entry");
}

}  // namespace

TEST_CASE("classical closed forms") {
  CHECK(classical_table(LieType::parse("A3"), 2, 2) == ExponentSet{0, 2});
  CHECK(classical_table(LieType::parse("D4"), 1, 1) == ExponentSet{0, 4});
  CHECK(classical_table(LieType::parse("C2"), 1, 1) == ExponentSet{0, 2});
  CHECK(classical_table(LieType::parse("A2"), 1, 2) == ExponentSet{1});
  CHECK(has_flag(classical_entry(LieType::parse("D5"), 1, 4).flags, "completed-by-symmetry"));
}

TEST_CASE("classical tables equal the computation for rank <= 6") {
  for (const LieType& t : all_types(6, false)) {
    for (Node i1 = 1; i1 <= t.rank; ++i1) {
      for (Node i2 = 1; i2 <= t.rank; ++i2) {
        INFO(t.name() << " (" << i1 << "," << i2 << ")");
        CHECK(classical_table(t, i1, i2) == s_set(t, i1, i2));
      }
    }
  }
}

TEST_CASE("embedded exceptional tables") {
  const auto& lines = embedded_table_lines();
  auto count = [&](const char* type) {
    return std::count_if(lines.begin(), lines.end(),
                         [&](const TableEntry& e) { return e.type == LieType::parse(type); });
  };
  CHECK(count("E6") == 21);
  CHECK(count("E7") == 28);
  CHECK(count("E8") == 36);
  CHECK(count("F4") == 10);
  CHECK(count("G2") == 3);
  CHECK(paper_table(LieType::parse("E6")).entries.size() == 21);
  CHECK(paper_table(LieType::parse("E7")).entries.size() == 28);
  CHECK(paper_table(LieType::parse("E8")).entries.size() == 36);

  CHECK(table_lookup(LieType::parse("E6"), 4, 4) == ExponentSet{2, 4, 6, 8, 10, 12});
  CHECK(table_lookup(LieType::parse("G2"), 1, 1) == ExponentSet{2, 6, 8, 12});
  CHECK_THROWS_AS(table_lookup(LieType::parse("E6"), 4, 2), EntryMissing);

  const TableEntry e86 = paper_entry(LieType::parse("E8"), 6, 8);
  CHECK(has_flag(e86.flags, "token-m"));
  REQUIRE(e86.alt);
  CHECK(e86.alt->count(14) == 0);
  CHECK(e86.set.count(14) == 1);
  // E7 entries include the S_6 part
  const ExponentSet e7_11 = table_lookup(LieType::parse("E7"), 1, 1);
  for (auto k : table_lookup(LieType::parse("E6"), 1, 1)) CHECK(e7_11.count(k) == 1);
}

TEST_CASE("table file parsing") {
  const auto lines = parse_table_file(
      "version 1\n"
      "# comment\n"
      "G2 1 2 : 7 11  # somewhere ; flag-a ; alt=7 13\n");
  REQUIRE(lines.size() == 1);
  CHECK(lines[0].set == ExponentSet{7, 11});
  CHECK(lines[0].provenance == "somewhere");
  CHECK(lines[0].flags == std::vector<std::string>{"flag-a"});
  CHECK(lines[0].alt == ExponentSet{7, 13});
  CHECK_THROWS_AS(parse_table_file("version 1\nG2 1 : 7\n"), ParseError);
  CHECK_THROWS_AS(parse_table_file("version 1\nG2 1 2 : 7 x\n"), ParseError);
  CHECK_THROWS_AS(parse_table_file("version 1\nG2 1 5 : 7\n"), Error);
  CHECK_THROWS_AS(parse_allowlist("version 1\nE8 1 : 1\n"), ParseError);
}

TEST_CASE("diffs") {
  const LieType g2 = LieType::parse("G2");
  const STable paper = paper_table(g2);
  const DiffReport same = diff_tables(paper, paper, {});
  CHECK(same.mismatches == 0);
  CHECK(same.matches == 3);

  const DiffReport g = diff_tables(compute_table_serial(g2), paper, {});
  CHECK(g.ok());
  CHECK(g.matches == 3);
  CHECK(g.tabulated == 3);

  const DiffReport e6 = diff_tables(compute_table_serial(LieType::parse("E6")), paper_table(LieType::parse("E6")), {});
  CHECK(e6.matches == 21);

  const LieType e8 = LieType::parse("E8");
  const STable computed = compute_table_parallel(e8);
  const DiffReport raw = diff_tables(computed, paper_table(e8), {});
  CHECK_FALSE(raw.ok());
  const DiffReport adj = diff_tables(computed, paper_table(e8), embedded_allowlist());
  CHECK(adj.ok());
  CHECK(adj.adjudicated == raw.mismatches);
  const DiffEntry& d = entry(adj, 6, 8);
  CHECK(d.status == DiffStatus::Adjudicated);
  CHECK(d.alt);
  CHECK(d.tabulated != d.computed);

  // An allowlist line that pins the wrong set does not excuse the entry.
  Allowlist wrong = embedded_allowlist();
  wrong[{e8, 6, 8}].pinned = d.tabulated;
  const DiffReport w = diff_tables(computed, paper_table(e8), wrong);
  CHECK(entry(w, 6, 8).status == DiffStatus::Mismatch);
  CHECK_FALSE(w.ok());
}

TEST_CASE("errata pins every exceptional mismatch and nothing else") {
  int pinned = 0;
  for (const char* name : {"E6", "E7", "E8", "F4", "G2"}) {
    const LieType t = LieType::parse(name);
    const DiffReport r = diff_tables(compute_table_serial(t), paper_table(t), embedded_allowlist());
    INFO(name);
    CHECK(r.ok());
    pinned += r.adjudicated;
    for (const DiffEntry& d : r.entries) CHECK(d.note != "allowlisted but matches");
  }
  CHECK(pinned == static_cast<int>(embedded_allowlist().size()));
}

TEST_CASE("parallel kernels are deterministic") {
  for (const char* name : {"E6", "F4", "D5", "B4"}) {
    const LieType t = LieType::parse(name);
    const STable s = compute_table_serial(t);
    const STable p = compute_table_parallel(t);
    REQUIRE(s.entries.size() == p.entries.size());
    for (const auto& [k, e] : s.entries) CHECK(p.entries.at(k).set == e.set);
  }
  const auto a = oracle_sweep_serial(LieType::parse("B3"), 1);
  const auto b = oracle_sweep_parallel(LieType::parse("B3"), 1);
  REQUIRE(a.size() == b.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    CHECK(a[k].sweep == b[k].sweep);
    CHECK(a[k].root_form == b[k].root_form);
  }
}
