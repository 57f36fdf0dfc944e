#pragma once

// Reference S(i1, i2) tables: closed-form index families for A-D, the
// embedded exceptional lists, and an entrywise diff against computed tables
// with an allowlist of adjudicated misprints.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcyc/cyclicity.hpp"
#include "qcyc/root_system.hpp"
#include "qcyc/spectral.hpp"

namespace qcyc {

struct TableEntry {
  LieType type;
  Node i1 = 0;
  Node i2 = 0;
  ExponentSet set;
  std::string provenance;
  std::vector<std::string> flags;
  std::optional<ExponentSet> alt;  // second reading of a damaged entry
};

/// Parses the table file format. Throws ParseError naming the line.
std::vector<TableEntry> parse_table_file(const std::string& text);

/// The raw embedded lines (E6/E7/E8 lines are the sub-tables S_6/S_7/S_8).
const std::vector<TableEntry>& embedded_table_lines();

struct STable {
  LieType type;
  std::map<std::pair<Node, Node>, TableEntry> entries;
};

/// Closed-form families for the classical types, all ordered pairs. Pairs
/// not printed are completed by symmetry and flagged "completed-by-symmetry".
TableEntry classical_entry(LieType t, Node i1, Node i2);
ExponentSet classical_table(LieType t, Node i1, Node i2);

/// The tabulated S(i1, i2): closed forms for A-D, the union of the embedded
/// sub-tables for E7/E8, the embedded line otherwise. Throws EntryMissing
/// when the pair is not tabulated (exceptional pairs with i1 > i2).
TableEntry paper_entry(LieType t, Node i1, Node i2);
ExponentSet table_lookup(LieType t, Node i1, Node i2);

/// Every tabulated entry for t.
STable paper_table(LieType t);

/// Adjudicated entries: the pinned set must equal the computed one exactly.
struct AllowlistEntry {
  ExponentSet pinned;
  std::string reason;
};
using AllowlistKey = std::tuple<LieType, Node, Node>;
using Allowlist = std::map<AllowlistKey, AllowlistEntry>;

/// Lines "TYPE i1 i2 : k1 k2 ...  # reason". Throws ParseError.
Allowlist parse_allowlist(const std::string& text);
const Allowlist& embedded_allowlist();

enum class DiffStatus { Match, Adjudicated, Mismatch };
std::string to_string(DiffStatus s);

struct DiffEntry {
  Node i1 = 0;
  Node i2 = 0;
  ExponentSet computed;
  ExponentSet tabulated;
  std::optional<ExponentSet> alt;
  bool matches_alt = false;
  std::vector<std::string> flags;
  std::string provenance;
  DiffStatus status = DiffStatus::Match;
  std::string note;
};

struct DiffReport {
  LieType type;
  std::vector<DiffEntry> entries;  // one per tabulated entry, sorted by pair
  int matches = 0;
  int adjudicated = 0;
  int mismatches = 0;
  int tabulated = 0;
  int computed_pairs = 0;
  bool ok() const { return mismatches == 0; }
};

/// Entrywise comparison over the tabulated pairs. A differing entry counts
/// as adjudicated only when the allowlist pins exactly the computed set.
DiffReport diff_tables(const STable& computed, const STable& paper, const Allowlist& allowlist);

/// Table computation over every ordered pair: s_set(t, i1, i2) for the
/// classical types, i1 <= i2 for the exceptional ones.
std::vector<std::pair<Node, Node>> table_pairs(LieType t);
STable compute_table_serial(LieType t, BraidRule rule = BraidRule::Symmetrized);
STable compute_table_parallel(LieType t, BraidRule rule = BraidRule::Symmetrized);

/// Root form against the exhaustive check_cyclic sweep for every node pair
/// and m1, m2 <= max_m, over the window 4 max(d) (m1 + m2 + rank).
struct OracleCase {
  Node i1 = 0;
  int m1 = 1;
  Node i2 = 0;
  int m2 = 1;
  ExponentSet root_form;
  ExponentSet sweep;
  std::int64_t window = 0;
  bool agree() const { return root_form == sweep; }
};
std::vector<OracleCase> oracle_sweep_serial(LieType t, int max_m);
std::vector<OracleCase> oracle_sweep_parallel(LieType t, int max_m);

}  // namespace qcyc
