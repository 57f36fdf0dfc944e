#include "qcyc/paper_tables.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include <boost/algorithm/string.hpp>

#include "qcyc/embedded_data.hpp"
#include "qcyc/errors.hpp"

namespace qcyc {

namespace {

ExponentSet parse_exponents(const std::string& text, int line_no) {
  ExponentSet out;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    try {
      std::size_t used = 0;
      const long long k = std::stoll(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      out.insert(k);
    } catch (const std::exception&) {
      throw ParseError("line " + std::to_string(line_no) + ": bad exponent '" + tok + "'");
    }
  }
  return out;
}

struct LineHead {
  LieType type;
  Node i1 = 0;
  Node i2 = 0;
  ExponentSet set;
  std::string comment;
};

// "TYPE i1 i2 : k ...  # comment"; nullopt for blank, comment and version lines.
std::optional<LineHead> parse_head(std::string line, int line_no) {
  boost::algorithm::trim(line);
  if (line.empty() || line[0] == '#' || boost::algorithm::starts_with(line, "version")) {
    return std::nullopt;
  }
  LineHead h;
  const auto hash = line.find('#');
  if (hash != std::string::npos) {
    h.comment = boost::algorithm::trim_copy(line.substr(hash + 1));
    line = line.substr(0, hash);
  }
  const auto colon = line.find(':');
  if (colon == std::string::npos) {
    throw ParseError("line " + std::to_string(line_no) + ": missing ':'");
  }
  std::istringstream is(line.substr(0, colon));
  std::string type;
  if (!(is >> type >> h.i1 >> h.i2)) {
    throw ParseError("line " + std::to_string(line_no) + ": expected 'TYPE i1 i2 :'");
  }
  try {
    h.type = LieType::parse(type);
  } catch (const Error& e) {
    throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
  }
  const CartanData cd = cartan_data(h.type);
  if (!cd.valid_node(h.i1) || !cd.valid_node(h.i2)) {
    throw ParseError("line " + std::to_string(line_no) + ": node out of range for " + type);
  }
  h.set = parse_exponents(line.substr(colon + 1), line_no);
  return h;
}

TableEntry must_find(const std::vector<TableEntry>& lines, LieType t, Node i1, Node i2) {
  for (const auto& e : lines) {
    if (e.type == t && e.i1 == i1 && e.i2 == i2) return e;
  }
  throw EntryMissing(t.name() + " S(" + std::to_string(i1) + "," + std::to_string(i2) +
                     ") is not tabulated");
}

void append_unique(std::vector<std::string>& dst, const std::vector<std::string>& src) {
  for (const auto& s : src) {
    if (std::find(dst.begin(), dst.end(), s) == dst.end()) dst.push_back(s);
  }
}

ExponentSet range_set(int lo, int hi, const std::function<void(int, ExponentSet&)>& add) {
  ExponentSet out;
  for (int k = lo; k <= hi; ++k) add(k, out);
  return out;
}

}  // namespace

std::vector<TableEntry> parse_table_file(const std::string& text) {
  std::vector<TableEntry> out;
  std::istringstream is(text);
  std::string line;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    auto h = parse_head(line, line_no);
    if (!h) continue;
    TableEntry e{h->type, h->i1, h->i2, h->set, "", {}, std::nullopt};
    std::vector<std::string> parts;
    boost::algorithm::split(parts, h->comment, boost::is_any_of(";"));
    for (std::size_t k = 0; k < parts.size(); ++k) {
      const std::string p = boost::algorithm::trim_copy(parts[k]);
      if (k == 0) {
        e.provenance = p;
      } else if (boost::algorithm::starts_with(p, "alt=")) {
        e.alt = parse_exponents(p.substr(4), line_no);
      } else if (!p.empty()) {
        e.flags.push_back(p);
      }
    }
    for (const auto& prev : out) {
      if (prev.type == e.type && prev.i1 == e.i1 && prev.i2 == e.i2) {
        throw ParseError("line " + std::to_string(line_no) + ": duplicate entry");
      }
    }
    out.push_back(std::move(e));
  }
  return out;
}

const std::vector<TableEntry>& embedded_table_lines() {
  static const std::vector<TableEntry> lines = parse_table_file(embedded::s_tables);
  return lines;
}

TableEntry classical_entry(LieType t, Node i1, Node i2) {
  if (!t.classical()) throw std::invalid_argument(t.name() + " has no closed-form table");
  const CartanData cd = cartan_data(t);
  cd.require_node(i1);
  cd.require_node(i2);
  const int n = t.rank;
  const int i = i1;
  const int j = i2;
  const int hi = std::max(i, j);
  const int lo = std::min(i, j);
  TableEntry e{t, i1, i2, {}, "", {}, std::nullopt};
  switch (t.family) {
    case Family::A:
      e.provenance = "closed form A_n: {2k-i1-i2 : i1, i2 <= k <= n, i1 + i2 >= k + 1}";
      e.set = range_set(hi, n, [&](int k, ExponentSet& s) {
        if (i + j >= k + 1) s.insert(2 * k - i - j);
      });
      break;
    case Family::B:
      if (i == 1 && j == 1) {
        e.provenance = "closed form B_n S(1,1): {4k-4 : 1 <= k <= n}";
        e.set = range_set(1, n, [&](int k, ExponentSet& s) { s.insert(4 * k - 4); });
      } else if (i == 1) {
        e.provenance = "closed form B_n S(1,i2): {4k-2i2-3}";
        e.flags.push_back("k-range i2 <= k <= n supplied");
        e.set = range_set(j, n, [&](int k, ExponentSet& s) { s.insert(4 * k - 2 * j - 3); });
      } else if (j == 1) {
        e.provenance = "closed form B_n S(i1,1): {4k-2i1-3, 4k-2i1-1}";
        e.flags.push_back("k-range i1 <= k <= n supplied");
        e.set = range_set(i, n, [&](int k, ExponentSet& s) {
          s.insert(4 * k - 2 * i - 3);
          s.insert(4 * k - 2 * i - 1);
        });
      } else {
        e.provenance = "closed form B_n S(i1,i2): {4k-2i1-2i2, 4k-2max+2min-6 : max <= k <= n}";
        e.set = range_set(hi, n, [&](int k, ExponentSet& s) {
          s.insert(4 * k - 2 * i - 2 * j);
          s.insert(4 * k - 2 * hi + 2 * lo - 6);
        });
      }
      break;
    case Family::C:
      if (j == 1) {
        e.provenance = "closed form C_n S(i1,1): {2k-1-i1 : i1 <= k <= n}";
        if (i == 1) e.flags.push_back("S(1,1) taken from the S(i1,1) family");
        e.set = range_set(i, n, [&](int k, ExponentSet& s) { s.insert(2 * k - 1 - i); });
      } else if (i == 1) {
        e.provenance = "closed form C_n S(1,i2): {2k-1-i2, 2k+1-i2 : i2 <= k <= n}";
        e.set = range_set(j, n, [&](int k, ExponentSet& s) {
          s.insert(2 * k - 1 - j);
          s.insert(2 * k + 1 - j);
        });
      } else {
        e.provenance = "closed form C_n S(i1,i2): {2k-i1-i2, 2k-max+min : max <= k <= n}";
        e.set = range_set(hi, n, [&](int k, ExponentSet& s) {
          s.insert(2 * k - i - j);
          s.insert(2 * k - hi + lo);
        });
      }
      break;
    case Family::D: {
      const bool si = i <= 2;
      const bool sj = j <= 2;
      if (si && sj && i == j) {
        e.provenance = "closed form D_n S(1,1) = S(2,2): {2k-4 : 1 <= k <= n, k even}";
        e.set = range_set(1, n, [&](int k, ExponentSet& s) {
          if (k % 2 == 0) s.insert(2 * k - 4);
        });
      } else if (si && sj) {
        e.provenance = "closed form D_n S(1,2): {2k-4 : k odd}";
        e.flags.push_back("k-range 3 <= k <= n (printed 1 <= k gives q^-2)");
        if (i == 2) e.flags.push_back("completed-by-symmetry");
        e.set = range_set(3, n, [&](int k, ExponentSet& s) {
          if (k % 2 == 1) s.insert(2 * k - 4);
        });
      } else if (si || sj) {
        const int big = si ? j : i;
        e.provenance = "closed form D_n S(i1,1) = S(i1,2): {2k-i1-2 : i1 <= k <= n}";
        if (si) e.flags.push_back("completed-by-symmetry");
        e.set = range_set(big, n, [&](int k, ExponentSet& s) { s.insert(2 * k - big - 2); });
      } else {
        e.provenance = "closed form D_n S(i1,i2): {2k-i1-i2, 2k-max+min-4 : max <= k <= n}";
        e.set = range_set(hi, n, [&](int k, ExponentSet& s) {
          s.insert(2 * k - i - j);
          s.insert(2 * k - hi + lo - 4);
        });
      }
      break;
    }
    default:
      break;
  }
  return e;
}

ExponentSet classical_table(LieType t, Node i1, Node i2) { return classical_entry(t, i1, i2).set; }

TableEntry paper_entry(LieType t, Node i1, Node i2) {
  const CartanData cd = cartan_data(t);
  cd.require_node(i1);
  cd.require_node(i2);
  if (t.classical()) return classical_entry(t, i1, i2);
  if (i1 > i2) {
    throw EntryMissing(t.name() + " S(" + std::to_string(i1) + "," + std::to_string(i2) +
                       ") is not tabulated (only i1 <= i2)");
  }
  const auto& lines = embedded_table_lines();
  if (t.family != Family::E) return must_find(lines, t, i1, i2);

  // E7 and E8: union with the lower sub-tables where their nodes exist.
  TableEntry out = must_find(lines, t, i1, i2);
  bool any_alt = out.alt.has_value();
  ExponentSet alt = out.alt.value_or(out.set);
  std::string prov = out.provenance;
  for (int r = t.rank - 1; r >= 6; --r) {
    if (i2 > r) continue;
    const TableEntry sub = must_find(lines, LieType(Family::E, r), i1, i2);
    out.set.insert(sub.set.begin(), sub.set.end());
    const ExponentSet sub_alt = sub.alt.value_or(sub.set);
    alt.insert(sub_alt.begin(), sub_alt.end());
    any_alt = any_alt || sub.alt.has_value();
    append_unique(out.flags, sub.flags);
    prov = sub.provenance + " u " + prov;
  }
  out.provenance = prov;
  out.alt = any_alt ? std::optional<ExponentSet>(alt) : std::nullopt;
  return out;
}

ExponentSet table_lookup(LieType t, Node i1, Node i2) { return paper_entry(t, i1, i2).set; }

STable paper_table(LieType t) {
  STable out{t, {}};
  const int n = t.rank;
  for (Node i = 1; i <= n; ++i) {
    for (Node j = t.classical() ? 1 : i; j <= n; ++j) out.entries[{i, j}] = paper_entry(t, i, j);
  }
  return out;
}

Allowlist parse_allowlist(const std::string& text) {
  Allowlist out;
  std::istringstream is(text);
  std::string line;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    auto h = parse_head(line, line_no);
    if (!h) continue;
    const AllowlistKey key{h->type, h->i1, h->i2};
    if (out.count(key)) throw ParseError("line " + std::to_string(line_no) + ": duplicate entry");
    out[key] = {h->set, h->comment};
  }
  return out;
}

const Allowlist& embedded_allowlist() {
  static const Allowlist list = parse_allowlist(embedded::errata);
  return list;
}

std::string to_string(DiffStatus s) {
  switch (s) {
    case DiffStatus::Match:
      return "match";
    case DiffStatus::Adjudicated:
      return "adjudicated";
    case DiffStatus::Mismatch:
      return "mismatch";
  }
  return "mismatch";
}

DiffReport diff_tables(const STable& computed, const STable& paper, const Allowlist& allowlist) {
  if (!(computed.type == paper.type)) throw std::invalid_argument("tables of different types");
  DiffReport rep;
  rep.type = paper.type;
  rep.computed_pairs = static_cast<int>(computed.entries.size());
  for (const auto& [pair, tab] : paper.entries) {
    DiffEntry d;
    d.i1 = pair.first;
    d.i2 = pair.second;
    d.tabulated = tab.set;
    d.alt = tab.alt;
    d.flags = tab.flags;
    d.provenance = tab.provenance;
    ++rep.tabulated;
    auto it = computed.entries.find(pair);
    if (it == computed.entries.end()) {
      d.status = DiffStatus::Mismatch;
      d.note = "no computed entry";
      ++rep.mismatches;
      rep.entries.push_back(std::move(d));
      continue;
    }
    d.computed = it->second.set;
    d.matches_alt = d.alt && *d.alt == d.computed;
    auto allow = allowlist.find({paper.type, pair.first, pair.second});
    if (d.computed == d.tabulated) {
      d.status = DiffStatus::Match;
      ++rep.matches;
      if (allow != allowlist.end()) d.note = "allowlisted but matches";
    } else if (allow != allowlist.end() && allow->second.pinned == d.computed) {
      d.status = DiffStatus::Adjudicated;
      d.note = allow->second.reason;
      ++rep.adjudicated;
    } else {
      d.status = DiffStatus::Mismatch;
      d.note = allow != allowlist.end() ? "allowlist pins " + to_string(allow->second.pinned)
                                        : "not allowlisted";
      ++rep.mismatches;
    }
    rep.entries.push_back(std::move(d));
  }
  return rep;
}

}  // namespace qcyc
