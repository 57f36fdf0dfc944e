// One line per acceptance criterion: PASS/FAIL, a short summary and the
// wall time. Exit status is non-zero if any criterion fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "closed_forms.hpp"
#include "qcyc/cyclicity.hpp"
#include "qcyc/paper_tables.hpp"
#include "qcyc/root_system.hpp"
#include "qcyc/selftest.hpp"

using namespace qcyc;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream summary;
  std::vector<std::string> details;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int failures = 0;

void criterion(int id, const std::string& title, double budget_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  body(o);
  const double sec = seconds_since(t0);
  if (budget_s > 0 && sec > budget_s) {
    o.ok = false;
    o.summary << " [over the " << budget_s << " s budget]";
  }
  if (!o.ok) ++failures;
  std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << id << " (" << title << "): " << o.summary.str()
            << " [" << std::fixed << std::setprecision(2) << sec << " s]\n";
  for (const auto& d : o.details) std::cout << "    " << d << "\n";
}

void exceptional_tables(Outcome& o) {
  const std::vector<std::pair<const char*, int>> expected{{"E6", 21}, {"E7", 28}, {"E8", 36}, {"F4", 10}, {"G2", 3}};
  for (const auto& [name, pairs] : expected) {
    const LieType t = LieType::parse(name);
    const DiffReport r = diff_tables(compute_table_parallel(t), paper_table(t), embedded_allowlist());
    o.ok = o.ok && r.ok() && r.tabulated == pairs;
    o.summary << name << " " << r.matches << "/" << r.tabulated << " match" << " +" << r.adjudicated
              << " adjudicated" << (r.mismatches ? " " + std::to_string(r.mismatches) + " MISMATCHED" : "")
              << "; ";
    for (const DiffEntry& d : r.entries) {
      if (d.status == DiffStatus::Match) continue;
      std::string line = std::string(name) + " (" + std::to_string(d.i1) + "," + std::to_string(d.i2) + ") " +
                         to_string(d.status) + ": computed " + to_string(d.computed) + ", printed " +
                         to_string(d.tabulated);
      if (d.alt) line += ", alternative " + to_string(*d.alt);
      o.details.push_back(line);
    }
  }
}

void classical_tables(Outcome& o) {
  int pairs = 0, bad = 0;
  for (const LieType& t : all_types(6, false)) {
    for (Node i1 = 1; i1 <= t.rank; ++i1) {
      for (Node i2 = 1; i2 <= t.rank; ++i2) {
        ++pairs;
        if (s_set(t, i1, i2) != classical_table(t, i1, i2)) {
          ++bad;
          o.details.push_back(t.name() + " (" + std::to_string(i1) + "," + std::to_string(i2) + ")");
        }
      }
    }
  }
  o.ok = bad == 0;
  o.summary << pairs - bad << "/" << pairs << " ordered pairs of A-D, n <= 6";
}

void sl2_oracle(Outcome& o) {
  const LieType a1(Family::A, 1);
  int cases = 0;
  for (int m1 = 1; m1 <= 5; ++m1) {
    for (int m2 = 1; m2 <= 5; ++m2) {
      ExponentSet closed, irreducible;
      for (int p = 0; p < m1; ++p) closed.insert(m1 + m2 - 2 * p);
      for (int p = 0; p < std::min(m1, m2); ++p) irreducible.insert(m1 + m2 - 2 * p);
      const ExponentSet f = forbidden_ratios(a1, 1, m1, 1, m2);
      const ExponentSet sweep = forbidden_ratios_sweep(a1, 1, m1, 1, m2, 4 * (m1 + m2 + 1));
      ExponentSet sub;
      for (auto k : f) {
        if (irreducible.count(k)) sub.insert(k);
      }
      ++cases;
      if (f != closed || sweep != closed || sub != irreducible) {
        o.ok = false;
        o.details.push_back("m1=" + std::to_string(m1) + " m2=" + std::to_string(m2) + ": " + to_string(f));
      }
    }
  }
  o.summary << cases << " (m1, m2) with m <= 5 against the closed form, the sweep and the p < min family";
}

void oracle_equivalence(Outcome& o) {
  std::vector<LieType> types = all_types(4, false);
  types.push_back(LieType(Family::G, 2));
  types.push_back(LieType(Family::F, 4));
  int cases = 0, bad = 0;
  for (const LieType& t : types) {
    for (const OracleCase& c : oracle_sweep_parallel(t, 2)) {
      ++cases;
      if (!c.agree()) {
        ++bad;
        o.details.push_back(t.name() + " (" + std::to_string(c.i1) + "," + std::to_string(c.m1) + "," +
                            std::to_string(c.i2) + "," + std::to_string(c.m2) + "): root form " +
                            to_string(c.root_form) + ", sweep " + to_string(c.sweep));
      }
    }
  }
  o.ok = bad == 0 && cases > 0;
  o.summary << cases - bad << "/" << cases << " cases over " << types.size() << " types, m1, m2 <= 2";
}

void property_suites(Outcome& o) {
  const SuiteOptions opts;
  const std::vector<SuiteResult> rs{suite_braid_relations(opts), suite_matsumoto(), suite_positivity(),
                                    suite_matrix_agreement(), suite_decomposition_uniqueness()};
  for (const SuiteResult& r : rs) {
    o.ok = o.ok && r.ok();
    o.summary << r.name << " " << r.cases - r.failures << "/" << r.cases << "; ";
    if (!r.first_failure.empty()) o.details.push_back(r.name + ": " + r.first_failure);
  }
}

void closed_form_regression(Outcome& o) {
  int a_bad = 0, b_bad = 0;
  for (int n = 1; n <= 6; ++n) a_bad += static_cast<int>(closed_forms::step_discrepancies(Family::A, n).size());
  for (int n = 2; n <= 5; ++n) b_bad += static_cast<int>(closed_forms::step_discrepancies(Family::B, n).size());
  int printed_rule = 0, prefix = 0;
  for (int n = 2; n <= 5; ++n) {
    printed_rule += static_cast<int>(closed_forms::step_discrepancies(Family::B, n, BraidRule::AsPrinted).size());
    for (const auto& s : closed_forms::prefix_discrepancies(Family::B, n)) {
      ++prefix;
      o.details.push_back("reported: " + s);
    }
  }
  o.ok = a_bad == 0 && b_bad == 0;
  o.summary << "A_n (n <= 6) " << a_bad << " and B_n (n <= 5) " << b_bad
            << " differing steps; reported: printed shift rule differs at " << printed_rule
            << " B steps, displayed B prefix formula at " << prefix << " components";
}

void reduced_words(Outcome& o) {
  int n = 0;
  for (const LieType& t : all_types(10, true)) {
    const WeylWord w = longest_word(t);
    const bool good = is_reduced(cartan_data(t), w) && w.size() == static_cast<std::size_t>(positive_root_count(t));
    ++n;
    if (!good) {
      o.ok = false;
      o.details.push_back(t.name());
    }
  }
  o.summary << n << " types of rank <= 10 and E6-E8, F4, G2; E8 length "
            << longest_word(LieType(Family::E, 8)).size() << ", F4 length "
            << longest_word(LieType(Family::F, 4)).size();
}

}  // namespace

int main() {
  criterion(1, "exceptional tables", 60, exceptional_tables);
  criterion(2, "classical closed forms", 30, classical_tables);
  criterion(3, "sl2 oracle", 0, sl2_oracle);
  criterion(4, "root form vs exhaustive sweep", 0, oracle_equivalence);
  criterion(5, "property suites", 0, property_suites);
  criterion(6, "gamma-word closed forms", 0, closed_form_regression);
  criterion(7, "longest words", 5, reduced_words);
  std::cout << (7 - failures) << "/7 criteria passed\n";
  return failures == 0 ? 0 : 1;
}
