#include <omp.h>

#include "qcyc/paper_tables.hpp"

namespace qcyc {

std::vector<std::pair<Node, Node>> table_pairs(LieType t) {
  std::vector<std::pair<Node, Node>> out;
  for (Node i = 1; i <= t.rank; ++i) {
    for (Node j = t.classical() ? 1 : i; j <= t.rank; ++j) out.emplace_back(i, j);
  }
  return out;
}

namespace {

TableEntry computed_entry(LieType t, Node i, Node j, BraidRule rule) {
  return {t, i, j, s_set(t, i, j, rule), "computed", {}, std::nullopt};
}

STable assemble(LieType t, const std::vector<std::pair<Node, Node>>& pairs,
                std::vector<TableEntry>& rows) {
  STable out{t, {}};
  for (std::size_t k = 0; k < pairs.size(); ++k) out.entries[pairs[k]] = std::move(rows[k]);
  return out;
}

std::vector<OracleCase> oracle_cases(LieType t, int max_m) {
  const CartanData cd = cartan_data(t);
  std::vector<OracleCase> cases;
  for (Node i1 = 1; i1 <= t.rank; ++i1) {
    for (Node i2 = 1; i2 <= t.rank; ++i2) {
      for (int m1 = 1; m1 <= max_m; ++m1) {
        for (int m2 = 1; m2 <= max_m; ++m2) {
          OracleCase c;
          c.i1 = i1;
          c.m1 = m1;
          c.i2 = i2;
          c.m2 = m2;
          c.window = 4LL * cd.max_d() * (m1 + m2 + t.rank);
          cases.push_back(c);
        }
      }
    }
  }
  return cases;
}

void run_case(LieType t, OracleCase& c) {
  c.root_form = forbidden_ratios(t, c.i1, c.m1, c.i2, c.m2);
  c.sweep = forbidden_ratios_sweep(t, c.i1, c.m1, c.i2, c.m2, c.window);
}

}  // namespace

STable compute_table_serial(LieType t, BraidRule rule) {
  const auto pairs = table_pairs(t);
  std::vector<TableEntry> rows(pairs.size());
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    rows[k] = computed_entry(t, pairs[k].first, pairs[k].second, rule);
  }
  return assemble(t, pairs, rows);
}

STable compute_table_parallel(LieType t, BraidRule rule) {
  const auto pairs = table_pairs(t);
  std::vector<TableEntry> rows(pairs.size());
  const auto n = static_cast<long>(pairs.size());
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < n; ++k) {
    rows[k] = computed_entry(t, pairs[k].first, pairs[k].second, rule);
  }
  return assemble(t, pairs, rows);
}

std::vector<OracleCase> oracle_sweep_serial(LieType t, int max_m) {
  auto cases = oracle_cases(t, max_m);
  for (auto& c : cases) run_case(t, c);
  return cases;
}

std::vector<OracleCase> oracle_sweep_parallel(LieType t, int max_m) {
  auto cases = oracle_cases(t, max_m);
  const auto n = static_cast<long>(cases.size());
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < n; ++k) run_case(t, cases[k]);
  return cases;
}

}  // namespace qcyc
