#pragma once

// Property suites shared by `qcyc selftest` and the acceptance run.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace qcyc {

struct SuiteResult {
  std::string name;
  long cases = 0;
  long failures = 0;
  std::string first_failure;
  bool ok() const { return failures == 0 && cases > 0; }
};

struct SuiteOptions {
  std::uint64_t seed = 20240601;
  int random_cases = 100;
};

SuiteResult suite_longest_words();
SuiteResult suite_reflection_involution(const SuiteOptions& o = {});
SuiteResult suite_rank2_orders();
SuiteResult suite_reduced_words_agree();
SuiteResult suite_braid_relations(const SuiteOptions& o = {});
SuiteResult suite_linearity(const SuiteOptions& o = {});
SuiteResult suite_matsumoto();
SuiteResult suite_positivity();
SuiteResult suite_matrix_agreement();
SuiteResult suite_decomposition_uniqueness();
SuiteResult suite_decomposition_round_trip(const SuiteOptions& o = {});
SuiteResult suite_general_position_forms(const SuiteOptions& o = {});
SuiteResult suite_kashiwara_implies_cyclic();

struct NamedSuite {
  std::string name;
  std::function<SuiteResult(const SuiteOptions&)> run;
};

/// Every suite, in a fixed order.
std::vector<NamedSuite> all_suites();

}  // namespace qcyc
