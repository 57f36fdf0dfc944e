#pragma once

// JSON job specifications for check_cyclic and the reports they produce.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qcyc/cyclicity.hpp"
#include "qcyc/errors.hpp"

namespace qcyc {

/// An input error located at a JSON pointer.
class JobError : public ParseError {
 public:
  JobError(std::string pointer, const std::string& what)
      : ParseError(what), pointer_(std::move(pointer)) {}
  const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

struct JobSpec {
  LieType type;
  ParamEnv env;
  std::vector<DrinfeldTuple> factors;
  std::optional<WeylWord> word;
  std::string word_source = "builtin";  // builtin | job | word_file
  CheckOptions options;
};

/// Validates against the job schema, then resolves parameters, nodes and the
/// word. `base_dir` anchors a relative word_file. Throws JobError, or
/// WordInvalid for a word that is not a reduced word of w_0.
JobSpec parse_job(const nlohmann::json& doc, const std::string& base_dir = "");

/// Report with fields in a fixed order; timing only when given.
nlohmann::ordered_json make_report(const JobSpec& job, const CyclicityVerdict& verdict,
                                   std::optional<double> timing_ms = std::nullopt);

}  // namespace qcyc
