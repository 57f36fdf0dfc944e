#pragma once

// A small JSON Schema subset: type, properties, required,
// additionalProperties (false or a schema), items, enum, minimum, oneOf.

#include <string>
#include <vector>

#include "json.hpp"

namespace qcyc {

struct SchemaError {
  std::string pointer;  // JSON pointer of the offending value, "" for the root
  std::string message;
};

/// Empty when `doc` conforms to `schema`.
std::vector<SchemaError> validate_schema(const nlohmann::json& schema, const nlohmann::json& doc);

const nlohmann::json& job_schema();
const nlohmann::json& report_schema();

}  // namespace qcyc
