#include "qcyc/json_schema.hpp"

#include "qcyc/embedded_data.hpp"

namespace qcyc {

namespace {

using nlohmann::json;

std::string escape_token(const std::string& k) {
  std::string out;
  for (char c : k) {
    if (c == '~') out += "~0";
    else if (c == '/') out += "~1";
    else out += c;
  }
  return out;
}

bool has_type(const json& v, const std::string& t) {
  if (t == "object") return v.is_object();
  if (t == "array") return v.is_array();
  if (t == "string") return v.is_string();
  if (t == "boolean") return v.is_boolean();
  if (t == "integer") return v.is_number_integer();
  if (t == "number") return v.is_number();
  if (t == "null") return v.is_null();
  return false;
}

void check(const json& s, const json& v, const std::string& ptr, std::vector<SchemaError>& out) {
  if (s.contains("type")) {
    const json& t = s["type"];
    bool ok = false;
    if (t.is_string()) {
      ok = has_type(v, t.get<std::string>());
    } else {
      for (const auto& x : t) ok = ok || has_type(v, x.get<std::string>());
    }
    if (!ok) {
      out.push_back({ptr, "expected type " + t.dump() + ", got " + std::string(v.type_name())});
      return;
    }
  }
  if (s.contains("enum")) {
    bool found = false;
    for (const auto& x : s["enum"]) found = found || x == v;
    if (!found) out.push_back({ptr, "value " + v.dump() + " not in " + s["enum"].dump()});
  }
  if (s.contains("minimum") && v.is_number()) {
    if (v.get<double>() < s["minimum"].get<double>()) {
      out.push_back({ptr, "value " + v.dump() + " is below the minimum " + s["minimum"].dump()});
    }
  }
  if (v.is_object()) {
    const json props = s.value("properties", json::object());
    if (s.contains("required")) {
      for (const auto& r : s["required"]) {
        if (!v.contains(r.get<std::string>())) {
          out.push_back({ptr, "missing required field \"" + r.get<std::string>() + "\""});
        }
      }
    }
    for (const auto& [k, x] : v.items()) {
      const std::string child = ptr + "/" + escape_token(k);
      if (props.contains(k)) {
        check(props[k], x, child, out);
      } else if (s.contains("additionalProperties")) {
        const json& ap = s["additionalProperties"];
        if (ap.is_boolean()) {
          if (!ap.get<bool>()) out.push_back({child, "unknown field \"" + k + "\""});
        } else {
          check(ap, x, child, out);
        }
      }
    }
  }
  if (v.is_array() && s.contains("items")) {
    for (std::size_t i = 0; i < v.size(); ++i) check(s["items"], v[i], ptr + "/" + std::to_string(i), out);
  }
  if (s.contains("oneOf")) {
    int matched = 0;
    std::vector<SchemaError> best;
    for (const auto& alt : s["oneOf"]) {
      std::vector<SchemaError> errs;
      check(alt, v, ptr, errs);
      if (errs.empty()) {
        ++matched;
      } else if (best.empty() || errs.size() < best.size()) {
        best = errs;
      }
    }
    if (matched == 0) {
      out.push_back({ptr, "matches none of the alternatives"});
      out.insert(out.end(), best.begin(), best.end());
    } else if (matched > 1) {
      out.push_back({ptr, "matches more than one alternative"});
    }
  }
}

}  // namespace

std::vector<SchemaError> validate_schema(const nlohmann::json& schema, const nlohmann::json& doc) {
  std::vector<SchemaError> out;
  check(schema, doc, "", out);
  return out;
}

const nlohmann::json& job_schema() {
  static const nlohmann::json s = nlohmann::json::parse(embedded::job_schema);
  return s;
}

const nlohmann::json& report_schema() {
  static const nlohmann::json s = nlohmann::json::parse(embedded::report_schema);
  return s;
}

}  // namespace qcyc
