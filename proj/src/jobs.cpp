#include "qcyc/jobs.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "qcyc/json_schema.hpp"

namespace qcyc {

namespace {

using nlohmann::json;

std::string ptr(const std::string& base, std::size_t i) { return base + "/" + std::to_string(i); }

int param_id(const JobSpec& job, const json& v, const std::string& where) {
  const std::string name = v.get<std::string>();
  if (!job.env.contains(name)) throw JobError(where, "unknown parameter \"" + name + "\"");
  return job.env.id(name);
}

Node node_of(const CartanData& cd, const json& v, const std::string& where) {
  const long long n = v.get<long long>();
  if (n < 1 || n > cd.rank()) {
    throw JobError(where, "node " + std::to_string(n) + " is outside 1.." + std::to_string(cd.rank()));
  }
  return static_cast<Node>(n);
}

WeylWord read_word_file(const std::string& file, const std::string& base_dir) {
  std::filesystem::path p(file);
  if (p.is_relative() && !base_dir.empty()) p = std::filesystem::path(base_dir) / p;
  std::ifstream in(p);
  if (!in) throw JobError("/options/word_file", "cannot read word file " + p.string());
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return WeylWord::parse(ss.str());
  } catch (const Error& e) {
    throw JobError("/options/word_file", e.what());
  }
}

}  // namespace

JobSpec parse_job(const json& doc, const std::string& base_dir) {
  const auto errs = validate_schema(job_schema(), doc);
  if (!errs.empty()) throw JobError(errs.front().pointer, errs.front().message);

  JobSpec job;
  const json& alg = doc["algebra"];
  try {
    job.type = LieType(static_cast<Family>(alg["family"].get<std::string>()[0]), alg["rank"].get<int>());
  } catch (const Error& e) {
    throw JobError("/algebra/rank", e.what());
  }
  const CartanData cd = cartan_data(job.type);

  const json params = doc.value("parameters", json::array());
  for (std::size_t i = 0; i < params.size(); ++i) {
    const std::string id = params[i]["id"].get<std::string>();
    if (job.env.contains(id)) throw JobError(ptr("/parameters", i) + "/id", "duplicate parameter \"" + id + "\"");
    job.env.add(id);
  }
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (!params[i].contains("relation")) continue;
    const json& rel = params[i]["relation"];
    const std::string where = ptr("/parameters", i) + "/relation";
    const int base = param_id(job, rel["base"], where + "/base");
    try {
      job.env.relate(job.env.id(params[i]["id"].get<std::string>()), base, rel["exponent"].get<long long>());
    } catch (const InconsistentRelations& e) {
      throw JobError(where, e.what());
    }
  }

  const json opts = doc.value("options", json::object());
  job.options.strict_pairs = opts.value("strict_pairs", false);
  job.options.spacing = parse_string_spacing(opts.value("string_spacing", std::string("qi")));
  job.options.rule = parse_braid_rule(opts.value("braid_rule", std::string("symmetrized")));
  if (opts.contains("word") && opts.contains("word_file")) {
    throw JobError("/options", "give either word or word_file, not both");
  }
  if (opts.contains("word")) {
    job.word = WeylWord{opts["word"].get<std::vector<Node>>()};
    job.word_source = "job";
  } else if (opts.contains("word_file")) {
    job.word = read_word_file(opts["word_file"].get<std::string>(), base_dir);
    job.word_source = "word_file";
  }

  const json& factors = doc["factors"];
  for (std::size_t f = 0; f < factors.size(); ++f) {
    DrinfeldTuple tuple(cd.rank());
    for (std::size_t k = 0; k < factors[f].size(); ++k) {
      const json& item = factors[f][k];
      const std::string where = ptr(ptr("/factors", f), k);
      const Node node = node_of(cd, item["node"], where + "/node");
      const int p = param_id(job, item["param"], where + "/param");
      if (item.contains("length")) {
        const QString s{node, item["length"].get<int>(), p, item.value("shift", 0LL)};
        tuple.at(node).add(string_roots(cd, s, job.options.spacing));
      } else {
        tuple.at(node).add(p, item["exp"].get<long long>(), item.value("mult", 1LL));
      }
    }
    job.factors.push_back(std::move(tuple));
  }
  if (job.factors.empty()) throw JobError("/factors", "at least one factor is required");

  if (job.word) {
    require_letters(cd, *job.word);
    if (job.word->size() != static_cast<std::size_t>(positive_root_count(job.type)) ||
        !is_reduced(cd, *job.word)) {
      throw WordInvalid("[" + job.word->to_string() + "] is not a reduced word for w_0 of " +
                        job.type.name());
    }
  }
  return job;
}

nlohmann::ordered_json make_report(const JobSpec& job, const CyclicityVerdict& verdict,
                                   std::optional<double> timing_ms) {
  nlohmann::ordered_json r;
  r["schema"] = "qcyc-report/1";
  r["algebra"] = job.type.name();
  r["verdict"] = verdict.holds ? "holds" : "violated";
  r["holds"] = verdict.holds;
  r["witnesses"] = nlohmann::ordered_json::array();
  for (const Witness& w : verdict.witnesses) {
    nlohmann::ordered_json x;
    x["step"] = w.step;
    x["node"] = w.node;
    x["pair"] = {w.left, w.right};
    x["root"] = {{"param", job.env.name(w.root.param)}, {"exp", w.root.exp}};
    x["string"] = {{"node", w.string.node},
                   {"length", w.string.length},
                   {"param", job.env.name(w.string.param)},
                   {"center", w.string.center}};
    x["ratio_exponent"] = w.root.exp - w.string.center;
    r["witnesses"].push_back(std::move(x));
  }
  r["conventions"] = {
      {"pairs", job.options.strict_pairs ? "m<=l" : "m<l"},
      {"string_spacing", to_string(job.options.spacing)},
      {"braid_rule", to_string(job.options.rule)},
      {"ratio", "witness ratio_exponent k means root / string center = q^k; a violation has "
                "k = -unit (1 + length) with unit d_i for qi spacing and 1 for q spacing"},
      {"exponents", "plain-q integers relative to the representative parameter of each class"},
      {"word_source", job.word_source}};
  const WeylWord w = job.word.value_or(longest_word(job.type));
  r["word"] = w.letters;
  if (timing_ms) r["timing_ms"] = *timing_ms;
  return r;
}

}  // namespace qcyc
