#include "qcyc/qstrings.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "qcyc/errors.hpp"

namespace qcyc {

int ParamEnv::add(const std::string& name) {
  auto it = ids_.find(name);
  if (it != ids_.end()) return it->second;
  const int id = size();
  names_.push_back(name);
  ids_.emplace(name, id);
  parent_.push_back(id);
  offset_.push_back(0);
  inverse_.push_back(-1);
  return id;
}

int ParamEnv::id(const std::string& name) const {
  auto it = ids_.find(name);
  if (it == ids_.end()) throw UnknownParameter("unknown parameter '" + name + "'");
  return it->second;
}

std::pair<int, std::int64_t> ParamEnv::resolve(int p) const {
  if (p < 0 || p >= size()) throw UnknownParameter("parameter id " + std::to_string(p));
  const int up = parent_[p];
  if (up == p) return {p, 0};
  auto [root, k] = resolve(up);
  parent_[p] = root;
  offset_[p] += k;
  return {root, offset_[p]};
}

std::optional<std::int64_t> ParamEnv::ratio(int p, int p2) const {
  auto [r1, k1] = resolve(p);
  auto [r2, k2] = resolve(p2);
  if (r1 != r2) return std::nullopt;
  return k1 - k2;
}

void ParamEnv::relate(const std::string& p, const std::string& base, std::int64_t k) {
  relate(id(p), id(base), k);
}

void ParamEnv::relate(int p, int base, std::int64_t k) {
  auto [rp, op] = resolve(p);
  auto [rb, ob] = resolve(base);
  if (rp == rb) {
    if (op - ob != k) {
      throw InconsistentRelations(name(p) + " = q^" + std::to_string(k) + " " + name(base) +
                                  " contradicts the derived ratio q^" + std::to_string(op - ob));
    }
    return;
  }
  parent_[rp] = rb;
  offset_[rp] = k + ob - op;
  const int ip = inverse_[p];
  const int ib = inverse_[base];
  if (ip >= 0 && ib >= 0) relate(ip, ib, -k);
  // Keep the inverse classes aligned with the merged class.
  for (int x = 0; x < size(); ++x) {
    if (inverse_[x] < 0 || x == p) continue;
    auto r = ratio(x, p);
    if (r && ip >= 0 && !ratio(inverse_[x], ip)) relate(inverse_[x], ip, -*r);
  }
}

int ParamEnv::inverse(int p) {
  if (inverse_.at(static_cast<std::size_t>(p)) >= 0) return inverse_[p];
  const std::string n = name(p);
  const std::string inv_name =
      n.size() > 3 && n.compare(n.size() - 3, 3, "^-1") == 0 ? n.substr(0, n.size() - 3) : n + "^-1";
  const int q = add(inv_name);
  inverse_[p] = q;
  inverse_[q] = p;
  for (int x = 0; x < size(); ++x) {
    if (x == p || x == q || inverse_[x] < 0) continue;
    auto r = ratio(x, p);
    if (r) relate(inverse_[x], q, -*r);
  }
  return q;
}

void RootMultiset::add(int param, std::int64_t exp, std::int64_t mult) {
  if (mult == 0) return;
  auto [it, inserted] = entries.emplace(RootKey{param, exp}, mult);
  if (!inserted) {
    it->second += mult;
    if (it->second == 0) entries.erase(it);
  }
}

void RootMultiset::add(const RootMultiset& other) {
  for (const auto& [k, m] : other.entries) add(k.param, k.exp, m);
}

std::int64_t RootMultiset::degree() const {
  std::int64_t n = 0;
  for (const auto& [k, m] : entries) n += m;
  return n;
}

RootMultiset resolve(const RootMultiset& r, const ParamEnv& env) {
  RootMultiset out;
  out.node = r.node;
  for (const auto& [k, m] : r.entries) {
    auto [p, off] = env.resolve(k.param);
    out.add(p, k.exp + off, m);
  }
  return out;
}

std::string to_string(StringSpacing s) { return s == StringSpacing::Qi ? "qi" : "q"; }

StringSpacing parse_string_spacing(const std::string& s) {
  if (s == "qi") return StringSpacing::Qi;
  if (s == "q") return StringSpacing::Q;
  throw ParseError("unknown string spacing '" + s + "' (expected qi or q)");
}

int spacing_unit(const CartanData& cd, Node i, StringSpacing s) {
  cd.require_node(i);
  return s == StringSpacing::Qi ? cd.d(i) : 1;
}

std::string to_string(const QString& s) {
  std::ostringstream os;
  os << "pi^" << s.node << "_{" << s.length << ", p" << s.param << " q^" << s.center << "}";
  return os.str();
}

RootMultiset string_roots(const CartanData& cd, const QString& s, StringSpacing spacing) {
  if (s.length < 1) throw std::invalid_argument("string length must be positive");
  const int u = spacing_unit(cd, s.node, spacing);
  RootMultiset out;
  out.node = s.node;
  for (int r = 1; r <= s.length; ++r) out.add(s.param, s.center + u * (s.length - 2 * r + 1));
  return out;
}

namespace {

std::optional<std::int64_t> center_ratio(const QString& a, const QString& b, const ParamEnv* env) {
  std::int64_t k = 0;
  if (a.param != b.param) {
    if (!env) return std::nullopt;
    auto r = env->ratio(a.param, b.param);
    if (!r) return std::nullopt;
    k = *r;
  }
  return k + a.center - b.center;
}

std::int64_t floor_mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

}  // namespace

bool strings_linked(const CartanData& cd, const QString& a, const QString& b,
                    StringSpacing spacing, const ParamEnv* env) {
  const auto delta = center_ratio(a, b, env);
  if (!delta) return false;
  const int u = spacing_unit(cd, a.node, spacing);
  const std::int64_t ad = *delta < 0 ? -*delta : *delta;
  for (int p = 0; p < std::min(a.length, b.length); ++p) {
    if (ad == static_cast<std::int64_t>(u) * (a.length + b.length - 2 * p)) return true;
  }
  return false;
}

std::vector<QString> canonical_decompose(const CartanData& cd, Node i, const RootMultiset& roots,
                                         StringSpacing spacing, const ParamEnv* env) {
  const int u = spacing_unit(cd, i, spacing);
  const std::int64_t step = 2 * u;
  const RootMultiset base = env ? resolve(roots, *env) : roots;

  // (param, residue) -> exponent -> count
  std::map<std::pair<int, std::int64_t>, std::map<std::int64_t, std::int64_t>> classes;
  for (const auto& [k, m] : base.entries) {
    if (m < 0) {
      throw NegativeMultiplicity("root a_p" + std::to_string(k.param) + " q^" +
                                 std::to_string(k.exp) + " has multiplicity " + std::to_string(m));
    }
    classes[{k.param, floor_mod(k.exp, step)}][k.exp] += m;
  }

  std::vector<QString> out;
  for (auto& [cls, counts] : classes) {
    while (!counts.empty()) {
      std::int64_t best_lo = 0, best_len = 0;
      std::int64_t run_lo = 0, run_len = 0, prev = 0;
      for (const auto& [e, c] : counts) {
        if (run_len > 0 && e == prev + step) {
          ++run_len;
        } else {
          run_lo = e;
          run_len = 1;
        }
        prev = e;
        if (run_len > best_len) {
          best_len = run_len;
          best_lo = run_lo;
        }
      }
      for (std::int64_t t = 0; t < best_len; ++t) {
        auto it = counts.find(best_lo + t * step);
        if (--it->second == 0) counts.erase(it);
      }
      out.push_back({i, static_cast<int>(best_len), cls.first, best_lo + u * (best_len - 1)});
    }
  }
  std::sort(out.begin(), out.end());

  for (std::size_t a = 0; a < out.size(); ++a) {
    for (std::size_t b = a + 1; b < out.size(); ++b) {
      if (strings_linked(cd, out[a], out[b], spacing, nullptr)) {
        throw CanonicalDecompositionFailed("strings " + to_string(out[a]) + " and " +
                                           to_string(out[b]) + " are linked");
      }
    }
  }
  return out;
}

std::vector<PositionViolation> position_violations(const CartanData& cd, Node i,
                                                   const RootMultiset& pi,
                                                   const RootMultiset& pi_prime,
                                                   const ParamEnv& env, StringSpacing spacing) {
  const int u = spacing_unit(cd, i, spacing);
  const std::vector<QString> strings = canonical_decompose(cd, i, pi_prime, spacing, &env);
  std::vector<PositionViolation> out;
  for (const auto& [key, m] : resolve(pi, env).entries) {
    for (const QString& s : strings) {
      if (key.param != s.param) continue;
      if (key.exp - s.center == -static_cast<std::int64_t>(u) * (1 + s.length)) {
        out.push_back({key, s});
      }
    }
  }
  return out;
}

PositionResult general_position(const CartanData& cd, Node i, const RootMultiset& pi,
                                const RootMultiset& pi_prime, const ParamEnv& env,
                                StringSpacing spacing) {
  auto v = position_violations(cd, i, pi, pi_prime, env, spacing);
  if (v.empty()) return {};
  return {false, v.front()};
}

bool pairwise_general_position(const CartanData& cd, Node i, const RootMultiset& pi,
                               const RootMultiset& pi_prime, const ParamEnv& env,
                               StringSpacing spacing) {
  const int u = spacing_unit(cd, i, spacing);
  const auto left = canonical_decompose(cd, i, pi, spacing, &env);
  const auto right = canonical_decompose(cd, i, pi_prime, spacing, &env);
  for (const QString& a : left) {
    for (const QString& b : right) {
      if (a.param != b.param) continue;
      const std::int64_t delta = a.center - b.center;
      for (int p = 0; p < a.length; ++p) {
        if (delta == -static_cast<std::int64_t>(u) * (a.length + b.length - 2 * p)) return false;
      }
    }
  }
  return true;
}

}  // namespace qcyc
