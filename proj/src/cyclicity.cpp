#include "qcyc/cyclicity.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "qcyc/errors.hpp"

namespace qcyc {

DrinfeldTuple::DrinfeldTuple(int n) : components(static_cast<std::size_t>(n)) {
  for (int i = 0; i < n; ++i) components[i].node = i + 1;
}

DrinfeldTuple DrinfeldTuple::fundamental(const CartanData& cd, Node i, int m, int param,
                                         std::int64_t center, StringSpacing spacing) {
  DrinfeldTuple out(cd.rank());
  out.at(i) = string_roots(cd, {i, m, param, center}, spacing);
  return out;
}

namespace {

WeylWord resolve_word(const CartanData& cd, const std::optional<WeylWord>& word) {
  if (!word) return longest_word(cd.type());
  require_letters(cd, *word);
  const auto n = static_cast<std::size_t>(positive_root_count(cd.type()));
  if (word->size() != n || !is_reduced(cd, *word)) {
    throw WordInvalid("[" + word->to_string() + "] is not a reduced word for w_0 of " +
                      cd.type().name() + " (needs a reduced word of length " + std::to_string(n) +
                      ")");
  }
  return *word;
}

SpectralVector root_vector(const DrinfeldTuple& f, const ParamEnv& env) {
  SpectralVector v(f.rank());
  for (Node i = 1; i <= f.rank(); ++i) {
    for (const auto& [k, m] : resolve(f.at(i), env).entries) {
      if (m < 0) {
        throw NegativeMultiplicity("input root at node " + std::to_string(i) +
                                   " has multiplicity " + std::to_string(m));
      }
      v.add(i, {SpectralSource::root(k.param), k.exp}, m);
    }
  }
  return v;
}

RootMultiset as_polynomial(const StepComponent& s, int factor) {
  RootMultiset out;
  out.node = s.node;
  for (const auto& [sym, m] : s.content) {
    if (sym.source.kind != SpectralSource::Kind::Root || m < 0) {
      throw NegativeMultiplicity("step " + std::to_string(s.position) + " of factor " +
                                 std::to_string(factor) + " is not a polynomial (shift " +
                                 std::to_string(sym.shift) + ", mult " + std::to_string(m) + ")");
    }
    out.add(sym.source.id, sym.shift, m);
  }
  return out;
}

std::vector<StepComponent> string_steps(const CartanData& cd, Node i1, int m1, BraidRule rule,
                                        const WeylWord& w) {
  if (m1 < 1) throw std::invalid_argument("string length must be positive");
  SpectralVector v(cd.rank());
  for (int r = 1; r <= m1; ++r) v.add(i1, {SpectralSource::root(0), cd.d(i1) * (m1 - 2 * r + 1)}, 1);
  return step_components(cd, w, v, rule);
}

}  // namespace

CyclicityVerdict check_cyclic(LieType t, const std::vector<DrinfeldTuple>& factors,
                              const ParamEnv& env, const std::optional<WeylWord>& word,
                              const CheckOptions& opts) {
  const CartanData cd = cartan_data(t);
  const WeylWord w = resolve_word(cd, word);
  if (factors.empty()) throw std::invalid_argument("at least one factor is required");
  for (const auto& f : factors) {
    if (f.rank() != cd.rank()) {
      throw InvalidNode("factor has " + std::to_string(f.rank()) + " components, " + t.name() +
                        " needs " + std::to_string(cd.rank()));
    }
  }

  const int r = static_cast<int>(factors.size());
  std::vector<std::vector<StepComponent>> steps;
  steps.reserve(factors.size());
  for (const auto& f : factors) steps.push_back(step_components(cd, w, root_vector(f, env), opts.rule));

  CyclicityVerdict out;
  for (std::size_t j = 0; j < w.size(); ++j) {
    const Node node = w.letters[j];
    for (int m = 0; m < r; ++m) {
      const RootMultiset poly = as_polynomial(steps[m][j], m + 1);
      if (poly.empty()) continue;
      for (int l = opts.strict_pairs ? m : m + 1; l < r; ++l) {
        const RootMultiset& target = factors[l].at(node);
        if (target.empty()) continue;
        for (const auto& v : position_violations(cd, node, poly, target, env, opts.spacing)) {
          out.witnesses.push_back({static_cast<int>(j) + 1, node, m + 1, l + 1, v.root, v.string});
        }
      }
    }
  }
  std::sort(out.witnesses.begin(), out.witnesses.end(), [](const Witness& a, const Witness& b) {
    return std::tie(a.step, a.left, a.right, a.root, a.string) <
           std::tie(b.step, b.left, b.right, b.root, b.string);
  });
  out.holds = out.witnesses.empty();
  return out;
}

std::string to_string(const ExponentSet& s) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (auto k : s) {
    os << (first ? "" : ", ") << k;
    first = false;
  }
  os << "}";
  return os.str();
}

ExponentSet translate(const ExponentSet& s, std::int64_t by) {
  ExponentSet out;
  for (auto k : s) out.insert(k + by);
  return out;
}

ExponentSet forbidden_ratios(LieType t, Node i1, int m1, Node i2, int m2, BraidRule rule,
                             const std::optional<WeylWord>& word) {
  const CartanData cd = cartan_data(t);
  cd.require_node(i1);
  cd.require_node(i2);
  if (m2 < 1) throw std::invalid_argument("string length must be positive");
  const WeylWord w = resolve_word(cd, word);
  ExponentSet out;
  for (const auto& s : string_steps(cd, i1, m1, rule, w)) {
    if (s.node != i2) continue;
    for (const auto& [k, m] : as_polynomial(s, 1).entries) out.insert(k.exp + cd.d(i2) * (m2 + 1));
  }
  return out;
}

std::int64_t sufficient_window(LieType t, Node i1, int m1, Node i2, int m2, BraidRule rule) {
  const CartanData cd = cartan_data(t);
  cd.require_node(i1);
  cd.require_node(i2);
  SpectralVector v(cd.rank());
  v.add(i1, {SpectralSource::formal(i1), 0}, 1);
  std::int64_t M = 0;
  for (const auto& s : step_components(cd, longest_word(t), v, rule)) {
    for (const auto& [sym, m] : s.content) M = std::max<std::int64_t>(M, std::llabs(sym.shift));
  }
  return M + cd.d(i1) * (m1 - 1) + cd.d(i2) * (m2 + 1);
}

ExponentSet forbidden_ratios_sweep(LieType t, Node i1, int m1, Node i2, int m2,
                                   std::int64_t window, const CheckOptions& opts) {
  const CartanData cd = cartan_data(t);
  ExponentSet out;
  for (std::int64_t k = -window; k <= window; ++k) {
    ParamEnv env;
    const int a = env.add("a");
    const int b = env.add("b");
    env.relate(b, a, k);
    const std::vector<DrinfeldTuple> factors{
        DrinfeldTuple::fundamental(cd, i1, m1, a, 0, opts.spacing),
        DrinfeldTuple::fundamental(cd, i2, m2, b, 0, opts.spacing)};
    if (!check_cyclic(t, factors, env, std::nullopt, opts).holds) out.insert(k);
  }
  return out;
}

ExponentSet core_set(LieType t, Node i1, Node i2, BraidRule rule) {
  const CartanData cd = cartan_data(t);
  return translate(forbidden_ratios(t, i1, 1, i2, 1, rule), -2 * cd.d(i2));
}

TableNormalization tabulated_normalization(LieType t) {
  return t.classical() ? TableNormalization::Core : TableNormalization::Ratio;
}

ExponentSet s_set(LieType t, Node i1, Node i2, BraidRule rule) {
  if (tabulated_normalization(t) == TableNormalization::Core) return core_set(t, i1, i2, rule);
  return forbidden_ratios(t, i1, 1, i2, 1, rule);
}

ExponentSet corollary_composition(LieType t, Node i1, int m1, Node i2, int m2, BraidRule rule) {
  const CartanData cd = cartan_data(t);
  const ExponentSet core = core_set(t, i1, i2, rule);
  const std::int64_t D = cd.d(i1) * m1 + cd.d(i2) * m2 + cd.d(i1) + cd.d(i2);
  ExponentSet out;
  for (int p = 1; p <= m1; ++p) {
    for (auto k : core) out.insert(k + D - 2 * cd.d(i1) * p);
  }
  return out;
}

bool kashiwara_check(LieType t, const std::vector<KashiwaraSpec>& specs) {
  const CartanData cd = cartan_data(t);
  for (std::size_t r = 0; r < specs.size(); ++r) {
    for (std::size_t s = r + 1; s < specs.size(); ++s) {
      const auto& x = specs[r];
      const auto& y = specs[s];
      const std::int64_t threshold =
          cd.d(x.node) * x.m - cd.d(y.node) * y.m - cd.d(x.node) - cd.d(y.node);
      if (x.exp - y.exp <= threshold) return false;
    }
  }
  return true;
}

std::vector<DrinfeldTuple> transform_dual(LieType t, const std::vector<DrinfeldTuple>& factors,
                                          std::optional<std::int64_t> c) {
  if (!c) throw ConstantRequired("the dual needs the constant c");
  std::vector<DrinfeldTuple> out;
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
    DrinfeldTuple f(it->rank());
    for (Node i = 1; i <= f.rank(); ++i) {
      for (const auto& [k, m] : it->at(bar_involution(t, i)).entries) f.at(i).add(k.param, k.exp + *c, m);
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<DrinfeldTuple> transform_omega(LieType t, const std::vector<DrinfeldTuple>& factors,
                                           std::optional<std::int64_t> kappa, ParamEnv& env) {
  if (!kappa) throw ConstantRequired("the omega twist needs the constant kappa");
  const CartanData cd = cartan_data(t);
  std::vector<DrinfeldTuple> out;
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
    DrinfeldTuple f(it->rank());
    for (Node i = 1; i <= f.rank(); ++i) {
      for (const auto& [k, m] : it->at(bar_involution(t, i)).entries) {
        f.at(i).add(env.inverse(k.param), -k.exp + 2 * cd.d(i) + *kappa, m);
      }
    }
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace qcyc
