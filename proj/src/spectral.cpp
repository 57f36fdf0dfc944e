#include "qcyc/spectral.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "qcyc/errors.hpp"

namespace qcyc {

SpectralVector SpectralVector::formal(int n) {
  SpectralVector v(n);
  for (Node k = 1; k <= n; ++k) v.add(k, {SpectralSource::formal(k), 0}, 1);
  return v;
}

void SpectralVector::add(Node j, SpectralSymbol s, std::int64_t mult) {
  if (mult == 0) return;
  auto& c = comps_.at(static_cast<std::size_t>(j - 1));
  auto [it, inserted] = c.emplace(s, mult);
  if (!inserted) {
    it->second += mult;
    if (it->second == 0) c.erase(it);
  }
}

void SpectralVector::add_component(Node j, const SpectralComponent& c, std::int64_t shift,
                                   std::int64_t scale) {
  for (const auto& [sym, m] : c) add(j, {sym.source, sym.shift + shift}, scale * m);
}

bool SpectralVector::is_zero() const {
  return std::all_of(comps_.begin(), comps_.end(), [](const auto& c) { return c.empty(); });
}

SpectralVector& SpectralVector::operator+=(const SpectralVector& rhs) {
  if (rhs.size() != size()) throw std::invalid_argument("spectral vectors of different rank");
  for (Node j = 1; j <= size(); ++j) add_component(j, rhs.component(j), 0);
  return *this;
}

SpectralVector operator*(std::int64_t k, const SpectralVector& v) {
  SpectralVector out(v.size());
  for (Node j = 1; j <= v.size(); ++j) out.add_component(j, v.component(j), 0, k);
  return out;
}

std::string to_string(BraidRule r) {
  return r == BraidRule::Symmetrized ? "symmetrized" : "printed";
}

BraidRule parse_braid_rule(const std::string& s) {
  if (s == "symmetrized") return BraidRule::Symmetrized;
  if (s == "printed") return BraidRule::AsPrinted;
  throw ParseError("unknown braid rule '" + s + "' (expected symmetrized or printed)");
}

std::vector<std::int64_t> substitution_shifts(const CartanData& cd, Node i, Node j,
                                              BraidRule rule) {
  cd.require_node(i);
  cd.require_node(j);
  std::vector<std::int64_t> out;
  if (i == j) return out;
  const int a = -cd.a(j, i);
  for (int t = 0; t < a; ++t) {
    if (rule == BraidRule::Symmetrized) {
      out.push_back(cd.d(i) + cd.d(j) * (a - 1 - 2 * t));
    } else {
      out.push_back(2 * a - 1 - 2 * t);
    }
  }
  return out;
}

SpectralVector braid_generator(const CartanData& cd, Node i, const SpectralVector& v,
                               BraidRule rule) {
  cd.require_node(i);
  const int n = cd.rank();
  if (v.size() != n) throw std::invalid_argument("spectral vector rank does not match");
  SpectralVector out(n);
  const SpectralComponent& hi = v.component(i);
  for (Node j = 1; j <= n; ++j) {
    if (j == i) {
      out.add_component(j, hi, 2 * cd.d(i), -1);
      continue;
    }
    out.add_component(j, v.component(j), 0);
    for (std::int64_t s : substitution_shifts(cd, i, j, rule)) out.add_component(j, hi, s);
  }
  return out;
}

SpectralVector braid_word(const CartanData& cd, const WeylWord& w, const SpectralVector& v,
                          BraidRule rule) {
  require_letters(cd, w);
  SpectralVector cur = v;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    cur = braid_generator(cd, *it, cur, rule);
  }
  return cur;
}

std::vector<StepComponent> step_components(const CartanData& cd, const WeylWord& w,
                                           const SpectralVector& v, BraidRule rule) {
  require_letters(cd, w);
  const int N = static_cast<int>(w.size());
  std::vector<StepComponent> out(static_cast<std::size_t>(N));
  SpectralVector cur = v;
  for (int j = N; j >= 1; --j) {
    const Node node = w.letters[j - 1];
    out[j - 1] = {j, node, cur.component(node)};
    if (j > 1) cur = braid_generator(cd, node, cur, rule);
  }
  return out;
}

LaurentMatrix matrix_generator(const CartanData& cd, Node i, int r) {
  cd.require_node(i);
  if (r < 1) throw std::invalid_argument("degree r must be at least 1");
  const int n = cd.rank();
  LaurentMatrix m(n, std::vector<LaurentPoly>(n));
  for (Node j = 1; j <= n; ++j) {
    m[j - 1][j - 1] += LaurentPoly::constant(1);
    const LaurentPoly ratio = LaurentPoly::divide_exact(
        LaurentPoly::q_integer(r * cd.a(j, i), cd.d(j)), LaurentPoly::q_integer(r, cd.d(j)));
    m[i - 1][j - 1] -= LaurentPoly::monomial(cd.d(i) * r) * ratio;
  }
  return m;
}

LaurentMatrix substitution_matrix(const CartanData& cd, Node i, int r, BraidRule rule) {
  const int n = cd.rank();
  const SpectralVector img = braid_generator(cd, i, SpectralVector::formal(n), rule);
  LaurentMatrix m(n, std::vector<LaurentPoly>(n));
  for (Node j = 1; j <= n; ++j) {
    for (const auto& [sym, mult] : img.component(j)) {
      m[j - 1][sym.source.id - 1] +=
          LaurentPoly::monomial(static_cast<int>(r * sym.shift), Rational(mult));
    }
  }
  return m;
}

LaurentMatrix transpose(const LaurentMatrix& m) {
  if (m.empty()) return m;
  LaurentMatrix t(m[0].size(), std::vector<LaurentPoly>(m.size()));
  for (std::size_t a = 0; a < m.size(); ++a) {
    for (std::size_t b = 0; b < m[a].size(); ++b) t[b][a] = m[a][b];
  }
  return t;
}

std::vector<RuleDiscrepancy> rule_discrepancies(const CartanData& cd) {
  std::vector<RuleDiscrepancy> out;
  for (Node i = 1; i <= cd.rank(); ++i) {
    const LaurentMatrix m = matrix_generator(cd, i, 1);
    for (Node j = 1; j <= cd.rank(); ++j) {
      if (j == i || cd.a(j, i) == 0) continue;
      std::vector<std::int64_t> from_matrix;
      for (const auto& [e, c] : m[i - 1][j - 1].terms()) {
        for (std::int64_t k = 0; k < c.numerator(); ++k) from_matrix.push_back(e);
      }
      std::vector<std::int64_t> printed = substitution_shifts(cd, i, j, BraidRule::AsPrinted);
      std::sort(printed.begin(), printed.end());
      if (from_matrix != printed) out.push_back({i, j, from_matrix, printed});
    }
  }
  return out;
}

PositivityReport check_positivity(const CartanData& cd, const WeylWord& w, Node i,
                                  BraidRule rule) {
  cd.require_node(i);
  require_letters(cd, w);
  WeylWord siw{{i}};
  siw.letters.insert(siw.letters.end(), w.letters.begin(), w.letters.end());
  if (!is_reduced(cd, siw)) {
    throw LengthPreconditionViolated("l(s_" + std::to_string(i) + " w) != l(w) + 1 for w = [" +
                                     w.to_string() + "]");
  }
  const SpectralVector img = braid_word(cd, w, SpectralVector::formal(cd.rank()), rule);
  PositivityReport rep;
  rep.content = img.component(i);
  const std::set<Node> support(w.letters.begin(), w.letters.end());
  const bool in_support = support.count(i) > 0;
  std::ostringstream why;
  bool seen_identity = false;
  for (const auto& [sym, mult] : rep.content) {
    rep.max_shift = std::max(rep.max_shift, sym.shift);
    const Node k = sym.source.id;
    bool bad = mult < 0;
    if (!in_support && k == i && sym.shift == 0) {
      seen_identity = true;
      bad = bad || mult != 1;
    } else {
      const bool node_ok = support.count(k) > 0 || (in_support && k == i);
      bad = bad || !node_ok || sym.shift < 1;
    }
    if (bad) {
      rep.offending.push_back(sym);
      why << "h_" << k << " shift=" << sym.shift << " mult=" << mult << "; ";
    }
  }
  if (!in_support && !seen_identity) why << "missing h_" << i << "(u); ";
  rep.ok = rep.offending.empty() && (in_support || seen_identity);
  rep.detail = why.str();
  return rep;
}

std::string to_diagnostic_text(const SpectralVector& v,
                               const std::function<std::string(int)>& param_name) {
  std::ostringstream os;
  for (Node j = 1; j <= v.size(); ++j) {
    for (const auto& [sym, mult] : v.component(j)) {
      os << "component=" << j << " source=";
      if (sym.source.kind == SpectralSource::Kind::Formal) {
        os << "h_" << sym.source.id;
      } else if (param_name) {
        os << param_name(sym.source.id);
      } else {
        os << "p" << sym.source.id;
      }
      os << " shift=" << sym.shift << " mult=" << mult << "\n";
    }
  }
  return os.str();
}

}  // namespace qcyc
