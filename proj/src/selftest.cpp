#include "qcyc/selftest.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "qcyc/cyclicity.hpp"
#include "qcyc/errors.hpp"
#include "qcyc/qstrings.hpp"
#include "qcyc/root_system.hpp"
#include "qcyc/spectral.hpp"

namespace qcyc {

namespace {

void fail(SuiteResult& r, const std::string& what) {
  if (r.failures++ == 0) r.first_failure = what;
}

void expect(SuiteResult& r, bool ok, const std::function<std::string()>& what) {
  ++r.cases;
  if (!ok) fail(r, what());
}

std::vector<LieType> small_types(int max_rank, bool with_g2) {
  std::vector<LieType> out;
  for (const LieType& t : all_types(max_rank, false)) out.push_back(t);
  if (with_g2 && max_rank >= 2) out.push_back(LieType(Family::G, 2));
  if (max_rank >= 4) out.push_back(LieType(Family::F, 4));
  return out;
}

SpectralVector random_vector(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(0, 3), node(1, n), param(0, 2), shift(-4, 4),
      mult(1, 3), sign(0, 1), kind(0, 1);
  SpectralVector v(n);
  for (Node j = 1; j <= n; ++j) {
    const int c = count(rng);
    for (int t = 0; t < c; ++t) {
      const SpectralSource src =
          kind(rng) ? SpectralSource::formal(node(rng)) : SpectralSource::root(param(rng));
      v.add(j, {src, shift(rng)}, sign(rng) ? mult(rng) : -mult(rng));
    }
  }
  return v;
}

SpectralVector apply_alternating(const CartanData& cd, Node a, Node b, int len,
                                 const SpectralVector& v) {
  WeylWord w;
  for (int k = 0; k < len; ++k) w.letters.push_back(k % 2 == 0 ? a : b);
  return braid_word(cd, w, v);
}

std::vector<Weight> basis_weights(int n) {
  std::vector<Weight> out;
  for (int k = 0; k < n; ++k) {
    Weight w{std::vector<std::int64_t>(static_cast<std::size_t>(n), 0)};
    w.coords[k] = 1;
    out.push_back(w);
  }
  return out;
}

using Strings = std::vector<std::pair<std::int64_t, int>>;  // (lowest root, length)

// Every decomposition of a multiset (exponent -> count) into step-2 strings,
// built by fixing, at each stage, the string that starts at the minimum.
void enumerate(std::map<std::int64_t, int>& counts, Strings& cur, std::set<Strings>& out) {
  if (counts.empty()) {
    Strings s = cur;
    std::sort(s.begin(), s.end());
    out.insert(s);
    return;
  }
  const std::int64_t lo = counts.begin()->first;
  for (int len = 1;; ++len) {
    const std::int64_t e = lo + 2 * (len - 1);
    auto it = counts.find(e);
    if (it == counts.end()) break;
    std::map<std::int64_t, int> rest = counts;
    for (int t = 0; t < len; ++t) {
      auto jt = rest.find(lo + 2 * t);
      if (--jt->second == 0) rest.erase(jt);
    }
    cur.emplace_back(lo, len);
    enumerate(rest, cur, out);
    cur.pop_back();
  }
}

bool unlinked(const Strings& s) {
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b = a + 1; b < s.size(); ++b) {
      const auto [la, ma] = s[a];
      const auto [lb, mb] = s[b];
      const std::int64_t ca = la + (ma - 1);
      const std::int64_t cb = lb + (mb - 1);
      const std::int64_t d = ca > cb ? ca - cb : cb - ca;
      for (int p = 0; p < std::min(ma, mb); ++p) {
        if (d == ma + mb - 2 * p) return false;
      }
    }
  }
  return true;
}

std::string describe(const std::map<std::int64_t, int>& counts) {
  std::ostringstream os;
  for (const auto& [e, c] : counts) {
    for (int t = 0; t < c; ++t) os << e << " ";
  }
  return os.str();
}

void each_multiset(int lo, int hi, int max_size, std::map<std::int64_t, int>& cur, int size,
                   int from, const std::function<void(const std::map<std::int64_t, int>&)>& f) {
  if (size > 0) f(cur);
  if (size == max_size) return;
  for (int e = from; e <= hi; ++e) {
    ++cur[e];
    each_multiset(lo, hi, max_size, cur, size + 1, e, f);
    if (--cur[e] == 0) cur.erase(e);
  }
}

}  // namespace

SuiteResult suite_longest_words() {
  SuiteResult r{"longest words reduced with length N", 0, 0, ""};
  for (const LieType& t : all_types(8, true)) {
    const CartanData cd = cartan_data(t);
    const WeylWord w = longest_word(t);
    const auto n = static_cast<std::size_t>(positive_root_count(t));
    expect(r, w.size() == n && is_reduced(cd, w),
           [&] { return t.name() + ": length " + std::to_string(w.size()) + " vs " + std::to_string(n); });
    Weight rho{std::vector<std::int64_t>(static_cast<std::size_t>(t.rank), 1)};
    const Weight img = apply_word(cd, w, rho);
    expect(r, std::all_of(img.coords.begin(), img.coords.end(), [](auto c) { return c == -1; }),
           [&] { return t.name() + ": w0(rho) is not -rho"; });
  }
  return r;
}

SuiteResult suite_reflection_involution(const SuiteOptions& o) {
  SuiteResult r{"simple reflections are involutions", 0, 0, ""};
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<int> coord(-20, 20);
  for (const LieType& t : all_types(8, true)) {
    const CartanData cd = cartan_data(t);
    for (int k = 0; k < o.random_cases; ++k) {
      Weight w{std::vector<std::int64_t>(static_cast<std::size_t>(t.rank))};
      for (auto& c : w.coords) c = coord(rng);
      for (Node i = 1; i <= t.rank; ++i) {
        expect(r, simple_reflection(cd, i, simple_reflection(cd, i, w)) == w,
               [&] { return t.name() + " s_" + std::to_string(i); });
      }
    }
  }
  return r;
}

SuiteResult suite_rank2_orders() {
  SuiteResult r{"order of s_i s_j matches a_ij a_ji", 0, 0, ""};
  for (const LieType& t : all_types(8, true)) {
    const CartanData cd = cartan_data(t);
    const auto basis = basis_weights(t.rank);
    for (Node i = 1; i <= t.rank; ++i) {
      for (Node j = i + 1; j <= t.rank; ++j) {
        int order = 0;
        for (int k = 1; k <= 12 && order == 0; ++k) {
          WeylWord w;
          for (int t2 = 0; t2 < k; ++t2) w.letters.insert(w.letters.end(), {i, j});
          bool id = true;
          for (const auto& b : basis) id = id && apply_word(cd, w, b) == b;
          if (id) order = k;
        }
        expect(r, order == cd.braid_order(i, j), [&] {
          return t.name() + " (" + std::to_string(i) + "," + std::to_string(j) + ") order " +
                 std::to_string(order);
        });
      }
    }
  }
  return r;
}

SuiteResult suite_reduced_words_agree() {
  SuiteResult r{"reduced words of one element act identically", 0, 0, ""};
  for (const LieType& t : small_types(3, true)) {
    const CartanData cd = cartan_data(t);
    const auto basis = basis_weights(t.rank);
    for (const WeylWord& w : weyl_group_elements(cd)) {
      for (const WeylWord& v : reduced_words_of(cd, w, 500)) {
        bool same = is_reduced(cd, v) && v.size() == w.size();
        for (const auto& b : basis) same = same && apply_word(cd, v, b) == apply_word(cd, w, b);
        expect(r, same, [&] { return t.name() + " [" + w.to_string() + "] vs [" + v.to_string() + "]"; });
      }
    }
  }
  return r;
}

SuiteResult suite_braid_relations(const SuiteOptions& o) {
  SuiteResult r{"braid relations on symbol multisets", 0, 0, ""};
  std::mt19937_64 rng(o.seed + 1);
  for (const LieType& t : all_types(8, true)) {
    const CartanData cd = cartan_data(t);
    for (Node i = 1; i <= t.rank; ++i) {
      for (Node j = i + 1; j <= t.rank; ++j) {
        const int m = cd.braid_order(i, j);
        for (int k = 0; k < o.random_cases; ++k) {
          const SpectralVector v = random_vector(t.rank, rng);
          expect(r, apply_alternating(cd, i, j, m, v) == apply_alternating(cd, j, i, m, v), [&] {
            return t.name() + " (" + std::to_string(i) + "," + std::to_string(j) + ")";
          });
        }
      }
    }
  }
  return r;
}

SuiteResult suite_linearity(const SuiteOptions& o) {
  SuiteResult r{"braid generators are linear", 0, 0, ""};
  std::mt19937_64 rng(o.seed + 2);
  const auto types = all_types(8, true);
  std::uniform_int_distribution<std::size_t> pick(0, types.size() - 1);
  std::uniform_int_distribution<int> scale(-4, 4);
  for (int k = 0; k < o.random_cases; ++k) {
    const LieType t = types[pick(rng)];
    const CartanData cd = cartan_data(t);
    const Node i = std::uniform_int_distribution<int>(1, t.rank)(rng);
    const SpectralVector a = random_vector(t.rank, rng);
    const SpectralVector b = random_vector(t.rank, rng);
    const int c = scale(rng);
    expect(r,
           braid_generator(cd, i, a + b) == braid_generator(cd, i, a) + braid_generator(cd, i, b) &&
               braid_generator(cd, i, c * a) == c * braid_generator(cd, i, a),
           [&] { return t.name() + " T_" + std::to_string(i); });
  }
  return r;
}

SuiteResult suite_matsumoto() {
  SuiteResult r{"T_w independent of the reduced word", 0, 0, ""};
  for (const LieType& t : small_types(3, true)) {
    const CartanData cd = cartan_data(t);
    const SpectralVector h = SpectralVector::formal(t.rank);
    for (const WeylWord& w : weyl_group_elements(cd)) {
      const SpectralVector ref = braid_word(cd, w, h);
      for (const WeylWord& v : reduced_words_of(cd, w, 100000)) {
        expect(r, braid_word(cd, v, h) == ref,
               [&] { return t.name() + " [" + w.to_string() + "] vs [" + v.to_string() + "]"; });
      }
    }
  }
  for (const char* name : {"A2", "A3", "B2"}) {
    const LieType t = LieType::parse(name);
    const CartanData cd = cartan_data(t);
    const auto words = reduced_words_of(cd, longest_word(t), 100000);
    expect(r, words.size() >= 2, [&] { return std::string(name) + " w0 has a single word"; });
  }
  return r;
}

SuiteResult suite_positivity() {
  SuiteResult r{"(T_w h)_i has non-negative coefficients when l(s_i w) = l(w) + 1", 0, 0, ""};
  for (const LieType& t : small_types(4, true)) {
    const CartanData cd = cartan_data(t);
    for (const WeylWord& w : weyl_group_elements(cd)) {
      for (Node i = 1; i <= t.rank; ++i) {
        WeylWord siw{{i}};
        siw.letters.insert(siw.letters.end(), w.letters.begin(), w.letters.end());
        if (!is_reduced(cd, siw)) continue;
        const PositivityReport rep = check_positivity(cd, w, i);
        expect(r, rep.ok, [&] {
          return t.name() + " w=[" + w.to_string() + "] i=" + std::to_string(i) + ": " + rep.detail;
        });
      }
    }
  }
  return r;
}

SuiteResult suite_matrix_agreement() {
  SuiteResult r{"matrix form agrees with the substitution form", 0, 0, ""};
  std::vector<LieType> types{LieType(Family::A, 1), LieType(Family::A, 2), LieType(Family::A, 3),
                             LieType(Family::D, 4)};
  for (const LieType& t : small_types(4, true)) {
    if (!t.simply_laced()) types.push_back(t);
  }
  for (const LieType& t : types) {
    const CartanData cd = cartan_data(t);
    for (Node i = 1; i <= t.rank; ++i) {
      for (int deg = 1; deg <= 4; ++deg) {
        expect(r, transpose(matrix_generator(cd, i, deg)) == substitution_matrix(cd, i, deg), [&] {
          return t.name() + " T_" + std::to_string(i) + " r=" + std::to_string(deg);
        });
      }
    }
  }
  return r;
}

SuiteResult suite_decomposition_uniqueness() {
  SuiteResult r{"string factorization is unique (size <= 6, exponents in [-6, 6])", 0, 0, ""};
  const CartanData cd = cartan_data(LieType(Family::A, 1));
  std::map<std::int64_t, int> cur;
  each_multiset(-6, 6, 6, cur, 0, -6, [&](const std::map<std::int64_t, int>& counts) {
    std::set<Strings> all;
    std::map<std::int64_t, int> work = counts;
    Strings tmp;
    enumerate(work, tmp, all);
    std::vector<Strings> canonical;
    for (const auto& s : all) {
      if (unlinked(s)) canonical.push_back(s);
    }
    RootMultiset roots;
    roots.node = 1;
    for (const auto& [e, c] : counts) roots.add(0, e, c);
    Strings greedy;
    for (const QString& s : canonical_decompose(cd, 1, roots)) {
      greedy.emplace_back(s.center - (s.length - 1), s.length);
    }
    std::sort(greedy.begin(), greedy.end());
    expect(r, canonical.size() == 1 && canonical.front() == greedy, [&] {
      return "{" + describe(counts) + "}: " + std::to_string(canonical.size()) + " canonical";
    });
  });
  return r;
}

SuiteResult suite_decomposition_round_trip(const SuiteOptions& o) {
  SuiteResult r{"factorization reproduces the roots", 0, 0, ""};
  std::mt19937_64 rng(o.seed + 3);
  // Nodes with d = 1, 2, 3.
  const std::vector<std::pair<LieType, Node>> nodes{
      {LieType(Family::A, 1), 1}, {LieType(Family::B, 2), 2}, {LieType(Family::G, 2), 2}};
  std::uniform_int_distribution<int> which(0, 2), count(1, 4), center(-10, 10), len(1, 4),
      param(0, 1);
  for (int k = 0; k < 2 * o.random_cases; ++k) {
    const auto [t, node] = nodes[which(rng)];
    const CartanData cd = cartan_data(t);
    RootMultiset roots;
    roots.node = node;
    const int c = count(rng);
    for (int s = 0; s < c; ++s) {
      roots.add(string_roots(cd, {node, len(rng), param(rng), center(rng)}));
    }
    RootMultiset back;
    back.node = node;
    for (const QString& s : canonical_decompose(cd, node, roots)) back.add(string_roots(cd, s));
    expect(r, back == roots, [&] { return t.name() + " node " + std::to_string(node); });
  }
  return r;
}

SuiteResult suite_general_position_forms(const SuiteOptions& o) {
  SuiteResult r{"root criterion equals the string form of general position", 0, 0, ""};
  std::mt19937_64 rng(o.seed + 4);
  const CartanData cd = cartan_data(LieType(Family::A, 1));
  ParamEnv env;
  env.add("a");
  std::uniform_int_distribution<int> count(1, 3), center(-6, 6), len(1, 4);
  for (int k = 0; k < o.random_cases; ++k) {
    RootMultiset pi, pj;
    pi.node = pj.node = 1;
    for (int s = count(rng); s > 0; --s) pi.add(string_roots(cd, {1, len(rng), 0, center(rng)}));
    for (int s = count(rng); s > 0; --s) pj.add(string_roots(cd, {1, len(rng), 0, center(rng)}));
    expect(r,
           general_position(cd, 1, pi, pj, env).holds ==
               pairwise_general_position(cd, 1, pi, pj, env),
           [&] { return "case " + std::to_string(k); });
  }
  return r;
}

SuiteResult suite_kashiwara_implies_cyclic() {
  SuiteResult r{"Kashiwara-type criterion implies the cyclicity condition", 0, 0, ""};
  for (const LieType& t : small_types(3, true)) {
    const CartanData cd = cartan_data(t);
    const int n = t.rank;
    auto run = [&](const std::vector<KashiwaraSpec>& specs) {
      if (!kashiwara_check(t, specs)) return;
      ParamEnv env;
      const int a = env.add("a");
      std::vector<DrinfeldTuple> factors;
      for (const auto& s : specs) factors.push_back(DrinfeldTuple::fundamental(cd, s.node, s.m, a, s.exp));
      expect(r, check_cyclic(t, factors, env).holds, [&] {
        std::ostringstream os;
        os << t.name();
        for (const auto& s : specs) os << " (" << s.node << "," << s.m << "," << s.exp << ")";
        return os.str();
      });
    };
    // Two factors with m <= 2; ratios only matter, so the first exponent is 0.
    for (Node k1 = 1; k1 <= n; ++k1)
      for (Node k2 = 1; k2 <= n; ++k2)
        for (int m1 = 1; m1 <= 2; ++m1)
          for (int m2 = 1; m2 <= 2; ++m2)
            for (int e = -10; e <= 10; ++e) run({{k1, m1, 0}, {k2, m2, e}});
    // Three fundamental factors.
    for (Node k1 = 1; k1 <= n; ++k1)
      for (Node k2 = 1; k2 <= n; ++k2)
        for (Node k3 = 1; k3 <= n; ++k3)
          for (int e2 = -10; e2 <= 10; ++e2)
            for (int e3 = -10; e3 <= 10; ++e3) run({{k1, 1, 0}, {k2, 1, e2}, {k3, 1, e3}});
  }
  return r;
}

std::vector<NamedSuite> all_suites() {
  return {
      {"longest-words", [](const SuiteOptions&) { return suite_longest_words(); }},
      {"reflection-involution", [](const SuiteOptions& o) { return suite_reflection_involution(o); }},
      {"rank2-orders", [](const SuiteOptions&) { return suite_rank2_orders(); }},
      {"reduced-words", [](const SuiteOptions&) { return suite_reduced_words_agree(); }},
      {"braid-relations", [](const SuiteOptions& o) { return suite_braid_relations(o); }},
      {"linearity", [](const SuiteOptions& o) { return suite_linearity(o); }},
      {"matsumoto", [](const SuiteOptions&) { return suite_matsumoto(); }},
      {"positivity", [](const SuiteOptions&) { return suite_positivity(); }},
      {"matrix-agreement", [](const SuiteOptions&) { return suite_matrix_agreement(); }},
      {"decomposition-uniqueness", [](const SuiteOptions&) { return suite_decomposition_uniqueness(); }},
      {"decomposition-round-trip", [](const SuiteOptions& o) { return suite_decomposition_round_trip(o); }},
      {"general-position-forms", [](const SuiteOptions& o) { return suite_general_position_forms(o); }},
      {"kashiwara-implies-cyclic", [](const SuiteOptions&) { return suite_kashiwara_implies_cyclic(); }},
  };
}

}  // namespace qcyc
