#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "qcyc/errors.hpp"
#include "qcyc/qstrings.hpp"
#include "qcyc/root_system.hpp"

using namespace qcyc;

namespace {

using Counts = std::map<std::int64_t, int>;
using Family_ = std::vector<std::pair<std::int64_t, int>>;  // (center, length)

// All decompositions by removing candidate strings in non-decreasing order.
void brute(Counts& c, const std::vector<std::pair<std::int64_t, int>>& cands, std::size_t from,
           Family_& cur, std::vector<Family_>& out, int step) {
  if (c.empty()) {
    out.push_back(cur);
    return;
  }
  for (std::size_t k = from; k < cands.size(); ++k) {
    const auto [lo, len] = cands[k];
    bool fits = true;
    for (int t = 0; t < len && fits; ++t) {
      auto it = c.find(lo + step * t);
      fits = it != c.end() && it->second > 0;
    }
    if (!fits) continue;
    for (int t = 0; t < len; ++t) {
      auto it = c.find(lo + step * t);
      if (--it->second == 0) c.erase(it);
    }
    cur.emplace_back(lo + step / 2 * (len - 1), len);
    brute(c, cands, k, cur, out, step);
    cur.pop_back();
    for (int t = 0; t < len; ++t) ++c[lo + step * t];
  }
}

bool pairwise_ok(const Family_& f, int u) {
  for (std::size_t a = 0; a < f.size(); ++a) {
    for (std::size_t b = a + 1; b < f.size(); ++b) {
      const std::int64_t d = std::abs(f[a].first - f[b].first);
      for (int p = 0; p < std::min(f[a].second, f[b].second); ++p) {
        if (d == u * (f[a].second + f[b].second - 2 * p)) return false;
      }
    }
  }
  return true;
}

std::vector<Family_> canonical_by_brute_force(const Counts& counts, int u) {
  std::vector<std::pair<std::int64_t, int>> cands;
  for (const auto& [e, c] : counts) {
    for (int len = 1; counts.count(e + 2 * u * (len - 1)); ++len) cands.emplace_back(e, len);
  }
  Counts work = counts;
  Family_ cur;
  std::vector<Family_> all;
  brute(work, cands, 0, cur, all, 2 * u);
  std::vector<Family_> ok;
  for (auto& f : all) {
    std::sort(f.begin(), f.end());
    if (pairwise_ok(f, u) && std::find(ok.begin(), ok.end(), f) == ok.end()) ok.push_back(f);
  }
  return ok;
}

RootMultiset roots_at(Node i, int param, std::initializer_list<std::int64_t> es) {
  RootMultiset r;
  r.node = i;
  for (auto e : es) r.add(param, e);
  return r;
}

const CartanData& a1() {
  static const CartanData cd = cartan_data(LieType(Family::A, 1));
  return cd;
}

}  // namespace

TEST_CASE("string roots") {
  CHECK(string_roots(a1(), {1, 2, 0, 0}) == roots_at(1, 0, {1, -1}));
  CHECK(string_roots(a1(), {1, 1, 0, 5}) == roots_at(1, 0, {5}));
  const CartanData b2 = cartan_data(LieType(Family::B, 2));
  CHECK(string_roots(b2, {2, 2, 0, 0}) == roots_at(2, 0, {2, -2}));
  CHECK(string_roots(b2, {2, 2, 0, 0}, StringSpacing::Q) == roots_at(2, 0, {1, -1}));
  CHECK(string_roots(b2, {2, 3, 0, 1}) == roots_at(2, 0, {5, 1, -3}));
}

TEST_CASE("canonical decomposition examples") {
  CHECK(canonical_decompose(a1(), 1, roots_at(1, 0, {1, -1})) == std::vector<QString>{{1, 2, 0, 0}});
  const auto d = canonical_decompose(a1(), 1, roots_at(1, 0, {2, 0, 0, -2}));
  CHECK(std::set<QString>(d.begin(), d.end()) == std::set<QString>{{1, 3, 0, 0}, {1, 1, 0, 0}});
  RootMultiset two = roots_at(1, 0, {0});
  two.add(1, 4);
  CHECK(canonical_decompose(a1(), 1, two).size() == 2);
  CHECK(canonical_decompose(a1(), 1, RootMultiset{}).empty());
  RootMultiset neg;
  neg.node = 1;
  neg.add(0, 0, -1);
  CHECK_THROWS_AS(canonical_decompose(a1(), 1, neg), NegativeMultiplicity);
}

TEST_CASE("canonical decomposition matches brute force") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> exp(-5, 5), size(1, 6), unit(1, 3);
  const CartanData g2 = cartan_data(LieType(Family::G, 2));
  const CartanData b2 = cartan_data(LieType(Family::B, 2));
  for (int k = 0; k < 300; ++k) {
    const int u = unit(rng);
    const CartanData& cd = u == 1 ? a1() : u == 2 ? b2 : g2;
    const Node node = u == 1 ? 1 : 2;
    Counts counts;
    RootMultiset r;
    r.node = node;
    for (int s = size(rng); s > 0; --s) {
      const std::int64_t e = u * exp(rng);
      ++counts[e];
      r.add(0, e);
    }
    const auto canon = canonical_by_brute_force(counts, u);
    REQUIRE(canon.size() == 1);
    Family_ got;
    for (const QString& s : canonical_decompose(cd, node, r)) got.emplace_back(s.center, s.length);
    std::sort(got.begin(), got.end());
    CHECK(got == canon.front());
  }
}

TEST_CASE("linked strings") {
  CHECK(strings_linked(a1(), {1, 1, 0, 0}, {1, 1, 0, 2}));
  CHECK_FALSE(strings_linked(a1(), {1, 1, 0, 0}, {1, 1, 0, 0}));
  CHECK_FALSE(strings_linked(a1(), {1, 1, 0, 0}, {1, 1, 1, 2}));
  // (2,+1),(2,-1): |delta| = 2 = 2 + 2 - 2p at p = 1
  CHECK(strings_linked(a1(), {1, 2, 0, 1}, {1, 2, 0, -1}));
  CHECK_FALSE(strings_linked(a1(), {1, 3, 0, 0}, {1, 1, 0, 0}));
}

TEST_CASE("general position") {
  ParamEnv env;
  const int a = env.add("a");
  const int b = env.add("b");
  CHECK(general_position(a1(), 1, roots_at(1, a, {0}), roots_at(1, a, {0}), env).holds);
  const PositionResult bad = general_position(a1(), 1, roots_at(1, a, {-2}), roots_at(1, a, {0}), env);
  CHECK_FALSE(bad.holds);
  REQUIRE(bad.witness);
  CHECK(bad.witness->root == RootKey{a, -2});
  CHECK(general_position(a1(), 1, roots_at(1, a, {-2}), roots_at(1, b, {0}), env).holds);
  env.relate("b", "a", 2);
  CHECK_FALSE(general_position(a1(), 1, roots_at(1, a, {-2}), roots_at(1, b, {-2}), env).holds);
  // spacing q_i = q^2 on a long node
  const CartanData b2 = cartan_data(LieType(Family::B, 2));
  CHECK_FALSE(general_position(b2, 2, roots_at(2, a, {-4}), roots_at(2, a, {0}), env).holds);
  CHECK(general_position(b2, 2, roots_at(2, a, {-2}), roots_at(2, a, {0}), env).holds);
  CHECK_FALSE(general_position(b2, 2, roots_at(2, a, {-2}), roots_at(2, a, {0}), env, StringSpacing::Q).holds);
}

TEST_CASE("general position: root and string forms agree") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> c(-6, 6), len(1, 4), cnt(1, 3);
  ParamEnv env;
  env.add("a");
  for (int k = 0; k < 300; ++k) {
    RootMultiset p, pp;
    p.node = pp.node = 1;
    for (int s = cnt(rng); s > 0; --s) p.add(string_roots(a1(), {1, len(rng), 0, c(rng)}));
    for (int s = cnt(rng); s > 0; --s) pp.add(string_roots(a1(), {1, len(rng), 0, c(rng)}));
    CHECK(general_position(a1(), 1, p, pp, env).holds == pairwise_general_position(a1(), 1, p, pp, env));
  }
}

TEST_CASE("parameter relations") {
  ParamEnv env;
  env.add("a");
  env.add("b");
  env.add("c");
  env.relate("b", "a", 3);
  env.relate("c", "b", -1);
  CHECK(env.ratio(env.id("c"), env.id("a")) == 2);
  CHECK(env.ratio(env.id("a"), env.id("c")) == -2);
  CHECK_NOTHROW(env.relate("c", "a", 2));
  CHECK_THROWS_AS(env.relate("c", "a", 5), InconsistentRelations);
  CHECK_THROWS_AS(env.id("z"), UnknownParameter);
  const int ai = env.inverse(env.id("a"));
  const int ci = env.inverse(env.id("c"));
  CHECK(env.name(ai) == "a^-1");
  CHECK(env.ratio(ci, ai) == -2);
  CHECK(env.inverse(ai) == env.id("a"));
  env.add("d");
  CHECK_FALSE(env.ratio(env.id("d"), env.id("a")));
  CHECK(parse_string_spacing("q") == StringSpacing::Q);
  CHECK_THROWS_AS(parse_string_spacing("x"), ParseError);
}
