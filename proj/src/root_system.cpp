#include "qcyc/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qcyc/errors.hpp"

namespace qcyc {

namespace {

bool rank_ok(Family f, int n) {
  switch (f) {
    case Family::A: return n >= 1;
    case Family::B: return n >= 2;
    case Family::C: return n >= 2;
    case Family::D: return n >= 3;
    case Family::E: return n >= 6 && n <= 8;
    case Family::F: return n == 4;
    case Family::G: return n == 2;
  }
  return false;
}

std::vector<Node> range_up(int lo, int hi) {
  std::vector<Node> out;
  for (int i = lo; i <= hi; ++i) out.push_back(i);
  return out;
}

std::vector<Node> range_down(int hi, int lo) {
  std::vector<Node> out;
  for (int i = hi; i >= lo; --i) out.push_back(i);
  return out;
}

void append(std::vector<Node>& dst, const std::vector<Node>& src) {
  dst.insert(dst.end(), src.begin(), src.end());
}

// gamma_i for the classical families; w_0 = gamma_n gamma_{n-1} ... gamma_1.
std::vector<Node> gamma(Family f, int i) {
  std::vector<Node> g;
  switch (f) {
    case Family::A:
      g = range_up(1, i);
      break;
    case Family::B:
    case Family::C:
      g = range_down(i, 1);
      append(g, range_up(2, i));
      break;
    case Family::D:
      if (i == 1) break;  // gamma_1 is empty in type D
      g = range_down(i, 2);
      g.push_back(1);
      append(g, range_up(3, i));
      break;
    default:
      throw std::logic_error("gamma: not a classical family");
  }
  return g;
}

std::vector<Node> gamma_word(Family f, int n) {
  std::vector<Node> w;
  for (int i = n; i >= 1; --i) append(w, gamma(f, i));
  return w;
}

// D5 labels -> E6 labels for the D5 subdiagram {1,...,5} of E6: the branch
// node D3 is E4, the long arm D4-D5 is E3-E1 and the spin nodes are E2, E5.
constexpr Node kD5ToE6[] = {0, 2, 5, 4, 3, 1};

const std::vector<Node> kE6Prefix = {1, 3, 4, 2, 5, 4, 3, 1, 6, 5, 4, 2, 3, 4, 5, 6};
const std::vector<Node> kE7Prefix = {7, 6, 5, 4, 2, 3, 4, 5, 6, 7, 1, 3, 4, 5,
                                     2, 4, 3, 1, 6, 5, 4, 2, 3, 4, 5, 6, 7};
// The printed E8 prefix repeats s_2 ("s_1s_3s_4s_2s_2"); one copy is kept.
const std::vector<Node> kE8Prefix = {8, 7, 6, 5, 4, 2, 3, 4, 5, 6, 7, 8, 1, 3, 4, 2, 5, 4, 3,
                                     1, 6, 5, 7, 6, 4, 3, 2, 5, 4, 5, 2, 3, 4, 6, 5, 7, 6, 1,
                                     3, 4, 2, 5, 4, 3, 1, 8, 7, 6, 5, 4, 2, 3, 4, 5, 6, 7, 8};
const std::vector<Node> kF4Word = {4, 3, 2, 3, 4, 1, 2, 3, 2, 1, 4, 3,
                                   2, 3, 4, 1, 2, 3, 2, 1, 2, 3, 2, 3};
const std::vector<Node> kG2Word = {2, 1, 2, 1, 2, 1};

std::vector<Node> e_series_word(int n) {
  std::vector<Node> w;
  if (n == 6) {
    w = kE6Prefix;
    for (Node x : gamma_word(Family::D, 5)) w.push_back(kD5ToE6[x]);
  } else if (n == 7) {
    w = kE7Prefix;
    append(w, e_series_word(6));
  } else {
    w = kE8Prefix;
    append(w, e_series_word(7));
  }
  return w;
}

}  // namespace

// ---------------------------------------------------------------- LieType

LieType::LieType(Family f, int n) : family(f), rank(n) {
  if (!rank_ok(f, n)) {
    throw RankOutOfRange(std::string("rank ") + std::to_string(n) + " is not valid for family " +
                         static_cast<char>(f));
  }
}

LieType LieType::parse(std::string_view text) {
  if (text.size() < 2) throw ParseError("bad Lie type '" + std::string(text) + "'");
  const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  if (std::string_view("ABCDEFG").find(c) == std::string_view::npos) {
    throw ParseError("bad Lie family in '" + std::string(text) + "'");
  }
  int n = 0;
  for (char ch : text.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw ParseError("bad Lie rank in '" + std::string(text) + "'");
    }
    n = n * 10 + (ch - '0');
    if (n > 1000) throw RankOutOfRange("rank too large");
  }
  return LieType(static_cast<Family>(c), n);
}

std::string LieType::name() const { return static_cast<char>(family) + std::to_string(rank); }

bool LieType::simply_laced() const {
  return family == Family::A || family == Family::D || family == Family::E;
}

bool LieType::classical() const {
  return family == Family::A || family == Family::B || family == Family::C ||
         family == Family::D;
}

std::vector<LieType> all_types(int max_rank, bool include_exceptional) {
  std::vector<LieType> out;
  for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
    for (int n = 1; n <= max_rank; ++n) {
      if (rank_ok(f, n)) out.emplace_back(f, n);
    }
  }
  if (include_exceptional) {
    for (int n = 6; n <= 8; ++n) out.emplace_back(Family::E, n);
    out.emplace_back(Family::F, 4);
    out.emplace_back(Family::G, 2);
  }
  return out;
}

// ------------------------------------------------------------- CartanData

CartanData::CartanData(LieType type, std::vector<int> entries, std::vector<int> symmetrizers,
                       std::string numbering_note)
    : type_(type),
      rank_(type.rank),
      entries_(std::move(entries)),
      d_(std::move(symmetrizers)),
      note_(std::move(numbering_note)) {}

int CartanData::max_d() const { return *std::max_element(d_.begin(), d_.end()); }

void CartanData::require_node(Node i) const {
  if (!valid_node(i)) {
    throw InvalidNode("node " + std::to_string(i) + " is not a node of " + type_.name());
  }
}

int CartanData::braid_order(Node i, Node j) const {
  switch (a(i, j) * a(j, i)) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
  }
  throw std::logic_error("braid_order: not a finite type");
}

CartanData cartan_data(LieType t) {
  const int n = t.rank;
  std::vector<int> a(static_cast<std::size_t>(n * n), 0);
  std::vector<int> d(static_cast<std::size_t>(n), 1);
  for (int i = 0; i < n; ++i) a[i * n + i] = 2;
  // a_ij = x, a_ji = y
  auto bond = [&](Node i, Node j, int x, int y) {
    a[(i - 1) * n + (j - 1)] = x;
    a[(j - 1) * n + (i - 1)] = y;
  };
  std::string note;
  switch (t.family) {
    case Family::A:
      for (Node i = 1; i < n; ++i) bond(i, i + 1, -1, -1);
      note = "A_n: chain 1-2-...-n";
      break;
    case Family::B:
      bond(1, 2, -2, -1);
      for (Node i = 2; i < n; ++i) bond(i, i + 1, -1, -1);
      for (Node i = 2; i <= n; ++i) d[i - 1] = 2;
      note = "B_n: chain 1=2-...-n, node 1 short (d_1=1, d_i=2 otherwise)";
      break;
    case Family::C:
      bond(1, 2, -1, -2);
      for (Node i = 2; i < n; ++i) bond(i, i + 1, -1, -1);
      d[0] = 2;
      note = "C_n: chain 1=2-...-n, node 1 long (d_1=2, d_i=1 otherwise)";
      break;
    case Family::D:
      bond(1, 3, -1, -1);
      bond(2, 3, -1, -1);
      for (Node i = 3; i < n; ++i) bond(i, i + 1, -1, -1);
      note = "D_n: spin nodes 1 and 2 both attached to 3, chain 3-4-...-n";
      break;
    case Family::E:
      bond(1, 3, -1, -1);
      bond(3, 4, -1, -1);
      bond(2, 4, -1, -1);
      for (Node i = 4; i < n; ++i) bond(i, i + 1, -1, -1);
      note = "E_n: chain 1-3-4-...-n, node 2 attached to 4";
      break;
    case Family::F:
      bond(1, 2, -1, -1);
      bond(2, 3, -2, -1);
      bond(3, 4, -1, -1);
      d = {1, 1, 2, 2};
      note = "F_4: chain 1-2=3-4, nodes 1 and 2 short";
      break;
    case Family::G:
      bond(1, 2, -3, -1);
      d = {1, 3};
      note = "G_2: node 1 short (d=(1,3))";
      break;
  }
  note += "; convention a_ij = 2(alpha_i,alpha_j)/(alpha_i,alpha_i)";
  return CartanData(t, std::move(a), std::move(d), std::move(note));
}

// ----------------------------------------------------------------- words

std::string WeylWord::to_string() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < letters.size(); ++k) os << (k ? " " : "") << letters[k];
  return os.str();
}

WeylWord WeylWord::parse(std::string_view text) {
  WeylWord w;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    w.letters.push_back(std::stoi(token));
    token.clear();
  };
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      token += c;
    } else if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      flush();
    } else {
      throw ParseError(std::string("unexpected character '") + c + "' in word");
    }
  }
  flush();
  return w;
}

void require_letters(const CartanData& cd, const WeylWord& w) {
  for (Node x : w.letters) {
    if (!cd.valid_node(x)) {
      throw WordInvalid("letter " + std::to_string(x) + " is not a node of " +
                        cd.type().name());
    }
  }
}

Weight simple_reflection(const CartanData& cd, Node i, const Weight& lambda) {
  cd.require_node(i);
  Weight out = lambda;
  const std::int64_t li = lambda.coords[i - 1];
  for (Node j = 1; j <= cd.rank(); ++j) out.coords[j - 1] -= li * cd.a(j, i);
  return out;
}

Weight apply_word(const CartanData& cd, const WeylWord& w, Weight lambda) {
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    lambda = simple_reflection(cd, *it, lambda);
  }
  return lambda;
}

bool is_reduced(const CartanData& cd, const WeylWord& w) {
  require_letters(cd, w);
  const int n = cd.rank();
  const std::size_t k = w.size();
  std::vector<std::int64_t> root(static_cast<std::size_t>(n));
  for (std::size_t j = 0; j < k; ++j) {
    std::fill(root.begin(), root.end(), 0);
    root[w.letters[j] - 1] = 1;
    for (std::size_t t = j + 1; t < k; ++t) {
      const Node i = w.letters[t];
      std::int64_t pairing = 0;
      for (Node m = 1; m <= n; ++m) pairing += root[m - 1] * cd.a(i, m);
      root[i - 1] -= pairing;
    }
    // Roots are either non-negative or non-positive in simple coordinates.
    if (std::any_of(root.begin(), root.end(), [](std::int64_t c) { return c < 0; })) {
      return false;
    }
  }
  return true;
}

std::vector<std::vector<std::int64_t>> positive_roots(const CartanData& cd) {
  const int n = cd.rank();
  std::set<std::vector<std::int64_t>> seen;
  std::deque<std::vector<std::int64_t>> queue;
  for (Node i = 1; i <= n; ++i) {
    std::vector<std::int64_t> r(static_cast<std::size_t>(n), 0);
    r[i - 1] = 1;
    seen.insert(r);
    queue.push_back(std::move(r));
  }
  while (!queue.empty()) {
    auto beta = std::move(queue.front());
    queue.pop_front();
    for (Node i = 1; i <= n; ++i) {
      std::int64_t pairing = 0;
      for (Node m = 1; m <= n; ++m) pairing += beta[m - 1] * cd.a(i, m);
      if (pairing == 0) continue;
      auto image = beta;
      image[i - 1] -= pairing;
      if (std::any_of(image.begin(), image.end(), [](std::int64_t c) { return c < 0; })) {
        continue;  // only s_i(alpha_i) = -alpha_i leaves the positive cone
      }
      if (seen.insert(image).second) queue.push_back(std::move(image));
    }
  }
  return {seen.begin(), seen.end()};
}

int positive_root_count(LieType t) {
  return static_cast<int>(positive_roots(cartan_data(t)).size());
}

WeylWord longest_word(LieType t) {
  WeylWord w;
  switch (t.family) {
    case Family::A:
    case Family::B:
    case Family::C:
    case Family::D:
      w.letters = gamma_word(t.family, t.rank);
      break;
    case Family::E:
      w.letters = e_series_word(t.rank);
      break;
    case Family::F:
      w.letters = kF4Word;
      break;
    case Family::G:
      w.letters = kG2Word;
      break;
  }
  const CartanData cd = cartan_data(t);
  if (static_cast<int>(w.size()) != positive_root_count(t) || !is_reduced(cd, w)) {
    throw std::logic_error("longest_word: built-in word for " + t.name() +
                           " failed validation");
  }
  return w;
}

std::vector<WeylWord> reduced_words_of(const CartanData& cd, const WeylWord& w,
                                       std::size_t limit) {
  if (!is_reduced(cd, w)) throw NotReduced("word '" + w.to_string() + "' is not reduced");
  std::set<WeylWord> seen{w};
  std::deque<WeylWord> queue{w};
  std::vector<WeylWord> out;
  const int n = cd.rank();
  while (!queue.empty() && out.size() < limit) {
    WeylWord cur = std::move(queue.front());
    queue.pop_front();
    out.push_back(cur);
    for (Node s = 1; s <= n; ++s) {
      for (Node t = 1; t <= n; ++t) {
        if (s == t) continue;
        const int m = cd.braid_order(s, t);
        const auto len = static_cast<std::size_t>(m);
        if (cur.size() < len) continue;
        for (std::size_t pos = 0; pos + len <= cur.size(); ++pos) {
          bool match = true;
          for (std::size_t k = 0; k < len && match; ++k) {
            match = cur.letters[pos + k] == (k % 2 == 0 ? s : t);
          }
          if (!match) continue;
          WeylWord next = cur;
          for (std::size_t k = 0; k < len; ++k) next.letters[pos + k] = (k % 2 == 0 ? t : s);
          if (seen.insert(next).second) queue.push_back(std::move(next));
        }
      }
    }
  }
  return out;
}

std::vector<WeylWord> weyl_group_elements(const CartanData& cd, std::size_t max_elements) {
  const int n = cd.rank();
  Weight rho{std::vector<std::int64_t>(static_cast<std::size_t>(n), 1)};
  std::map<std::vector<std::int64_t>, bool> seen{{rho.coords, true}};
  std::vector<std::pair<Weight, WeylWord>> level{{rho, WeylWord{}}};
  std::vector<WeylWord> out{WeylWord{}};
  while (!level.empty()) {
    std::vector<std::pair<Weight, WeylWord>> next;
    for (const auto& [weight, word] : level) {
      for (Node i = 1; i <= n; ++i) {
        Weight image = simple_reflection(cd, i, weight);
        if (!seen.emplace(image.coords, true).second) continue;
        WeylWord longer;
        longer.letters.reserve(word.size() + 1);
        longer.letters.push_back(i);
        append(longer.letters, word.letters);
        out.push_back(longer);
        if (out.size() > max_elements) {
          throw std::length_error("weyl_group_elements: group of " + cd.type().name() +
                                  " exceeds the element limit");
        }
        next.emplace_back(std::move(image), std::move(longer));
      }
    }
    level = std::move(next);
  }
  return out;
}

Node bar_involution(LieType t, Node i) {
  const int n = t.rank;
  switch (t.family) {
    case Family::A:
      return n + 1 - i;
    case Family::D:
      if (n % 2 == 1 && (i == 1 || i == 2)) return 3 - i;
      return i;
    case Family::E:
      if (n == 6) {
        constexpr Node bar6[] = {0, 6, 2, 5, 4, 3, 1};
        return bar6[i];
      }
      return i;
    default:
      return i;
  }
}

}  // namespace qcyc
