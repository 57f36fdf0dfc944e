#pragma once

// Cartan data, Weyl group words and the fixed reduced expressions for the
// longest element used throughout the cyclicity computations.
//
// Node numbering (1-based) follows these conventions:
//   A_n  chain 1-2-...-n
//   B_n  chain with node 1 the unique short root (1=2 double bond)
//   C_n  chain with node 1 the unique long root
//   D_n  nodes 1 and 2 are the spin nodes, both attached to 3; 3-4-...-n
//   E_n  1-3-4-5-...-n with node 2 attached to 4
//   F_4  1-2=3-4 with nodes 1, 2 short
//   G_2  node 1 short
// and a_ij = 2(alpha_i, alpha_j)/(alpha_i, alpha_i), so d_i a_ij = d_j a_ji
// and s_i(alpha_j) = alpha_j - a_ij alpha_i.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qcyc {

using Node = int;  // 1-based Dynkin node index

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct LieType {
  Family family = Family::A;
  int rank = 1;

  LieType() = default;
  /// Throws RankOutOfRange unless the rank is admissible for the family.
  LieType(Family f, int n);

  /// Accepts "A3", "E8", "G2" (case-insensitive family letter).
  static LieType parse(std::string_view text);
  std::string name() const;
  bool simply_laced() const;
  bool classical() const;

  friend bool operator==(const LieType&, const LieType&) = default;
  friend auto operator<=>(const LieType&, const LieType&) = default;
};

/// Every valid type of rank <= max_rank plus all exceptional types if
/// include_exceptional.
std::vector<LieType> all_types(int max_rank, bool include_exceptional = true);

class CartanData {
 public:
  CartanData(LieType type, std::vector<int> entries, std::vector<int> symmetrizers,
             std::string numbering_note);

  const LieType& type() const { return type_; }
  int rank() const { return rank_; }
  /// a_ij, 1-based.
  int a(Node i, Node j) const { return entries_[(i - 1) * rank_ + (j - 1)]; }
  /// Symmetrizer d_i, 1-based; min over nodes is 1.
  int d(Node i) const { return d_[i - 1]; }
  int max_d() const;
  const std::vector<int>& symmetrizers() const { return d_; }
  const std::string& numbering_note() const { return note_; }
  bool valid_node(Node i) const { return i >= 1 && i <= rank_; }
  void require_node(Node i) const;

  /// Order of s_i s_j: 2, 3, 4 or 6 for a_ij a_ji = 0, 1, 2, 3.
  int braid_order(Node i, Node j) const;

 private:
  LieType type_;
  int rank_;
  std::vector<int> entries_;
  std::vector<int> d_;
  std::string note_;
};

CartanData cartan_data(LieType t);

/// Coordinates in the basis of fundamental weights.
struct Weight {
  std::vector<std::int64_t> coords;
  friend bool operator==(const Weight&, const Weight&) = default;
};

/// Word s_{i_1} s_{i_2} ... s_{i_k}; letters are node indices.
struct WeylWord {
  std::vector<Node> letters;

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  std::string to_string() const;  // "1 2 1"
  static WeylWord parse(std::string_view text);  // whitespace or comma separated

  friend bool operator==(const WeylWord&, const WeylWord&) = default;
  friend auto operator<=>(const WeylWord&, const WeylWord&) = default;
};

/// Throws WordInvalid if any letter is outside 1..rank.
void require_letters(const CartanData& cd, const WeylWord& w);

/// (s_i lambda)_j = lambda_j - lambda_i a_ji.
Weight simple_reflection(const CartanData& cd, Node i, const Weight& lambda);

/// s_{i_1} ... s_{i_k} lambda; the last letter acts first.
Weight apply_word(const CartanData& cd, const WeylWord& w, Weight lambda);

/// Root tracking: s_{i_1}...s_{i_k} is reduced iff every
/// s_{i_k}...s_{i_{j+1}}(alpha_{i_j}) is a positive root.
bool is_reduced(const CartanData& cd, const WeylWord& w);

/// Positive roots in simple-root coordinates by reflection closure.
std::vector<std::vector<std::int64_t>> positive_roots(const CartanData& cd);
int positive_root_count(LieType t);

/// The fixed reduced word for w_0 of each type (gamma words for A-D, the
/// nested E-series words, the F4 and G2 words). Validated on construction.
WeylWord longest_word(LieType t);

/// Up to `limit` distinct reduced words of the same element, by breadth-first
/// braid moves starting from w. Throws NotReduced.
std::vector<WeylWord> reduced_words_of(const CartanData& cd, const WeylWord& w,
                                       std::size_t limit);

/// One reduced word for every element of W, in order of length. Throws
/// std::length_error when |W| exceeds max_elements.
std::vector<WeylWord> weyl_group_elements(const CartanData& cd,
                                          std::size_t max_elements = 200000);

/// Diagram automorphism i -> i-bar with V(omega_i)* = V(omega_{i-bar}).
Node bar_involution(LieType t, Node i);

}  // namespace qcyc
