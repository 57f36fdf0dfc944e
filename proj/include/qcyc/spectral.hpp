#pragma once

// n-tuples of formal series h = (h_1(u), ..., h_n(u)) held exactly as signed
// multisets of shifted symbols, and the braid group action on them.
//
// A symbol is either the generator h_k(q^e u) (Formal) or the series
// -ln(1 - a_p q^e u) (Root), so substitution u -> q^s u only moves shifts.

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qcyc/laurent.hpp"
#include "qcyc/root_system.hpp"

namespace qcyc {

struct SpectralSource {
  enum class Kind : std::uint8_t { Formal, Root };
  Kind kind = Kind::Formal;
  int id = 0;  // node for Formal, parameter id for Root

  static SpectralSource formal(Node k) { return {Kind::Formal, k}; }
  static SpectralSource root(int param) { return {Kind::Root, param}; }

  friend auto operator<=>(const SpectralSource&, const SpectralSource&) = default;
  friend bool operator==(const SpectralSource&, const SpectralSource&) = default;
};

struct SpectralSymbol {
  SpectralSource source;
  std::int64_t shift = 0;

  friend auto operator<=>(const SpectralSymbol&, const SpectralSymbol&) = default;
  friend bool operator==(const SpectralSymbol&, const SpectralSymbol&) = default;
};

/// One component: symbol -> non-zero signed multiplicity, ordered by
/// (source, shift).
using SpectralComponent = std::map<SpectralSymbol, std::int64_t>;

class SpectralVector {
 public:
  explicit SpectralVector(int n = 0) : comps_(static_cast<std::size_t>(n)) {}

  /// (h_1, ..., h_n), each generator unshifted.
  static SpectralVector formal(int n);

  int size() const { return static_cast<int>(comps_.size()); }
  const SpectralComponent& component(Node j) const { return comps_[j - 1]; }
  void add(Node j, SpectralSymbol s, std::int64_t mult);
  void add_component(Node j, const SpectralComponent& c, std::int64_t shift,
                     std::int64_t scale = 1);
  bool is_zero() const;

  SpectralVector& operator+=(const SpectralVector& rhs);
  friend SpectralVector operator+(SpectralVector a, const SpectralVector& b) { return a += b; }
  friend SpectralVector operator*(std::int64_t k, const SpectralVector& v);

  friend bool operator==(const SpectralVector&, const SpectralVector&) = default;

 private:
  std::vector<SpectralComponent> comps_;
};

/// Which shift list carries h_i into component j under T_i.
///   Symmetrized: shifts d_i + d_j(|a_ji| - 1 - 2t), t = 0..|a_ji|-1. Agrees
///                with the per-degree matrix form in every type and satisfies
///                the braid relations.
///   AsPrinted:   2|a_ji|-1, ..., 3, 1 regardless of d_i. Differs from
///                Symmetrized only when a_ji = -1 and d_i > 1 (long-long
///                edges of B_n, n >= 3, and F_4); kept for diagnostics.
enum class BraidRule { Symmetrized, AsPrinted };

std::string to_string(BraidRule r);
BraidRule parse_braid_rule(const std::string& s);

std::vector<std::int64_t> substitution_shifts(const CartanData& cd, Node i, Node j,
                                              BraidRule rule = BraidRule::Symmetrized);

/// T_i: component i becomes -h_i(q_i^2 u); component j (a_ji < 0) gains the
/// shifted copies of h_i; other components are unchanged.
SpectralVector braid_generator(const CartanData& cd, Node i, const SpectralVector& v,
                               BraidRule rule = BraidRule::Symmetrized);

/// T_{i_1} T_{i_2} ... T_{i_k} v: the last letter acts first.
SpectralVector braid_word(const CartanData& cd, const WeylWord& w, const SpectralVector& v,
                          BraidRule rule = BraidRule::Symmetrized);

struct StepComponent {
  int position = 0;  // 1-based j
  Node node = 0;     // i_j
  SpectralComponent content;  // (T_{i_{j+1}} ... T_{i_N} v)_{i_j}
};

/// One right-to-left sweep over w recording, for each j, the i_j-th component
/// of the suffix action before T_{i_j} is applied.
std::vector<StepComponent> step_components(const CartanData& cd, const WeylWord& w,
                                           const SpectralVector& v,
                                           BraidRule rule = BraidRule::Symmetrized);

using LaurentMatrix = std::vector<std::vector<LaurentPoly>>;

/// Degree-r matrix of T_i in the basis e_1..e_n: column j is the image
/// T_i e_j = e_j - q_i^r [r a_ji]_j / [r]_j e_i.
LaurentMatrix matrix_generator(const CartanData& cd, Node i, int r);

/// Degree-r coefficient matrix of the substitution action: entry (j, k) is
/// the sum of mult * q^{r e} over symbols h_k(q^e u) of (T_i h)_j.
LaurentMatrix substitution_matrix(const CartanData& cd, Node i, int r,
                                  BraidRule rule = BraidRule::Symmetrized);

LaurentMatrix transpose(const LaurentMatrix& m);

/// Edges where the printed substitution shifts disagree with the matrix form.
struct RuleDiscrepancy {
  Node i = 0;  // acting generator
  Node j = 0;  // receiving component
  std::vector<std::int64_t> matrix_shifts;
  std::vector<std::int64_t> printed_shifts;
};
std::vector<RuleDiscrepancy> rule_discrepancies(const CartanData& cd);

struct PositivityReport {
  bool ok = true;
  std::int64_t max_shift = 0;  // M
  std::vector<SpectralSymbol> offending;
  SpectralComponent content;  // (T_w h)_i
  std::string detail;
};

/// Checks that (T_w h)_i of the formal vector has non-negative multiplicities
/// and, when i does not occur in w, that it is h_i(u) plus positively shifted
/// symbols of nodes occurring in w. Requires l(s_i w) = l(w) + 1; throws
/// LengthPreconditionViolated otherwise.
PositivityReport check_positivity(const CartanData& cd, const WeylWord& w, Node i,
                                  BraidRule rule = BraidRule::Symmetrized);

/// Diagnostic text: one line per symbol,
/// "component=<j> source=<h_k|param> shift=<e> mult=<m>", sorted.
std::string to_diagnostic_text(const SpectralVector& v,
                               const std::function<std::string(int)>& param_name = {});

}  // namespace qcyc
