#pragma once

// The cyclicity condition for tensor products V(pi_1) (x) ... (x) V(pi_r):
// every step polynomial (T_{i_{j+1}} ... T_{i_N} pi_m)_{i_j} must be in
// general position with respect to (pi_l)_{i_j}. Forbidden ratios, the
// S(i1, i2) sets, the Kashiwara-type criterion and the dual / omega twists.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qcyc/qstrings.hpp"
#include "qcyc/root_system.hpp"
#include "qcyc/spectral.hpp"

namespace qcyc {

/// One root multiset per node; an empty entry is the polynomial 1.
struct DrinfeldTuple {
  std::vector<RootMultiset> components;

  explicit DrinfeldTuple(int n = 0);
  int rank() const { return static_cast<int>(components.size()); }
  RootMultiset& at(Node i) { return components.at(static_cast<std::size_t>(i - 1)); }
  const RootMultiset& at(Node i) const { return components.at(static_cast<std::size_t>(i - 1)); }

  /// pi^i_{m, a_param q^center}: a single string at node i.
  static DrinfeldTuple fundamental(const CartanData& cd, Node i, int m, int param,
                                   std::int64_t center = 0,
                                   StringSpacing spacing = StringSpacing::Qi);

  friend bool operator==(const DrinfeldTuple&, const DrinfeldTuple&) = default;
};

struct Witness {
  int step = 0;      // position j in the word
  Node node = 0;     // i_j
  int left = 0;      // factor m (1-based, tensor order)
  int right = 0;     // factor l
  RootKey root;      // offending root of the step polynomial of factor m
  QString string;    // offending canonical string of (pi_l)_{i_j}
};

struct CyclicityVerdict {
  bool holds = true;
  std::vector<Witness> witnesses;  // sorted by (step, left, right, root, string)
};

struct CheckOptions {
  bool strict_pairs = false;  // true: all m <= l; false: m < l
  StringSpacing spacing = StringSpacing::Qi;
  BraidRule rule = BraidRule::Symmetrized;
};

/// Evaluates the condition over the given reduced word for w_0 (the fixed
/// longest word when absent). Throws WordInvalid for a word that is not a
/// reduced word of w_0 and NegativeMultiplicity if a step polynomial is not
/// a polynomial.
CyclicityVerdict check_cyclic(LieType t, const std::vector<DrinfeldTuple>& factors,
                              const ParamEnv& env, const std::optional<WeylWord>& word = {},
                              const CheckOptions& opts = {});

/// Sorted, duplicate-free exponents k, each standing for the ratio q^k.
using ExponentSet = std::set<std::int64_t>;

std::string to_string(const ExponentSet& s);                 // "{2, 6, 8}"
ExponentSet translate(const ExponentSet& s, std::int64_t by);

/// Exponents k for which [pi^{i1}_{m1,a}, pi^{i2}_{m2,b}] with b = q^k a
/// fails the condition: {e + d_{i2}(m2 + 1)} over the roots a q^e of the
/// step polynomials at positions with i_j = i2.
ExponentSet forbidden_ratios(LieType t, Node i1, int m1, Node i2, int m2,
                             BraidRule rule = BraidRule::Symmetrized,
                             const std::optional<WeylWord>& word = {});

/// |k| bound outside of which the pair can never be in special position:
/// the largest step shift plus both string radii and the offset.
std::int64_t sufficient_window(LieType t, Node i1, int m1, Node i2, int m2,
                               BraidRule rule = BraidRule::Symmetrized);

/// Exhaustive check_cyclic over k in [-window, window].
ExponentSet forbidden_ratios_sweep(LieType t, Node i1, int m1, Node i2, int m2,
                                   std::int64_t window, const CheckOptions& opts = {});

/// Step shifts of the first factor pi^{i1}_{1,a}, seen at node i2:
/// forbidden_ratios(t, i1, 1, i2, 1) translated by -2 d_{i2}.
ExponentSet core_set(LieType t, Node i1, Node i2, BraidRule rule = BraidRule::Symmetrized);

/// How the printed S(i1, i2) tables are normalized: the classical closed
/// forms list core_set, the exceptional tables list the ratio
/// forbidden_ratios(t, i1, 1, i2, 1) itself.
enum class TableNormalization { Core, Ratio };
TableNormalization tabulated_normalization(LieType t);

/// The computed counterpart of the tabulated S(i1, i2).
ExponentSet s_set(LieType t, Node i1, Node i2, BraidRule rule = BraidRule::Symmetrized);

/// Union over p = 1..m1 of core_set translated by D - 2 d_{i1} p, where
/// D = d_{i1} m1 + d_{i2} m2 + d_{i1} + d_{i2}.
ExponentSet corollary_composition(LieType t, Node i1, int m1, Node i2, int m2,
                                  BraidRule rule = BraidRule::Symmetrized);

struct KashiwaraSpec {
  Node node = 0;
  int m = 1;
  std::int64_t exp = 0;  // a_j = q^exp a
};

/// True iff exp_r - exp_s > d_{k_r} m_r - d_{k_s} m_s - d_{k_r} - d_{k_s}
/// for every r < s.
bool kashiwara_check(LieType t, const std::vector<KashiwaraSpec>& specs);

/// pi* = (pi_{1bar}(q^c u), ..., pi_{nbar}(q^c u)). Throws ConstantRequired
/// without c.
std::vector<DrinfeldTuple> transform_dual(LieType t, const std::vector<DrinfeldTuple>& factors,
                                          std::optional<std::int64_t> c);

/// pi^omega = (pi^-_{1bar}(q_1^2 kappa u), ...), kappa = q^k: every root
/// a_p q^e at node ibar moves to a_p^{-1} q^{-e + 2 d_i + k} at node i.
/// Parameters a_p^{-1} are created in env. Throws ConstantRequired without k.
std::vector<DrinfeldTuple> transform_omega(LieType t, const std::vector<DrinfeldTuple>& factors,
                                           std::optional<std::int64_t> kappa, ParamEnv& env);

}  // namespace qcyc
