#pragma once

// Drinfeld polynomial data as multisets of roots a_p q^e, their unique
// factorization into q_i-strings, and the general-position predicate.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "qcyc/root_system.hpp"

namespace qcyc {

/// Spectral parameters a_p with optional declared ratios a_p = q^k a_base.
/// A union-find with offsets; any ratio that cannot be derived from the
/// declared relations is generic.
class ParamEnv {
 public:
  /// Returns the id of `name`, creating it if needed.
  int add(const std::string& name);
  /// Declares a_p = q^k a_base. Throws InconsistentRelations when the new
  /// relation contradicts an earlier one, UnknownParameter for unknown names.
  void relate(const std::string& p, const std::string& base, std::int64_t k);
  void relate(int p, int base, std::int64_t k);

  int id(const std::string& name) const;  // throws UnknownParameter
  bool contains(const std::string& name) const { return ids_.count(name) > 0; }
  const std::string& name(int id) const { return names_.at(static_cast<std::size_t>(id)); }
  int size() const { return static_cast<int>(names_.size()); }

  /// (representative, k) with a_p = q^k a_representative.
  std::pair<int, std::int64_t> resolve(int p) const;
  /// k with a_p = q^k a_p2 if the ratio is determined.
  std::optional<std::int64_t> ratio(int p, int p2) const;

  /// Id of the parameter a_p^{-1} (named "<name>^-1"), created on demand and
  /// related to the inverses of everything a_p is related to.
  int inverse(int p);

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> ids_;
  mutable std::vector<int> parent_;
  mutable std::vector<std::int64_t> offset_;  // a_p = q^offset a_parent
  std::vector<int> inverse_;                  // -1 when not created
};

struct RootKey {
  int param = 0;
  std::int64_t exp = 0;  // root a_param q^exp
  friend auto operator<=>(const RootKey&, const RootKey&) = default;
  friend bool operator==(const RootKey&, const RootKey&) = default;
};

/// prod (1 - a_p q^e u)^mult at one node.
struct RootMultiset {
  Node node = 0;
  std::map<RootKey, std::int64_t> entries;

  void add(int param, std::int64_t exp, std::int64_t mult = 1);
  void add(const RootMultiset& other);
  std::int64_t degree() const;
  bool empty() const { return entries.empty(); }
  friend bool operator==(const RootMultiset&, const RootMultiset&) = default;
};

/// Rewrites every root in terms of the representative of its parameter.
RootMultiset resolve(const RootMultiset& r, const ParamEnv& env);

/// Which power of q spaces strings at node i: q_i = q^{d_i} or plain q.
enum class StringSpacing { Qi, Q };
std::string to_string(StringSpacing s);
StringSpacing parse_string_spacing(const std::string& s);
int spacing_unit(const CartanData& cd, Node i, StringSpacing s);

/// pi_{m, a_param q^center} at `node`, spaced by the node's unit.
struct QString {
  Node node = 0;
  int length = 1;
  int param = 0;
  std::int64_t center = 0;
  friend auto operator<=>(const QString&, const QString&) = default;
  friend bool operator==(const QString&, const QString&) = default;
};

std::string to_string(const QString& s);

/// Roots {center + unit (m - 2r + 1) : r = 1..m}.
RootMultiset string_roots(const CartanData& cd, const QString& s,
                          StringSpacing spacing = StringSpacing::Qi);

/// Two strings of one node violate the factorization condition, i.e.
/// a_j / a_l = q_i^{+-(m_j + m_l - 2p)} for some 0 <= p < min(m_j, m_l).
bool strings_linked(const CartanData& cd, const QString& a, const QString& b,
                    StringSpacing spacing = StringSpacing::Qi, const ParamEnv* env = nullptr);

/// Unique factorization of the roots at node i into strings no two of which
/// are linked. Longest runs are extracted greedily within each parameter and
/// residue class, then the result is verified; a failed verification throws
/// CanonicalDecompositionFailed. Strings come out sorted.
std::vector<QString> canonical_decompose(const CartanData& cd, Node i, const RootMultiset& roots,
                                         StringSpacing spacing = StringSpacing::Qi,
                                         const ParamEnv* env = nullptr);

struct PositionViolation {
  RootKey root;
  QString string;
};

/// Every (root of pi, canonical string of pi') with a / a' = q_i^{-(1 + m')}.
std::vector<PositionViolation> position_violations(const CartanData& cd, Node i,
                                                   const RootMultiset& pi,
                                                   const RootMultiset& pi_prime,
                                                   const ParamEnv& env,
                                                   StringSpacing spacing = StringSpacing::Qi);

struct PositionResult {
  bool holds = true;
  std::optional<PositionViolation> witness;
};

/// Root criterion: pi is in general position with respect to pi'.
PositionResult general_position(const CartanData& cd, Node i, const RootMultiset& pi,
                                const RootMultiset& pi_prime, const ParamEnv& env,
                                StringSpacing spacing = StringSpacing::Qi);

/// String form: a_j / a'_k != q_i^{-(m_j + m'_k - 2p)} for 0 <= p < m_j over
/// the canonical strings of both sides.
bool pairwise_general_position(const CartanData& cd, Node i, const RootMultiset& pi,
                               const RootMultiset& pi_prime, const ParamEnv& env,
                               StringSpacing spacing = StringSpacing::Qi);

}  // namespace qcyc
