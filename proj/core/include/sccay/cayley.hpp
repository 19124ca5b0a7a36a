#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sccay/abelian_group.hpp"
#include "sccay/dense_graph.hpp"
#include "sccay/error.hpp"

namespace sccay {

/// Identity-free, negation-closed subset of an abelian group.
///
/// Elements are kept sorted by group index and are unique. Only
/// validate_connection_set and the operations below create instances, so a
/// ConnectionSet always satisfies its invariants.
class ConnectionSet {
 public:
  const AbelianGroup& group() const noexcept { return group_; }
  const std::vector<int>& indices() const noexcept { return indices_; }
  std::vector<GroupElement> elements() const;
  int size() const noexcept { return static_cast<int>(indices_.size()); }
  bool contains_index(int index) const noexcept;

  friend bool operator==(const ConnectionSet&, const ConnectionSet&) = default;

 private:
  ConnectionSet(AbelianGroup group, std::vector<int> indices)
      : group_(std::move(group)), indices_(std::move(indices)) {}

  friend ConnectionSet validate_connection_set(const AbelianGroup&, std::span<const GroupElement>);
  friend ConnectionSet connection_set_from_indices(const AbelianGroup&, std::vector<int>);

  AbelianGroup group_;
  std::vector<int> indices_;
};

struct ConnectionSetViolation {
  enum class Kind { kIdentity, kMissingInverse };
  Kind kind;
  GroupElement element;     // offending element
  GroupElement missing;     // -element, for kMissingInverse
};

class InvalidConnectionSet : public StructuralError {
 public:
  explicit InvalidConnectionSet(std::vector<ConnectionSetViolation> violations);
  const std::vector<ConnectionSetViolation>& violations() const noexcept { return violations_; }

 private:
  std::vector<ConnectionSetViolation> violations_;
};

/// Validates membership (StructuralError) and then collects every identity
/// and missing-inverse violation into one InvalidConnectionSet.
ConnectionSet validate_connection_set(const AbelianGroup& group, std::span<const GroupElement> elements);
ConnectionSet connection_set_from_indices(const AbelianGroup& group, std::vector<int> indices);

/// Vertices numbered by group index; i ~ j iff g_i - g_j in S.
DenseGraph build_cayley(const ConnectionSet& s);
/// G \ (S u {e}).
ConnectionSet complement_connection_set(const ConnectionSet& s);
/// True iff S generates G.
bool is_connected_cayley(const ConnectionSet& s);
/// {(a, g) : a in S1, g in G2} u {(e, s) : s in S2} over G1 x G2.
ConnectionSet lex_product(const ConnectionSet& s1, const ConnectionSet& s2);

/// "group Z9xZ9" header, then one "i,j" tuple per line; '#' comments.
std::string format_connection_set(const ConnectionSet& s);
ConnectionSet parse_connection_set(std::string_view text);
/// Inline CLI form "Z5:1;4" or "Z3xZ3:0,1;0,2".
ConnectionSet parse_inline_connection_set(std::string_view text);

}  // namespace sccay
