#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sccay/abelian_group.hpp"
#include "sccay/cayley.hpp"
#include "sccay/graph_checks.hpp"

namespace sccay {

/// Element of the integral group algebra ZG, coefficients indexed by group index.
class GroupAlgebraElement {
 public:
  static constexpr std::int64_t kCoefficientBound = std::int64_t{1} << 40;

  explicit GroupAlgebraElement(AbelianGroup group);
  GroupAlgebraElement(AbelianGroup group, std::vector<std::int64_t> coeffs);

  const AbelianGroup& group() const noexcept { return group_; }
  const std::vector<std::int64_t>& coeffs() const noexcept { return coeffs_; }
  std::int64_t operator[](int index) const noexcept { return coeffs_[index]; }
  std::int64_t coefficient(const GroupElement& g) const { return coeffs_[group_.index_of(g)]; }

  friend bool operator==(const GroupAlgebraElement&, const GroupAlgebraElement&) = default;

 private:
  AbelianGroup group_;
  std::vector<std::int64_t> coeffs_;
};

/// Indicator sum of T (duplicates are counted once).
GroupAlgebraElement ga_from_set(const AbelianGroup& group, std::span<const GroupElement> set);
GroupAlgebraElement ga_from_indices(const AbelianGroup& group, std::span<const int> indices);
GroupAlgebraElement ga_identity(const AbelianGroup& group);
/// Sum of all group elements.
GroupAlgebraElement ga_total(const AbelianGroup& group);

GroupAlgebraElement ga_add(const GroupAlgebraElement& x, const GroupAlgebraElement& y);
GroupAlgebraElement ga_sub(const GroupAlgebraElement& x, const GroupAlgebraElement& y);
GroupAlgebraElement ga_scale(std::int64_t c, const GroupAlgebraElement& x);
/// Convolution over support pairs. Throws StructuralError on group mismatch
/// and Error when a coefficient would exceed kCoefficientBound.
GroupAlgebraElement ga_mul(const GroupAlgebraElement& x, const GroupAlgebraElement& y);

/// First coefficient at which an identity failed.
struct CoefficientWitness {
  GroupElement element;
  std::int64_t observed = 0;
  std::int64_t expected = 0;
};

struct IdentityCheck {
  bool holds = false;
  std::optional<CoefficientWitness> witness;
  std::string detail;
};

/// Counts d1 - d2 representations via D * (-D) and compares with lambda / mu,
/// and |D| at the identity.
IdentityCheck verify_pds(const AbelianGroup& group, std::span<const GroupElement> set, int lambda, int mu);
/// S^2 == mu G + (lambda - mu) S + (k - mu) e.
IdentityCheck verify_srg_equation(const ConnectionSet& s, const SrgParams& params);
/// S * N == t (G - e) with N the complementary connection set, |G| = 4t+1, |S| = 2t.
IdentityCheck verify_mixed_product(const ConnectionSet& s, int t);

struct SchurCheck {
  bool closed = false;
  /// structure[i][j][l]: coefficient of basis l in basis_i * basis_j, basis
  /// order (e, S, N). Filled only when closed.
  std::vector<std::vector<std::vector<std::int64_t>>> structure;
  std::optional<CoefficientWitness> witness;
  std::string detail;
};

/// Closure of span{e, S, N} under multiplication, N = G \ (S u {e}).
SchurCheck verify_schur_partition(const ConnectionSet& s);

}  // namespace sccay
