#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sccay {

/// Element of Z_{n1} x ... x Z_{nk}, stored as its residue tuple.
struct GroupElement {
  std::vector<int> residues;

  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

/// Finite abelian group presented as a direct product of cyclic factors.
///
/// The factor list is kept exactly as given; it also fixes the vertex
/// numbering of every Cayley graph built over the group. Elements are
/// numbered in mixed radix with the first factor most significant, so for
/// Z9xZ9 the element (i,j) has index 9*i + j.
class AbelianGroup {
 public:
  explicit AbelianGroup(std::vector<int> factors);

  /// Parses "Z9xZ9", "z5", "Z3xZ3xZ3" (case-insensitive, 'x' separator).
  static AbelianGroup parse(std::string_view text);
  /// Z_p^r.
  static AbelianGroup elementary(int p, int r);
  /// Factors of `a` followed by factors of `b`.
  static AbelianGroup direct_product(const AbelianGroup& a, const AbelianGroup& b);

  const std::vector<int>& factors() const noexcept { return factors_; }
  int rank() const noexcept { return static_cast<int>(factors_.size()); }
  int order() const noexcept { return order_; }
  std::string name() const;

  bool contains(const GroupElement& g) const noexcept;
  GroupElement identity() const;
  GroupElement add(const GroupElement& g, const GroupElement& h) const;
  GroupElement neg(const GroupElement& g) const;
  GroupElement sub(const GroupElement& g, const GroupElement& h) const;
  /// m*g for any integer m (negative allowed).
  GroupElement multiple(const GroupElement& g, std::int64_t m) const;
  int element_order(const GroupElement& g) const;

  int index_of(const GroupElement& g) const;
  GroupElement element_at(int index) const;
  std::vector<GroupElement> elements() const;

  // Index-level arithmetic for hot loops; indices are not range-checked.
  int add_index(int a, int b) const noexcept;
  int neg_index(int a) const noexcept;
  int sub_index(int a, int b) const noexcept;
  int residue_of_index(int index, int factor) const noexcept {
    return (index / strides_[factor]) % factors_[factor];
  }
  int stride(int factor) const noexcept { return strides_[factor]; }

  /// {0g, 1g, ..., (ord(g)-1)g}, in that order.
  std::vector<GroupElement> cyclic_subgroup(const GroupElement& g) const;
  /// Indices of the subgroup generated by the given element indices, ascending.
  std::vector<int> generated_subgroup(std::span<const int> generators) const;

  /// Throws StructuralError unless g has the right arity and reduced residues.
  void require_member(const GroupElement& g) const;

  friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) {
    return a.factors_ == b.factors_;
  }

 private:
  std::vector<int> factors_;
  std::vector<int> strides_;
  int order_ = 1;
};

/// "i,j,..." text form.
std::string format_element(const GroupElement& g);
/// Parses "i,j,..." (also accepts "(i,j)"), reducing nothing: residues must be in range.
GroupElement parse_element(const AbelianGroup& group, std::string_view text);

// ---------------------------------------------------------------------------
// Automorphisms

/// Homomorphism of the group given by the image of each canonical generator e_i.
struct GroupAutomorphism {
  std::vector<GroupElement> generator_images;

  friend bool operator==(const GroupAutomorphism&, const GroupAutomorphism&) = default;
};

struct AutomorphismBudget {
  int max_order = 1 << 16;
  std::uint64_t max_candidates = 100'000'000;
};

/// Number of generator-image tuples that pass the homomorphism filter.
std::uint64_t automorphism_candidate_count(const AbelianGroup& group);

/// Brute-force automorphism enumeration.
///
/// Candidate tuples are visited in mixed-radix order (first generator most
/// significant, each position ranging over the elements whose order divides
/// the factor modulus, ascending by index). Non-bijective candidates are
/// skipped. Throws BudgetExceeded at construction when the group or the
/// candidate count is over budget.
class AutomorphismStream {
 public:
  explicit AutomorphismStream(AbelianGroup group, AutomorphismBudget budget = {});

  std::optional<GroupAutomorphism> next();
  /// Index permutation of the automorphism most recently returned by next().
  const std::vector<int>& permutation() const noexcept { return image_; }
  std::uint64_t candidates_examined() const noexcept { return examined_; }
  std::uint64_t automorphisms_yielded() const noexcept { return yielded_; }

 private:
  bool advance();
  bool current_is_bijective();

  AbelianGroup group_;
  std::vector<std::vector<int>> choices_;  // admissible images per generator
  std::vector<std::size_t> cursor_;
  bool exhausted_ = false;
  bool started_ = false;
  std::vector<int> image_;
  std::vector<std::uint32_t> seen_;
  std::uint32_t stamp_ = 0;
  std::uint64_t examined_ = 0;
  std::uint64_t yielded_ = 0;
};

std::vector<GroupAutomorphism> enumerate_automorphisms(const AbelianGroup& group,
                                                       AutomorphismBudget budget = {});

GroupAutomorphism identity_automorphism(const AbelianGroup& group);

GroupElement apply_automorphism(const AbelianGroup& group, const GroupAutomorphism& sigma,
                                const GroupElement& g);
/// Set image, sorted by element index.
std::vector<GroupElement> apply_automorphism(const AbelianGroup& group,
                                             const GroupAutomorphism& sigma,
                                             std::span<const GroupElement> set);
/// perm[index(g)] = index(sigma(g)).
std::vector<int> automorphism_permutation(const AbelianGroup& group,
                                          const GroupAutomorphism& sigma);
/// Checks the homomorphism condition and bijectivity.
bool is_automorphism(const AbelianGroup& group, const GroupAutomorphism& sigma);

}  // namespace sccay
