#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sccay/abelian_group.hpp"

namespace sccay {

/// Polynomial of degree < r over Z_p, coefficients constant term first.
struct FieldElement {
  std::vector<int> coeffs;

  friend auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

/// GF(p^r) realised as Z_p[x] / (modulus).
///
/// Conventions used throughout the library:
///  - coefficient vectors are stored constant term first;
///  - element index is mixed radix over (c0, c1, ..., c_{r-1}) with c0 most
///    significant, which is exactly the index of the additive coordinate
///    tuple in Z_p^r.
class FiniteField {
 public:
  static constexpr int kMaxOrder = 4096;

  /// GF(p^r) with the lexicographically smallest monic irreducible modulus.
  static FiniteField make(int p, int r);

  /// Explicit modulus (monic, constant term first, irreducible over Z_p).
  FiniteField(int p, std::vector<int> modulus);

  int characteristic() const noexcept { return p_; }
  int degree() const noexcept { return r_; }
  int order() const noexcept { return q_; }
  const std::vector<int>& modulus() const noexcept { return modulus_; }

  bool contains(const FieldElement& a) const noexcept;
  FieldElement zero() const;
  FieldElement one() const;
  /// The class of x (for r == 1 this is the residue of x mod the linear modulus).
  FieldElement x() const;
  FieldElement from_int(std::int64_t c) const;
  bool is_zero(const FieldElement& a) const;

  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement neg(const FieldElement& a) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  FieldElement pow(const FieldElement& a, std::uint64_t e) const;
  /// Extended Euclid against the modulus; throws ParameterError on zero.
  FieldElement inverse(const FieldElement& a) const;

  int index_of(const FieldElement& a) const;
  FieldElement element_at(int index) const;
  std::vector<FieldElement> elements() const;

  int multiplicative_order(const FieldElement& a) const;
  /// First nonzero element (in index order) of order q-1.
  FieldElement primitive_element() const;

  /// Nonzero squares, sorted by index.
  std::vector<FieldElement> squares() const;
  /// {a^i : i mod 4 in {0,1}} for the given (or default) primitive element,
  /// sorted by index. Requires p = 3 mod 4 and r even.
  std::vector<FieldElement> peisert_set(const std::optional<FieldElement>& generator = {}) const;

  /// Additive group Z_p^r and the coefficient-tuple isomorphism onto it.
  AbelianGroup additive_group() const;
  GroupElement to_group(const FieldElement& a) const;
  FieldElement from_group(const GroupElement& g) const;

  void require_member(const FieldElement& a) const;

 private:
  int p_ = 2;
  int r_ = 1;
  int q_ = 2;
  std::vector<int> modulus_;
};

/// Monic irreducibility over Z_p by trial division with every monic
/// polynomial of degree 1..deg/2.
bool is_irreducible(int p, std::span<const int> monic_poly);

/// "c0,c1,...".
std::string format_field_element(const FieldElement& a);
FieldElement parse_field_element(const FiniteField& field, const std::string& text);
/// Human-readable polynomial, e.g. "x^2+1".
std::string format_polynomial(std::span<const int> coeffs);

}  // namespace sccay
