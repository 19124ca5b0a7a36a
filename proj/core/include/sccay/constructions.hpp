#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sccay/abelian_group.hpp"
#include "sccay/cayley.hpp"
#include "sccay/finite_field.hpp"

namespace sccay {

/// Field data recorded by the finite-field families.
struct FieldInfo {
  int p = 0;
  int r = 0;
  std::vector<int> modulus;
  FieldElement primitive_element;  // generator used (Peisert) or the default one (Paley)
};

/// Cyclic-subgroup bookkeeping for the Z_{p^2} x Z_{p^2} family.
struct DavisLayout {
  std::vector<GroupElement> c_generators;  // contribute their elements of order p^2
  std::vector<GroupElement> d_generators;  // contribute all non-identity elements
  int trailing_range_first = 0;            // literal bounds of the trailing <(1,j)> range
  int trailing_range_last = 0;
  int c_size = 0;
  int d_size = 0;
  std::string reading;  // how the trailing D range was resolved
};

struct ConstructionReport {
  std::string family;
  std::map<std::string, std::int64_t> parameters;
  ConnectionSet connection_set;
  std::optional<FieldInfo> field;
  std::optional<DavisLayout> davis;
  std::vector<std::string> notes;

  const AbelianGroup& group() const noexcept { return connection_set.group(); }
};

/// Paley connection set over Z_p^r: the nonzero squares of GF(q), q = 1 mod 4.
ConstructionReport paley(int q);
/// Peisert connection set {a^i : i = 0,1 mod 4}; q = p^r with p = 3 mod 4, r even.
ConstructionReport peisert(int q, const std::optional<FieldElement>& generator = {});
/// Paley-type set over Z_{p^2} x Z_{p^2} built from cyclic subgroups, p odd prime.
ConstructionReport davis(int p);
/// Lexicographic product of two reports' connection sets.
ConstructionReport lexprod(const ConstructionReport& outer, const ConstructionReport& inner);

struct Feasibility {
  enum class Case { kNone, kPrimePower, kFourthPower, kNineTimesFourthPower };
  bool feasible = false;
  Case which = Case::kNone;
  std::int64_t base = 0;  // p for prime powers, n for n^4 and 9 n^4
  std::string reason;
};

std::string to_string(Feasibility::Case c);

/// True iff m is a prime power = 1 mod 4, or m = n^4 or 9 n^4 with n > 1 odd.
Feasibility paley_type_order_feasible(std::int64_t m);

}  // namespace sccay
