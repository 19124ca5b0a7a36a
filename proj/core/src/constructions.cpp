#include "sccay/constructions.hpp"

#include <algorithm>
#include <set>

#include "sccay/error.hpp"
#include "sccay/number_theory.hpp"

namespace sccay {

namespace {

std::pair<int, int> require_prime_power(int q, const char* family) {
  auto [p, r] = prime_power(q);
  if (p == 0) {
    throw ParameterError(std::string(family) + ": q = " + std::to_string(q) + " is not a prime power");
  }
  return {static_cast<int>(p), r};
}

ConnectionSet image_in_group(const FiniteField& field, const std::vector<FieldElement>& set) {
  std::vector<GroupElement> elements;
  elements.reserve(set.size());
  for (const auto& a : set) elements.push_back(field.to_group(a));
  return validate_connection_set(field.additive_group(), elements);
}

GroupElement pair(int a, int b) { return GroupElement{{a, b}}; }

std::vector<int> subgroup_indices(const AbelianGroup& g, const GroupElement& gen) {
  std::vector<int> out;
  for (const auto& x : g.cyclic_subgroup(gen)) out.push_back(g.index_of(x));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

ConstructionReport paley(int q) {
  auto [p, r] = require_prime_power(q, "paley");
  if (q % 4 != 1) {
    throw ParameterError("paley: q = " + std::to_string(q) +
                         " is not 1 mod 4, so the squares are not closed under negation");
  }
  const FiniteField field = FiniteField::make(p, r);
  ConstructionReport report{
      "paley", {{"q", q}, {"p", p}, {"r", r}, {"t", (q - 1) / 4}},
      image_in_group(field, field.squares()), FieldInfo{p, r, field.modulus(), field.primitive_element()},
      std::nullopt, {}};
  return report;
}

ConstructionReport peisert(int q, const std::optional<FieldElement>& generator) {
  auto [p, r] = require_prime_power(q, "peisert");
  if (p % 4 != 3) {
    throw ParameterError("peisert: requires p = 3 mod 4, got p = " + std::to_string(p));
  }
  if (r % 2 != 0) {
    throw ParameterError("peisert: requires even extension degree, got r = " + std::to_string(r));
  }
  const FiniteField field = FiniteField::make(p, r);
  const FieldElement a = generator ? *generator : field.primitive_element();
  ConstructionReport report{"peisert",
                            {{"q", q}, {"p", p}, {"r", r}, {"t", (q - 1) / 4}},
                            image_in_group(field, field.peisert_set(a)),
                            FieldInfo{p, r, field.modulus(), a},
                            std::nullopt,
                            {}};
  if (generator) report.notes.push_back("primitive element overridden by caller");
  return report;
}

ConstructionReport davis(int p) {
  if (p < 3 || !is_prime(p)) {
    throw ParameterError("davis: p = " + std::to_string(p) + " must be an odd prime");
  }
  if (std::int64_t{p} * p * p * p > (1 << 20)) {
    throw ParameterError("davis: p = " + std::to_string(p) + " is beyond the supported group size");
  }
  const int n = p * p;
  const AbelianGroup group({n, n});

  DavisLayout layout;
  for (int j = 1; j <= p * (p - 1) / 2; ++j) layout.c_generators.push_back(pair(1, j));
  for (int i = 1; i <= (p - 1) / 2; ++i) layout.c_generators.push_back(pair(i * p, 1));

  layout.d_generators = {pair(1, 0), pair(0, 1)};
  layout.trailing_range_first = (p * p - p) / 2 + 1;
  layout.trailing_range_last = (p * p + 1) / 2 - 2;
  const int literal = std::max(0, layout.trailing_range_last - layout.trailing_range_first + 1);
  // |S| = (p^4-1)/2 forces (p+1)/2 subgroups in the D list.
  const int required = (p + 1) / 2 - 2;
  for (int j = 0; j < required; ++j) layout.d_generators.push_back(pair(1, layout.trailing_range_first + j));
  if (literal == required) {
    layout.reading = "literal range j = " + std::to_string(layout.trailing_range_first) + ".." +
                     std::to_string(layout.trailing_range_last) + " (" + std::to_string(literal) +
                     " subgroups) agrees with the cardinality count " + std::to_string(required);
  } else {
    layout.reading = "literal range j = " + std::to_string(layout.trailing_range_first) + ".." +
                     std::to_string(layout.trailing_range_last) + " gives " + std::to_string(literal) +
                     " subgroups; cardinality count gives " + std::to_string(required) +
                     "; using the cardinality count";
  }

  // Every listed subgroup must be a distinct cyclic subgroup of order p^2.
  std::set<std::vector<int>> seen;
  for (const auto* gens : {&layout.c_generators, &layout.d_generators}) {
    for (const auto& gen : *gens) {
      if (group.element_order(gen) != n) {
        throw ConstructionError("davis: generator (" + format_element(gen) + ") does not have order p^2");
      }
      if (!seen.insert(subgroup_indices(group, gen)).second) {
        throw ConstructionError("davis: subgroup <(" + format_element(gen) + ")> listed twice");
      }
    }
  }

  std::vector<char> in_c(static_cast<std::size_t>(group.order()), 0);
  std::vector<char> in_d(static_cast<std::size_t>(group.order()), 0);
  for (const auto& gen : layout.c_generators) {
    for (const auto& x : group.cyclic_subgroup(gen)) {
      if (group.element_order(x) == n) in_c[group.index_of(x)] = 1;
    }
  }
  for (const auto& gen : layout.d_generators) {
    for (const auto& x : group.cyclic_subgroup(gen)) {
      if (x != group.identity()) in_d[group.index_of(x)] = 1;
    }
  }
  std::vector<int> s;
  for (int i = 0; i < group.order(); ++i) {
    layout.c_size += in_c[i];
    layout.d_size += in_d[i];
    if (in_c[i] && in_d[i]) {
      throw ConstructionError("davis: C and D intersect at (" + format_element(group.element_at(i)) + ")");
    }
    if (in_c[i] || in_d[i]) s.push_back(i);
  }
  const int expected_c = (n - 1) / 2 * (n - p);
  const int expected_d = (p + 1) / 2 * (n - 1);
  const int expected_s = (n * n - 1) / 2;
  if (layout.c_size != expected_c || layout.d_size != expected_d || static_cast<int>(s.size()) != expected_s) {
    throw ConstructionError("davis: set sizes |C| = " + std::to_string(layout.c_size) + ", |D| = " +
                            std::to_string(layout.d_size) + ", |S| = " + std::to_string(s.size()) +
                            "; expected " + std::to_string(expected_c) + ", " + std::to_string(expected_d) +
                            ", " + std::to_string(expected_s));
  }

  ConstructionReport report{"davis",
                            {{"p", p}, {"t", (n * n - 1) / 4}},
                            connection_set_from_indices(group, std::move(s)),
                            std::nullopt,
                            layout,
                            {layout.reading}};
  return report;
}

ConstructionReport lexprod(const ConstructionReport& outer, const ConstructionReport& inner) {
  ConstructionReport report{"lexprod", {}, lex_product(outer.connection_set, inner.connection_set),
                            std::nullopt, std::nullopt, {}};
  for (const auto& [k, v] : outer.parameters) report.parameters["outer_" + k] = v;
  for (const auto& [k, v] : inner.parameters) report.parameters["inner_" + k] = v;
  report.notes.push_back("outer family " + outer.family + " over " + outer.group().name());
  report.notes.push_back("inner family " + inner.family + " over " + inner.group().name());
  return report;
}

std::string to_string(Feasibility::Case c) {
  switch (c) {
    case Feasibility::Case::kNone: return "none";
    case Feasibility::Case::kPrimePower: return "prime-power";
    case Feasibility::Case::kFourthPower: return "n^4";
    case Feasibility::Case::kNineTimesFourthPower: return "9n^4";
  }
  return "unknown";
}

Feasibility paley_type_order_feasible(std::int64_t m) {
  Feasibility out;
  if (m < 2) {
    out.reason = std::to_string(m) + " is below the smallest group order";
    return out;
  }
  if (auto [p, e] = prime_power(m); p != 0) {
    if (m % 4 == 1) {
      out.feasible = true;
      out.which = Feasibility::Case::kPrimePower;
      out.base = p;
      out.reason = std::to_string(m) + " = " + std::to_string(p) + "^" + std::to_string(e) + " = 1 mod 4";
    } else {
      out.reason = std::to_string(m) + " is a prime power but not 1 mod 4";
    }
    return out;
  }
  if (std::int64_t n = exact_root(m, 4); n > 1 && n % 2 == 1) {
    out.feasible = true;
    out.which = Feasibility::Case::kFourthPower;
    out.base = n;
    out.reason = std::to_string(m) + " = " + std::to_string(n) + "^4";
    return out;
  }
  if (m % 9 == 0) {
    if (std::int64_t n = exact_root(m / 9, 4); n > 1 && n % 2 == 1) {
      out.feasible = true;
      out.which = Feasibility::Case::kNineTimesFourthPower;
      out.base = n;
      out.reason = std::to_string(m) + " = 9*" + std::to_string(n) + "^4";
      return out;
    }
  }
  out.reason = std::to_string(m) + " is neither a prime power = 1 mod 4 nor n^4 nor 9n^4 with n > 1 odd";
  return out;
}

}  // namespace sccay
