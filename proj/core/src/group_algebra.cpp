#include "sccay/group_algebra.hpp"

#include <cstdlib>

#include "sccay/error.hpp"

namespace sccay {

GroupAlgebraElement::GroupAlgebraElement(AbelianGroup group)
    : group_(std::move(group)), coeffs_(static_cast<std::size_t>(group_.order()), 0) {}

GroupAlgebraElement::GroupAlgebraElement(AbelianGroup group, std::vector<std::int64_t> coeffs)
    : group_(std::move(group)), coeffs_(std::move(coeffs)) {
  if (static_cast<int>(coeffs_.size()) != group_.order()) {
    throw StructuralError("group algebra element needs exactly |G| coefficients");
  }
}

GroupAlgebraElement ga_from_indices(const AbelianGroup& group, std::span<const int> indices) {
  std::vector<std::int64_t> c(static_cast<std::size_t>(group.order()), 0);
  for (int i : indices) {
    if (i < 0 || i >= group.order()) throw StructuralError("group algebra: index out of range");
    c[i] = 1;
  }
  return GroupAlgebraElement(group, std::move(c));
}

GroupAlgebraElement ga_from_set(const AbelianGroup& group, std::span<const GroupElement> set) {
  std::vector<int> idx;
  idx.reserve(set.size());
  for (const auto& g : set) idx.push_back(group.index_of(g));
  return ga_from_indices(group, idx);
}

GroupAlgebraElement ga_identity(const AbelianGroup& group) {
  const int e = 0;
  return ga_from_indices(group, std::span<const int>(&e, 1));
}

GroupAlgebraElement ga_total(const AbelianGroup& group) {
  return GroupAlgebraElement(group, std::vector<std::int64_t>(static_cast<std::size_t>(group.order()), 1));
}

namespace {

void require_same_group(const GroupAlgebraElement& x, const GroupAlgebraElement& y) {
  if (!(x.group() == y.group())) {
    throw StructuralError("group algebra operands live in " + x.group().name() + " and " + y.group().name());
  }
}

}  // namespace

GroupAlgebraElement ga_add(const GroupAlgebraElement& x, const GroupAlgebraElement& y) {
  require_same_group(x, y);
  std::vector<std::int64_t> c = x.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += y.coeffs()[i];
  return GroupAlgebraElement(x.group(), std::move(c));
}

GroupAlgebraElement ga_sub(const GroupAlgebraElement& x, const GroupAlgebraElement& y) {
  return ga_add(x, ga_scale(-1, y));
}

GroupAlgebraElement ga_scale(std::int64_t c, const GroupAlgebraElement& x) {
  std::vector<std::int64_t> out = x.coeffs();
  for (auto& v : out) v *= c;
  return GroupAlgebraElement(x.group(), std::move(out));
}

GroupAlgebraElement ga_mul(const GroupAlgebraElement& x, const GroupAlgebraElement& y) {
  require_same_group(x, y);
  const AbelianGroup& g = x.group();
  std::vector<int> xs, ys;
  std::int64_t norm_x = 0, norm_y = 0;
  for (int i = 0; i < g.order(); ++i) {
    if (x[i]) {
      xs.push_back(i);
      norm_x += std::llabs(x[i]);
    }
    if (y[i]) {
      ys.push_back(i);
      norm_y += std::llabs(y[i]);
    }
  }
  // Every output coefficient is bounded by |x|_1 |y|_1.
  if (norm_x != 0 && norm_y > GroupAlgebraElement::kCoefficientBound / norm_x) {
    throw Error("group algebra product may exceed the coefficient bound");
  }
  std::vector<std::int64_t> out(static_cast<std::size_t>(g.order()), 0);
  for (int a : xs) {
    const std::int64_t ca = x[a];
    for (int b : ys) out[g.add_index(a, b)] += ca * y[b];
  }
  return GroupAlgebraElement(g, std::move(out));
}

namespace {

IdentityCheck compare(const GroupAlgebraElement& lhs, const GroupAlgebraElement& rhs, std::string what) {
  IdentityCheck out;
  out.detail = std::move(what);
  for (int i = 0; i < lhs.group().order(); ++i) {
    if (lhs[i] != rhs[i]) {
      out.witness = CoefficientWitness{lhs.group().element_at(i), lhs[i], rhs[i]};
      return out;
    }
  }
  out.holds = true;
  return out;
}

}  // namespace

IdentityCheck verify_pds(const AbelianGroup& group, std::span<const GroupElement> set, int lambda, int mu) {
  std::vector<int> idx, neg_idx;
  for (const auto& d : set) {
    idx.push_back(group.index_of(d));
    neg_idx.push_back(group.neg_index(idx.back()));
  }
  const auto d = ga_from_indices(group, idx);
  const auto d_inv = ga_from_indices(group, neg_idx);
  const auto diffs = ga_mul(d, d_inv);

  std::int64_t size = 0;
  for (auto c : d.coeffs()) size += c;
  IdentityCheck out;
  out.detail = "D(-D) with lambda = " + std::to_string(lambda) + ", mu = " + std::to_string(mu);
  for (int i = 0; i < group.order(); ++i) {
    const std::int64_t expected = i == 0 ? size : (d[i] ? lambda : mu);
    if (diffs[i] != expected) {
      out.witness = CoefficientWitness{group.element_at(i), diffs[i], expected};
      return out;
    }
  }
  out.holds = true;
  return out;
}

IdentityCheck verify_srg_equation(const ConnectionSet& s, const SrgParams& params) {
  const AbelianGroup& g = s.group();
  if (params.n != g.order() || params.k != s.size()) {
    IdentityCheck out;
    out.detail = "parameters " + to_string(params) + " do not match |G| = " + std::to_string(g.order()) +
                 ", |S| = " + std::to_string(s.size());
    return out;
  }
  const auto sbar = ga_from_indices(g, s.indices());
  const auto lhs = ga_mul(sbar, sbar);
  const auto rhs = ga_add(ga_add(ga_scale(params.mu, ga_total(g)), ga_scale(params.lambda - params.mu, sbar)),
                          ga_scale(params.k - params.mu, ga_identity(g)));
  return compare(lhs, rhs, "S^2 = mu G + (lambda - mu) S + (k - mu) e with " + to_string(params));
}

IdentityCheck verify_mixed_product(const ConnectionSet& s, int t) {
  const AbelianGroup& g = s.group();
  if (g.order() != 4 * t + 1 || s.size() != 2 * t) {
    throw ParameterError("verify_mixed_product: need |G| = 4t+1 and |S| = 2t for t = " + std::to_string(t));
  }
  const auto sbar = ga_from_indices(g, s.indices());
  const auto nbar = ga_from_indices(g, complement_connection_set(s).indices());
  const auto lhs = ga_mul(sbar, nbar);
  const auto rhs = ga_scale(t, ga_sub(ga_total(g), ga_identity(g)));
  return compare(lhs, rhs, "S N = t (G - e) with t = " + std::to_string(t));
}

SchurCheck verify_schur_partition(const ConnectionSet& s) {
  const AbelianGroup& g = s.group();
  const ConnectionSet n = complement_connection_set(s);
  // cell[i]: 0 for identity, 1 for S, 2 for N.
  std::vector<int> cell(static_cast<std::size_t>(g.order()), 2);
  cell[0] = 0;
  for (int i : s.indices()) cell[i] = 1;
  const std::vector<GroupAlgebraElement> basis{ga_identity(g), ga_from_indices(g, s.indices()),
                                               ga_from_indices(g, n.indices())};
  SchurCheck out;
  out.structure.assign(3, std::vector<std::vector<std::int64_t>>(3, std::vector<std::int64_t>(3, 0)));
  const char* names[] = {"e", "S", "N"};
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      const auto prod = ga_mul(basis[a], basis[b]);
      std::vector<std::optional<std::int64_t>> value(3);
      for (int i = 0; i < g.order(); ++i) {
        auto& v = value[cell[i]];
        if (!v) {
          v = prod[i];
        } else if (*v != prod[i]) {
          out.witness = CoefficientWitness{g.element_at(i), prod[i], *v};
          out.detail = std::string(names[a]) + "*" + names[b] + " is not constant on cell " + names[cell[i]];
          out.structure.clear();
          return out;
        }
      }
      for (int l = 0; l < 3; ++l) out.structure[a][b][l] = value[l].value_or(0);
    }
  }
  out.closed = true;
  out.detail = "span{e, S, N} is closed under multiplication";
  return out;
}

}  // namespace sccay
