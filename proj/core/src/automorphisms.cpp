#include <algorithm>
#include <limits>

#include "sccay/abelian_group.hpp"
#include "sccay/error.hpp"

namespace sccay {

namespace {

// Indices of the elements whose order divides n, ascending.
std::vector<int> admissible_images(const AbelianGroup& group, int n) {
  std::vector<int> out;
  for (int i = 0; i < group.order(); ++i) {
    if (n % group.element_order(group.element_at(i)) == 0) out.push_back(i);
  }
  return out;
}

// multiples[i][r] = index of r * image_i.
std::vector<std::vector<int>> generator_multiples(const AbelianGroup& group,
                                                  std::span<const int> images) {
  std::vector<std::vector<int>> out(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    int n = group.factors()[i];
    out[i].resize(static_cast<std::size_t>(n));
    int acc = 0;
    for (int r = 0; r < n; ++r) {
      out[i][r] = acc;
      acc = group.add_index(acc, images[i]);
    }
  }
  return out;
}

void fill_images(const AbelianGroup& group, std::span<const int> images, std::vector<int>& perm) {
  auto multiples = generator_multiples(group, images);
  perm.resize(static_cast<std::size_t>(group.order()));
  for (int x = 0; x < group.order(); ++x) {
    int y = 0;
    for (int i = 0; i < group.rank(); ++i) {
      y = group.add_index(y, multiples[i][group.residue_of_index(x, i)]);
    }
    perm[x] = y;
  }
}

}  // namespace

std::uint64_t automorphism_candidate_count(const AbelianGroup& group) {
  std::uint64_t count = 1;
  for (int n : group.factors()) {
    auto c = static_cast<std::uint64_t>(admissible_images(group, n).size());
    if (count > std::numeric_limits<std::uint64_t>::max() / c) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    count *= c;
  }
  return count;
}

AutomorphismStream::AutomorphismStream(AbelianGroup group, AutomorphismBudget budget)
    : group_(std::move(group)) {
  if (group_.order() > budget.max_order) {
    throw BudgetExceeded("automorphism enumeration infeasible: |G| = " +
                         std::to_string(group_.order()) + " exceeds budget " +
                         std::to_string(budget.max_order));
  }
  // Count before building the candidate lists so oversized groups fail fast.
  std::uint64_t candidates = 1;
  for (int n : group_.factors()) {
    choices_.push_back(admissible_images(group_, n));
    auto c = static_cast<std::uint64_t>(choices_.back().size());
    candidates = (candidates > budget.max_candidates / c) ? budget.max_candidates + 1 : candidates * c;
  }
  if (candidates > budget.max_candidates) {
    throw BudgetExceeded("automorphism enumeration infeasible: candidate count for " +
                         group_.name() + " exceeds budget " +
                         std::to_string(budget.max_candidates));
  }
  cursor_.assign(choices_.size(), 0);
  seen_.assign(static_cast<std::size_t>(group_.order()), 0);
}

bool AutomorphismStream::advance() {
  if (!started_) {
    started_ = true;
    return true;
  }
  for (int i = static_cast<int>(cursor_.size()) - 1; i >= 0; --i) {
    if (++cursor_[i] < choices_[i].size()) return true;
    cursor_[i] = 0;
  }
  return false;
}

bool AutomorphismStream::current_is_bijective() {
  std::vector<int> images(cursor_.size());
  for (std::size_t i = 0; i < cursor_.size(); ++i) images[i] = choices_[i][cursor_[i]];
  auto multiples = generator_multiples(group_, images);

  if (++stamp_ == 0) {
    std::fill(seen_.begin(), seen_.end(), 0);
    stamp_ = 1;
  }
  image_.resize(static_cast<std::size_t>(group_.order()));
  for (int x = 0; x < group_.order(); ++x) {
    int y = 0;
    for (int i = 0; i < group_.rank(); ++i) {
      y = group_.add_index(y, multiples[i][group_.residue_of_index(x, i)]);
    }
    if (seen_[y] == stamp_) return false;
    seen_[y] = stamp_;
    image_[x] = y;
  }
  return true;
}

std::optional<GroupAutomorphism> AutomorphismStream::next() {
  if (exhausted_) return std::nullopt;
  while (advance()) {
    ++examined_;
    if (!current_is_bijective()) continue;
    ++yielded_;
    GroupAutomorphism sigma;
    for (std::size_t i = 0; i < cursor_.size(); ++i) {
      sigma.generator_images.push_back(group_.element_at(choices_[i][cursor_[i]]));
    }
    return sigma;
  }
  exhausted_ = true;
  image_.clear();
  return std::nullopt;
}

std::vector<GroupAutomorphism> enumerate_automorphisms(const AbelianGroup& group,
                                                       AutomorphismBudget budget) {
  AutomorphismStream stream(group, budget);
  std::vector<GroupAutomorphism> out;
  while (auto sigma = stream.next()) out.push_back(std::move(*sigma));
  return out;
}

GroupAutomorphism identity_automorphism(const AbelianGroup& group) {
  GroupAutomorphism sigma;
  for (int i = 0; i < group.rank(); ++i) {
    GroupElement e = group.identity();
    e.residues[i] = 1;
    sigma.generator_images.push_back(std::move(e));
  }
  return sigma;
}

namespace {

std::vector<int> image_indices(const AbelianGroup& group, const GroupAutomorphism& sigma) {
  if (static_cast<int>(sigma.generator_images.size()) != group.rank()) {
    throw StructuralError("automorphism has " + std::to_string(sigma.generator_images.size()) +
                          " generator images, group " + group.name() + " has rank " +
                          std::to_string(group.rank()));
  }
  std::vector<int> out;
  for (const auto& g : sigma.generator_images) out.push_back(group.index_of(g));
  return out;
}

}  // namespace

GroupElement apply_automorphism(const AbelianGroup& group, const GroupAutomorphism& sigma,
                                const GroupElement& g) {
  group.require_member(g);
  image_indices(group, sigma);  // arity and membership
  GroupElement out = group.identity();
  for (int i = 0; i < group.rank(); ++i) {
    out = group.add(out, group.multiple(sigma.generator_images[i], g.residues[i]));
  }
  return out;
}

std::vector<GroupElement> apply_automorphism(const AbelianGroup& group,
                                             const GroupAutomorphism& sigma,
                                             std::span<const GroupElement> set) {
  auto perm = automorphism_permutation(group, sigma);
  std::vector<int> idx;
  idx.reserve(set.size());
  for (const auto& g : set) idx.push_back(perm[group.index_of(g)]);
  std::sort(idx.begin(), idx.end());
  std::vector<GroupElement> out;
  out.reserve(idx.size());
  for (int i : idx) out.push_back(group.element_at(i));
  return out;
}

std::vector<int> automorphism_permutation(const AbelianGroup& group,
                                          const GroupAutomorphism& sigma) {
  std::vector<int> perm;
  fill_images(group, image_indices(group, sigma), perm);
  return perm;
}

bool is_automorphism(const AbelianGroup& group, const GroupAutomorphism& sigma) {
  if (static_cast<int>(sigma.generator_images.size()) != group.rank()) return false;
  for (int i = 0; i < group.rank(); ++i) {
    if (!group.contains(sigma.generator_images[i])) return false;
    if (group.factors()[i] % group.element_order(sigma.generator_images[i]) != 0) return false;
  }
  auto perm = automorphism_permutation(group, sigma);
  std::vector<char> hit(perm.size(), 0);
  for (int y : perm) {
    if (hit[y]) return false;
    hit[y] = 1;
  }
  return true;
}

}  // namespace sccay
