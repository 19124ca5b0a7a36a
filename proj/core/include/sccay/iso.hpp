#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sccay/abelian_group.hpp"
#include "sccay/cayley.hpp"
#include "sccay/dense_graph.hpp"
#include "sccay/fingerprint.hpp"

namespace sccay {

struct SearchStats {
  std::uint64_t nodes = 0;
  double elapsed_seconds = 0.0;
};

struct IsoCertificate {
  enum class Kind { kGroupAutomorphism, kVertexBijection, kInvariantRefutation, kSearchExhausted, kUndecided };

  Kind kind = Kind::kUndecided;
  /// kGroupAutomorphism: the automorphism; `permutation` holds its vertex form.
  std::optional<GroupAutomorphism> automorphism;
  /// Vertex bijection: vertex u of the first graph maps to permutation[u].
  std::vector<int> permutation;
  /// kInvariantRefutation: invariant name and its value on each graph.
  std::string invariant;
  std::string left_value;
  std::string right_value;
  SearchStats stats;
};

std::string to_string(IsoCertificate::Kind kind);

enum class IsoOutcome { kIsomorphic, kNotIsomorphic, kUndecided };

std::string to_string(IsoOutcome outcome);

struct IsoResult {
  IsoOutcome outcome = IsoOutcome::kUndecided;
  IsoCertificate certificate;
  /// Which stage reached the decision: "precheck", "group-automorphism",
  /// "fingerprint", "search", or "budget".
  std::string decided_by;
  std::vector<std::string> notes;

  bool isomorphic() const noexcept { return outcome == IsoOutcome::kIsomorphic; }
  bool decided() const noexcept { return outcome != IsoOutcome::kUndecided; }
};

enum class Refinement {
  kAuto,   // clique refinement when the first graph is strongly regular
  kBasic,  // neighbour-colour counts only
  kClique  // also counts edges inside N(v) restricted to each cell
};

struct IsoOptions {
  std::uint64_t node_budget = 100'000'000;
  /// Wall-clock limit for the backtracking search; 0 disables it.
  double time_budget_seconds = 0.0;
  bool use_fingerprint = true;
  Refinement refinement = Refinement::kAuto;
  /// The second graph is known to be vertex-transitive, so the first
  /// individualization only needs one candidate.
  bool second_vertex_transitive = false;
  AutomorphismBudget automorphism_budget;
};

/// Result of scanning the group automorphisms for one with sigma(S) = N.
struct AutomorphismScan {
  std::optional<IsoCertificate> certificate;
  std::uint64_t automorphisms_scanned = 0;
  std::uint64_t candidates_examined = 0;
};

/// First automorphism (in enumeration order) carrying S onto its complement
/// set. No certificate does not prove the graph is not self-complementary.
/// Throws BudgetExceeded when enumeration is infeasible.
AutomorphismScan selfcomp_by_group_automorphism(const ConnectionSet& s, AutomorphismBudget budget = {});

/// Complete decider: fingerprint refutation, then individualization-refinement.
/// Positive answers carry a vertex bijection validated by verify_certificate.
IsoResult are_isomorphic(const DenseGraph& g1, const DenseGraph& g2, const IsoOptions& options = {});

/// Decides whether g is isomorphic to its complement. With a hint (which must
/// generate g as a Cayley graph) the automorphism scan runs first and the
/// search exploits vertex-transitivity.
IsoResult is_self_complementary(const DenseGraph& g, const std::optional<ConnectionSet>& hint = std::nullopt,
                                const IsoOptions& options = {});

/// (u ~ v in g1) <=> (perm[u] ~ perm[v] in g2) for all pairs, perm a permutation.
bool verify_certificate(const DenseGraph& g1, const DenseGraph& g2, std::span<const int> perm);

/// Stable colouring reached from `initial` (colours 0..m-1). `trace` hashes
/// every refinement round, so equal traces are necessary for two coloured
/// graphs to be isomorphic.
struct Coloring {
  std::vector<int> colors;
  int cells = 0;
  std::uint64_t trace = 0;
};

Coloring refine_coloring(const DenseGraph& g, std::vector<int> initial, bool clique_refinement);

}  // namespace sccay
