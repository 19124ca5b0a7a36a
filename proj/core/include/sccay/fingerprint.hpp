#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sccay/dense_graph.hpp"
#include "sccay/graph_checks.hpp"

namespace sccay {

struct ModRank {
  int p = 0;
  int shift = 0;
  int rank = 0;

  friend bool operator==(const ModRank&, const ModRank&) = default;
};

/// Isomorphism-invariant summary used to refute isomorphism cheaply.
///
/// Fields are compared in declaration order; the first differing field names
/// the refutation. `edge_clique_profile` is last because it is the most
/// expensive and the only one that separates some same-parameter strongly
/// regular graphs from their complements.
struct Fingerprint {
  int n = 0;
  std::map<int, int> degree_multiset;
  std::optional<SrgParams> srg;
  std::int64_t triangles = 0;
  std::int64_t four_cliques = 0;
  std::vector<ModRank> ranks;  // A and A+I over Z_p, p in {2, 3, 5, 7}
  std::map<std::vector<int>, int> distance_distribution;
  std::map<std::int64_t, std::int64_t> edge_clique_profile;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

inline constexpr int kFingerprintPrimes[] = {2, 3, 5, 7};

struct FingerprintDifference {
  std::string invariant;
  std::string left;
  std::string right;
};

Fingerprint fingerprint(const DenseGraph& g);

/// Compares invariants in fingerprint order, computing each one for both
/// graphs only when all earlier ones agreed.
std::optional<FingerprintDifference> compare_fingerprints(const DenseGraph& a, const DenseGraph& b);
std::optional<FingerprintDifference> first_difference(const Fingerprint& a, const Fingerprint& b);

}  // namespace sccay
