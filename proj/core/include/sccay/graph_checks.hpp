#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sccay/dense_graph.hpp"

namespace sccay {

/// The three distinct eigenvalues k and (beta +- sqrt(delta)) / 2, kept exact.
struct Eigenvalues {
  int k = 0;
  int beta = 0;
  std::int64_t delta = 0;
  /// Set when delta is a perfect square, i.e. all eigenvalues are rational.
  std::optional<std::int64_t> sqrt_delta;
};

struct SrgParams {
  int n = 0;
  int k = 0;
  int lambda = 0;
  int mu = 0;

  int beta() const noexcept { return lambda - mu; }
  std::int64_t delta() const noexcept {
    return std::int64_t{beta()} * beta() + 4 * (std::int64_t{k} - mu);
  }
  /// (n-k-1) mu == k (k-lambda-1).
  bool feasible() const noexcept {
    return std::int64_t{n - k - 1} * mu == std::int64_t{k} * (k - lambda - 1);
  }
  /// t when the parameters are (4t+1, 2t, t-1, t).
  std::optional<int> conference_t() const noexcept;
  Eigenvalues eigenvalues() const noexcept;

  friend bool operator==(const SrgParams&, const SrgParams&) = default;
};

std::string to_string(const SrgParams& p);

/// Pair of vertices and the count that broke a regularity condition.
struct PairWitness {
  int u = -1;
  int v = -1;
  std::int64_t observed = 0;
  std::int64_t expected = 0;
};

enum class SrgFailure {
  kNone,
  kEdgeless,
  kComplete,
  kNotRegular,
  kDisconnected,
  kLambdaNotConstant,
  kMuNotConstant,
};

std::string to_string(SrgFailure f);

struct SrgCheck {
  std::optional<SrgParams> params;
  SrgFailure failure = SrgFailure::kNone;
  /// For kNotRegular: u has degree `observed`, vertex v = 0 has `expected`.
  /// For lambda/mu failures: common-neighbour count of {u,v} against the
  /// count seen on the first pair of the same kind.
  PairWitness witness;

  bool ok() const noexcept { return params.has_value(); }
};

struct IntersectionArray {
  int diameter = 0;
  std::vector<int> b;  // b_0 .. b_{d-1}
  std::vector<int> c;  // c_1 .. c_d

  int k() const noexcept { return b.empty() ? 0 : b.front(); }
  /// a_i = k - b_i - c_i, with b_d = 0 and c_0 = 0.
  int a(int i) const noexcept;

  friend bool operator==(const IntersectionArray&, const IntersectionArray&) = default;
};

std::string to_string(const IntersectionArray& a);

struct DrCheck {
  std::optional<IntersectionArray> array;
  /// Base vertex y, vertex x at `distance` from y, which count failed ('b' or 'c')
  std::string reason;
  int base = -1;
  int vertex = -1;
  int distance = -1;
  std::int64_t observed = 0;
  std::int64_t expected = 0;

  bool ok() const noexcept { return array.has_value(); }
};

struct InvariantCounts {
  std::int64_t triangles = 0;
  std::int64_t four_cliques = 0;
  std::map<int, int> degree_multiset;  // degree -> number of vertices

  friend bool operator==(const InvariantCounts&, const InvariantCounts&) = default;
};

DenseGraph complement(const DenseGraph& g);
/// h with perm[u] ~ perm[v] in h iff u ~ v in g.
DenseGraph relabel(const DenseGraph& g, std::span<const int> perm);
/// Vertex (a, b) gets index a * |g2| + b.
DenseGraph lexicographic_product(const DenseGraph& g1, const DenseGraph& g2);

bool is_connected(const DenseGraph& g);
/// Maximum eccentricity, or nullopt when the graph is disconnected.
std::optional<int> diameter(const DenseGraph& g);
/// BFS layers from `source` as packed bit sets; layer i holds distance i.
std::vector<std::vector<DenseGraph::Word>> distance_layers(const DenseGraph& g, int source);

SrgCheck check_srg(const DenseGraph& g);
/// Entrywise A^2 == k I + lambda A + mu (J - I - A).
bool check_adjacency_identity(const DenseGraph& g, const SrgParams& params);
/// Throws StructuralError when g is disconnected.
DrCheck intersection_array(const DenseGraph& g);

InvariantCounts invariant_counts(const DenseGraph& g);
/// Rank of A + cI over Z_p. Throws ParameterError when p is not prime.
int mod_p_rank(const DenseGraph& g, int p, int shift);
/// Multiset over vertices of (count at distance 0, 1, ..., ecc, unreachable).
std::map<std::vector<int>, int> distance_distribution(const DenseGraph& g);
/// Multiset over edges {u,v} of the number of 4-cliques containing the edge.
std::map<std::int64_t, std::int64_t> edge_clique_profile(const DenseGraph& g);

}  // namespace sccay
