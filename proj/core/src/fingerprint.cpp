#include "sccay/fingerprint.hpp"

#include <algorithm>
#include <type_traits>

namespace sccay {

namespace {

std::string show(const std::map<int, int>& m) {
  std::string out = "{";
  for (const auto& [k, v] : m) out += (out.size() > 1 ? "," : "") + std::to_string(k) + ":" + std::to_string(v);
  return out + "}";
}

std::string show(const std::map<std::int64_t, std::int64_t>& m) {
  std::string out = "{";
  for (const auto& [k, v] : m) out += (out.size() > 1 ? "," : "") + std::to_string(k) + ":" + std::to_string(v);
  return out + "}";
}

std::string show(const std::map<std::vector<int>, int>& m) {
  std::string out = "{";
  for (const auto& [k, v] : m) {
    if (out.size() > 1) out += ",";
    out += "[";
    for (std::size_t i = 0; i < k.size(); ++i) out += (i ? " " : "") + std::to_string(k[i]);
    out += "]:" + std::to_string(v);
  }
  return out + "}";
}

std::string show(const std::optional<SrgParams>& p) { return p ? to_string(*p) : "not-srg"; }

std::vector<ModRank> rank_list(const DenseGraph& g) {
  std::vector<ModRank> out;
  for (int p : kFingerprintPrimes) {
    for (int shift : {0, 1}) out.push_back({p, shift, mod_p_rank(g, p, shift)});
  }
  return out;
}

std::optional<SrgParams> srg_or_none(const DenseGraph& g) { return check_srg(g).params; }

// One fingerprint field: how to compute it and how to print it.
template <typename T>
std::optional<FingerprintDifference> differ(const char* name, const T& a, const T& b) {
  if (a == b) return std::nullopt;
  if constexpr (std::is_integral_v<T>) {
    return FingerprintDifference{name, std::to_string(a), std::to_string(b)};
  } else {
    return FingerprintDifference{name, show(a), show(b)};
  }
}

}  // namespace

Fingerprint fingerprint(const DenseGraph& g) {
  Fingerprint f;
  f.n = g.size();
  const auto counts = invariant_counts(g);
  f.degree_multiset = counts.degree_multiset;
  f.srg = srg_or_none(g);
  f.triangles = counts.triangles;
  f.four_cliques = counts.four_cliques;
  f.ranks = rank_list(g);
  f.distance_distribution = distance_distribution(g);
  f.edge_clique_profile = edge_clique_profile(g);
  return f;
}

std::optional<FingerprintDifference> first_difference(const Fingerprint& a, const Fingerprint& b) {
  if (auto d = differ("vertex count", a.n, b.n)) return d;
  if (auto d = differ("degree multiset", a.degree_multiset, b.degree_multiset)) return d;
  if (auto d = differ("srg parameters", a.srg, b.srg)) return d;
  if (auto d = differ("triangle count", a.triangles, b.triangles)) return d;
  if (auto d = differ("4-clique count", a.four_cliques, b.four_cliques)) return d;
  for (std::size_t i = 0; i < std::min(a.ranks.size(), b.ranks.size()); ++i) {
    if (a.ranks[i].rank != b.ranks[i].rank) {
      const std::string name =
          "rank of A+" + std::to_string(a.ranks[i].shift) + "I over Z_" + std::to_string(a.ranks[i].p);
      return FingerprintDifference{name, std::to_string(a.ranks[i].rank), std::to_string(b.ranks[i].rank)};
    }
  }
  if (auto d = differ("distance distribution", a.distance_distribution, b.distance_distribution)) return d;
  if (auto d = differ("edge 4-clique profile", a.edge_clique_profile, b.edge_clique_profile)) return d;
  return std::nullopt;
}

std::optional<FingerprintDifference> compare_fingerprints(const DenseGraph& a, const DenseGraph& b) {
  if (auto d = differ("vertex count", a.size(), b.size())) return d;
  const auto ca = invariant_counts(a);
  const auto cb = invariant_counts(b);
  if (auto d = differ("degree multiset", ca.degree_multiset, cb.degree_multiset)) return d;
  if (auto d = differ("srg parameters", srg_or_none(a), srg_or_none(b))) return d;
  if (auto d = differ("triangle count", ca.triangles, cb.triangles)) return d;
  if (auto d = differ("4-clique count", ca.four_cliques, cb.four_cliques)) return d;
  for (int p : kFingerprintPrimes) {
    for (int shift : {0, 1}) {
      const int ra = mod_p_rank(a, p, shift);
      const int rb = mod_p_rank(b, p, shift);
      if (ra != rb) {
        return FingerprintDifference{
            "rank of A+" + std::to_string(shift) + "I over Z_" + std::to_string(p), std::to_string(ra),
            std::to_string(rb)};
      }
    }
  }
  if (auto d = differ("distance distribution", distance_distribution(a), distance_distribution(b))) return d;
  if (auto d = differ("edge 4-clique profile", edge_clique_profile(a), edge_clique_profile(b))) return d;
  return std::nullopt;
}

}  // namespace sccay
