#include "sccay/graph_checks.hpp"

#include <algorithm>
#include <numeric>

#include "sccay/error.hpp"
#include "sccay/number_theory.hpp"

namespace sccay {

using Word = DenseGraph::Word;
using Row = std::vector<Word>;

std::optional<int> SrgParams::conference_t() const noexcept {
  if (k % 2 != 0 || k < 2) return std::nullopt;
  const int t = k / 2;
  if (n == 4 * t + 1 && lambda == t - 1 && mu == t) return t;
  return std::nullopt;
}

Eigenvalues SrgParams::eigenvalues() const noexcept {
  Eigenvalues e;
  e.k = k;
  e.beta = beta();
  e.delta = delta();
  const std::int64_t root = exact_root(e.delta, 2);
  if (root >= 0) e.sqrt_delta = root;
  return e;
}

std::string to_string(const SrgParams& p) {
  return "(" + std::to_string(p.n) + "," + std::to_string(p.k) + "," + std::to_string(p.lambda) +
         "," + std::to_string(p.mu) + ")";
}

std::string to_string(SrgFailure f) {
  switch (f) {
    case SrgFailure::kNone: return "none";
    case SrgFailure::kEdgeless: return "edgeless";
    case SrgFailure::kComplete: return "complete";
    case SrgFailure::kNotRegular: return "not-regular";
    case SrgFailure::kDisconnected: return "disconnected";
    case SrgFailure::kLambdaNotConstant: return "lambda-not-constant";
    case SrgFailure::kMuNotConstant: return "mu-not-constant";
  }
  return "unknown";
}

int IntersectionArray::a(int i) const noexcept {
  const int bi = i < static_cast<int>(b.size()) ? b[i] : 0;
  const int ci = i == 0 ? 0 : c[i - 1];
  return k() - bi - ci;
}

std::string to_string(const IntersectionArray& a) {
  std::string out = "{";
  for (std::size_t i = 0; i < a.b.size(); ++i) out += (i ? "," : "") + std::to_string(a.b[i]);
  out += ";";
  for (std::size_t i = 0; i < a.c.size(); ++i) out += (i ? "," : "") + std::to_string(a.c[i]);
  return out + "}";
}

DenseGraph complement(const DenseGraph& g) {
  return graph_from_predicate(g.size(), [&](int u, int v) { return !g.adjacent(u, v); });
}

DenseGraph relabel(const DenseGraph& g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.size()) {
    throw StructuralError("relabel: permutation length does not match graph size");
  }
  GraphBuilder b(g.size());
  for (int u = 0; u < g.size(); ++u) {
    bits::for_each_set_bit(g.row(u), [&](int v) {
      if (u < v) b.add_edge(perm[u], perm[v]);
    });
  }
  return std::move(b).build();
}

DenseGraph lexicographic_product(const DenseGraph& g1, const DenseGraph& g2) {
  const int n2 = g2.size();
  return graph_from_predicate(g1.size() * n2, [&](int x, int y) {
    const int a = x / n2, b = x % n2, c = y / n2, d = y % n2;
    return g1.adjacent(a, c) || (a == c && g2.adjacent(b, d));
  });
}

std::vector<Row> distance_layers(const DenseGraph& g, int source) {
  const auto w = static_cast<std::size_t>(g.words_per_row());
  Row visited(w, 0);
  Row frontier(w, 0);
  bits::set(frontier, source);
  bits::set(visited, source);
  std::vector<Row> layers{frontier};
  while (true) {
    Row next(w, 0);
    bits::for_each_set_bit(frontier, [&](int u) {
      auto r = g.row(u);
      for (std::size_t i = 0; i < w; ++i) next[i] |= r[i];
    });
    bool any = false;
    for (std::size_t i = 0; i < w; ++i) {
      next[i] &= ~visited[i];
      visited[i] |= next[i];
      any = any || next[i];
    }
    if (!any) break;
    layers.push_back(next);
    frontier = std::move(next);
  }
  return layers;
}

bool is_connected(const DenseGraph& g) {
  int reached = 0;
  for (const auto& layer : distance_layers(g, 0)) reached += bits::popcount(layer);
  return reached == g.size();
}

std::optional<int> diameter(const DenseGraph& g) {
  int d = 0;
  for (int s = 0; s < g.size(); ++s) {
    auto layers = distance_layers(g, s);
    int reached = 0;
    for (const auto& layer : layers) reached += bits::popcount(layer);
    if (reached != g.size()) return std::nullopt;
    d = std::max(d, static_cast<int>(layers.size()) - 1);
  }
  return d;
}

SrgCheck check_srg(const DenseGraph& g) {
  SrgCheck out;
  const int n = g.size();
  const std::int64_t m = g.edge_count();
  if (m == 0) {
    out.failure = SrgFailure::kEdgeless;
    return out;
  }
  if (m == std::int64_t{n} * (n - 1) / 2) {
    out.failure = SrgFailure::kComplete;
    return out;
  }
  const int k = g.degree(0);
  for (int u = 1; u < n; ++u) {
    if (g.degree(u) != k) {
      out.failure = SrgFailure::kNotRegular;
      out.witness = {u, 0, g.degree(u), k};
      return out;
    }
  }
  if (!is_connected(g)) {
    out.failure = SrgFailure::kDisconnected;
    return out;
  }
  std::optional<int> lambda, mu;
  PairWitness first_lambda, first_mu;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const int common = bits::popcount_and(g.row(u), g.row(v));
      auto& slot = g.adjacent(u, v) ? lambda : mu;
      auto& first = g.adjacent(u, v) ? first_lambda : first_mu;
      if (!slot) {
        slot = common;
        first = {u, v, common, common};
      } else if (*slot != common) {
        out.failure = g.adjacent(u, v) ? SrgFailure::kLambdaNotConstant : SrgFailure::kMuNotConstant;
        out.witness = {u, v, common, *slot};
        return out;
      }
    }
  }
  out.params = SrgParams{n, k, lambda.value_or(0), mu.value_or(0)};
  return out;
}

bool check_adjacency_identity(const DenseGraph& g, const SrgParams& params) {
  const int n = g.size();
  if (params.n != n) return false;
  for (int u = 0; u < n; ++u) {
    for (int v = u; v < n; ++v) {
      const std::int64_t a2 = bits::popcount_and(g.row(u), g.row(v));
      const int a = g.adjacent(u, v) ? 1 : 0;
      const int id = u == v ? 1 : 0;
      const std::int64_t rhs =
          std::int64_t{params.k} * id + std::int64_t{params.lambda} * a + std::int64_t{params.mu} * (1 - id - a);
      if (a2 != rhs) return false;
    }
  }
  return true;
}

DrCheck intersection_array(const DenseGraph& g) {
  DrCheck out;
  const int n = g.size();
  const int k = g.degree(0);
  // Index 0 of b and c correspond to distance 0; c[0] is dropped at the end.
  std::vector<int> b, c;
  int diam = -1;
  for (int y = 0; y < n; ++y) {
    auto layers = distance_layers(g, y);
    int reached = 0;
    for (const auto& layer : layers) reached += bits::popcount(layer);
    if (reached != n) throw StructuralError("intersection_array: graph is disconnected");
    const int d = static_cast<int>(layers.size()) - 1;
    if (diam < 0) {
      diam = d;
      b.assign(d + 1, -1);
      c.assign(d + 1, -1);
    } else if (d != diam) {
      out.reason = "eccentricity";
      out.base = y;
      out.distance = d;
      out.observed = d;
      out.expected = diam;
      return out;
    }
    for (int i = 0; i <= d; ++i) {
      bool failed = false;
      bits::for_each_set_bit(layers[i], [&](int x) {
        if (failed) return;
        const int deg = g.degree(x);
        const int ci = i > 0 ? bits::popcount_and(g.row(x), layers[i - 1]) : 0;
        const int bi = i < d ? bits::popcount_and(g.row(x), layers[i + 1]) : 0;
        if (deg != k) {
          out.reason = "degree";
          out.base = y, out.vertex = x, out.distance = i, out.observed = deg, out.expected = k;
          failed = true;
          return;
        }
        if (b[i] < 0) b[i] = bi;
        if (c[i] < 0) c[i] = ci;
        if (b[i] != bi || c[i] != ci) {
          const bool b_bad = b[i] != bi;
          out.reason = b_bad ? "b" : "c";
          out.base = y, out.vertex = x, out.distance = i;
          out.observed = b_bad ? bi : ci;
          out.expected = b_bad ? b[i] : c[i];
          failed = true;
        }
      });
      if (failed) return out;
    }
  }
  IntersectionArray arr;
  arr.diameter = diam;
  arr.b.assign(b.begin(), b.begin() + diam);
  arr.c.assign(c.begin() + 1, c.end());
  out.array = std::move(arr);
  return out;
}

InvariantCounts invariant_counts(const DenseGraph& g) {
  InvariantCounts out;
  const int n = g.size();
  const auto w = static_cast<std::size_t>(g.words_per_row());
  Row common(w);
  for (int u = 0; u < n; ++u) {
    out.degree_multiset[g.degree(u)] += 1;
    bits::for_each_set_bit(g.row(u), [&](int v) {
      if (v <= u) return;
      auto ru = g.row(u);
      auto rv = g.row(v);
      for (std::size_t i = 0; i < w; ++i) common[i] = ru[i] & rv[i];
      out.triangles += bits::popcount_and_above(common, common, v);
      // 4-cliques u < v < x < y.
      bits::for_each_set_bit(common, [&](int x) {
        if (x <= v) return;
        out.four_cliques += bits::popcount_and_above(common, g.row(x), x);
      });
    });
  }
  return out;
}

namespace {

int rank_mod2(const DenseGraph& g, int shift) {
  const int n = g.size();
  const auto w = static_cast<std::size_t>(g.words_per_row());
  std::vector<Row> m(static_cast<std::size_t>(n));
  for (int u = 0; u < n; ++u) {
    auto r = g.row(u);
    m[u].assign(r.begin(), r.end());
    if (shift & 1) m[u][u / 64] ^= Word{1} << (u % 64);
  }
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    const std::size_t cw = col / 64;
    const Word cb = Word{1} << (col % 64);
    int pivot = -1;
    for (int i = rank; i < n; ++i) {
      if (m[i][cw] & cb) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    for (int i = rank + 1; i < n; ++i) {
      if (m[i][cw] & cb) {
        for (std::size_t j = cw; j < w; ++j) m[i][j] ^= m[rank][j];
      }
    }
    ++rank;
  }
  return rank;
}

int rank_mod_p(const DenseGraph& g, int p, int shift) {
  const int n = g.size();
  const auto un = static_cast<std::size_t>(n);
  const int c = ((shift % p) + p) % p;
  std::vector<std::uint16_t> m(un * un, 0);
  for (int u = 0; u < n; ++u) {
    bits::for_each_set_bit(g.row(u), [&](int v) { m[u * un + v] = 1; });
    m[u * un + u] = static_cast<std::uint16_t>(c);
  }
  std::vector<int> inv(static_cast<std::size_t>(p), 0);
  for (int a = 1; a < p; ++a) inv[a] = static_cast<int>(mod_pow(a, static_cast<std::uint64_t>(p - 2), p));

  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int pivot = -1;
    for (int i = rank; i < n; ++i) {
      if (m[i * un + col]) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank) {
      std::swap_ranges(m.begin() + static_cast<std::ptrdiff_t>(pivot * un),
                       m.begin() + static_cast<std::ptrdiff_t>((pivot + 1) * un),
                       m.begin() + static_cast<std::ptrdiff_t>(rank * un));
    }
    std::uint16_t* prow = &m[rank * un];
    const int pinv = inv[prow[col]];
    for (int j = col; j < n; ++j) prow[j] = static_cast<std::uint16_t>(prow[j] * pinv % p);
    for (int i = rank + 1; i < n; ++i) {
      std::uint16_t* row = &m[i * un];
      const int f = row[col];
      if (!f) continue;
      const int nf = p - f;
      for (int j = col; j < n; ++j) row[j] = static_cast<std::uint16_t>((row[j] + nf * prow[j]) % p);
    }
    ++rank;
  }
  return rank;
}

}  // namespace

int mod_p_rank(const DenseGraph& g, int p, int shift) {
  if (!is_prime(p)) throw ParameterError("mod_p_rank: " + std::to_string(p) + " is not prime");
  if (p > 251) throw ParameterError("mod_p_rank: prime too large for the dense kernel");
  return p == 2 ? rank_mod2(g, shift) : rank_mod_p(g, p, shift);
}

std::map<std::vector<int>, int> distance_distribution(const DenseGraph& g) {
  std::map<std::vector<int>, int> out;
  for (int s = 0; s < g.size(); ++s) {
    std::vector<int> counts;
    int reached = 0;
    for (const auto& layer : distance_layers(g, s)) {
      counts.push_back(bits::popcount(layer));
      reached += counts.back();
    }
    counts.push_back(g.size() - reached);
    out[counts] += 1;
  }
  return out;
}

std::map<std::int64_t, std::int64_t> edge_clique_profile(const DenseGraph& g) {
  std::map<std::int64_t, std::int64_t> out;
  const auto w = static_cast<std::size_t>(g.words_per_row());
  Row common(w);
  for (int u = 0; u < g.size(); ++u) {
    bits::for_each_set_bit(g.row(u), [&](int v) {
      if (v <= u) return;
      auto ru = g.row(u);
      auto rv = g.row(v);
      for (std::size_t i = 0; i < w; ++i) common[i] = ru[i] & rv[i];
      std::int64_t twice = 0;
      bits::for_each_set_bit(common, [&](int x) { twice += bits::popcount_and(common, g.row(x)); });
      out[twice / 2] += 1;
    });
  }
  return out;
}

}  // namespace sccay
