#include "oracles.hpp"

#include <algorithm>
#include <numeric>

namespace sccay::oracle {

namespace {

bool extend(const DenseGraph& g1, const DenseGraph& g2, std::vector<int>& image, std::vector<char>& used, int u) {
  const int n = g1.size();
  if (u == n) return true;
  for (int v = 0; v < n; ++v) {
    if (used[v]) continue;
    bool ok = true;
    for (int w = 0; w < u && ok; ++w) ok = g1.adjacent(u, w) == g2.adjacent(v, image[w]);
    if (!ok) continue;
    image[u] = v;
    used[v] = 1;
    if (extend(g1, g2, image, used, u + 1)) return true;
    used[v] = 0;
  }
  return false;
}

}  // namespace

bool brute_force_isomorphic(const DenseGraph& g1, const DenseGraph& g2) {
  if (g1.size() != g2.size()) return false;
  std::vector<int> image(static_cast<std::size_t>(g1.size()), -1);
  std::vector<char> used(static_cast<std::size_t>(g1.size()), 0);
  return extend(g1, g2, image, used, 0);
}

std::vector<bool> feasible_orders_by_sieve(int limit) {
  std::vector<int> spf(static_cast<std::size_t>(limit) + 1, 0);
  for (int i = 2; i <= limit; ++i) {
    if (spf[i]) continue;
    for (int j = i; j <= limit; j += i) {
      if (!spf[j]) spf[j] = i;
    }
  }
  std::vector<bool> out(static_cast<std::size_t>(limit) + 1, false);
  for (int m = 2; m <= limit; ++m) {
    int x = m;
    const int p = spf[m];
    while (x % p == 0) x /= p;
    if (x == 1 && m % 4 == 1) out[m] = true;
  }
  for (std::int64_t n = 3;; n += 2) {
    const std::int64_t f = n * n * n * n;
    if (f > limit) break;
    out[f] = true;
    if (9 * f <= limit) out[9 * f] = true;
  }
  return out;
}

DenseGraph random_graph(int n, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(density);
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) b.add_edge(u, v);
    }
  }
  return std::move(b).build();
}

std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace sccay::oracle
