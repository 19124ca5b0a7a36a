#include "sccay/iso.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "sccay/error.hpp"
#include "sccay/graph_checks.hpp"

namespace sccay {

using Word = DenseGraph::Word;

std::string to_string(IsoCertificate::Kind kind) {
  switch (kind) {
    case IsoCertificate::Kind::kGroupAutomorphism: return "group-automorphism";
    case IsoCertificate::Kind::kVertexBijection: return "vertex-bijection";
    case IsoCertificate::Kind::kInvariantRefutation: return "invariant-refutation";
    case IsoCertificate::Kind::kSearchExhausted: return "search-exhausted";
    case IsoCertificate::Kind::kUndecided: return "undecided";
  }
  return "unknown";
}

std::string to_string(IsoOutcome outcome) {
  switch (outcome) {
    case IsoOutcome::kIsomorphic: return "isomorphic";
    case IsoOutcome::kNotIsomorphic: return "not-isomorphic";
    case IsoOutcome::kUndecided: return "undecided";
  }
  return "unknown";
}

bool verify_certificate(const DenseGraph& g1, const DenseGraph& g2, std::span<const int> perm) {
  const int n = g1.size();
  if (g2.size() != n || static_cast<int>(perm.size()) != n) return false;
  std::vector<char> hit(static_cast<std::size_t>(n), 0);
  for (int v : perm) {
    if (v < 0 || v >= n || hit[v]) return false;
    hit[v] = 1;
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (g1.adjacent(u, v) != g2.adjacent(perm[u], perm[v])) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Colour refinement

namespace {

constexpr std::uint64_t mix(std::uint64_t h, std::uint64_t v) noexcept {
  // splitmix64 finaliser over the running hash.
  std::uint64_t z = h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Renumbers colours to 0..m-1 preserving their order.
int compact(std::vector<int>& colors) {
  std::vector<int> values(colors);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  for (int& c : colors) c = static_cast<int>(std::lower_bound(values.begin(), values.end(), c) - values.begin());
  return static_cast<int>(values.size());
}

std::vector<int> individualize(const std::vector<int>& colors, int v) {
  std::vector<int> out(colors.size());
  for (std::size_t u = 0; u < colors.size(); ++u) out[u] = 2 * colors[u] + (static_cast<int>(u) == v ? 0 : 1);
  compact(out);
  return out;
}

}  // namespace

Coloring refine_coloring(const DenseGraph& g, std::vector<int> initial, bool clique_refinement) {
  const int n = g.size();
  const auto words = static_cast<std::size_t>(g.words_per_row());
  Coloring out;
  out.colors = std::move(initial);
  out.cells = compact(out.colors);
  out.trace = mix(0, static_cast<std::uint64_t>(n));

  std::vector<std::vector<std::int64_t>> sig(static_cast<std::size_t>(n));
  std::vector<int> order(static_cast<std::size_t>(n));
  while (true) {
    const int m = out.cells;
    std::vector<Word> cell_bits(static_cast<std::size_t>(m) * words, 0);
    for (int v = 0; v < n; ++v) {
      cell_bits[static_cast<std::size_t>(out.colors[v]) * words + v / 64] |= Word{1} << (v % 64);
    }
    auto cell = [&](int c) { return std::span<const Word>(cell_bits.data() + c * words, words); };

    const std::size_t width = 1 + static_cast<std::size_t>(m) * (clique_refinement ? 2 : 1);
    for (int v = 0; v < n; ++v) {
      auto& s = sig[v];
      s.assign(width, 0);
      s[0] = out.colors[v];
      auto row = g.row(v);
      for (int c = 0; c < m; ++c) s[1 + c] = bits::popcount_and(row, cell(c));
      if (clique_refinement) {
        // Edges inside N(v) with both ends in cell c, counted from each end.
        bits::for_each_set_bit(row, [&](int x) {
          const int c = out.colors[x];
          s[1 + m + c] += bits::popcount_and3(g.row(x), row, cell(c));
        });
      }
    }
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return sig[a] < sig[b]; });

    std::vector<int> next(static_cast<std::size_t>(n));
    int cells = 0;
    std::uint64_t round = mix(out.trace, static_cast<std::uint64_t>(m));
    for (int i = 0; i < n; ++i) {
      if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++cells;
      next[order[i]] = cells;
      if (i == 0 || sig[order[i]] != sig[order[i - 1]]) {
        for (auto x : sig[order[i]]) round = mix(round, static_cast<std::uint64_t>(x));
      }
      round = mix(round, 0x5bd1e995ULL);  // one per vertex: encodes multiplicities
    }
    ++cells;
    out.trace = round;
    const bool stable = cells == m;
    out.colors = std::move(next);
    out.cells = cells;
    if (stable) break;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Individualization-refinement search

namespace {

struct BudgetHit {};

class Searcher {
 public:
  Searcher(const DenseGraph& g1, const DenseGraph& g2, bool clique, const IsoOptions& options)
      : g1_(g1), g2_(g2), clique_(clique), options_(options), start_(std::chrono::steady_clock::now()) {}

  std::optional<std::vector<int>> run() {
    if (dfs(0, std::vector<int>(static_cast<std::size_t>(g2_.size()), 0))) return result_;
    return std::nullopt;
  }

  std::uint64_t nodes() const noexcept { return nodes_; }
  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  struct Level {
    Coloring coloring;
    int target = -1;  // colour of the target cell
    int pivot = -1;   // individualized vertex of g1
  };

  const Level& level(int depth) {
    while (static_cast<int>(path_.size()) <= depth) {
      std::vector<int> colors = path_.empty()
                                    ? std::vector<int>(static_cast<std::size_t>(g1_.size()), 0)
                                    : individualize(path_.back().coloring.colors, path_.back().pivot);
      Level lv;
      lv.coloring = refine_coloring(g1_, std::move(colors), clique_);
      // First smallest non-singleton cell, pivot = its smallest vertex.
      std::vector<int> size(static_cast<std::size_t>(lv.coloring.cells), 0);
      for (int c : lv.coloring.colors) ++size[c];
      int best = -1;
      for (int c = 0; c < lv.coloring.cells; ++c) {
        if (size[c] > 1 && (best < 0 || size[c] < size[best])) best = c;
      }
      lv.target = best;
      if (best >= 0) {
        for (int v = 0; v < g1_.size(); ++v) {
          if (lv.coloring.colors[v] == best) {
            lv.pivot = v;
            break;
          }
        }
      }
      path_.push_back(std::move(lv));
    }
    return path_[depth];
  }

  void tick() {
    ++nodes_;
    if (nodes_ > options_.node_budget) throw BudgetHit{};
    if (options_.time_budget_seconds > 0 && (nodes_ & 63U) == 0 && elapsed() > options_.time_budget_seconds) {
      throw BudgetHit{};
    }
  }

  bool dfs(int depth, std::vector<int> colors2) {
    tick();
    const Level& lv = level(depth);
    const Coloring c2 = refine_coloring(g2_, std::move(colors2), clique_);
    if (c2.trace != lv.coloring.trace || c2.cells != lv.coloring.cells) return false;

    const int n = g1_.size();
    if (lv.target < 0) {
      std::vector<int> by_color(static_cast<std::size_t>(n));
      for (int v = 0; v < n; ++v) by_color[c2.colors[v]] = v;
      std::vector<int> perm(static_cast<std::size_t>(n));
      for (int v = 0; v < n; ++v) perm[v] = by_color[lv.coloring.colors[v]];
      if (!verify_certificate(g1_, g2_, perm)) return false;
      result_ = std::move(perm);
      return true;
    }

    const int target = lv.target;
    const bool one_orbit = depth == 0 && options_.second_vertex_transitive && c2.cells == 1;
    for (int v2 = 0; v2 < n; ++v2) {
      if (c2.colors[v2] != target) continue;
      if (dfs(depth + 1, individualize(c2.colors, v2))) return true;
      if (one_orbit) break;
    }
    return false;
  }

  const DenseGraph& g1_;
  const DenseGraph& g2_;
  bool clique_;
  const IsoOptions& options_;
  std::chrono::steady_clock::time_point start_;
  std::vector<Level> path_;
  std::uint64_t nodes_ = 0;
  std::vector<int> result_;
};

IsoResult refutation(std::string invariant, std::string left, std::string right, std::string stage) {
  IsoResult r;
  r.outcome = IsoOutcome::kNotIsomorphic;
  r.decided_by = std::move(stage);
  r.certificate.kind = IsoCertificate::Kind::kInvariantRefutation;
  r.certificate.invariant = std::move(invariant);
  r.certificate.left_value = std::move(left);
  r.certificate.right_value = std::move(right);
  return r;
}

}  // namespace

AutomorphismScan selfcomp_by_group_automorphism(const ConnectionSet& s, AutomorphismBudget budget) {
  const AbelianGroup& group = s.group();
  const ConnectionSet comp = complement_connection_set(s);
  AutomorphismScan out;
  AutomorphismStream stream(group, budget);
  if (comp.size() != s.size()) return out;
  std::vector<char> in_comp(static_cast<std::size_t>(group.order()), 0);
  for (int i : comp.indices()) in_comp[i] = 1;
  while (auto sigma = stream.next()) {
    const auto& perm = stream.permutation();
    const bool maps = std::all_of(s.indices().begin(), s.indices().end(), [&](int x) { return in_comp[perm[x]]; });
    if (maps) {
      IsoCertificate cert;
      cert.kind = IsoCertificate::Kind::kGroupAutomorphism;
      cert.automorphism = std::move(*sigma);
      cert.permutation = perm;
      out.certificate = std::move(cert);
      break;
    }
  }
  out.automorphisms_scanned = stream.automorphisms_yielded();
  out.candidates_examined = stream.candidates_examined();
  return out;
}

IsoResult are_isomorphic(const DenseGraph& g1, const DenseGraph& g2, const IsoOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  auto seconds = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(); };

  if (g1.size() != g2.size()) {
    return refutation("vertex count", std::to_string(g1.size()), std::to_string(g2.size()), "precheck");
  }
  if (options.use_fingerprint) {
    if (auto diff = compare_fingerprints(g1, g2)) {
      IsoResult r = refutation(diff->invariant, diff->left, diff->right, "fingerprint");
      r.certificate.stats.elapsed_seconds = seconds();
      return r;
    }
  }
  bool clique = options.refinement == Refinement::kClique;
  if (options.refinement == Refinement::kAuto) clique = check_srg(g1).ok();

  IsoResult r;
  r.decided_by = "search";
  Searcher searcher(g1, g2, clique, options);
  try {
    if (auto perm = searcher.run()) {
      r.outcome = IsoOutcome::kIsomorphic;
      r.certificate.kind = IsoCertificate::Kind::kVertexBijection;
      r.certificate.permutation = std::move(*perm);
    } else {
      r.outcome = IsoOutcome::kNotIsomorphic;
      r.certificate.kind = IsoCertificate::Kind::kSearchExhausted;
    }
  } catch (const BudgetHit&) {
    r.outcome = IsoOutcome::kUndecided;
    r.decided_by = "budget";
    r.certificate.kind = IsoCertificate::Kind::kUndecided;
    r.notes.push_back("search budget exhausted before a decision");
  }
  r.certificate.stats.nodes = searcher.nodes();
  r.certificate.stats.elapsed_seconds = seconds();
  if (clique) r.notes.push_back("clique refinement enabled");
  if (r.isomorphic() && !verify_certificate(g1, g2, r.certificate.permutation)) {
    throw Error("internal error: search produced an invalid isomorphism");
  }
  return r;
}

IsoResult is_self_complementary(const DenseGraph& g, const std::optional<ConnectionSet>& hint,
                                const IsoOptions& options) {
  const std::int64_t n = g.size();
  const std::int64_t edges = g.edge_count();
  const std::int64_t pairs = n * (n - 1) / 2;
  if (g.regular_degree() >= 0 && n % 4 != 1) {
    return refutation("vertex count mod 4 (regular graph)", std::to_string(n % 4), "1", "precheck");
  }
  if (2 * edges != pairs) {
    return refutation("edge count", std::to_string(edges), std::to_string(pairs - edges), "precheck");
  }
  const DenseGraph comp = complement(g);

  IsoOptions opts = options;
  std::vector<std::string> notes;
  if (hint) {
    if (!(build_cayley(*hint) == g)) {
      throw StructuralError("connection-set hint does not generate the given graph");
    }
    try {
      const auto start = std::chrono::steady_clock::now();
      AutomorphismScan scan = selfcomp_by_group_automorphism(*hint, options.automorphism_budget);
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      if (scan.certificate) {
        IsoResult r;
        r.outcome = IsoOutcome::kIsomorphic;
        r.decided_by = "group-automorphism";
        r.certificate = std::move(*scan.certificate);
        r.certificate.stats.nodes = scan.automorphisms_scanned;
        r.certificate.stats.elapsed_seconds = secs;
        if (!verify_certificate(g, comp, r.certificate.permutation)) {
          throw Error("internal error: group automorphism certificate failed vertex verification");
        }
        r.notes.push_back("automorphism found after " + std::to_string(scan.automorphisms_scanned) +
                          " automorphisms");
        return r;
      }
      notes.push_back("automorphism scan: no certificate among " + std::to_string(scan.automorphisms_scanned) +
                      " automorphisms (inconclusive)");
    } catch (const BudgetExceeded& e) {
      notes.push_back(std::string("automorphism scan skipped: ") + e.what());
    }
    opts.second_vertex_transitive = true;
  }
  IsoResult r = are_isomorphic(g, comp, opts);
  notes.insert(notes.end(), r.notes.begin(), r.notes.end());
  r.notes = std::move(notes);
  return r;
}

}  // namespace sccay
