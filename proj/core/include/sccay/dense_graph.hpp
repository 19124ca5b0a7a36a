#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace sccay {

/// Undirected simple graph on vertices 0..n-1 stored as packed bit rows.
///
/// Immutable once built; use GraphBuilder (or one of the factories) to make
/// one. Bits past column n-1 in each row are always zero.
class DenseGraph {
 public:
  using Word = std::uint64_t;
  static constexpr int kWordBits = 64;
  static constexpr int kMaxVertices = 4096;

  DenseGraph() = default;

  int size() const noexcept { return n_; }
  int words_per_row() const noexcept { return words_; }

  bool adjacent(int u, int v) const noexcept {
    return (bits_[static_cast<std::size_t>(u) * words_ + v / kWordBits] >> (v % kWordBits)) & 1U;
  }
  std::span<const Word> row(int u) const noexcept {
    return {bits_.data() + static_cast<std::size_t>(u) * words_, static_cast<std::size_t>(words_)};
  }
  int degree(int u) const noexcept;
  std::int64_t edge_count() const noexcept;
  std::vector<int> neighbors(int u) const;
  /// Degree if every vertex has the same degree, else -1.
  int regular_degree() const noexcept;

  friend bool operator==(const DenseGraph&, const DenseGraph&) = default;

 private:
  friend class GraphBuilder;
  int n_ = 0;
  int words_ = 0;
  std::vector<Word> bits_;
};

class GraphBuilder {
 public:
  explicit GraphBuilder(int n);

  /// Throws StructuralError on loops or out-of-range endpoints.
  GraphBuilder& add_edge(int u, int v);
  bool adjacent(int u, int v) const noexcept { return graph_.adjacent(u, v); }
  DenseGraph build() &&;
  DenseGraph build() const&;

 private:
  DenseGraph graph_;
};

/// Graph on 0..n-1 with edge set {u,v : pred(u, v)} for u < v.
template <typename Pred>
DenseGraph graph_from_predicate(int n, Pred&& pred) {
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (pred(u, v)) b.add_edge(u, v);
    }
  }
  return std::move(b).build();
}

// Small helpers over packed rows, shared by the checking kernels.
namespace bits {

inline int popcount(std::span<const DenseGraph::Word> a) noexcept {
  int c = 0;
  for (auto w : a) c += std::popcount(w);
  return c;
}

inline int popcount_and(std::span<const DenseGraph::Word> a,
                        std::span<const DenseGraph::Word> b) noexcept {
  int c = 0;
  for (std::size_t i = 0; i < a.size(); ++i) c += std::popcount(a[i] & b[i]);
  return c;
}

inline int popcount_and3(std::span<const DenseGraph::Word> a, std::span<const DenseGraph::Word> b,
                         std::span<const DenseGraph::Word> c) noexcept {
  int n = 0;
  for (std::size_t i = 0; i < a.size(); ++i) n += std::popcount(a[i] & b[i] & c[i]);
  return n;
}

/// Popcount of a & b restricted to bit positions > v.
inline int popcount_and_above(std::span<const DenseGraph::Word> a,
                              std::span<const DenseGraph::Word> b, int v) noexcept {
  const std::size_t first = static_cast<std::size_t>(v + 1) / DenseGraph::kWordBits;
  const int offset = (v + 1) % DenseGraph::kWordBits;
  int c = 0;
  for (std::size_t i = first; i < a.size(); ++i) {
    DenseGraph::Word w = a[i] & b[i];
    if (i == first && offset) w &= ~DenseGraph::Word{0} << offset;
    c += std::popcount(w);
  }
  return c;
}

template <typename F>
void for_each_set_bit(std::span<const DenseGraph::Word> a, F&& f) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    DenseGraph::Word w = a[i];
    while (w) {
      f(static_cast<int>(i) * DenseGraph::kWordBits + std::countr_zero(w));
      w &= w - 1;
    }
  }
}

inline void set(std::span<DenseGraph::Word> a, int v) noexcept {
  a[static_cast<std::size_t>(v) / DenseGraph::kWordBits] |= DenseGraph::Word{1} << (v % DenseGraph::kWordBits);
}

inline bool test(std::span<const DenseGraph::Word> a, int v) noexcept {
  return (a[static_cast<std::size_t>(v) / DenseGraph::kWordBits] >> (v % DenseGraph::kWordBits)) & 1U;
}

}  // namespace bits

}  // namespace sccay
