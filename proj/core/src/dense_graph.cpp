#include "sccay/dense_graph.hpp"

#include <string>

#include "sccay/error.hpp"

namespace sccay {

int DenseGraph::degree(int u) const noexcept { return bits::popcount(row(u)); }

std::int64_t DenseGraph::edge_count() const noexcept {
  std::int64_t twice = 0;
  for (int u = 0; u < n_; ++u) twice += degree(u);
  return twice / 2;
}

std::vector<int> DenseGraph::neighbors(int u) const {
  std::vector<int> out;
  bits::for_each_set_bit(row(u), [&](int v) { out.push_back(v); });
  return out;
}

int DenseGraph::regular_degree() const noexcept {
  if (n_ == 0) return 0;
  const int k = degree(0);
  for (int u = 1; u < n_; ++u) {
    if (degree(u) != k) return -1;
  }
  return k;
}

GraphBuilder::GraphBuilder(int n) {
  if (n < 1 || n > DenseGraph::kMaxVertices) {
    throw StructuralError("graph size " + std::to_string(n) + " outside 1.." +
                          std::to_string(DenseGraph::kMaxVertices));
  }
  graph_.n_ = n;
  graph_.words_ = (n + DenseGraph::kWordBits - 1) / DenseGraph::kWordBits;
  graph_.bits_.assign(static_cast<std::size_t>(n) * graph_.words_, 0);
}

GraphBuilder& GraphBuilder::add_edge(int u, int v) {
  const int n = graph_.n_;
  if (u < 0 || v < 0 || u >= n || v >= n) {
    throw StructuralError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                          "} out of range for n = " + std::to_string(n));
  }
  if (u == v) throw StructuralError("loop at vertex " + std::to_string(u));
  const auto w = static_cast<std::size_t>(graph_.words_);
  graph_.bits_[u * w + v / DenseGraph::kWordBits] |= DenseGraph::Word{1} << (v % DenseGraph::kWordBits);
  graph_.bits_[v * w + u / DenseGraph::kWordBits] |= DenseGraph::Word{1} << (u % DenseGraph::kWordBits);
  return *this;
}

DenseGraph GraphBuilder::build() && { return std::move(graph_); }

DenseGraph GraphBuilder::build() const& { return graph_; }

}  // namespace sccay
