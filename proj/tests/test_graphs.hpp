#pragma once

#include "sccay/dense_graph.hpp"

namespace sccay::testing {

inline DenseGraph cycle(int n) {
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
  return std::move(b).build();
}

inline DenseGraph path(int n) {
  GraphBuilder b(n);
  for (int i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
  return std::move(b).build();
}

inline DenseGraph complete(int n) {
  return graph_from_predicate(n, [](int, int) { return true; });
}

inline DenseGraph empty(int n) { return GraphBuilder(n).build(); }

}  // namespace sccay::testing
