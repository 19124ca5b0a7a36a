#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "sccay/dense_graph.hpp"

// Reference implementations that share no code path with the library
// routines they are used to check.
namespace sccay::oracle {

/// Plain backtracking over vertex assignments, checking adjacency against
/// every previously placed vertex. No refinement, no invariants.
bool brute_force_isomorphic(const DenseGraph& g1, const DenseGraph& g2);

/// Paley-type order classification from a smallest-prime-factor sieve:
/// prime power = 1 mod 4, or n^4 / 9 n^4 with odd n > 1 found by enumeration.
std::vector<bool> feasible_orders_by_sieve(int limit);

DenseGraph random_graph(int n, double density, std::mt19937_64& rng);
std::vector<int> random_permutation(int n, std::mt19937_64& rng);

}  // namespace sccay::oracle
