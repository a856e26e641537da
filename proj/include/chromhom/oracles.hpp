#pragma once

#include <optional>
#include <vector>

#include "chromhom/graph.hpp"

namespace chromhom::oracle {

// Brute-force references that share no code path with the union-find based
// broken-circuit machinery. Exponential in |E|; intended for small graphs.

inline constexpr std::size_t max_oracle_edges = 20;

/// Every edge set forming a single simple cycle (connected, all degrees 2).
std::vector<EdgeSubset> enumerate_cycles(const Graph& g);

/// Largest e such that some cycle C has max(C) = e and C \ {e} is inside s.
std::optional<EdgeIndex> pivot_by_cycles(const Graph& g, const EdgeSubset& s, const std::vector<EdgeSubset>& cycles);

/// s contains no cycle-minus-its-maximum.
bool is_nbc_by_cycles(const Graph& g, const EdgeSubset& s, const std::vector<EdgeSubset>& cycles);

}  // namespace chromhom::oracle
