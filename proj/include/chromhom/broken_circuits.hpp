#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "chromhom/graph.hpp"

namespace chromhom {

// Broken circuits with respect to the graph's fixed edge order, and the
// matching on BC = 2^E \ NBC that pairs every BC set with S + pivot(S).

/// The largest edge e whose endpoints are joined by a path in s restricted to
/// edges strictly below e. Such a path plus e is a cycle with maximum edge e,
/// i.e. s contains the broken circuit of that cycle.
std::optional<EdgeIndex> pivot_edge(const Graph& g, const EdgeSubset& s);

bool is_nbc(const Graph& g, const EdgeSubset& s);

/// s + pivot_edge(s). Throws ContractViolation on NBC input.
EdgeSubset involution(const Graph& g, const EdgeSubset& s);

struct MatchedPair {
  EdgeSubset lower;
  EdgeSubset upper;  // lower plus `edge`
  EdgeIndex edge;

  friend bool operator==(const MatchedPair&, const MatchedPair&) = default;
};

struct Matching {
  std::vector<MatchedPair> pairs;
};

/// Orbits of the involution, ordered by lower end (ascending bitmask).
Matching build_matching(const Graph& g);

/// All BC subsets in ascending bitmask order.
std::vector<EdgeSubset> bc_sets(const Graph& g);

/// Cover digraph of `states` under inclusion with every matched edge
/// reversed; true iff it has no directed cycle. The pairs need not form a
/// genuine matching, which is what makes negative fixtures expressible.
bool verify_acyclic(std::span<const EdgeSubset> states, const Matching& m);
/// Same check over the BC states of g.
bool verify_acyclic(const Graph& g, const Matching& m);

/// Structural checks on a matching over BC: every BC set in exactly one pair,
/// pairs are covers, and each pair keeps the vertex partition.
struct MatchingReport {
  bool perfect = false;
  bool covers_only = false;
  bool partition_preserving = false;
  std::string witness;

  bool ok() const { return perfect && covers_only && partition_preserving; }
};
MatchingReport check_matching(const Graph& g, const Matching& m);

class LinearExtensionError : public std::runtime_error {
 public:
  LinearExtensionError(const EdgeSubset& earlier, const EdgeSubset& later);

  const EdgeSubset& smaller() const noexcept { return smaller_; }
  const EdgeSubset& larger() const noexcept { return larger_; }

 private:
  EdgeSubset smaller_;
  EdgeSubset larger_;
};

/// S_1, T_1, ..., S_n, T_n with lower ends ordered by cardinality, then
/// lexicographically descending (the set holding the larger top differing edge
/// comes first). Certified against inclusion on BC; throws
/// LinearExtensionError naming a violating pair.
std::vector<EdgeSubset> linear_extension(const Graph& g, const Matching& m);

/// Depth-first over edges in increasing order, include before exclude,
/// pruning every branch that enters BC. `visit` is called once per NBC set.
template <class Visit>
void for_each_nbc(const Graph& g, Visit&& visit);

std::vector<EdgeSubset> nbc_sets(const Graph& g);
std::size_t nbc_count(const Graph& g);

// ---------------------------------------------------------------------------

namespace detail {

template <class Visit>
void nbc_descend(const Graph& g, const EdgeSubset& current, EdgeIndex next, Visit& visit) {
  if (next == g.edge_count()) {
    visit(current);
    return;
  }
  EdgeSubset grown = current.with(next);
  if (is_nbc(g, grown)) nbc_descend(g, grown, next + 1, visit);
  nbc_descend(g, current, next + 1, visit);
}

}  // namespace detail

template <class Visit>
void for_each_nbc(const Graph& g, Visit&& visit) {
  detail::nbc_descend(g, g.empty_subset(), 0, visit);
}

}  // namespace chromhom
