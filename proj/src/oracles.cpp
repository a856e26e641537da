#include "chromhom/oracles.hpp"

#include <bit>
#include <stdexcept>

namespace chromhom::oracle {

namespace {

bool is_single_cycle(const Graph& g, const EdgeSubset& s) {
  if (s.count() < 3) return false;
  std::vector<unsigned> degree(g.vertex_count(), 0);
  for (EdgeIndex e : s.members()) {
    ++degree[g.edge(e).u];
    ++degree[g.edge(e).v];
  }
  std::size_t support = 0;
  for (unsigned d : degree) {
    if (d != 0 && d != 2) return false;
    if (d == 2) ++support;
  }
  // 2-regular on its support: one cycle iff the support is connected, i.e.
  // iff the number of edges equals the number of vertices touched and a walk
  // from one edge reaches them all.
  std::vector<bool> reached(g.vertex_count(), false);
  std::vector<Vertex> stack{g.edge(s.members().front()).u};
  reached[stack.back()] = true;
  std::size_t seen = 1;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (EdgeIndex e : s.members()) {
      const Edge& edge = g.edge(e);
      Vertex other = edge.u == x ? edge.v : edge.v == x ? edge.u : x;
      if (other != x && !reached[other]) {
        reached[other] = true;
        ++seen;
        stack.push_back(other);
      }
    }
  }
  return seen == support;
}

}  // namespace

std::vector<EdgeSubset> enumerate_cycles(const Graph& g) {
  if (g.edge_count() > max_oracle_edges) throw std::invalid_argument("cycle enumeration oracle is limited to 20 edges");
  std::vector<EdgeSubset> cycles;
  const std::uint64_t total = std::uint64_t{1} << g.edge_count();
  for (std::uint64_t bits = 1; bits < total; ++bits) {
    EdgeSubset s(g.edge_count(), bits);
    if (is_single_cycle(g, s)) cycles.push_back(s);
  }
  return cycles;
}

std::optional<EdgeIndex> pivot_by_cycles(const Graph& g, const EdgeSubset& s, const std::vector<EdgeSubset>& cycles) {
  g.check_owns(s);
  std::optional<EdgeIndex> best;
  for (const EdgeSubset& c : cycles) {
    EdgeIndex top = static_cast<EdgeIndex>(63 - std::countl_zero(c.bits()));
    if (c.without(top).is_subset_of(s) && (!best || top > *best)) best = top;
  }
  return best;
}

bool is_nbc_by_cycles(const Graph& g, const EdgeSubset& s, const std::vector<EdgeSubset>& cycles) {
  return !pivot_by_cycles(g, s, cycles).has_value();
}

}  // namespace chromhom::oracle
