#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace chromhom {

using Vertex = std::uint32_t;
using EdgeIndex = std::size_t;

/// Subset of the edge set of a specific graph, stored as a bitmask. Bit i is
/// edge e_{i+1} in the fixed edge order.
class EdgeSubset {
 public:
  static constexpr std::size_t max_edges = 64;

  EdgeSubset() = default;
  explicit EdgeSubset(std::size_t universe, std::uint64_t bits = 0);
  EdgeSubset(std::size_t universe, std::initializer_list<EdgeIndex> members);

  std::size_t universe() const noexcept { return universe_; }
  std::uint64_t bits() const noexcept { return bits_; }
  std::size_t count() const noexcept;
  bool empty() const noexcept { return bits_ == 0; }

  bool contains(EdgeIndex e) const;
  EdgeSubset with(EdgeIndex e) const;
  EdgeSubset without(EdgeIndex e) const;
  /// S + e: adds e if absent, removes it otherwise.
  EdgeSubset toggled(EdgeIndex e) const;
  /// Members strictly below e in the edge order.
  EdgeSubset below(EdgeIndex e) const;

  bool is_subset_of(const EdgeSubset& other) const;
  std::vector<EdgeIndex> members() const;

  /// Symmetric difference, the group operation of the edge space.
  friend EdgeSubset operator^(const EdgeSubset& a, const EdgeSubset& b);
  friend EdgeSubset operator|(const EdgeSubset& a, const EdgeSubset& b);
  friend EdgeSubset operator&(const EdgeSubset& a, const EdgeSubset& b);

  friend bool operator==(const EdgeSubset&, const EdgeSubset&) = default;
  friend auto operator<=>(const EdgeSubset&, const EdgeSubset&) = default;

  /// "{0,2}" with 0-based edge indices.
  std::string to_string() const;

 private:
  void check_index(EdgeIndex e) const;

  std::size_t universe_ = 0;
  std::uint64_t bits_ = 0;
};

struct Edge {
  Vertex u;
  Vertex v;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Simple undirected graph with a fixed total order on its edges.
class Graph {
 public:
  /// Throws std::invalid_argument on loops, duplicate edges, out-of-range
  /// endpoints, zero vertices or more than EdgeSubset::max_edges edges.
  Graph(std::size_t n_vertices, std::vector<Edge> edges);

  std::size_t vertex_count() const noexcept { return n_vertices_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(EdgeIndex e) const { return edges_.at(e); }

  EdgeSubset empty_subset() const { return EdgeSubset(edges_.size()); }
  EdgeSubset full_subset() const;
  EdgeSubset subset(std::initializer_list<EdgeIndex> members) const {
    return EdgeSubset(edges_.size(), members);
  }
  /// Throws std::invalid_argument when s was built for a different edge count.
  void check_owns(const EdgeSubset& s) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t n_vertices_;
  std::vector<Edge> edges_;
};

/// Union-find with path compression and union by size.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n);

  std::size_t find(std::size_t x);
  /// Returns false when x and y were already joined.
  bool unite(std::size_t x, std::size_t y);
  bool connected(std::size_t x, std::size_t y) { return find(x) == find(y); }
  std::size_t set_count() const noexcept { return sets_; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
  std::size_t sets_;
};

/// Set partition of the vertex set. Blocks are sorted internally and ordered
/// by their minimum vertex; that order is the tensor-factor order.
class VertexPartition {
 public:
  explicit VertexPartition(std::vector<std::vector<Vertex>> blocks);

  std::size_t block_count() const noexcept { return blocks_.size(); }
  const std::vector<std::vector<Vertex>>& blocks() const noexcept { return blocks_; }
  /// Position of the block containing v.
  std::size_t block_of(Vertex v) const { return block_of_.at(v); }

  friend bool operator==(const VertexPartition& a, const VertexPartition& b) {
    return a.blocks_ == b.blocks_;
  }

  std::string to_string() const;

 private:
  std::vector<std::vector<Vertex>> blocks_;
  std::vector<std::size_t> block_of_;
};

/// Weakly decreasing sequence of positive integers.
struct IntegerPartition {
  std::vector<unsigned> parts;

  IntegerPartition() = default;
  /// Sorts the given parts into decreasing order; rejects zero parts.
  explicit IntegerPartition(std::vector<unsigned> unsorted);

  unsigned total() const noexcept;
  std::size_t length() const noexcept { return parts.size(); }

  friend bool operator==(const IntegerPartition&, const IntegerPartition&) = default;
  friend auto operator<=>(const IntegerPartition&, const IntegerPartition&) = default;

  /// "2,1,1"; the empty partition renders as "".
  std::string to_string() const;
};

VertexPartition components(const Graph& g, const EdgeSubset& s);
std::size_t component_count(const Graph& g, const EdgeSubset& s);
IntegerPartition size_partition(const Graph& g, const EdgeSubset& s);
/// True iff the endpoints of e already share a component of s. Requires e not in s.
bool completes_cycle(const Graph& g, const EdgeSubset& s, EdgeIndex e);
/// Every vertex has even degree in (V, s).
bool is_cycle_space_member(const Graph& g, const EdgeSubset& s);

/// Edge-list text format: "n <count>" then one "u v" per edge, '#' comments.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);
Graph load_edge_list(const std::filesystem::path& path);
std::string format_edge_list(const Graph& g);

/// Vertex-disjoint union; the edges of b follow those of a.
Graph disjoint_union(const Graph& a, const Graph& b);

Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph star_graph(std::size_t leaves);
Graph edgeless_graph(std::size_t n);

}  // namespace chromhom
