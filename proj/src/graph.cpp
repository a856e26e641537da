#include "chromhom/graph.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "chromhom/errors.hpp"

namespace chromhom {

// ---------------------------------------------------------------------------
// EdgeSubset

EdgeSubset::EdgeSubset(std::size_t universe, std::uint64_t bits) : universe_(universe), bits_(bits) {
  if (universe > max_edges) throw std::invalid_argument("edge subsets support at most 64 edges");
  if (universe < max_edges && (bits >> universe) != 0)
    throw std::invalid_argument("edge subset has members outside its universe");
}

EdgeSubset::EdgeSubset(std::size_t universe, std::initializer_list<EdgeIndex> members)
    : EdgeSubset(universe) {
  for (EdgeIndex e : members) {
    check_index(e);
    bits_ |= std::uint64_t{1} << e;
  }
}

std::size_t EdgeSubset::count() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }

void EdgeSubset::check_index(EdgeIndex e) const {
  if (e >= universe_)
    throw std::out_of_range("edge index " + std::to_string(e) + " outside a subset of " +
                            std::to_string(universe_) + " edges");
}

bool EdgeSubset::contains(EdgeIndex e) const {
  check_index(e);
  return (bits_ >> e) & 1U;
}

EdgeSubset EdgeSubset::with(EdgeIndex e) const {
  check_index(e);
  EdgeSubset out = *this;
  out.bits_ |= std::uint64_t{1} << e;
  return out;
}

EdgeSubset EdgeSubset::without(EdgeIndex e) const {
  check_index(e);
  EdgeSubset out = *this;
  out.bits_ &= ~(std::uint64_t{1} << e);
  return out;
}

EdgeSubset EdgeSubset::toggled(EdgeIndex e) const {
  check_index(e);
  EdgeSubset out = *this;
  out.bits_ ^= std::uint64_t{1} << e;
  return out;
}

EdgeSubset EdgeSubset::below(EdgeIndex e) const {
  EdgeSubset out = *this;
  out.bits_ &= e >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << e) - 1;
  return out;
}

bool EdgeSubset::is_subset_of(const EdgeSubset& other) const {
  return universe_ == other.universe_ && (bits_ & ~other.bits_) == 0;
}

std::vector<EdgeIndex> EdgeSubset::members() const {
  std::vector<EdgeIndex> out;
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<EdgeIndex>(std::countr_zero(b)));
  return out;
}

namespace {
void check_same_universe(const EdgeSubset& a, const EdgeSubset& b) {
  if (a.universe() != b.universe()) throw std::invalid_argument("edge subsets of different graphs");
}
}  // namespace

EdgeSubset operator^(const EdgeSubset& a, const EdgeSubset& b) {
  check_same_universe(a, b);
  return EdgeSubset(a.universe_, a.bits_ ^ b.bits_);
}

EdgeSubset operator|(const EdgeSubset& a, const EdgeSubset& b) {
  check_same_universe(a, b);
  return EdgeSubset(a.universe_, a.bits_ | b.bits_);
}

EdgeSubset operator&(const EdgeSubset& a, const EdgeSubset& b) {
  check_same_universe(a, b);
  return EdgeSubset(a.universe_, a.bits_ & b.bits_);
}

std::string EdgeSubset::to_string() const {
  std::string out = "{";
  bool first = true;
  for (EdgeIndex e : members()) {
    if (!first) out += ',';
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

// ---------------------------------------------------------------------------
// Graph

Graph::Graph(std::size_t n_vertices, std::vector<Edge> edges)
    : n_vertices_(n_vertices), edges_(std::move(edges)) {
  if (n_vertices_ == 0) throw std::invalid_argument("a graph needs at least one vertex");
  if (edges_.size() > EdgeSubset::max_edges)
    throw std::invalid_argument("graphs with more than 64 edges are not supported");
  std::set<std::pair<Vertex, Vertex>> seen;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.u >= n_vertices_ || e.v >= n_vertices_)
      throw std::invalid_argument("edge " + std::to_string(i) + " has an endpoint out of range");
    if (e.u == e.v) throw std::invalid_argument("edge " + std::to_string(i) + " is a loop");
    if (!seen.emplace(std::min(e.u, e.v), std::max(e.u, e.v)).second)
      throw std::invalid_argument("edge " + std::to_string(i) + " duplicates an earlier edge");
  }
}

EdgeSubset Graph::full_subset() const {
  std::size_t m = edges_.size();
  return EdgeSubset(m, m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1);
}

void Graph::check_owns(const EdgeSubset& s) const {
  if (s.universe() != edges_.size())
    throw std::invalid_argument("edge subset of size " + std::to_string(s.universe()) +
                                " does not belong to a graph with " + std::to_string(edges_.size()) +
                                " edges");
}

// ---------------------------------------------------------------------------
// DisjointSets

DisjointSets::DisjointSets(std::size_t n) : parent_(n), size_(n, 1), sets_(n) {
  for (std::size_t i = 0; i < n; ++i) parent_[i] = i;
}

std::size_t DisjointSets::find(std::size_t x) {
  std::size_t root = x;
  while (parent_[root] != root) root = parent_[root];
  while (parent_[x] != root) {
    std::size_t next = parent_[x];
    parent_[x] = root;
    x = next;
  }
  return root;
}

bool DisjointSets::unite(std::size_t x, std::size_t y) {
  x = find(x);
  y = find(y);
  if (x == y) return false;
  if (size_[x] < size_[y]) std::swap(x, y);
  parent_[y] = x;
  size_[x] += size_[y];
  --sets_;
  return true;
}

// ---------------------------------------------------------------------------
// Partitions

VertexPartition::VertexPartition(std::vector<std::vector<Vertex>> blocks) : blocks_(std::move(blocks)) {
  std::size_t n = 0;
  for (auto& b : blocks_) {
    if (b.empty()) throw std::invalid_argument("vertex partition has an empty block");
    std::sort(b.begin(), b.end());
    n += b.size();
  }
  std::sort(blocks_.begin(), blocks_.end(), [](const auto& x, const auto& y) { return x.front() < y.front(); });
  block_of_.assign(n, n);
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    for (Vertex v : blocks_[i]) {
      if (v >= n || block_of_[v] != n)
        throw std::invalid_argument("vertex partition blocks must cover 0..n-1 exactly once");
      block_of_[v] = i;
    }
  }
}

std::string VertexPartition::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) out += ',';
    out += '{';
    for (std::size_t j = 0; j < blocks_[i].size(); ++j) {
      if (j) out += ',';
      out += std::to_string(blocks_[i][j]);
    }
    out += '}';
  }
  return out + "}";
}

IntegerPartition::IntegerPartition(std::vector<unsigned> unsorted) : parts(std::move(unsorted)) {
  if (std::find(parts.begin(), parts.end(), 0U) != parts.end())
    throw std::invalid_argument("integer partition parts must be positive");
  std::sort(parts.begin(), parts.end(), std::greater<>());
}

unsigned IntegerPartition::total() const noexcept {
  unsigned t = 0;
  for (unsigned p : parts) t += p;
  return t;
}

std::string IntegerPartition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Component analysis

namespace {

DisjointSets spanning_sets(const Graph& g, const EdgeSubset& s) {
  g.check_owns(s);
  DisjointSets sets(g.vertex_count());
  for (std::uint64_t b = s.bits(); b != 0; b &= b - 1) {
    const Edge& e = g.edge(static_cast<EdgeIndex>(std::countr_zero(b)));
    sets.unite(e.u, e.v);
  }
  return sets;
}

}  // namespace

VertexPartition components(const Graph& g, const EdgeSubset& s) {
  DisjointSets sets = spanning_sets(g, s);
  std::vector<std::vector<Vertex>> by_root(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) by_root[sets.find(v)].push_back(v);
  std::vector<std::vector<Vertex>> blocks;
  for (auto& b : by_root)
    if (!b.empty()) blocks.push_back(std::move(b));
  return VertexPartition(std::move(blocks));
}

std::size_t component_count(const Graph& g, const EdgeSubset& s) { return spanning_sets(g, s).set_count(); }

IntegerPartition size_partition(const Graph& g, const EdgeSubset& s) {
  VertexPartition p = components(g, s);
  std::vector<unsigned> sizes;
  for (const auto& b : p.blocks()) sizes.push_back(static_cast<unsigned>(b.size()));
  return IntegerPartition(std::move(sizes));
}

bool completes_cycle(const Graph& g, const EdgeSubset& s, EdgeIndex e) {
  if (s.contains(e)) throw ContractViolation("completes_cycle: edge " + std::to_string(e) + " already in the subset");
  DisjointSets sets = spanning_sets(g, s);
  return sets.connected(g.edge(e).u, g.edge(e).v);
}

bool is_cycle_space_member(const Graph& g, const EdgeSubset& s) {
  g.check_owns(s);
  std::vector<unsigned> degree(g.vertex_count(), 0);
  for (EdgeIndex e : s.members()) {
    ++degree[g.edge(e).u];
    ++degree[g.edge(e).v];
  }
  return std::all_of(degree.begin(), degree.end(), [](unsigned d) { return d % 2 == 0; });
}

// ---------------------------------------------------------------------------
// Edge-list I/O

namespace {

std::string strip_comment(const std::string& line) {
  auto hash = line.find('#');
  std::string body = hash == std::string::npos ? line : line.substr(0, hash);
  auto first = body.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  auto last = body.find_last_not_of(" \t\r");
  return body.substr(first, last - first + 1);
}

long long parse_integer(std::istringstream& fields, std::size_t line_no, const char* what) {
  std::string token;
  if (!(fields >> token)) throw ParseError(std::string("missing ") + what, line_no);
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(token, &used);
  } catch (const std::exception&) {
    throw ParseError(std::string("expected an integer for ") + what + ", got '" + token + "'", line_no);
  }
  if (used != token.size())
    throw ParseError(std::string("expected an integer for ") + what + ", got '" + token + "'", line_no);
  return value;
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  long long n = -1;
  std::vector<Edge> edges;
  std::set<std::pair<Vertex, Vertex>> seen;
  while (std::getline(in, line)) {
    ++line_no;
    std::string body = strip_comment(line);
    if (body.empty()) continue;
    std::istringstream fields(body);
    if (n < 0) {
      std::string keyword;
      fields >> keyword;
      if (keyword != "n") throw ParseError("expected header 'n <vertex count>'", line_no);
      n = parse_integer(fields, line_no, "vertex count");
      if (n <= 0) throw ParseError("vertex count must be positive", line_no);
    } else {
      long long u = parse_integer(fields, line_no, "first endpoint");
      long long v = parse_integer(fields, line_no, "second endpoint");
      if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError("endpoint out of range [0, n)", line_no);
      if (u == v) throw ParseError("loops are not allowed", line_no);
      if (!seen.emplace(std::min(u, v), std::max(u, v)).second)
        throw ParseError("multi-edge " + std::to_string(u) + " " + std::to_string(v), line_no);
      if (edges.size() == EdgeSubset::max_edges) throw ParseError("more than 64 edges", line_no);
      edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
    std::string extra;
    if (fields >> extra) throw ParseError("unexpected trailing token '" + extra + "'", line_no);
  }
  if (n < 0) throw ParseError("missing header 'n <vertex count>'", line_no + 1);
  return Graph(static_cast<std::size_t>(n), std::move(edges));
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

Graph load_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open graph file " + path.string());
  return parse_edge_list(in);
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.vertex_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

// ---------------------------------------------------------------------------
// Constructors

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges(a.edges().begin(), a.edges().end());
  auto shift = static_cast<Vertex>(a.vertex_count());
  for (const Edge& e : b.edges()) edges.push_back({e.u + shift, e.v + shift});
  return Graph(a.vertex_count() + b.vertex_count(), std::move(edges));
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycles need at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  edges.push_back({0, static_cast<Vertex>(n - 1)});
  return Graph(n, std::move(edges));
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph(n, std::move(edges));
}

Graph star_graph(std::size_t leaves) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.push_back({0, v});
  return Graph(leaves + 1, std::move(edges));
}

Graph edgeless_graph(std::size_t n) { return Graph(n, {}); }

}  // namespace chromhom
