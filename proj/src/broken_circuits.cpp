#include "chromhom/broken_circuits.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "chromhom/errors.hpp"

namespace chromhom {

std::optional<EdgeIndex> pivot_edge(const Graph& g, const EdgeSubset& s) {
  g.check_owns(s);
  // Sweep edges upwards; before edge e is added, the union-find holds s_{<e}.
  DisjointSets sets(g.vertex_count());
  std::optional<EdgeIndex> pivot;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    if (sets.connected(edge.u, edge.v)) pivot = e;
    if (s.contains(e)) sets.unite(edge.u, edge.v);
  }
  return pivot;
}

bool is_nbc(const Graph& g, const EdgeSubset& s) { return !pivot_edge(g, s).has_value(); }

EdgeSubset involution(const Graph& g, const EdgeSubset& s) {
  auto pivot = pivot_edge(g, s);
  if (!pivot) throw ContractViolation("involution: " + s.to_string() + " contains no broken circuit");
  return s.toggled(*pivot);
}

namespace {

constexpr std::size_t max_enumerable_edges = 30;

void check_enumerable(const Graph& g) {
  if (g.edge_count() > max_enumerable_edges)
    throw std::invalid_argument("exhaustive enumeration of 2^E is limited to 30 edges");
}

}  // namespace

std::vector<EdgeSubset> bc_sets(const Graph& g) {
  check_enumerable(g);
  std::vector<EdgeSubset> out;
  const std::uint64_t total = std::uint64_t{1} << g.edge_count();
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    EdgeSubset s(g.edge_count(), bits);
    if (!is_nbc(g, s)) out.push_back(s);
  }
  return out;
}

Matching build_matching(const Graph& g) {
  Matching m;
  for (const EdgeSubset& s : bc_sets(g)) {
    EdgeIndex e = *pivot_edge(g, s);
    if (!s.contains(e)) m.pairs.push_back({s, s.with(e), e});
  }
  return m;
}

bool verify_acyclic(std::span<const EdgeSubset> states, const Matching& m) {
  std::unordered_map<std::uint64_t, std::size_t> index;
  std::size_t universe = states.empty() ? 0 : states.front().universe();
  for (std::size_t i = 0; i < states.size(); ++i) index.emplace(states[i].bits(), i);

  std::set<std::pair<std::uint64_t, std::uint64_t>> matched;
  for (const MatchedPair& p : m.pairs) matched.emplace(p.lower.bits(), p.upper.bits());

  std::vector<std::vector<std::size_t>> out(states.size());
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (EdgeIndex e = 0; e < universe; ++e) {
      if (states[i].contains(e)) continue;
      auto it = index.find(states[i].with(e).bits());
      if (it == index.end()) continue;
      if (matched.count({states[i].bits(), it->first}))
        out[it->second].push_back(i);
      else
        out[i].push_back(it->second);
    }
  }

  enum class Mark : unsigned char { fresh, open, done };
  std::vector<Mark> mark(states.size(), Mark::fresh);
  std::vector<std::pair<std::size_t, std::size_t>> stack;
  for (std::size_t root = 0; root < states.size(); ++root) {
    if (mark[root] != Mark::fresh) continue;
    mark[root] = Mark::open;
    stack.emplace_back(root, 0);
    while (!stack.empty()) {
      auto& [node, next] = stack.back();
      if (next == out[node].size()) {
        mark[node] = Mark::done;
        stack.pop_back();
        continue;
      }
      std::size_t child = out[node][next++];
      if (mark[child] == Mark::open) return false;
      if (mark[child] == Mark::fresh) {
        mark[child] = Mark::open;
        stack.emplace_back(child, 0);
      }
    }
  }
  return true;
}

bool verify_acyclic(const Graph& g, const Matching& m) {
  std::vector<EdgeSubset> bc = bc_sets(g);
  return verify_acyclic(bc, m);
}

MatchingReport check_matching(const Graph& g, const Matching& m) {
  MatchingReport report;
  report.covers_only = true;
  report.partition_preserving = true;
  for (const MatchedPair& p : m.pairs) {
    g.check_owns(p.lower);
    g.check_owns(p.upper);
    if (p.lower.contains(p.edge) || p.upper != p.lower.with(p.edge)) {
      report.covers_only = false;
      if (report.witness.empty())
        report.witness = "pair " + p.lower.to_string() + " -> " + p.upper.to_string() + " is not a cover";
    }
    if (!(components(g, p.lower) == components(g, p.upper))) {
      report.partition_preserving = false;
      if (report.witness.empty())
        report.witness = "pair " + p.lower.to_string() + " -> " + p.upper.to_string() + " changes the partition";
    }
  }

  std::unordered_set<std::uint64_t> used;
  bool disjoint = true;
  for (const MatchedPair& p : m.pairs) {
    disjoint = used.insert(p.lower.bits()).second && disjoint;
    disjoint = used.insert(p.upper.bits()).second && disjoint;
  }
  std::vector<EdgeSubset> bc = bc_sets(g);
  bool covers_bc = used.size() == bc.size() &&
                   std::all_of(bc.begin(), bc.end(), [&](const EdgeSubset& s) { return used.count(s.bits()) > 0; });
  report.perfect = disjoint && covers_bc;
  if (!report.perfect && report.witness.empty()) {
    report.witness = disjoint ? "matched sets differ from BC (" + std::to_string(used.size()) + " matched, " +
                                    std::to_string(bc.size()) + " in BC)"
                              : "a set appears in two pairs";
  }
  return report;
}

LinearExtensionError::LinearExtensionError(const EdgeSubset& earlier, const EdgeSubset& later)
    : std::runtime_error("linear extension violated: " + earlier.to_string() + " is listed before its subset " +
                         later.to_string()),
      smaller_(later),
      larger_(earlier) {}

std::vector<EdgeSubset> linear_extension(const Graph& g, const Matching& m) {
  std::vector<MatchedPair> pairs = m.pairs;
  std::sort(pairs.begin(), pairs.end(), [](const MatchedPair& a, const MatchedPair& b) {
    std::size_t ca = a.lower.count(), cb = b.lower.count();
    if (ca != cb) return ca < cb;
    return a.lower.bits() > b.lower.bits();
  });

  std::vector<EdgeSubset> order;
  order.reserve(pairs.size() * 2);
  for (const MatchedPair& p : pairs) {
    g.check_owns(p.lower);
    order.push_back(p.lower);
    order.push_back(p.upper);
  }

  // BC is an upper ideal, so every interval between two BC sets stays in BC
  // and checking cover relations is enough.
  std::unordered_map<std::uint64_t, std::size_t> position;
  for (std::size_t i = 0; i < order.size(); ++i) position.emplace(order[i].bits(), i);
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (EdgeIndex e : order[i].members()) {
      auto it = position.find(order[i].without(e).bits());
      if (it != position.end() && it->second > i) throw LinearExtensionError(order[i], order[it->second]);
    }
  }
  return order;
}

std::vector<EdgeSubset> nbc_sets(const Graph& g) {
  std::vector<EdgeSubset> out;
  for_each_nbc(g, [&](const EdgeSubset& s) { out.push_back(s); });
  return out;
}

std::size_t nbc_count(const Graph& g) {
  std::size_t n = 0;
  for_each_nbc(g, [&](const EdgeSubset&) { ++n; });
  return n;
}

}  // namespace chromhom
