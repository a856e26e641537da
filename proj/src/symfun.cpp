#include "chromhom/symfun.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "chromhom/homology.hpp"

namespace chromhom {

BigInt PSymFun::coefficient(const IntegerPartition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void PSymFun::add_term(const IntegerPartition& lambda, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

PSymFun& PSymFun::operator+=(const PSymFun& rhs) {
  for (const auto& [lambda, c] : rhs.terms_) add_term(lambda, c);
  return *this;
}

std::string PSymFun::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Lexicographic on parts: p[1,1,1] - 3p[2,1] + 2p[3].
  for (auto it = terms_.begin(); it != terms_.end(); ++it) {
    const BigInt& c = it->second;
    if (first)
      out << (sgn(c) < 0 ? "-" : "");
    else
      out << (sgn(c) < 0 ? " - " : " + ");
    BigInt magnitude = abs(c);
    if (magnitude != 1) out << magnitude.get_str();
    out << "p[" << it->first.to_string() << "]";
    first = false;
  }
  return out.str();
}

namespace {

constexpr std::size_t max_statesum_edges = 30;

template <class Visit>
void for_each_subset(const Graph& g, Visit&& visit) {
  if (g.edge_count() > max_statesum_edges) throw std::invalid_argument("state sums over 2^E are limited to 30 edges");
  const std::uint64_t total = std::uint64_t{1} << g.edge_count();
  for (std::uint64_t bits = 0; bits < total; ++bits) visit(EdgeSubset(g.edge_count(), bits));
}

BigInt sign_of(const EdgeSubset& s) { return s.count() % 2 == 0 ? BigInt(1) : BigInt(-1); }

// --- deletion-contraction ---------------------------------------------------

struct AdjacencyGraph {
  std::size_t n;
  std::vector<std::uint64_t> adj;

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (std::uint64_t row : adj) twice += static_cast<std::size_t>(std::popcount(row));
    return twice / 2;
  }
};

std::size_t count_components(const AdjacencyGraph& g) {
  std::uint64_t seen = 0;
  std::size_t count = 0;
  for (std::size_t v = 0; v < g.n; ++v) {
    if ((seen >> v) & 1U) continue;
    ++count;
    std::uint64_t frontier = std::uint64_t{1} << v;
    seen |= frontier;
    while (frontier != 0) {
      std::size_t u = static_cast<std::size_t>(std::countr_zero(frontier));
      frontier &= frontier - 1;
      std::uint64_t next = g.adj[u] & ~seen;
      seen |= next;
      frontier |= next;
    }
  }
  return count;
}

std::size_t factorial_capped(std::size_t k, std::size_t cap) {
  std::size_t f = 1;
  for (std::size_t i = 2; i <= k && f <= cap; ++i) f *= i;
  return f;
}

std::string encode(const AdjacencyGraph& g, const std::vector<std::size_t>& order) {
  std::vector<std::size_t> position(g.n);
  for (std::size_t i = 0; i < g.n; ++i) position[order[i]] = i;
  std::string key(1, static_cast<char>(g.n));
  for (std::size_t i = 0; i < g.n; ++i) {
    std::uint64_t row = 0;
    for (std::uint64_t b = g.adj[order[i]]; b != 0; b &= b - 1)
      row |= std::uint64_t{1} << position[static_cast<std::size_t>(std::countr_zero(b))];
    key.append(reinterpret_cast<const char*>(&row), sizeof row);
  }
  return key;
}

// Relabels by colour refinement; ties inside small cells are broken by
// taking the least encoding over all in-cell permutations. The key is the
// relabeled adjacency itself, so a non-canonical key only costs cache hits.
std::string relabeled_key(const AdjacencyGraph& g) {
  std::vector<std::size_t> color(g.n);
  for (std::size_t v = 0; v < g.n; ++v) color[v] = static_cast<std::size_t>(std::popcount(g.adj[v]));
  for (std::size_t round = 0; round < g.n; ++round) {
    std::vector<std::pair<std::vector<std::size_t>, std::size_t>> signature(g.n);
    for (std::size_t v = 0; v < g.n; ++v) {
      std::vector<std::size_t> sig{color[v]};
      std::vector<std::size_t> nbr;
      for (std::uint64_t b = g.adj[v]; b != 0; b &= b - 1) nbr.push_back(color[static_cast<std::size_t>(std::countr_zero(b))]);
      std::sort(nbr.begin(), nbr.end());
      sig.insert(sig.end(), nbr.begin(), nbr.end());
      signature[v] = {std::move(sig), v};
    }
    std::vector<std::pair<std::vector<std::size_t>, std::size_t>> sorted = signature;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::size_t> refined(g.n);
    std::size_t rank = 0;
    for (std::size_t i = 0; i < g.n; ++i) {
      if (i > 0 && sorted[i].first != sorted[i - 1].first) ++rank;
      refined[sorted[i].second] = rank;
    }
    bool stable = std::set<std::size_t>(refined.begin(), refined.end()).size() ==
                  std::set<std::size_t>(color.begin(), color.end()).size();
    color = std::move(refined);
    if (stable) break;
  }

  std::vector<std::size_t> order(g.n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return color[a] != color[b] ? color[a] < color[b] : a < b;
  });

  std::vector<std::pair<std::size_t, std::size_t>> cells;  // [begin, end)
  std::size_t work = 1;
  constexpr std::size_t budget = 720;
  for (std::size_t i = 0; i < g.n;) {
    std::size_t j = i;
    while (j < g.n && color[order[j]] == color[order[i]]) ++j;
    cells.emplace_back(i, j);
    work *= factorial_capped(j - i, budget + 1);
    if (work > budget) break;
    i = j;
  }
  if (work > budget) return encode(g, order);

  std::string best = encode(g, order);
  // Odometer over the per-cell permutations.
  std::vector<std::size_t> current = order;
  auto visit = [&](auto&& self, std::size_t cell) -> void {
    if (cell == cells.size()) {
      best = std::min(best, encode(g, current));
      return;
    }
    auto [lo, hi] = cells[cell];
    std::sort(current.begin() + static_cast<std::ptrdiff_t>(lo), current.begin() + static_cast<std::ptrdiff_t>(hi));
    do {
      self(self, cell + 1);
    } while (std::next_permutation(current.begin() + static_cast<std::ptrdiff_t>(lo),
                                   current.begin() + static_cast<std::ptrdiff_t>(hi)));
  };
  visit(visit, 0);
  return best;
}

AdjacencyGraph delete_edge(AdjacencyGraph g, std::size_t u, std::size_t v) {
  g.adj[u] &= ~(std::uint64_t{1} << v);
  g.adj[v] &= ~(std::uint64_t{1} << u);
  return g;
}

// Merges v into u; parallel edges collapse, the contracted edge disappears.
AdjacencyGraph contract_edge(const AdjacencyGraph& g, std::size_t u, std::size_t v) {
  AdjacencyGraph h{g.n - 1, {}};
  auto relabel = [&](std::size_t w) { return w < v ? w : w - 1; };
  auto remap = [&](std::uint64_t row) {
    std::uint64_t out = 0;
    for (std::uint64_t b = row; b != 0; b &= b - 1) {
      std::size_t w = static_cast<std::size_t>(std::countr_zero(b));
      if (w == v) w = u;
      out |= std::uint64_t{1} << relabel(w);
    }
    return out;
  };
  h.adj.resize(h.n);
  for (std::size_t w = 0; w < g.n; ++w) {
    if (w == v) continue;
    std::uint64_t row = w == u ? (g.adj[u] | g.adj[v]) : g.adj[w];
    row = remap(row);
    row &= ~(std::uint64_t{1} << relabel(w));
    h.adj[relabel(w)] = row;
  }
  return h;
}

Polynomial forest_polynomial(std::size_t n, std::size_t components) {
  // x^c (x - 1)^{n - c}
  Polynomial out = Polynomial::monomial(static_cast<unsigned>(components));
  Polynomial factor(std::vector<BigInt>{-1, 1});
  for (std::size_t i = components; i < n; ++i) out = out * factor;
  return out;
}

Polynomial delcon(const AdjacencyGraph& g, std::unordered_map<std::string, Polynomial>& memo) {
  const std::size_t m = g.edge_count();
  const std::size_t c = count_components(g);
  if (m + c == g.n) return forest_polynomial(g.n, c);

  std::string key = relabeled_key(g);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  std::size_t u = 0;
  while (g.adj[u] == 0) ++u;
  std::size_t v = static_cast<std::size_t>(std::countr_zero(g.adj[u]));
  Polynomial result = delcon(delete_edge(g, u, v), memo) - delcon(contract_edge(g, std::min(u, v), std::max(u, v)), memo);
  memo.emplace(std::move(key), result);
  return result;
}

}  // namespace

ChromaticPolynomial chromatic_statesum(const Graph& g) {
  std::vector<BigInt> coeffs(g.vertex_count() + 1);
  for_each_subset(g, [&](const EdgeSubset& s) { coeffs[component_count(g, s)] += sign_of(s); });
  return ChromaticPolynomial(std::move(coeffs));
}

ChromaticPolynomial chromatic_nbc(const Graph& g) {
  std::vector<BigInt> coeffs(g.vertex_count() + 1);
  for_each_nbc(g, [&](const EdgeSubset& s) { coeffs[component_count(g, s)] += sign_of(s); });
  return ChromaticPolynomial(std::move(coeffs));
}

ChromaticPolynomial chromatic_delcon(const Graph& g) {
  AdjacencyGraph adj{g.vertex_count(), std::vector<std::uint64_t>(g.vertex_count(), 0)};
  if (g.vertex_count() > 64) throw std::invalid_argument("deletion-contraction supports at most 64 vertices");
  for (const Edge& e : g.edges()) {
    adj.adj[e.u] |= std::uint64_t{1} << e.v;
    adj.adj[e.v] |= std::uint64_t{1} << e.u;
  }
  std::unordered_map<std::string, Polynomial> memo;
  return delcon(adj, memo);
}

BigInt count_colorings(const Graph& g, unsigned k) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<Vertex>> earlier(n);
  for (const Edge& e : g.edges()) earlier[std::max(e.u, e.v)].push_back(std::min(e.u, e.v));
  std::vector<unsigned> color(n, 0);
  std::uint64_t count = 0;
  auto place = [&](auto&& self, std::size_t v) -> void {
    if (v == n) {
      ++count;
      return;
    }
    for (unsigned c = 0; c < k; ++c) {
      bool clash = std::any_of(earlier[v].begin(), earlier[v].end(), [&](Vertex w) { return color[w] == c; });
      if (clash) continue;
      color[v] = c;
      self(self, v + 1);
    }
  };
  place(place, 0);
  return BigInt(static_cast<unsigned long>(count));
}

PSymFun csf_statesum(const Graph& g) {
  PSymFun f;
  for_each_subset(g, [&](const EdgeSubset& s) { f.add_term(size_partition(g, s), sign_of(s)); });
  return f;
}

PSymFun csf_nbc(const Graph& g) {
  PSymFun f;
  for_each_nbc(g, [&](const EdgeSubset& s) { f.add_term(size_partition(g, s), sign_of(s)); });
  return f;
}

BigInt specialize_csf(const PSymFun& f, const BigInt& k) {
  BigInt total = 0;
  for (const auto& [lambda, c] : f.terms()) {
    BigInt power;
    mpz_pow_ui(power.get_mpz_t(), k.get_mpz_t(), lambda.length());
    total += c * power;
  }
  return total;
}

LaurentPolynomial substitute_qrank(const ChromaticPolynomial& chi, const LaurentPolynomial& qrank) {
  return chi.compose(qrank);
}

ChromaticPolynomial bc_chromatic_sum(const Graph& g) {
  std::vector<BigInt> coeffs(g.vertex_count() + 1);
  for_each_subset(g, [&](const EdgeSubset& s) {
    if (!is_nbc(g, s)) coeffs[component_count(g, s)] += sign_of(s);
  });
  return ChromaticPolynomial(std::move(coeffs));
}

PSymFun bc_csf_sum(const Graph& g) {
  PSymFun f;
  for_each_subset(g, [&](const EdgeSubset& s) {
    if (!is_nbc(g, s)) f.add_term(size_partition(g, s), sign_of(s));
  });
  return f;
}

CancellationReport check_pairwise_cancellation(const Graph& g, const Matching& m) {
  CancellationReport report;
  for (const MatchedPair& p : m.pairs) {
    bool opposite = sign_of(p.lower) + sign_of(p.upper) == 0;
    bool same_k = component_count(g, p.lower) == component_count(g, p.upper);
    bool same_lambda = size_partition(g, p.lower) == size_partition(g, p.upper);
    if (!(opposite && same_k && same_lambda)) {
      report.ok = false;
      report.witness = "pair " + p.lower.to_string() + " -> " + p.upper.to_string() + " does not cancel";
      return report;
    }
  }
  return report;
}

nlohmann::json polynomial_to_json(const Polynomial& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const BigInt& c : p.coefficients()) out.push_back(bigint_to_json(c));
  return out;
}

nlohmann::json psymfun_to_json(const PSymFun& f) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [lambda, c] : f.terms()) out[lambda.to_string()] = bigint_to_json(c);
  return out;
}

}  // namespace chromhom
