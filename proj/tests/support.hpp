#pragma once

// Shared fixtures and brute-force references for the test binaries. Nothing
// here calls into the chain-complex, homology or broken-circuit code paths.

#include <algorithm>
#include <filesystem>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "chromhom/graph.hpp"
#include "chromhom/polynomial.hpp"

namespace testsupport {

using chromhom::BigInt;
using chromhom::Edge;
using chromhom::Graph;
using chromhom::Vertex;

inline std::filesystem::path corpus_dir() { return CHROMHOM_CORPUS_DIR; }

struct CorpusGraph {
  std::string name;
  Graph graph;
};

/// Atlas graphs first (file-name order), then the extras.
inline std::vector<CorpusGraph> load_corpus() {
  std::vector<CorpusGraph> out;
  for (const auto& dir : {corpus_dir(), corpus_dir() / "extra"}) {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir))
      if (entry.path().extension() == ".txt") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
      std::string name = f.stem().string();
      if (dir != corpus_dir()) name = "extra/" + name;
      out.push_back({name, chromhom::load_edge_list(f)});
    }
  }
  return out;
}

inline Graph corpus_graph(const std::string& relative) { return chromhom::load_edge_list(corpus_dir() / relative); }

/// G(n, p) with edges in a random order.
inline Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::vector<Edge> edges;
  std::bernoulli_distribution coin(p);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) edges.push_back({u, v});
  std::shuffle(edges.begin(), edges.end(), rng);
  return Graph(n, std::move(edges));
}

/// Random graph with at most max_edges edges.
inline Graph random_small_graph(std::mt19937_64& rng, std::size_t max_vertices, std::size_t max_edges) {
  std::uniform_int_distribution<std::size_t> nv(1, max_vertices);
  std::uniform_real_distribution<double> dp(0.2, 0.9);
  for (;;) {
    Graph g = random_graph(rng, nv(rng), dp(rng));
    if (g.edge_count() <= max_edges) return g;
  }
}

// ---------------------------------------------------------------------------
// Colorings and the chromatic polynomial by interpolation.

/// Proper k-colorings by plain enumeration of all k^n maps.
inline BigInt brute_colorings(const Graph& g, unsigned k) {
  const std::size_t n = g.vertex_count();
  if (k == 0) return 0;
  std::vector<unsigned> c(n, 0);
  BigInt count = 0;
  for (;;) {
    bool proper = true;
    for (const Edge& e : g.edges())
      if (c[e.u] == c[e.v]) {
        proper = false;
        break;
      }
    if (proper) ++count;
    std::size_t i = 0;
    while (i < n && ++c[i] == k) c[i++] = 0;
    if (i == n) return count;
  }
}

/// Lagrange interpolation through (0, y0), ..., (d, yd) with exact division.
inline chromhom::Polynomial interpolate(const std::vector<BigInt>& ys) {
  using chromhom::Polynomial;
  const std::size_t d = ys.size();
  BigInt denom_total = 1;
  for (std::size_t i = 1; i <= d; ++i) denom_total *= BigInt(i);
  // Accumulate denom_total * P, then divide.
  Polynomial scaled;
  for (std::size_t i = 0; i < d; ++i) {
    Polynomial basis(std::vector<BigInt>{1});
    BigInt denom = 1;
    for (std::size_t m = 0; m < d; ++m) {
      if (m == i) continue;
      basis = basis * Polynomial(std::vector<BigInt>{-BigInt(m), 1});
      denom *= BigInt(static_cast<long>(i) - static_cast<long>(m));
    }
    BigInt factor = ys[i] * denom_total / denom;
    scaled += basis * Polynomial(std::vector<BigInt>{factor});
  }
  std::vector<BigInt> coeffs = scaled.coefficients();
  for (BigInt& c : coeffs) c /= denom_total;
  return Polynomial(coeffs);
}

inline chromhom::Polynomial chromatic_by_interpolation(const Graph& g) {
  std::vector<BigInt> ys;
  for (unsigned k = 0; k <= g.vertex_count(); ++k) ys.push_back(brute_colorings(g, k));
  return interpolate(ys);
}

// ---------------------------------------------------------------------------
// Naive chromatic complex over Z[x]/(x^m), built from scratch with dense
// matrices: basis elements are (state, exponent vector over components ordered
// by minimum vertex).

/// Component labels by repeated relaxation; label = minimum vertex.
inline std::vector<Vertex> naive_labels(const Graph& g, std::uint64_t mask) {
  std::vector<Vertex> label(g.vertex_count());
  std::iota(label.begin(), label.end(), Vertex{0});
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      if (!(mask >> e & 1)) continue;
      Vertex a = label[g.edge(e).u], b = label[g.edge(e).v];
      if (a == b) continue;
      Vertex lo = std::min(a, b), hi = std::max(a, b);
      for (Vertex& l : label)
        if (l == hi) l = lo;
      changed = true;
    }
  }
  return label;
}

struct NaiveComplex {
  // (i, j) -> list of basis elements (mask, exponents per distinct label in increasing label order)
  std::map<std::pair<int, int>, std::vector<std::pair<std::uint64_t, std::vector<unsigned>>>> basis;
  // (i, j) -> dense matrix of d^{i,j}, rows = target
  std::map<std::pair<int, int>, std::vector<std::vector<long>>> diff;
};

/// Only the given states are used; maps run between states of that list.
inline NaiveComplex naive_complex(const Graph& g, unsigned m, const std::vector<std::uint64_t>& allowed_states) {
  NaiveComplex out;
  const std::size_t E = g.edge_count();
  std::map<std::uint64_t, std::vector<Vertex>> roots;
  for (std::uint64_t mask : allowed_states) {
    std::vector<Vertex> lab = naive_labels(g, mask);
    std::vector<Vertex> r(lab.begin(), lab.end());
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
    roots[mask] = r;
    const int i = __builtin_popcountll(mask);
    std::vector<unsigned> ex(r.size(), 0);
    for (;;) {
      int j = std::accumulate(ex.begin(), ex.end(), 0);
      out.basis[{i, j}].push_back({mask, ex});
      std::size_t p = 0;
      while (p < ex.size() && ++ex[p] == m) ex[p++] = 0;
      if (p == ex.size()) break;
    }
  }
  for (auto& [ij, src] : out.basis) {
    auto it = out.basis.find({ij.first + 1, ij.second});
    std::vector<std::vector<long>> d;
    const std::size_t rows = it == out.basis.end() ? 0 : it->second.size();
    d.assign(rows, std::vector<long>(src.size(), 0));
    if (rows > 0) {
      std::map<std::pair<std::uint64_t, std::vector<unsigned>>, std::size_t> where;
      for (std::size_t t = 0; t < rows; ++t) where[it->second[t]] = t;
      for (std::size_t s = 0; s < src.size(); ++s) {
        const auto& [mask, ex] = src[s];
        for (std::size_t e = 0; e < E; ++e) {
          if (mask >> e & 1) continue;
          std::uint64_t up = mask | (std::uint64_t{1} << e);
          if (!roots.count(up)) continue;
          int sign = (__builtin_popcountll(mask & ((std::uint64_t{1} << e) - 1)) % 2) ? -1 : 1;
          // Map exponents: old labels -> new labels; merged components add.
          std::vector<Vertex> new_lab = naive_labels(g, up);
          const auto& old_roots = roots[mask];
          const auto& new_roots = roots[up];
          std::vector<unsigned> nex(new_roots.size(), 0);
          bool zero = false;
          for (std::size_t c = 0; c < old_roots.size(); ++c) {
            Vertex target = new_lab[old_roots[c]];
            auto pos = std::lower_bound(new_roots.begin(), new_roots.end(), target) - new_roots.begin();
            nex[pos] += ex[c];
            if (nex[pos] >= m) zero = true;
          }
          if (zero) continue;
          d[where.at({up, nex})][s] += sign;
        }
      }
    }
    out.diff[ij] = std::move(d);
  }
  return out;
}

/// Rank over Q by fraction-free elimination.
inline std::size_t rank_q(std::vector<std::vector<long>> a) {
  if (a.empty()) return 0;
  std::vector<std::vector<BigInt>> m(a.size(), std::vector<BigInt>(a[0].size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[0].size(); ++j) m[i][j] = a[i][j];
  std::size_t rank = 0;
  BigInt prev = 1;
  for (std::size_t col = 0; col < m[0].size() && rank < m.size(); ++col) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][col] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      for (std::size_t c = col + 1; c < m[0].size(); ++c)
        m[r][c] = (m[rank][col] * m[r][c] - m[r][col] * m[rank][c]) / prev;
      m[r][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return rank;
}

/// Rank over the prime field F_p.
inline std::size_t rank_mod(const std::vector<std::vector<long>>& a, long p) {
  if (a.empty()) return 0;
  std::vector<std::vector<long>> m = a;
  for (auto& row : m)
    for (long& v : row) v = ((v % p) + p) % p;
  auto inv = [p](long x) {
    long r = 1, e = p - 2, b = x;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m[0].size() && rank < m.size(); ++col) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][col] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    long iv = inv(m[rank][col]);
    for (long& v : m[rank]) v = v * iv % p;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][col] == 0) continue;
      long f = m[r][col];
      for (std::size_t c = 0; c < m[0].size(); ++c) m[r][c] = ((m[r][c] - f * m[rank][c]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

/// Betti numbers of the naive complex with coefficients in Q (p = 0) or F_p.
inline std::map<std::pair<int, int>, std::size_t> naive_betti(const NaiveComplex& c, long p) {
  std::map<std::pair<int, int>, std::size_t> ranks;
  for (const auto& [ij, d] : c.diff) ranks[ij] = p == 0 ? rank_q(d) : rank_mod(d, p);
  std::map<std::pair<int, int>, std::size_t> out;
  for (const auto& [ij, b] : c.basis) {
    std::size_t in = 0;
    if (auto it = ranks.find({ij.first - 1, ij.second}); it != ranks.end()) in = it->second;
    std::size_t betti = b.size() - ranks.at(ij) - in;
    if (betti) out[ij] = betti;
  }
  return out;
}

inline std::vector<std::uint64_t> all_masks(const Graph& g) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << g.edge_count()); ++b) out.push_back(b);
  return out;
}

}  // namespace testsupport
