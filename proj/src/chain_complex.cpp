#include "chromhom/chain_complex.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_map>

#include "chromhom/errors.hpp"

namespace chromhom {

std::string to_string(Model model) { return model == Model::full ? "full" : "nbc"; }

Model parse_model(const std::string& name) {
  if (name == "full") return Model::full;
  if (name == "nbc") return Model::nbc;
  throw std::invalid_argument("unknown model '" + name + "' (expected full or nbc)");
}

int coloring_sign(const EdgeSubset& s, EdgeIndex e) {
  if (s.contains(e)) throw ContractViolation("coloring_sign: edge " + std::to_string(e) + " already in " + s.to_string());
  return s.below(e).count() % 2 == 0 ? 1 : -1;
}

std::string Diamond::to_string() const {
  return "S=" + base.to_string() + " e=" + std::to_string(first) + " f=" + std::to_string(second);
}

namespace {

constexpr std::size_t max_cube_edges = 24;

void check_cube_size(const Graph& g) {
  if (g.edge_count() > max_cube_edges)
    throw std::invalid_argument("operations over all of 2^E are limited to 24 edges");
}

// Visits every diamond (S, e < f with e, f not in S); stops when `visit` returns false.
template <class Visit>
void for_each_diamond(const Graph& g, Visit&& visit) {
  check_cube_size(g);
  const std::size_t m = g.edge_count();
  const std::uint64_t total = std::uint64_t{1} << m;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    EdgeSubset s(m, bits);
    for (EdgeIndex e = 0; e < m; ++e) {
      if (s.contains(e)) continue;
      for (EdgeIndex f = e + 1; f < m; ++f) {
        if (s.contains(f)) continue;
        if (!visit(Diamond{s, e, f})) return;
      }
    }
  }
}

}  // namespace

std::optional<Diamond> find_unbalanced_diamond(const Graph& g, const SignTable& sign) {
  std::optional<Diamond> found;
  for_each_diamond(g, [&](const Diamond& d) {
    int negatives = (sign(d.base, d.first) < 0) + (sign(d.base.with(d.first), d.second) < 0) +
                    (sign(d.base, d.second) < 0) + (sign(d.base.with(d.second), d.first) < 0);
    if (negatives % 2 == 0) {
      found = d;
      return false;
    }
    return true;
  });
  return found;
}

bool verify_balanced(const Graph& g, const SignTable& sign) { return !find_unbalanced_diamond(g, sign).has_value(); }

SparseMatrix edge_map(const Graph& g, const GradedAlgebra& a, const EdgeSubset& s, EdgeIndex e) {
  g.check_owns(s);
  if (s.contains(e)) throw ContractViolation("edge_map: edge " + std::to_string(e) + " already in " + s.to_string());
  VertexPartition before = components(g, s);
  VertexPartition after = components(g, s.with(e));
  const Edge& edge = g.edge(e);
  const std::size_t k = before.block_count();

  if (after.block_count() == k) {
    // Closing a cycle leaves the partition, hence the factor order, unchanged.
    if (!(before == after)) throw EngineError("edge_map: partition changed along a cycle-closing edge");
    std::size_t dim = TensorBasis(a, k).size();
    return SparseMatrix::identity(dim);
  }

  std::size_t p = before.block_of(edge.u);
  std::size_t r = before.block_of(edge.v);
  std::size_t target = after.block_of(edge.u);
  // The untouched blocks must keep their relative order around the product.
  std::size_t next = 0;
  for (std::size_t b = 0; b < k; ++b) {
    if (b == p || b == r) continue;
    if (next == target) ++next;
    if (after.block_of(before.blocks()[b].front()) != next)
      throw EngineError("edge_map: merging changed the order of untouched components");
    ++next;
  }
  return multiplication_matrix(a, k, p, r, target);
}

std::optional<Diamond> find_noncommuting_diamond(const Graph& g, const GradedAlgebra& a) {
  std::unordered_map<std::uint64_t, SparseMatrix> cache;
  auto map_of = [&](const EdgeSubset& s, EdgeIndex e) -> const SparseMatrix& {
    std::uint64_t key = (s.bits() << 6U) | e;
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, edge_map(g, a, s, e)).first;
    return it->second;
  };
  std::optional<Diamond> found;
  for_each_diamond(g, [&](const Diamond& d) {
    SparseMatrix via_first = map_of(d.base.with(d.first), d.second) * map_of(d.base, d.first);
    SparseMatrix via_second = map_of(d.base.with(d.second), d.first) * map_of(d.base, d.second);
    if (!(via_first == via_second)) {
      found = d;
      return false;
    }
    return true;
  });
  return found;
}

bool verify_diamond_commutativity(const Graph& g, const GradedAlgebra& a) {
  return !find_noncommuting_diamond(g, a).has_value();
}

// ---------------------------------------------------------------------------

std::size_t BasedComplex::dimension(int i, int j) const {
  auto it = dims_.find({i, j});
  return it == dims_.end() ? 0 : it->second;
}

SparseMatrix BasedComplex::differential(int i, int j) const {
  auto it = differentials_.find({i, j});
  if (it != differentials_.end()) return it->second;
  return SparseMatrix(dimension(i + 1, j), dimension(i, j));
}

std::size_t BasedComplex::total_dimension() const {
  std::size_t total = 0;
  for (const auto& [bigrade, d] : dims_) total += d;
  return total;
}

BasedComplex build_complex(const Graph& g, const GradedAlgebra& a, Model model) {
  BasedComplex c;
  c.model_ = model;

  std::vector<EdgeSubset> subsets;
  if (model == Model::full) {
    check_cube_size(g);
    const std::uint64_t total = std::uint64_t{1} << g.edge_count();
    subsets.reserve(total);
    for (std::uint64_t bits = 0; bits < total; ++bits) subsets.emplace_back(g.edge_count(), bits);
  } else {
    subsets = nbc_sets(g);
  }
  std::stable_sort(subsets.begin(), subsets.end(),
                   [](const EdgeSubset& x, const EdgeSubset& y) { return x.count() < y.count(); });

  std::vector<std::optional<TensorBasis>> bases(g.vertex_count() + 1);
  auto basis_for = [&](std::size_t k) -> const TensorBasis& {
    if (!bases[k]) bases[k].emplace(a, k);
    return *bases[k];
  };

  std::unordered_map<std::uint64_t, std::size_t> index;
  // offsets[s][j] = position of the degree-j block of state s inside C^{i,j}.
  std::vector<std::vector<std::size_t>> offsets;
  c.states_.reserve(subsets.size());
  for (const EdgeSubset& s : subsets) {
    ComplexState state{s, component_count(g, s), {}};
    const TensorBasis& basis = basis_for(state.components);
    const int i = static_cast<int>(s.count());
    std::vector<std::size_t> offset(basis.max_degree() + 1);
    for (int j = 0; j <= basis.max_degree(); ++j) {
      std::size_t dim = basis.degree_dimension(j);
      state.graded_dims.push_back(dim);
      std::size_t& running = c.dims_[{i, j}];
      offset[j] = running;
      running += dim;
      c.max_j_ = std::max(c.max_j_, j);
    }
    c.max_i_ = std::max(c.max_i_, i);
    index.emplace(s.bits(), c.states_.size());
    offsets.push_back(std::move(offset));
    c.states_.push_back(std::move(state));
  }

  std::map<std::pair<int, int>, std::vector<MatrixEntry>> triplets;
  for (std::size_t src = 0; src < c.states_.size(); ++src) {
    const EdgeSubset& s = c.states_[src].subset;
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
      if (s.contains(e)) continue;
      auto it = index.find(s.with(e).bits());
      if (it == index.end()) continue;
      const std::size_t dst = it->second;
      const int sign = coloring_sign(s, e);
      SparseMatrix block = edge_map(g, a, s, e).scaled(sign);

      const TensorBasis& from = basis_for(c.states_[src].components);
      const TensorBasis& to = basis_for(c.states_[dst].components);
      const int i = static_cast<int>(s.count());
      for (const MatrixEntry& entry : block.entries()) {
        const int j = from.degree(entry.col);
        if (to.degree(entry.row) != j)
          throw EngineError("edge map does not preserve internal degree at " + s.to_string() + " + " +
                            std::to_string(e));
        triplets[{i, j}].push_back({offsets[dst][j] + to.local_index(entry.row),
                                    offsets[src][j] + from.local_index(entry.col), entry.value});
      }
      c.blocks_.push_back({src, dst, e, sign, std::move(block)});
    }
  }

  for (int i = 0; i <= c.max_i_; ++i)
    for (int j = 0; j <= c.max_j_; ++j) {
      auto it = triplets.find({i, j});
      std::vector<MatrixEntry> entries = it == triplets.end() ? std::vector<MatrixEntry>{} : std::move(it->second);
      c.differentials_.emplace(std::make_pair(i, j),
                               SparseMatrix(c.dimension(i + 1, j), c.dimension(i, j), std::move(entries)));
    }
  return c;
}

std::optional<std::pair<int, int>> find_nonzero_square(const BasedComplex& c) {
  for (int i = 0; i < c.max_homological_degree(); ++i)
    for (int j = 0; j <= c.max_internal_degree(); ++j)
      if (!(c.differential(i + 1, j) * c.differential(i, j)).is_zero()) return std::make_pair(i, j);
  return std::nullopt;
}

MorseReport verify_morse_hypothesis(const Graph& g, const GradedAlgebra& a, const Matching& m) {
  MorseReport report;
  MatchingReport matching = check_matching(g, m);
  report.perfect = matching.perfect && matching.covers_only;
  if (!report.perfect) report.witness = "matching: " + matching.witness;
  report.acyclic = verify_acyclic(g, m);
  if (!report.acyclic && report.witness.empty()) report.witness = "acyclicity: the reversed digraph has a cycle";
  report.isomorphisms = true;
  for (const MatchedPair& p : m.pairs) {
    if (p.lower.contains(p.edge)) {
      report.isomorphisms = false;
      if (report.witness.empty()) report.witness = "isomorphism: pair at " + p.lower.to_string() + " is not a cover";
      continue;
    }
    SparseMatrix map = edge_map(g, a, p.lower, p.edge);
    if (map.rows() != map.cols() || !(map == SparseMatrix::identity(map.rows()))) {
      report.isomorphisms = false;
      if (report.witness.empty())
        report.witness = "isomorphism: edge map " + p.lower.to_string() + " + " + std::to_string(p.edge) +
                         " is not the identity";
    }
  }
  return report;
}

LaurentPolynomial graded_euler_characteristic(const BasedComplex& c) {
  LaurentPolynomial chi;
  for (int i = 0; i <= c.max_homological_degree(); ++i)
    for (int j = 0; j <= c.max_internal_degree(); ++j) {
      std::size_t dim = c.dimension(i, j);
      if (dim != 0) chi.add_term(j, i % 2 == 0 ? BigInt(dim) : BigInt(-static_cast<long>(dim)));
    }
  return chi;
}

nlohmann::json complex_to_json(const BasedComplex& c) {
  nlohmann::json states = nlohmann::json::array();
  for (const ComplexState& s : c.states()) {
    states.push_back({{"edges", s.subset.members()},
                      {"degree", s.degree()},
                      {"components", s.components},
                      {"graded_dims", s.graded_dims}});
  }
  nlohmann::json blocks = nlohmann::json::array();
  for (const CoverBlock& b : c.blocks()) {
    nlohmann::json entries = nlohmann::json::array();
    for (const MatrixEntry& e : b.map.entries()) entries.push_back({e.row, e.col, e.value});
    blocks.push_back({{"source", b.source},
                      {"target", b.target},
                      {"edge", b.edge},
                      {"sign", b.sign},
                      {"rows", b.map.rows()},
                      {"cols", b.map.cols()},
                      {"entries", entries}});
  }
  return {{"model", to_string(c.model())}, {"states", states}, {"blocks", blocks}};
}

}  // namespace chromhom
