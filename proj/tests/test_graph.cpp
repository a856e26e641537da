#include <doctest.h>

#include <random>
#include <sstream>

#include "chromhom/errors.hpp"
#include "chromhom/graph.hpp"
#include "chromhom/polynomial.hpp"
#include "chromhom/sparse_matrix.hpp"
#include "support.hpp"

using namespace chromhom;

namespace {
// K_3 with e1 = {1,2}, e2 = {1,3}, e3 = {2,3} in 1-based vertex names.
Graph k3() { return complete_graph(3); }
}  // namespace

TEST_CASE("edge subsets") {
  EdgeSubset s(5, {0, 3});
  CHECK(s.count() == 2);
  CHECK(s.contains(3));
  CHECK_FALSE(s.contains(1));
  CHECK(s.with(1).bits() == 0b1011);
  CHECK(s.toggled(0) == EdgeSubset(5, {3}));
  CHECK(s.below(3) == EdgeSubset(5, {0}));
  CHECK(s.to_string() == "{0,3}");
  CHECK(EdgeSubset(5).to_string() == "{}");
  CHECK(EdgeSubset(5, {0}).is_subset_of(s));
  CHECK((s ^ EdgeSubset(5, {0, 1})) == EdgeSubset(5, {1, 3}));
  CHECK_THROWS_AS(s.contains(5), std::out_of_range);
  CHECK_THROWS_AS(s | EdgeSubset(4), std::invalid_argument);
  CHECK(EdgeSubset(64, ~std::uint64_t{0}).count() == 64);
}

TEST_CASE("graph validation") {
  CHECK_THROWS_AS(Graph(0, {}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(2, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(2, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(2, {{0, 2}}), std::invalid_argument);
  Graph g = k3();
  CHECK_THROWS_AS(g.check_owns(EdgeSubset(4)), std::invalid_argument);
  CHECK(g.edge(0) == Edge{0, 1});
  CHECK(g.edge(1) == Edge{0, 2});
  CHECK(g.edge(2) == Edge{1, 2});
}

TEST_CASE("components and partitions on K3") {
  Graph g = k3();
  CHECK(components(g, g.subset({0})) == VertexPartition({{0, 1}, {2}}));
  CHECK(components(g, g.empty_subset()) == VertexPartition({{0}, {1}, {2}}));
  CHECK(components(g, g.subset({0, 1})) == VertexPartition({{0, 1, 2}}));
  CHECK(component_count(g, g.empty_subset()) == 3);
  CHECK(component_count(g, g.full_subset()) == 1);
  CHECK(component_count(path_graph(4), EdgeSubset(3, {1})) == 3);

  CHECK(size_partition(g, g.subset({0})) == IntegerPartition({2, 1}));
  CHECK(size_partition(g, g.subset({1, 2})) == IntegerPartition({3}));
  CHECK(size_partition(cycle_graph(4), EdgeSubset(4, {0, 2})) == IntegerPartition({2, 2}));

  CHECK(completes_cycle(g, g.subset({0, 1}), 2));
  CHECK_FALSE(completes_cycle(g, g.subset({0}), 1));
  CHECK_FALSE(completes_cycle(g, g.empty_subset(), 0));
  CHECK_THROWS_AS(completes_cycle(g, g.subset({0}), 0), ContractViolation);

  CHECK(is_cycle_space_member(g, g.full_subset()));
  CHECK_FALSE(is_cycle_space_member(g, g.subset({0, 1})));
  CHECK(is_cycle_space_member(g, g.empty_subset()));
}

TEST_CASE("vertex partition ordering") {
  VertexPartition p({{4, 2}, {3, 0}, {1}});
  CHECK(p.blocks() == std::vector<std::vector<Vertex>>{{0, 3}, {1}, {2, 4}});
  CHECK(p.block_of(4) == 2);
  CHECK(p.block_of(3) == 0);
  CHECK(IntegerPartition({1, 3, 1}).parts == std::vector<unsigned>{3, 1, 1});
  CHECK(IntegerPartition({1, 3, 1}).to_string() == "3,1,1");
  CHECK_THROWS(IntegerPartition({0, 1}));
}

TEST_CASE("edge-list parsing") {
  Graph g = parse_edge_list("# triangle\nn 3\n0 1\n0 2 # chord\n\n1 2\n");
  CHECK(g == complete_graph(3));
  CHECK(parse_edge_list(format_edge_list(cycle_graph(5))) == cycle_graph(5));

  auto line_of = [](const std::string& text) {
    try {
      parse_edge_list(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return std::size_t{0};
  };
  CHECK(line_of("n 3\n0 1\n0 x\n") == 3);
  CHECK(line_of("0 1\n") == 1);
  CHECK(line_of("n 2\n0 1\n1 0\n") == 3);
  CHECK(line_of("n 2\n0 5\n") == 2);
  CHECK(line_of("# only a comment\n") > 0);
}

TEST_CASE("named constructors") {
  CHECK(cycle_graph(4).edge(3) == Edge{0, 3});
  CHECK(star_graph(3).edge_count() == 3);
  CHECK(edgeless_graph(4).edge_count() == 0);
  Graph u = disjoint_union(complete_graph(2), complete_graph(3));
  CHECK(u.vertex_count() == 5);
  CHECK(u.edge(1) == Edge{2, 3});
  CHECK(component_count(u, u.full_subset()) == 2);
}

TEST_CASE("property: component counts agree with union-find and relaxation") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = testsupport::random_small_graph(rng, 7, 14);
    std::uniform_int_distribution<std::uint64_t> pick(0, (std::uint64_t{1} << g.edge_count()) - 1);
    std::uint64_t mask = pick(rng);
    std::vector<Vertex> labels = testsupport::naive_labels(g, mask);
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    EdgeSubset s(g.edge_count(), mask);
    CHECK(component_count(g, s) == labels.size());
    CHECK(size_partition(g, s).total() == g.vertex_count());
    CHECK(size_partition(g, s).length() == labels.size());
  }
}

TEST_CASE("polynomials") {
  Polynomial x = Polynomial::monomial(1);
  Polynomial one = Polynomial::monomial(0);
  Polynomial p = x * (x - one) * (x - one - one);
  CHECK(p.to_string() == "x^3 - 3x^2 + 2x");
  CHECK(p.evaluate(3) == 6);
  CHECK(p.degree() == 3);
  CHECK(Polynomial().degree() == -1);
  CHECK((p - p).is_zero());

  LaurentPolynomial q = LaurentPolynomial::monomial(1);
  LaurentPolynomial r = LaurentPolynomial::constant(1) + q;
  CHECK(r.pow(2) == LaurentPolynomial::constant(1) + q + q + q * q);
  CHECK((q + q * q).to_string() == "q + q^2");
  CHECK(LaurentPolynomial::monomial(-1, -2).to_string() == "-2q^-1");
  // chi_{K_2}(1 + q) = (1+q)^2 - (1+q)
  CHECK((x * x - x).compose(r) == q + q * q);
}

TEST_CASE("sparse matrices") {
  SparseMatrix a = SparseMatrix::from_dense({{1, 2}, {0, 3}});
  SparseMatrix b = SparseMatrix::from_dense({{0, 1}, {1, 0}});
  CHECK((a * b).to_dense() == std::vector<std::vector<std::int64_t>>{{2, 1}, {3, 0}});
  CHECK(a.transposed().at(1, 0) == 2);
  CHECK(SparseMatrix(2, 2, {{0, 0, 1}, {0, 0, -1}}).is_zero());
  CHECK(kronecker(SparseMatrix::identity(2), b).rows() == 4);
  CHECK(kronecker(b, SparseMatrix::identity(1)) == b);
  CHECK_THROWS_AS(checked::mul(std::int64_t{1} << 40, std::int64_t{1} << 40), std::overflow_error);
  CHECK_THROWS_AS(a * SparseMatrix(3, 1), std::invalid_argument);
}
