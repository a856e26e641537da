#include <doctest.h>

#include <random>

#include "chromhom/broken_circuits.hpp"
#include "chromhom/symfun.hpp"
#include "support.hpp"

using namespace chromhom;

namespace {

Polynomial poly(std::initializer_list<long> coeffs) {
  std::vector<BigInt> v;
  for (long c : coeffs) v.emplace_back(c);
  return Polynomial(v);
}

IntegerPartition part(std::vector<unsigned> p) { return IntegerPartition(std::move(p)); }

}  // namespace

TEST_CASE("chromatic polynomials of small graphs") {
  CHECK(chromatic_statesum(complete_graph(2)) == poly({0, -1, 1}));
  CHECK(chromatic_statesum(complete_graph(3)) == poly({0, 2, -3, 1}));
  CHECK(chromatic_statesum(edgeless_graph(4)) == Polynomial::monomial(4));
  CHECK(chromatic_nbc(complete_graph(3)) == poly({0, 2, -3, 1}));
  CHECK(chromatic_nbc(cycle_graph(4)) == poly({0, -3, 6, -4, 1}));
  CHECK(chromatic_delcon(complete_graph(2)) == poly({0, -1, 1}));
  CHECK(chromatic_delcon(complete_graph(4)) == poly({0, -6, 11, -6, 1}));
  CHECK(chromatic_delcon(complete_graph(4)).to_string() == "x^4 - 6x^3 + 11x^2 - 6x");

  Polynomial x = Polynomial::monomial(1), one = Polynomial::monomial(0);
  Polynomial tree = x;
  for (int i = 0; i < 4; ++i) tree = tree * (x - one);
  CHECK(chromatic_nbc(path_graph(5)) == tree);
  CHECK(chromatic_nbc(star_graph(4)) == tree);

  Graph u = disjoint_union(complete_graph(3), cycle_graph(4));
  CHECK(chromatic_delcon(u) == chromatic_delcon(complete_graph(3)) * chromatic_delcon(cycle_graph(4)));

  CHECK(count_colorings(complete_graph(3), 3) == 6);
  CHECK(count_colorings(cycle_graph(4), 2) == 2);
  CHECK(count_colorings(complete_graph(3), 0) == 0);
  CHECK(count_colorings(path_graph(3), 0) == 0);
}

TEST_CASE("chromatic symmetric functions") {
  PSymFun k2;
  k2.add_term(part({1, 1}), 1);
  k2.add_term(part({2}), -1);
  CHECK(csf_statesum(complete_graph(2)) == k2);
  CHECK(k2.to_string() == "p[1,1] - p[2]");

  PSymFun k3;
  k3.add_term(part({1, 1, 1}), 1);
  k3.add_term(part({2, 1}), -3);
  k3.add_term(part({3}), 2);
  CHECK(csf_statesum(complete_graph(3)) == k3);
  CHECK(csf_nbc(complete_graph(3)) == k3);

  PSymFun e4;
  e4.add_term(part({1, 1, 1, 1}), 1);
  CHECK(csf_statesum(edgeless_graph(4)) == e4);
  CHECK(csf_nbc(path_graph(4)) == csf_statesum(path_graph(4)));
  CHECK(csf_nbc(cycle_graph(4)) == csf_statesum(cycle_graph(4)));

  CHECK(specialize_csf(k3, 3) == 6);
  CHECK(specialize_csf(k3, 0) == 0);
  CHECK(specialize_csf(k2, 2) == 2);

  CHECK(psymfun_to_json(k3)["2,1"] == -3);
  CHECK(polynomial_to_json(poly({0, -1, 1})) == nlohmann::json::array({0, -1, 1}));
}

TEST_CASE("qrank substitution") {
  LaurentPolynomial q = LaurentPolynomial::monomial(1);
  LaurentPolynomial one = LaurentPolynomial::constant(1);
  CHECK(substitute_qrank(chromatic_delcon(complete_graph(2)), one + q) == q + q * q);
  Polynomial chi = chromatic_delcon(complete_graph(4));
  CHECK(substitute_qrank(chi, one) == LaurentPolynomial::constant(chi.evaluate(1)));
  LaurentPolynomial r = one + q + q * q;
  CHECK(substitute_qrank(chromatic_delcon(complete_graph(3)), r) ==
        r.pow(3) - LaurentPolynomial::constant(3) * r.pow(2) + LaurentPolynomial::constant(2) * r);
}

TEST_CASE("Whitney cancellation on small graphs") {
  for (const Graph& g : {complete_graph(3), cycle_graph(4), complete_graph(4), path_graph(3)}) {
    CHECK(bc_chromatic_sum(g).is_zero());
    CHECK(bc_csf_sum(g).is_zero());
    CHECK(check_pairwise_cancellation(g, build_matching(g)).ok);
  }
}

TEST_CASE("property: four chromatic routes agree with interpolated coloring counts") {
  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = testsupport::random_small_graph(rng, 6, 11);
    Polynomial reference = testsupport::chromatic_by_interpolation(g);
    CHECK(chromatic_statesum(g) == reference);
    CHECK(chromatic_nbc(g) == reference);
    CHECK(chromatic_delcon(g) == reference);
    for (unsigned k = 0; k <= 4; ++k) CHECK(count_colorings(g, k) == testsupport::brute_colorings(g, k));
    PSymFun x = csf_statesum(g);
    CHECK(csf_nbc(g) == x);
    for (long k = 0; k <= 4; ++k) CHECK(specialize_csf(x, k) == reference.evaluate(k));
    // Coefficients alternate in sign and sum in absolute value to the NBC count.
    BigInt abs_sum = 0;
    for (const BigInt& c : reference.coefficients()) abs_sum += abs(c);
    CHECK(abs_sum == nbc_count(g));
  }
}

TEST_CASE("deletion-contraction on larger graphs") {
  // K_8 and the Petersen graph, beyond the reach of the state sum.
  Polynomial x = Polynomial::monomial(1), falling = Polynomial::monomial(0);
  for (int i = 0; i < 8; ++i) falling = falling * (x - Polynomial(std::vector<BigInt>{i}));
  CHECK(chromatic_delcon(complete_graph(8)) == falling);

  std::vector<Edge> petersen;
  for (Vertex i = 0; i < 5; ++i) {
    petersen.push_back({i, static_cast<Vertex>((i + 1) % 5)});
    petersen.push_back({i, static_cast<Vertex>(i + 5)});
    petersen.push_back({static_cast<Vertex>(i + 5), static_cast<Vertex>((i + 2) % 5 + 5)});
  }
  Polynomial chi = chromatic_delcon(Graph(10, petersen));
  CHECK(chi.evaluate(3) == 120);
  CHECK(chi.evaluate(3) == count_colorings(Graph(10, petersen), 3));
  CHECK(chi.evaluate(4) == count_colorings(Graph(10, petersen), 4));
}
