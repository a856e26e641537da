#include <doctest.h>

#include <random>

#include "chromhom/homology.hpp"
#include "support.hpp"

using namespace chromhom;

namespace {

std::vector<BigInt> factors(std::initializer_list<long> v) {
  std::vector<BigInt> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

BigInt gcd_of_minors(const std::vector<std::vector<std::int64_t>>& a, std::size_t k) {
  // All k x k minors by Laplace expansion; tiny matrices only.
  const std::size_t r = a.size(), c = a[0].size();
  std::function<BigInt(std::vector<std::size_t>, std::vector<std::size_t>)> det =
      [&](std::vector<std::size_t> rows, std::vector<std::size_t> cols) -> BigInt {
    if (rows.size() == 1) return BigInt(static_cast<long>(a[rows[0]][cols[0]]));
    BigInt total = 0;
    for (std::size_t t = 0; t < cols.size(); ++t) {
      std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
      std::vector<std::size_t> sub_cols = cols;
      sub_cols.erase(sub_cols.begin() + static_cast<long>(t));
      BigInt term = BigInt(static_cast<long>(a[rows[0]][cols[t]])) * det(sub_rows, sub_cols);
      total += (t % 2 == 0) ? term : BigInt(-term);
    }
    return total;
  };
  BigInt g = 0;
  std::vector<std::size_t> rows, cols;
  std::function<void(std::size_t)> pick_cols;
  std::function<void(std::size_t)> pick_rows = [&](std::size_t from) {
    if (rows.size() == k) {
      pick_cols(0);
      return;
    }
    for (std::size_t i = from; i < r; ++i) {
      rows.push_back(i);
      pick_rows(i + 1);
      rows.pop_back();
    }
  };
  pick_cols = [&](std::size_t from) {
    if (cols.size() == k) {
      BigInt d = det(rows, cols);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      return;
    }
    for (std::size_t j = from; j < c; ++j) {
      cols.push_back(j);
      pick_cols(j + 1);
      cols.pop_back();
    }
  };
  pick_rows(0);
  return g;
}

}  // namespace

TEST_CASE("smith normal form fixtures") {
  CHECK(smith_normal_form(SparseMatrix::from_dense({{2, 4}, {6, 8}})).invariant_factors == factors({2, 4}));
  CHECK(smith_normal_form(SparseMatrix::identity(5)).invariant_factors == factors({1, 1, 1, 1, 1}));
  CHECK(smith_normal_form(SparseMatrix(3, 4)).invariant_factors.empty());
  CHECK(smith_normal_form(SparseMatrix::from_dense({{2, 0}, {0, 3}})).invariant_factors == factors({1, 6}));
  CHECK(smith_normal_form(SparseMatrix::from_dense({{0, 4, 0}, {6, 0, 0}, {0, 0, 10}})).invariant_factors ==
        factors({2, 2, 60}));
}

TEST_CASE("smith normal form past 64-bit range") {
  // Entries near 2^62 overflow the int64 fast path during elimination.
  const std::int64_t big = std::int64_t{1} << 62;
  SparseMatrix m = SparseMatrix::from_dense({{big - 1, 3 * (big / 4)}, {big / 2 + 1, big - 3}});
  SmithForm s = smith_normal_form(m);
  REQUIRE(s.rank() == 2);
  auto dense = m.to_dense();
  BigInt det = BigInt(static_cast<long>(dense[0][0])) * BigInt(static_cast<long>(dense[1][1])) -
               BigInt(static_cast<long>(dense[0][1])) * BigInt(static_cast<long>(dense[1][0]));
  BigInt d1 = gcd_of_minors(dense, 1);
  CHECK(s.invariant_factors[0] == d1);
  CHECK(s.invariant_factors[0] * s.invariant_factors[1] == abs(det));

  // Coprime diagonal entries near 2^40: the second invariant factor is their
  // product, which only fits in the bignum path.
  const std::int64_t p = (std::int64_t{1} << 40) + 15, q = (std::int64_t{1} << 40) - 87;
  SmithForm diag = smith_normal_form(SparseMatrix::from_dense({{p, 0}, {0, q}}));
  BigInt g;
  mpz_gcd(g.get_mpz_t(), BigInt(static_cast<long>(p)).get_mpz_t(), BigInt(static_cast<long>(q)).get_mpz_t());
  REQUIRE(g == 1);
  CHECK(diag.invariant_factors == std::vector<BigInt>{1, BigInt(static_cast<long>(p)) * BigInt(static_cast<long>(q))});
}

TEST_CASE("property: invariant factors match gcds of minors") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> dim(1, 4), val(-6, 6), sparse(0, 2);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t r = dim(rng), c = dim(rng);
    std::vector<std::vector<std::int64_t>> a(r, std::vector<std::int64_t>(c));
    for (auto& row : a)
      for (auto& x : row) x = sparse(rng) == 0 ? 0 : val(rng);
    SmithForm s = smith_normal_form(SparseMatrix::from_dense(a));
    BigInt prefix = 1;
    for (std::size_t k = 1; k <= std::min(r, c); ++k) {
      BigInt dk = gcd_of_minors(a, k);
      if (k <= s.rank()) {
        prefix *= s.invariant_factors[k - 1];
        REQUIRE(dk == prefix);
        if (k > 1) CHECK(s.invariant_factors[k - 1] % s.invariant_factors[k - 2] == 0);
      } else {
        REQUIRE(dk == 0);
      }
    }
  }
}

TEST_CASE("K2 and single-vertex homology") {
  GradedAlgebra a2 = algebra_am(2);
  HomologySummary expected;
  expected.set(0, 1, {1, {}});
  expected.set(0, 2, {1, {}});
  HomologySummary full = homology(build_complex(complete_graph(2), a2, Model::full));
  HomologySummary nbc = homology(build_complex(complete_graph(2), a2, Model::nbc));
  CHECK(full == expected);
  CHECK(nbc == expected);
  CHECK(support(full) == Support{0, 0, 1, 2});
  CHECK_FALSE(support(HomologySummary{}).has_value());

  LaurentPolynomial q = LaurentPolynomial::monomial(1);
  CHECK(euler_characteristic(full) == q + q * q);
  CHECK(euler_check(full, build_complex(complete_graph(2), a2, Model::full)));

  for (unsigned m = 1; m <= 4; ++m) {
    HomologySummary h = homology(build_complex(edgeless_graph(1), algebra_am(m), Model::full));
    CHECK(h.groups().size() == m);
    for (unsigned j = 0; j < m; ++j) CHECK(h.group(0, static_cast<int>(j)) == HomologyGroup{1, {}});
  }
}

TEST_CASE("homology output") {
  HomologySummary h;
  h.set(0, 1, {2, factors({2})});
  h.set(1, 1, {0, {}});
  CHECK(h.groups().size() == 1);
  CHECK(h.group(0, 1).to_string() == "Z^2 + Z/2");
  CHECK(HomologyGroup{}.to_string() == "0");
  CHECK(homology_to_tsv(h) == "i\tj\tfree\ttorsion\n0\t1\t2\t2\n");
  HomologySummary other;
  CHECK(diff_summaries(h, other).size() == 1);
  CHECK(bigint_to_json(BigInt("123456789012345678901234567890")) == "123456789012345678901234567890");
  CHECK(bigint_to_json(BigInt(-7)) == -7);
}

TEST_CASE("property: homology agrees with rank computations over Q, F_2 and F_3") {
  // dim H^{i,j}(C; F_p) = free(i,j) + #{p | t in torsion(i,j)} + #{p | t in torsion(i+1,j)}
  std::vector<testsupport::CorpusGraph> corpus = testsupport::load_corpus();
  for (const auto& [name, g] : corpus) {
    if (g.edge_count() > 7) continue;
    for (unsigned m : {2u, 3u}) {
      CAPTURE(name);
      CAPTURE(m);
      HomologySummary h = homology(build_complex(g, algebra_am(m), Model::full));
      testsupport::NaiveComplex naive = testsupport::naive_complex(g, m, testsupport::all_masks(g));
      auto over_q = testsupport::naive_betti(naive, 0);
      for (const auto& [ij, group] : h.groups()) {
        std::size_t q_rank = over_q.count(ij) ? over_q.at(ij) : 0;
        CHECK(group.free_rank == q_rank);
      }
      for (const auto& [ij, b] : over_q) CHECK(h.group(ij.first, ij.second).free_rank == b);
      for (long p : {2L, 3L}) {
        auto over_p = testsupport::naive_betti(naive, p);
        for (const auto& [ij, b] : naive.basis) {
          auto count_p = [&](int i, int j) {
            std::size_t n = 0;
            for (const BigInt& t : h.group(i, j).torsion)
              if (t % p == 0) ++n;
            return n;
          };
          std::size_t predicted = h.group(ij.first, ij.second).free_rank + count_p(ij.first, ij.second) +
                                  count_p(ij.first + 1, ij.second);
          std::size_t actual = over_p.count(ij) ? over_p.at(ij) : 0;
          CHECK(predicted == actual);
        }
      }
    }
  }
}

TEST_CASE("thread count does not change results") {
  BasedComplex c = build_complex(cycle_graph(6), algebra_am(3), Model::full);
  CHECK(homology(c, 1) == homology(c, 4));
}
