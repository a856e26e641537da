#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "chromhom/chain_complex.hpp"
#include "chromhom/polynomial.hpp"
#include "chromhom/sparse_matrix.hpp"

namespace chromhom {

/// Invariant factors d_1 | d_2 | ... | d_r of an integer matrix, r = rank.
struct SmithForm {
  std::vector<BigInt> invariant_factors;

  std::size_t rank() const noexcept { return invariant_factors.size(); }
};

/// Exact Smith normal form. Unit pivots are eliminated sparsely first, the
/// remainder goes through dense elimination on minimal-magnitude pivots.
/// Runs in checked 64-bit arithmetic and redoes the work with GMP integers if
/// anything overflows.
SmithForm smith_normal_form(const SparseMatrix& m);

struct HomologyGroup {
  std::size_t free_rank = 0;
  /// Invariant factors > 1.
  std::vector<BigInt> torsion;

  bool is_zero() const noexcept { return free_rank == 0 && torsion.empty(); }
  /// "Z^2 + Z/2", "0".
  std::string to_string() const;

  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

/// Nonzero groups H^{i,j}, keyed by (homological degree i, internal degree j).
class HomologySummary {
 public:
  using Bigrade = std::pair<int, int>;

  const std::map<Bigrade, HomologyGroup>& groups() const noexcept { return groups_; }
  HomologyGroup group(int i, int j) const;
  /// Zero groups are not stored.
  void set(int i, int j, HomologyGroup g);
  bool is_zero() const noexcept { return groups_.empty(); }

  friend bool operator==(const HomologySummary&, const HomologySummary&) = default;

 private:
  std::map<Bigrade, HomologyGroup> groups_;
};

/// Thread cap from NBC_THREADS, else the hardware concurrency (at least 1).
unsigned default_thread_count();

/// Verifies d^2 = 0 (EngineError naming the bigrade otherwise), then
/// free rank = dim C^{i,j} - rank d^{i,j} - rank d^{i-1,j} and torsion from
/// the invariant factors of d^{i-1,j}. Differentials are reduced in parallel;
/// the result does not depend on scheduling.
HomologySummary homology(const BasedComplex& c, unsigned threads = 0);

/// sum (-1)^i q^j free_rank(i,j)
LaurentPolynomial euler_characteristic(const HomologySummary& h);
bool euler_check(const HomologySummary& h, const BasedComplex& c);

struct Support {
  int i_min;
  int i_max;
  int j_min;
  int j_max;

  friend bool operator==(const Support&, const Support&) = default;
};

/// Extremes of the nonzero bigrades; nullopt for the zero summary.
std::optional<Support> support(const HomologySummary& h);

/// Bigrades where the two summaries differ, one line each; empty iff equal.
std::vector<std::string> diff_summaries(const HomologySummary& a, const HomologySummary& b);

/// {"groups":[{"i","j","free","torsion"}], "euler":"..."}
nlohmann::json homology_to_json(const HomologySummary& h);
/// Header "i\tj\tfree\ttorsion" then one row per nonzero group.
std::string homology_to_tsv(const HomologySummary& h);

/// Integers that fit in int64 become JSON numbers, others decimal strings.
nlohmann::json bigint_to_json(const BigInt& value);

}  // namespace chromhom
