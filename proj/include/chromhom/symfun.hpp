#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "chromhom/broken_circuits.hpp"
#include "chromhom/graph.hpp"
#include "chromhom/polynomial.hpp"

namespace chromhom {

using ChromaticPolynomial = Polynomial;

/// Symmetric function in the power-sum basis: sum_lambda c_lambda p_lambda.
class PSymFun {
 public:
  const std::map<IntegerPartition, BigInt>& terms() const noexcept { return terms_; }
  BigInt coefficient(const IntegerPartition& lambda) const;
  bool is_zero() const noexcept { return terms_.empty(); }
  void add_term(const IntegerPartition& lambda, const BigInt& c);

  PSymFun& operator+=(const PSymFun& rhs);
  friend bool operator==(const PSymFun&, const PSymFun&) = default;

  /// "p[1,1] - p[2]"; "0" when empty.
  std::string to_string() const;

 private:
  std::map<IntegerPartition, BigInt> terms_;
};

/// sum over all S in 2^E of (-1)^|S| x^k(S)
ChromaticPolynomial chromatic_statesum(const Graph& g);
/// The same sum over NBC sets only.
ChromaticPolynomial chromatic_nbc(const Graph& g);
/// chi_G = chi_{G-e} - chi_{G/e}, memoized on relabeled graphs.
ChromaticPolynomial chromatic_delcon(const Graph& g);
/// Proper colorings with k colors, by backtracking.
BigInt count_colorings(const Graph& g, unsigned k);

/// sum over all T in 2^E of (-1)^|T| p_{lambda(T)}
PSymFun csf_statesum(const Graph& g);
PSymFun csf_nbc(const Graph& g);
/// p_r -> k for every r, i.e. p_lambda -> k^{length(lambda)}.
BigInt specialize_csf(const PSymFun& f, const BigInt& k);

/// chi(qrank)
LaurentPolynomial substitute_qrank(const ChromaticPolynomial& chi, const LaurentPolynomial& qrank);

/// The BC parts of the two state sums; both vanish identically.
ChromaticPolynomial bc_chromatic_sum(const Graph& g);
PSymFun bc_csf_sum(const Graph& g);

/// Each matched pair contributes opposite signs to the same k and lambda.
struct CancellationReport {
  bool ok = true;
  std::string witness;
};
CancellationReport check_pairwise_cancellation(const Graph& g, const Matching& m);

/// Coefficient list indexed by power.
nlohmann::json polynomial_to_json(const Polynomial& p);
/// {"2,1": -3, ...}
nlohmann::json psymfun_to_json(const PSymFun& f);

}  // namespace chromhom
