#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "chromhom/polynomial.hpp"
#include "chromhom/sparse_matrix.hpp"

namespace chromhom {

struct ProductTerm {
  std::size_t basis;
  std::int64_t coefficient;

  friend bool operator==(const ProductTerm&, const ProductTerm&) = default;
};

/// Finite free graded commutative Z-algebra with identity, presented by a
/// homogeneous basis and structure constants b_i * b_j = sum_k c_ij^k b_k.
class GradedAlgebra {
 public:
  using ProductTable = std::vector<std::vector<std::vector<ProductTerm>>>;

  /// Validates every axiom; throws AlgebraError naming the first violation.
  GradedAlgebra(std::vector<int> degrees, std::size_t unit, ProductTable products, std::string name = "custom");

  std::size_t dimension() const noexcept { return degrees_.size(); }
  int degree(std::size_t basis) const { return degrees_.at(basis); }
  const std::vector<int>& degrees() const noexcept { return degrees_; }
  int max_degree() const noexcept;
  std::size_t unit() const noexcept { return unit_; }
  const std::string& name() const noexcept { return name_; }

  /// Nonzero terms of b_i * b_j, sorted by basis index.
  const std::vector<ProductTerm>& product(std::size_t i, std::size_t j) const { return products_.at(i).at(j); }

 private:
  void validate() const;

  std::vector<int> degrees_;
  std::size_t unit_;
  ProductTable products_;
  std::string name_;
};

/// Z[x]/(x^m) with basis 1, x, ..., x^{m-1}.
GradedAlgebra algebra_am(unsigned m);

/// {"degrees":[...], "unit":k, "products":{"i,j":[[k,c],...]}}. A product
/// listed for only one of "i,j" / "j,i" is mirrored; unlisted products with the
/// unit default to the unit law, all other unlisted products are 0.
GradedAlgebra algebra_from_json(const nlohmann::json& j, std::string name = "custom");
nlohmann::json algebra_to_json(const GradedAlgebra& a);
GradedAlgebra load_algebra(const std::filesystem::path& path);
/// "am:<m>" or a path to an algebra JSON file.
GradedAlgebra resolve_algebra(const std::string& text);

/// sum_k q^{deg b_k}
LaurentPolynomial qrank(const GradedAlgebra& a);

/// Basis of A^{(x)k}: all dim^k tuples in lexicographic order, factor 0 most
/// significant, with per-degree local numbering.
class TensorBasis {
 public:
  TensorBasis(const GradedAlgebra& a, std::size_t k);

  std::size_t factors() const noexcept { return k_; }
  std::size_t size() const noexcept { return degree_of_.size(); }
  int degree(std::size_t index) const { return degree_of_.at(index); }
  std::vector<std::size_t> factor_indices(std::size_t index) const;
  std::size_t index_of(std::span<const std::size_t> factor_indices) const;

  /// Position of `index` among basis elements of the same total degree.
  std::size_t local_index(std::size_t index) const { return local_of_.at(index); }
  /// Number of basis elements of total degree j (0 outside the range).
  std::size_t degree_dimension(int j) const;
  int max_degree() const noexcept { return static_cast<int>(per_degree_.size()) - 1; }

 private:
  std::size_t dim_;
  std::size_t k_;
  std::vector<int> degree_of_;
  std::vector<std::size_t> local_of_;
  std::vector<std::size_t> per_degree_;
};

TensorBasis tensor_basis(const GradedAlgebra& a, std::size_t k);

/// Matrix of A^{(x)k} -> A^{(x)(k-1)} multiplying factors p and r, writing the
/// product at position `target` of the result and keeping the other factors in
/// their relative order. Rows index the target basis.
SparseMatrix multiplication_matrix(const GradedAlgebra& a, std::size_t k, std::size_t p, std::size_t r,
                                   std::size_t target);
/// Product placed at min(p, r).
SparseMatrix multiplication_matrix(const GradedAlgebra& a, std::size_t k, std::size_t p, std::size_t r);

}  // namespace chromhom
