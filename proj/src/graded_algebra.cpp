#include "chromhom/graded_algebra.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <stdexcept>

#include "chromhom/errors.hpp"

namespace chromhom {

namespace {

std::string basis_name(std::size_t i) { return "b" + std::to_string(i); }

// Sorted, merged, zero-free copy.
std::vector<ProductTerm> normalized(std::vector<ProductTerm> terms) {
  std::map<std::size_t, std::int64_t> acc;
  for (const ProductTerm& t : terms) acc[t.basis] = checked::add(acc[t.basis], t.coefficient);
  std::vector<ProductTerm> out;
  for (auto [k, c] : acc)
    if (c != 0) out.push_back({k, c});
  return out;
}

// Expansion of (sum_k x_k b_k) * b_j.
std::map<std::size_t, std::int64_t> times_basis(const GradedAlgebra& a, const std::map<std::size_t, std::int64_t>& x,
                                                std::size_t j) {
  std::map<std::size_t, std::int64_t> out;
  for (auto [k, c] : x)
    for (const ProductTerm& t : a.product(k, j)) out[t.basis] = checked::add(out[t.basis], checked::mul(c, t.coefficient));
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

}  // namespace

GradedAlgebra::GradedAlgebra(std::vector<int> degrees, std::size_t unit, ProductTable products, std::string name)
    : degrees_(std::move(degrees)), unit_(unit), products_(std::move(products)), name_(std::move(name)) {
  const std::size_t n = degrees_.size();
  if (n == 0) throw AlgebraError("algebra must have at least one basis element");
  if (products_.size() != n) throw AlgebraError("product table must be " + std::to_string(n) + "x" + std::to_string(n));
  for (auto& row : products_) {
    if (row.size() != n) throw AlgebraError("product table must be " + std::to_string(n) + "x" + std::to_string(n));
    for (auto& terms : row) terms = normalized(std::move(terms));
  }
  validate();
}

void GradedAlgebra::validate() const {
  const std::size_t n = degrees_.size();
  for (std::size_t i = 0; i < n; ++i)
    if (degrees_[i] < 0) throw AlgebraError("grading: degree of " + basis_name(i) + " is negative");
  if (unit_ >= n) throw AlgebraError("unit: index " + std::to_string(unit_) + " out of range");
  if (degrees_[unit_] != 0) throw AlgebraError("unit: the identity must have degree 0");

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const ProductTerm& t : products_[i][j]) {
        if (t.basis >= n)
          throw AlgebraError("structure constants: " + basis_name(i) + "*" + basis_name(j) + " names basis index " +
                             std::to_string(t.basis) + " out of range");
        if (degrees_[t.basis] != degrees_[i] + degrees_[j])
          throw AlgebraError("graded multiplication: " + basis_name(i) + "*" + basis_name(j) + " has a term in " +
                             basis_name(t.basis) + " of degree " + std::to_string(degrees_[t.basis]));
      }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (products_[i][j] != products_[j][i])
        throw AlgebraError("commutativity: " + basis_name(i) + "*" + basis_name(j) + " != " + basis_name(j) + "*" +
                           basis_name(i));

  for (std::size_t j = 0; j < n; ++j)
    if (products_[unit_][j] != std::vector<ProductTerm>{{j, 1}})
      throw AlgebraError("unit law: " + basis_name(unit_) + "*" + basis_name(j) + " != " + basis_name(j));

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) {
        // (b_i b_j) b_l versus b_i (b_j b_l) = (b_j b_l) b_i by commutativity.
        std::map<std::size_t, std::int64_t> ij;
        for (const ProductTerm& t : products_[i][j]) ij[t.basis] = t.coefficient;
        std::map<std::size_t, std::int64_t> jl;
        for (const ProductTerm& t : products_[j][l]) jl[t.basis] = t.coefficient;
        if (times_basis(*this, ij, l) != times_basis(*this, jl, i))
          throw AlgebraError("associativity: (" + basis_name(i) + "*" + basis_name(j) + ")*" + basis_name(l) +
                             " != " + basis_name(i) + "*(" + basis_name(j) + "*" + basis_name(l) + ")");
      }
}

int GradedAlgebra::max_degree() const noexcept { return *std::max_element(degrees_.begin(), degrees_.end()); }

GradedAlgebra algebra_am(unsigned m) {
  if (m == 0) throw std::invalid_argument("A_m needs m >= 1");
  std::vector<int> degrees(m);
  GradedAlgebra::ProductTable products(m, std::vector<std::vector<ProductTerm>>(m));
  for (unsigned i = 0; i < m; ++i) {
    degrees[i] = static_cast<int>(i);
    for (unsigned j = 0; j < m; ++j)
      if (i + j < m) products[i][j].push_back({i + j, 1});
  }
  return GradedAlgebra(std::move(degrees), 0, std::move(products), "am:" + std::to_string(m));
}

GradedAlgebra algebra_from_json(const nlohmann::json& j, std::string name) {
  try {
    auto degrees = j.at("degrees").get<std::vector<int>>();
    auto unit = j.at("unit").get<std::size_t>();
    const std::size_t n = degrees.size();
    GradedAlgebra::ProductTable products(n, std::vector<std::vector<ProductTerm>>(n));
    std::vector<std::vector<bool>> listed(n, std::vector<bool>(n, false));
    if (j.contains("products")) {
      for (const auto& [key, terms] : j.at("products").items()) {
        auto comma = key.find(',');
        if (comma == std::string::npos) throw AlgebraError("products: key '" + key + "' is not of the form \"i,j\"");
        std::size_t lhs = 0, rhs = 0;
        try {
          lhs = std::stoul(key.substr(0, comma));
          rhs = std::stoul(key.substr(comma + 1));
        } catch (const std::exception&) {
          throw AlgebraError("products: key '" + key + "' is not of the form \"i,j\"");
        }
        if (lhs >= n || rhs >= n) throw AlgebraError("products: key '" + key + "' out of range");
        if (listed[lhs][rhs]) throw AlgebraError("products: key '" + key + "' listed twice");
        listed[lhs][rhs] = true;
        for (const auto& term : terms) {
          if (!term.is_array() || term.size() != 2)
            throw AlgebraError("products: terms of '" + key + "' must be [basis, coefficient] pairs");
          products[lhs][rhs].push_back({term[0].get<std::size_t>(), term[1].get<std::int64_t>()});
        }
      }
    }
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (listed[a][b] && !listed[b][a]) products[b][a] = products[a][b];
    if (unit < n)
      for (std::size_t b = 0; b < n; ++b)
        if (!listed[unit][b] && !listed[b][unit]) products[unit][b] = products[b][unit] = {{b, 1}};
    return GradedAlgebra(std::move(degrees), unit, std::move(products), std::move(name));
  } catch (const nlohmann::json::exception& e) {
    throw AlgebraError(std::string("malformed algebra JSON: ") + e.what());
  }
}

nlohmann::json algebra_to_json(const GradedAlgebra& a) {
  nlohmann::json products = nlohmann::json::object();
  for (std::size_t i = 0; i < a.dimension(); ++i)
    for (std::size_t j = 0; j < a.dimension(); ++j) {
      const auto& terms = a.product(i, j);
      if (terms.empty()) continue;
      nlohmann::json list = nlohmann::json::array();
      for (const ProductTerm& t : terms) list.push_back({t.basis, t.coefficient});
      products[std::to_string(i) + "," + std::to_string(j)] = list;
    }
  return {{"degrees", a.degrees()}, {"unit", a.unit()}, {"products", products}};
}

GradedAlgebra load_algebra(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw AlgebraError("cannot open algebra file " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw AlgebraError(path.string() + ": " + e.what());
  }
  return algebra_from_json(j, path.filename().string());
}

GradedAlgebra resolve_algebra(const std::string& text) {
  if (text.rfind("am:", 0) == 0) {
    std::size_t used = 0;
    long m = 0;
    try {
      m = std::stol(text.substr(3), &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != text.size() - 3 || m < 1) throw AlgebraError("algebra '" + text + "' needs am:<m> with m >= 1");
    return algebra_am(static_cast<unsigned>(m));
  }
  return load_algebra(text);
}

LaurentPolynomial qrank(const GradedAlgebra& a) {
  LaurentPolynomial out;
  for (int d : a.degrees()) out.add_term(d, 1);
  return out;
}

// ---------------------------------------------------------------------------

TensorBasis::TensorBasis(const GradedAlgebra& a, std::size_t k) : dim_(a.dimension()), k_(k) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (total > (std::size_t{1} << 26) / dim_) throw std::length_error("tensor power too large to enumerate");
    total *= dim_;
  }
  degree_of_.assign(total, 0);
  local_of_.assign(total, 0);
  std::vector<std::size_t> digits(k, 0);
  for (std::size_t idx = 0; idx < total; ++idx) {
    int d = 0;
    for (std::size_t f : digits) d += a.degree(f);
    degree_of_[idx] = d;
    if (static_cast<std::size_t>(d) >= per_degree_.size()) per_degree_.resize(d + 1, 0);
    local_of_[idx] = per_degree_[d]++;
    for (std::size_t pos = k; pos-- > 0;) {
      if (++digits[pos] < dim_) break;
      digits[pos] = 0;
    }
  }
}

std::vector<std::size_t> TensorBasis::factor_indices(std::size_t index) const {
  if (index >= size()) throw std::out_of_range("tensor basis index out of range");
  std::vector<std::size_t> out(k_);
  for (std::size_t pos = k_; pos-- > 0;) {
    out[pos] = index % dim_;
    index /= dim_;
  }
  return out;
}

std::size_t TensorBasis::index_of(std::span<const std::size_t> factor_indices) const {
  if (factor_indices.size() != k_) throw std::invalid_argument("wrong number of tensor factors");
  std::size_t index = 0;
  for (std::size_t f : factor_indices) {
    if (f >= dim_) throw std::out_of_range("tensor factor index out of range");
    index = index * dim_ + f;
  }
  return index;
}

std::size_t TensorBasis::degree_dimension(int j) const {
  return j >= 0 && static_cast<std::size_t>(j) < per_degree_.size() ? per_degree_[j] : 0;
}

TensorBasis tensor_basis(const GradedAlgebra& a, std::size_t k) { return TensorBasis(a, k); }

SparseMatrix multiplication_matrix(const GradedAlgebra& a, std::size_t k, std::size_t p, std::size_t r,
                                   std::size_t target) {
  if (p == r) throw std::invalid_argument("multiplication_matrix: factor positions must differ");
  if (p >= k || r >= k) throw std::invalid_argument("multiplication_matrix: factor position out of range");
  if (target >= k - 1) throw std::invalid_argument("multiplication_matrix: target position out of range");
  TensorBasis source(a, k);
  TensorBasis dest(a, k - 1);
  std::vector<MatrixEntry> entries;
  std::vector<std::size_t> rest;
  std::vector<std::size_t> out(k - 1);
  for (std::size_t col = 0; col < source.size(); ++col) {
    std::vector<std::size_t> f = source.factor_indices(col);
    rest.clear();
    for (std::size_t pos = 0; pos < k; ++pos)
      if (pos != p && pos != r) rest.push_back(f[pos]);
    for (const ProductTerm& t : a.product(f[p], f[r])) {
      std::size_t from = 0;
      for (std::size_t pos = 0; pos < k - 1; ++pos) out[pos] = pos == target ? t.basis : rest[from++];
      entries.push_back({dest.index_of(out), col, t.coefficient});
    }
  }
  return SparseMatrix(dest.size(), source.size(), std::move(entries));
}

SparseMatrix multiplication_matrix(const GradedAlgebra& a, std::size_t k, std::size_t p, std::size_t r) {
  return multiplication_matrix(a, k, p, r, std::min(p, r));
}

}  // namespace chromhom
