#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "chromhom/broken_circuits.hpp"
#include "chromhom/graded_algebra.hpp"
#include "chromhom/graph.hpp"
#include "chromhom/polynomial.hpp"
#include "chromhom/sparse_matrix.hpp"

namespace chromhom {

enum class Model { full, nbc };

std::string to_string(Model model);
/// "full" or "nbc"; throws std::invalid_argument otherwise.
Model parse_model(const std::string& name);

/// (-1)^{#{j in s : j < e}} for the cover s < s + e.
int coloring_sign(const EdgeSubset& s, EdgeIndex e);

using SignTable = std::function<int(const EdgeSubset&, EdgeIndex)>;

/// The interval {base, base+first, base+second, base+first+second}.
struct Diamond {
  EdgeSubset base;
  EdgeIndex first;
  EdgeIndex second;

  std::string to_string() const;
};

/// First diamond of 2^E with an even number of -1 labels, if any.
std::optional<Diamond> find_unbalanced_diamond(const Graph& g, const SignTable& sign = coloring_sign);
bool verify_balanced(const Graph& g, const SignTable& sign = coloring_sign);

/// Unsigned per-edge map F(s < s+e): the identity when e closes a cycle,
/// otherwise multiplication of the two merging tensor factors.
SparseMatrix edge_map(const Graph& g, const GradedAlgebra& a, const EdgeSubset& s, EdgeIndex e);

std::optional<Diamond> find_noncommuting_diamond(const Graph& g, const GradedAlgebra& a);
bool verify_diamond_commutativity(const Graph& g, const GradedAlgebra& a);

struct ComplexState {
  EdgeSubset subset;
  std::size_t components;
  /// graded_dims[j] = rank of the degree-j part of A^{(x)components}.
  std::vector<std::size_t> graded_dims;

  std::size_t degree() const { return subset.count(); }
};

/// Signed block c(s<t) F(s<t) between two states of the complex.
struct CoverBlock {
  std::size_t source;
  std::size_t target;
  EdgeIndex edge;
  int sign;
  SparseMatrix map;
};

/// C^{i,j} = sum over states with |S| = i of the degree-j part of
/// A^{(x)k(S)}, with d^{i,j} : C^{i,j} -> C^{i+1,j}. Basis order inside C^{i,j}
/// is state order, then tensor-basis order.
class BasedComplex {
 public:
  Model model() const noexcept { return model_; }
  const std::vector<ComplexState>& states() const noexcept { return states_; }
  const std::vector<CoverBlock>& blocks() const noexcept { return blocks_; }

  std::size_t dimension(int i, int j) const;
  /// Zero matrix of the right shape outside the stored range.
  SparseMatrix differential(int i, int j) const;
  const std::map<std::pair<int, int>, SparseMatrix>& differentials() const noexcept { return differentials_; }

  int max_homological_degree() const noexcept { return max_i_; }
  int max_internal_degree() const noexcept { return max_j_; }
  std::size_t total_dimension() const;

 private:
  friend BasedComplex build_complex(const Graph&, const GradedAlgebra&, Model);

  Model model_ = Model::full;
  std::vector<ComplexState> states_;
  std::vector<CoverBlock> blocks_;
  std::map<std::pair<int, int>, std::size_t> dims_;
  std::map<std::pair<int, int>, SparseMatrix> differentials_;
  int max_i_ = -1;
  int max_j_ = -1;
};

/// States are all of 2^E (full) or the NBC sets (nbc), sorted by degree with
/// enumeration order kept inside a degree.
BasedComplex build_complex(const Graph& g, const GradedAlgebra& a, Model model);

/// First bigrade where d^{i+1,j} d^{i,j} != 0.
std::optional<std::pair<int, int>> find_nonzero_square(const BasedComplex& c);

struct MorseReport {
  bool perfect = false;
  bool acyclic = false;
  bool isomorphisms = false;
  std::string witness;

  bool ok() const { return perfect && acyclic && isomorphisms; }
};

/// The matching covers BC, is acyclic, and each matched edge map is invertible
/// (here: literally the identity).
MorseReport verify_morse_hypothesis(const Graph& g, const GradedAlgebra& a, const Matching& m);

/// sum (-1)^i q^j dim C^{i,j}
LaurentPolynomial graded_euler_characteristic(const BasedComplex& c);

/// States with degrees and graded ranks, blocks in coordinate form with the
/// sign folded into the values.
nlohmann::json complex_to_json(const BasedComplex& c);

}  // namespace chromhom
