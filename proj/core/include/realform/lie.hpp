#pragma once

#include <memory>
#include <string>
#include <vector>

#include "realform/matrix.hpp"
#include "realform/polynomial.hpp"

namespace realform {

class LieAlgebra;

/// Subspace of a LieAlgebra, stored as coefficient vectors over the parent
/// basis (kept in canonical echelon form, so equal subspaces compare equal).
class Subspace {
 public:
  Subspace() : parent_(nullptr) {}
  Subspace(const LieAlgebra* parent,
           std::vector<std::vector<Scalar>> basis_coords);

  const LieAlgebra* parent() const { return parent_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<std::vector<Scalar>>& basis_coords() const {
    return basis_;
  }
  std::vector<Matrix> basis_matrices() const;
  Matrix basis_matrix(std::size_t k) const;

  bool contains(const Matrix& x) const;
  bool contains_subspace(const Subspace& other) const;
  /// Coordinates of x relative to this subspace's basis (nullopt if outside).
  std::optional<std::vector<Scalar>> coordinates(const Matrix& x) const;

  Subspace intersect(const Subspace& other) const;
  Subspace add(const Subspace& other) const;
  bool is_abelian() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.parent_ == b.parent_ && a.basis_ == b.basis_;
  }

 private:
  const LieAlgebra* parent_;
  std::vector<std::vector<Scalar>> basis_;  // echelonized
};

/// Matrix Lie algebra with a fixed basis; structure constants are computed
/// once at construction, which also verifies closure and the Jacobi identity.
class LieAlgebra {
 public:
  LieAlgebra(std::string name, std::vector<Matrix> basis);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return basis_.size(); }
  std::size_t ambient_dim() const { return n_; }
  const std::vector<Matrix>& basis() const { return basis_; }

  /// Structure constants: [b_i, b_j] = sum_k c_{ij}^k b_k.
  const std::vector<Scalar>& structure(std::size_t i, std::size_t j) const {
    return structure_[i * dim() + j];
  }

  bool contains(const Matrix& x) const;
  std::vector<Scalar> coordinates(const Matrix& x) const;  // throws if outside
  Matrix from_coordinates(const std::vector<Scalar>& coords) const;

  /// ad(x) as a dim x dim matrix in basis coordinates.
  Matrix ad(const Matrix& x) const;

  /// Killing form B(x, y) = trace(ad x ad y), from the structure constants.
  Scalar killing(const Matrix& x, const Matrix& y) const;

  Subspace full_subspace() const;
  Subspace span(const std::vector<Matrix>& elements) const;

 private:
  std::string name_;
  std::size_t n_;
  std::vector<Matrix> basis_;
  std::vector<std::vector<Scalar>> structure_;
};

/// Matrix commutator; both arguments must have the same ambient size.
Matrix bracket(const Matrix& x, const Matrix& y);

/// {v in V : [v, x] = 0}, computed as an exact kernel.
Subspace centralizer_in(const Matrix& x, const Subspace& v);

/// Chevalley's exact Jordan decomposition x = s + n over Q(i).
struct JordanParts {
  Matrix semisimple, nilpotent;
};
JordanParts jordan_decompose(const Matrix& x);

/// Monic minimal polynomial of a square matrix, in the variable "t".
Polynomial minimal_polynomial(const Matrix& x);

bool is_nilpotent_matrix(const Matrix& x);
bool is_semisimple_matrix(const Matrix& x);

}  // namespace realform
