#pragma once

#include <initializer_list>
#include <optional>
#include <vector>

#include "realform/scalar.hpp"

namespace realform {

/// Dense matrix over Q(i). All computations (rank, kernel, solve, inverse)
/// are exact Gaussian elimination.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) {
    return Matrix(rows, cols);
  }
  static Matrix column(const std::vector<Scalar>& entries);
  static Matrix diagonal(const std::vector<Scalar>& entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const {
    return e_[r * cols_ + c];
  }

  bool is_zero() const;
  Matrix transpose() const;
  Matrix conj_transpose() const;
  Scalar trace() const;

  Matrix operator-() const;
  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& s);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }
  /// Canonical entrywise order, used for deterministic sorting of witnesses.
  friend bool operator<(const Matrix& a, const Matrix& b);

  std::vector<Scalar> flatten() const { return e_; }
  std::vector<Scalar> col_vector() const;  // requires cols() == 1

  std::size_t rank() const;
  Scalar det() const;
  Matrix inverse() const;  // throws if singular
  bool is_invertible() const;

  /// Basis of the right kernel, as column vectors.
  std::vector<std::vector<Scalar>> kernel_basis() const;

  std::string str() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Scalar> e_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

/// Result of an exact linear solve A x = b. `particular` is empty exactly
/// when b is not in the column span of A.
struct LinearSolution {
  std::optional<std::vector<Scalar>> particular;
  std::vector<std::vector<Scalar>> kernel;
  bool solvable() const { return particular.has_value(); }
};

LinearSolution solve_linear(const Matrix& a, const std::vector<Scalar>& b);

/// Row-reduces the span of the given vectors to an echelon basis (dropping
/// dependent vectors); the result is a canonical basis of the span.
std::vector<std::vector<Scalar>> echelon_span(
    const std::vector<std::vector<Scalar>>& vectors);

/// Solves x A = target where the rows of A are `basis`; i.e. expresses
/// `target` in terms of the basis. Returns nullopt when not in the span.
std::optional<std::vector<Scalar>> coordinates_in_span(
    const std::vector<std::vector<Scalar>>& basis,
    const std::vector<Scalar>& target);

Matrix from_rows(const std::vector<std::vector<Scalar>>& rows);
Matrix from_cols(const std::vector<std::vector<Scalar>>& cols);

}  // namespace realform
