#pragma once

#include <vector>

#include "realform/scalar.hpp"

namespace realform {

/// Integer matrix with exact Smith-normal-form support; used for cocharacter
/// lattice computations (kernels, saturations, finite quotient structure).
class IntMat {
 public:
  IntMat() : rows_(0), cols_(0) {}
  IntMat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols, 0) {}

  static IntMat identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Int& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
  const Int& at(std::size_t r, std::size_t c) const {
    return e_[r * cols_ + c];
  }

  friend IntMat operator*(const IntMat& a, const IntMat& b);
  friend bool operator==(const IntMat& a, const IntMat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

  std::vector<Int> apply(const std::vector<Int>& v) const;

 private:
  std::size_t rows_, cols_;
  std::vector<Int> e_;
};

/// Smith normal form: u * m * v = d with u, v unimodular and d diagonal with
/// d_1 | d_2 | ... .
struct SmithForm {
  IntMat u, d, v;
};
SmithForm smith_form(const IntMat& m);

/// Basis of { x in Z^cols : m x = 0 }.
std::vector<std::vector<Int>> integer_kernel(const IntMat& m);

/// Saturation of the sublattice spanned by the given rows inside Z^n:
/// the set of integer vectors with some nonzero multiple in the span.
std::vector<std::vector<Int>> saturate_rows(
    const std::vector<std::vector<Int>>& rows, std::size_t n);

/// Is v in the Z-span of the given rows?
bool in_integer_span(const std::vector<std::vector<Int>>& rows,
                     const std::vector<Int>& v);

/// Structure of Z^n / <rows>: the invariant factors > 1 (torsion part) and
/// the free rank.
struct QuotientStructure {
  std::vector<Int> torsion;
  std::size_t free_rank = 0;
};
QuotientStructure quotient_structure(const std::vector<std::vector<Int>>& rows,
                                     std::size_t n);

}  // namespace realform
