#include "realform/matrix.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace realform {

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  e_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("Matrix: ragged rows");
    for (const auto& v : r) e_.push_back(v);
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
  return m;
}

Matrix Matrix::column(const std::vector<Scalar>& entries) {
  Matrix m(entries.size(), 1);
  for (std::size_t i = 0; i < entries.size(); ++i) m.at(i, 0) = entries[i];
  return m;
}

Matrix Matrix::diagonal(const std::vector<Scalar>& entries) {
  Matrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m.at(i, i) = entries[i];
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& v : e_)
    if (!v.is_zero()) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

Matrix Matrix::conj_transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c).conj();
  return t;
}

Scalar Matrix::trace() const {
  if (!is_square()) throw std::invalid_argument("trace: non-square");
  Scalar s;
  for (std::size_t i = 0; i < rows_; ++i) s += at(i, i);
  return s;
}

Matrix Matrix::operator-() const {
  Matrix m(rows_, cols_);
  for (std::size_t k = 0; k < e_.size(); ++k) m.e_[k] = -e_[k];
  return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("Matrix: shape mismatch in +");
  for (std::size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("Matrix: shape mismatch in -");
  for (std::size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  for (auto& v : e_) v *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_)
    throw std::invalid_argument("Matrix: shape mismatch in *");
  Matrix m(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& ark = a.at(r, k);
      if (ark.is_zero()) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) {
        if (b.at(k, c).is_zero()) continue;
        m.at(r, c) += ark * b.at(k, c);
      }
    }
  return m;
}

bool operator<(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
  if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
  for (std::size_t k = 0; k < a.e_.size(); ++k) {
    if (a.e_[k] != b.e_[k]) return a.e_[k] < b.e_[k];
  }
  return false;
}

std::vector<Scalar> Matrix::col_vector() const {
  if (cols_ != 1) throw std::invalid_argument("col_vector: not a column");
  return e_;
}

namespace {

// In-place fraction pivoted elimination. Returns pivot column per pivot row.
std::vector<std::size_t> reduce(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t prow = 0;
  for (std::size_t c = 0; c < m.cols() && prow < m.rows(); ++c) {
    std::size_t sel = prow;
    while (sel < m.rows() && m.at(sel, c).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != prow)
      for (std::size_t k = 0; k < m.cols(); ++k)
        std::swap(m.at(sel, k), m.at(prow, k));
    Scalar inv = m.at(prow, c).inverse();
    for (std::size_t k = c; k < m.cols(); ++k) m.at(prow, k) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == prow || m.at(r, c).is_zero()) continue;
      Scalar f = m.at(r, c);
      for (std::size_t k = c; k < m.cols(); ++k)
        m.at(r, k) -= f * m.at(prow, k);
    }
    pivots.push_back(c);
    ++prow;
  }
  return pivots;
}

}  // namespace

std::size_t Matrix::rank() const {
  Matrix m = *this;
  return reduce(m).size();
}

Scalar Matrix::det() const {
  if (!is_square()) throw std::invalid_argument("det: non-square");
  Matrix m = *this;
  Scalar d(1);
  for (std::size_t c = 0; c < m.cols(); ++c) {
    std::size_t sel = c;
    while (sel < m.rows() && m.at(sel, c).is_zero()) ++sel;
    if (sel == m.rows()) return Scalar(0);
    if (sel != c) {
      for (std::size_t k = 0; k < m.cols(); ++k)
        std::swap(m.at(sel, k), m.at(c, k));
      d = -d;
    }
    d *= m.at(c, c);
    Scalar inv = m.at(c, c).inverse();
    for (std::size_t r = c + 1; r < m.rows(); ++r) {
      if (m.at(r, c).is_zero()) continue;
      Scalar f = m.at(r, c) * inv;
      for (std::size_t k = c; k < m.cols(); ++k) m.at(r, k) -= f * m.at(c, k);
    }
  }
  return d;
}

bool Matrix::is_invertible() const {
  return is_square() && rank() == rows_;
}

Matrix Matrix::inverse() const {
  if (!is_square()) throw std::invalid_argument("inverse: non-square");
  Matrix aug(rows_, 2 * cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
    aug.at(r, cols_ + r) = Scalar(1);
  }
  auto pivots = reduce(aug);
  if (pivots.size() != rows_) throw std::domain_error("inverse: singular");
  Matrix inv(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) inv.at(r, c) = aug.at(r, cols_ + c);
  return inv;
}

std::vector<std::vector<Scalar>> Matrix::kernel_basis() const {
  Matrix m = *this;
  auto pivots = reduce(m);
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(cols_);
    v[free] = Scalar(1);
    for (std::size_t p = 0; p < pivots.size(); ++p)
      v[pivots[p]] = -m.at(p, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    os << "[";
    for (std::size_t c = 0; c < cols_; ++c) {
      os << at(r, c).str();
      if (c + 1 < cols_) os << ", ";
    }
    os << "]";
    if (r + 1 < rows_) os << ", ";
  }
  os << "]";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  return os << m.str();
}

LinearSolution solve_linear(const Matrix& a, const std::vector<Scalar>& b) {
  if (a.rows() != b.size())
    throw std::invalid_argument("solve_linear: shape mismatch");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
    aug.at(r, a.cols()) = b[r];
  }
  auto pivots = reduce(aug);
  LinearSolution sol;
  sol.kernel = a.kernel_basis();
  // Inconsistent iff a pivot lands in the augmented column.
  if (!pivots.empty() && pivots.back() == a.cols()) return sol;
  std::vector<Scalar> x(a.cols());
  for (std::size_t p = 0; p < pivots.size(); ++p)
    x[pivots[p]] = aug.at(p, a.cols());
  sol.particular = std::move(x);
  return sol;
}

std::vector<std::vector<Scalar>> echelon_span(
    const std::vector<std::vector<Scalar>>& vectors) {
  if (vectors.empty()) return {};
  Matrix m = from_rows(vectors);
  auto pivots = reduce(m);
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    std::vector<Scalar> v(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) v[c] = m.at(r, c);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Scalar>> coordinates_in_span(
    const std::vector<std::vector<Scalar>>& basis,
    const std::vector<Scalar>& target) {
  if (basis.empty()) {
    for (const auto& v : target)
      if (!v.is_zero()) return std::nullopt;
    return std::vector<Scalar>{};
  }
  Matrix a = from_cols(basis);
  auto sol = solve_linear(a, target);
  if (!sol.solvable()) return std::nullopt;
  return sol.particular;
}

Matrix from_rows(const std::vector<std::vector<Scalar>>& rows) {
  if (rows.empty()) return Matrix();
  Matrix m(rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols())
      throw std::invalid_argument("from_rows: ragged rows");
    for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

Matrix from_cols(const std::vector<std::vector<Scalar>>& cols) {
  if (cols.empty()) return Matrix();
  Matrix m(cols[0].size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != m.rows())
      throw std::invalid_argument("from_cols: ragged columns");
    for (std::size_t r = 0; r < m.rows(); ++r) m.at(r, c) = cols[c][r];
  }
  return m;
}

}  // namespace realform
