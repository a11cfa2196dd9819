#include "realform/lattice.hpp"

#include <stdexcept>

namespace realform {

IntMat IntMat::identity(std::size_t n) {
  IntMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat operator*(const IntMat& a, const IntMat& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("IntMat: shape");
  IntMat m(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a.at(r, k) == 0) continue;
      for (std::size_t c = 0; c < b.cols_; ++c)
        m.at(r, c) += a.at(r, k) * b.at(k, c);
    }
  return m;
}

std::vector<Int> IntMat::apply(const std::vector<Int>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("IntMat::apply: shape");
  std::vector<Int> out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r] += at(r, c) * v[c];
  return out;
}

SmithForm smith_form(const IntMat& m) {
  SmithForm s;
  s.d = m;
  s.u = IntMat::identity(m.rows());
  s.v = IntMat::identity(m.cols());
  IntMat& d = s.d;
  std::size_t t = 0;
  auto swap_rows = [&](std::size_t a, std::size_t b) {
    for (std::size_t c = 0; c < d.cols(); ++c) std::swap(d.at(a, c), d.at(b, c));
    for (std::size_t c = 0; c < s.u.cols(); ++c)
      std::swap(s.u.at(a, c), s.u.at(b, c));
  };
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    for (std::size_t r = 0; r < d.rows(); ++r) std::swap(d.at(r, a), d.at(r, b));
    for (std::size_t r = 0; r < s.v.rows(); ++r)
      std::swap(s.v.at(r, a), s.v.at(r, b));
  };
  auto add_row = [&](std::size_t dst, std::size_t src, const Int& f) {
    for (std::size_t c = 0; c < d.cols(); ++c) d.at(dst, c) += f * d.at(src, c);
    for (std::size_t c = 0; c < s.u.cols(); ++c)
      s.u.at(dst, c) += f * s.u.at(src, c);
  };
  auto add_col = [&](std::size_t dst, std::size_t src, const Int& f) {
    for (std::size_t r = 0; r < d.rows(); ++r) d.at(r, dst) += f * d.at(r, src);
    for (std::size_t r = 0; r < s.v.rows(); ++r)
      s.v.at(r, dst) += f * s.v.at(r, src);
  };
  while (t < d.rows() && t < d.cols()) {
    // Find a nonzero pivot.
    std::size_t pr = t, pc = t;
    bool found = false;
    for (std::size_t r = t; r < d.rows() && !found; ++r)
      for (std::size_t c = t; c < d.cols() && !found; ++c)
        if (d.at(r, c) != 0) {
          pr = r;
          pc = c;
          found = true;
        }
    if (!found) break;
    if (pr != t) swap_rows(pr, t);
    if (pc != t) swap_cols(pc, t);
    bool again = true;
    while (again) {
      again = false;
      for (std::size_t r = t + 1; r < d.rows(); ++r) {
        if (d.at(r, t) == 0) continue;
        Int q = d.at(r, t) / d.at(t, t);
        add_row(r, t, -q);
        if (d.at(r, t) != 0) {
          swap_rows(r, t);
          again = true;
        }
      }
      for (std::size_t c = t + 1; c < d.cols(); ++c) {
        if (d.at(t, c) == 0) continue;
        Int q = d.at(t, c) / d.at(t, t);
        add_col(c, t, -q);
        if (d.at(t, c) != 0) {
          swap_cols(c, t);
          again = true;
        }
      }
    }
    // Enforce divisibility d_t | d_{r,c} for the trailing block.
    for (std::size_t r = t + 1; r < d.rows(); ++r)
      for (std::size_t c = t + 1; c < d.cols(); ++c) {
        if (d.at(r, c) % d.at(t, t) != 0) {
          add_row(t, r, 1);
          // Restart elimination at this pivot.
          r = d.rows();
          c = d.cols();
          --t;
          break;
        }
      }
    ++t;
  }
  // Normalize signs.
  for (std::size_t k = 0; k < d.rows() && k < d.cols(); ++k) {
    if (d.at(k, k) < 0) {
      for (std::size_t c = 0; c < d.cols(); ++c) d.at(k, c) = -d.at(k, c);
      for (std::size_t c = 0; c < s.u.cols(); ++c)
        s.u.at(k, c) = -s.u.at(k, c);
    }
  }
  return s;
}

std::vector<std::vector<Int>> integer_kernel(const IntMat& m) {
  SmithForm s = smith_form(m);
  // m x = 0  <=>  d (v^{-1} x) = 0; kernel basis = columns of v where d has
  // zero diagonal (or beyond the diagonal range).
  std::vector<std::vector<Int>> out;
  std::size_t r = std::min(m.rows(), m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    bool zero = (c >= r) || (s.d.at(c, c) == 0);
    if (!zero) continue;
    std::vector<Int> v(m.cols());
    for (std::size_t k = 0; k < m.cols(); ++k) v[k] = s.v.at(k, c);
    out.push_back(std::move(v));
  }
  return out;
}

namespace {

IntMat rows_to_mat(const std::vector<std::vector<Int>>& rows, std::size_t n) {
  IntMat m(rows.size(), n);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != n) throw std::invalid_argument("lattice: row size");
    for (std::size_t c = 0; c < n; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

}  // namespace

std::vector<std::vector<Int>> saturate_rows(
    const std::vector<std::vector<Int>>& rows, std::size_t n) {
  if (rows.empty()) return {};
  // The saturation is the kernel of the map to the dual quotient: compute a
  // basis for the kernel of the transpose of a kernel basis.
  IntMat m = rows_to_mat(rows, n);
  auto ker = integer_kernel(m);  // vectors x with m x = 0: the perp lattice
  if (ker.empty()) {
    // Full rank: saturation is all of Z^n intersected with the rational span,
    // i.e. Z^n itself when rank == n.
    SmithForm s = smith_form(m);
    std::size_t rank = 0;
    for (std::size_t k = 0; k < std::min(m.rows(), m.cols()); ++k)
      if (s.d.at(k, k) != 0) ++rank;
    if (rank == n) {
      std::vector<std::vector<Int>> out;
      for (std::size_t i = 0; i < n; ++i) {
        std::vector<Int> e(n, 0);
        e[i] = 1;
        out.push_back(std::move(e));
      }
      return out;
    }
  }
  IntMat perp = rows_to_mat(ker, n);
  return integer_kernel(perp);
}

bool in_integer_span(const std::vector<std::vector<Int>>& rows,
                     const std::vector<Int>& v) {
  // Solve y * rows = v over Z via Smith form of the row matrix.
  std::size_t n = v.size();
  IntMat m = rows_to_mat(rows, n);
  SmithForm s = smith_form(m);
  // y m = v  <=>  (y u^{-1}) d = v v-mat... work with transposed convention:
  // x = v * s.v (as row vector), then need x_k divisible by d_k and zero
  // beyond the rank.
  std::vector<Int> x(m.cols(), 0);
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (std::size_t k = 0; k < n; ++k) x[c] += v[k] * s.v.at(k, c);
  std::size_t r = std::min(m.rows(), m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    Int d = (c < r) ? s.d.at(c, c) : Int(0);
    if (d == 0) {
      if (x[c] != 0) return false;
    } else if (x[c] % d != 0) {
      return false;
    }
  }
  return true;
}

QuotientStructure quotient_structure(const std::vector<std::vector<Int>>& rows,
                                     std::size_t n) {
  QuotientStructure out;
  if (rows.empty()) {
    out.free_rank = n;
    return out;
  }
  SmithForm s = smith_form(rows_to_mat(rows, n));
  std::size_t r = std::min(rows.size(), n);
  std::size_t rank = 0;
  for (std::size_t k = 0; k < r; ++k) {
    if (s.d.at(k, k) == 0) continue;
    ++rank;
    if (s.d.at(k, k) > 1) out.torsion.push_back(s.d.at(k, k));
  }
  out.free_rank = n - rank;
  return out;
}

}  // namespace realform
