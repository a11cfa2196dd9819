#include "realform/lie.hpp"

#include <stdexcept>

namespace realform {

Subspace::Subspace(const LieAlgebra* parent,
                   std::vector<std::vector<Scalar>> basis_coords)
    : parent_(parent), basis_(echelon_span(basis_coords)) {}

std::vector<Matrix> Subspace::basis_matrices() const {
  std::vector<Matrix> out;
  out.reserve(basis_.size());
  for (const auto& v : basis_) out.push_back(parent_->from_coordinates(v));
  return out;
}

Matrix Subspace::basis_matrix(std::size_t k) const {
  return parent_->from_coordinates(basis_.at(k));
}

bool Subspace::contains(const Matrix& x) const {
  if (!parent_->contains(x)) return false;
  return coordinates_in_span(basis_, parent_->coordinates(x)).has_value();
}

bool Subspace::contains_subspace(const Subspace& other) const {
  for (const auto& v : other.basis_)
    if (!coordinates_in_span(basis_, v).has_value()) return false;
  return true;
}

std::optional<std::vector<Scalar>> Subspace::coordinates(
    const Matrix& x) const {
  if (!parent_->contains(x)) return std::nullopt;
  return coordinates_in_span(basis_, parent_->coordinates(x));
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (parent_ != other.parent_)
    throw std::invalid_argument("Subspace::intersect: different parents");
  // Zassenhaus-style: kernel of [A | -B] glued.
  std::size_t n = parent_->dim();
  std::size_t ka = basis_.size(), kb = other.basis_.size();
  if (ka == 0 || kb == 0) return Subspace(parent_, {});
  Matrix m(n, ka + kb);
  for (std::size_t c = 0; c < ka; ++c)
    for (std::size_t r = 0; r < n; ++r) m.at(r, c) = basis_[c][r];
  for (std::size_t c = 0; c < kb; ++c)
    for (std::size_t r = 0; r < n; ++r) m.at(r, ka + c) = -other.basis_[c][r];
  std::vector<std::vector<Scalar>> vecs;
  for (const auto& k : m.kernel_basis()) {
    std::vector<Scalar> v(n, Scalar(0));
    for (std::size_t c = 0; c < ka; ++c)
      for (std::size_t r = 0; r < n; ++r) v[r] += k[c] * basis_[c][r];
    vecs.push_back(std::move(v));
  }
  return Subspace(parent_, vecs);
}

Subspace Subspace::add(const Subspace& other) const {
  if (parent_ != other.parent_)
    throw std::invalid_argument("Subspace::add: different parents");
  auto vecs = basis_;
  vecs.insert(vecs.end(), other.basis_.begin(), other.basis_.end());
  return Subspace(parent_, vecs);
}

bool Subspace::is_abelian() const {
  auto mats = basis_matrices();
  for (std::size_t i = 0; i < mats.size(); ++i)
    for (std::size_t j = i + 1; j < mats.size(); ++j)
      if (!bracket(mats[i], mats[j]).is_zero()) return false;
  return true;
}

LieAlgebra::LieAlgebra(std::string name, std::vector<Matrix> basis)
    : name_(std::move(name)), basis_(std::move(basis)) {
  if (basis_.empty()) throw std::invalid_argument("LieAlgebra: empty basis");
  n_ = basis_[0].rows();
  for (const auto& b : basis_)
    if (b.rows() != n_ || b.cols() != n_)
      throw std::invalid_argument("LieAlgebra: ragged basis");
  // Independence.
  std::vector<std::vector<Scalar>> flat;
  for (const auto& b : basis_) flat.push_back(b.flatten());
  if (echelon_span(flat).size() != basis_.size())
    throw std::invalid_argument("LieAlgebra: dependent basis");
  // Closure + structure constants.
  structure_.resize(dim() * dim());
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j) {
      Matrix br = bracket(basis_[i], basis_[j]);
      if (!contains(br))
        throw std::invalid_argument("LieAlgebra " + name_ +
                                    ": bracket leaves the span");
      structure_[i * dim() + j] = coordinates(br);
    }
  // Jacobi on basis triples (cheap at catalog dimensions).
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = i + 1; j < dim(); ++j)
      for (std::size_t k = j + 1; k < dim(); ++k) {
        Matrix s = bracket(basis_[i], bracket(basis_[j], basis_[k])) +
                   bracket(basis_[j], bracket(basis_[k], basis_[i])) +
                   bracket(basis_[k], bracket(basis_[i], basis_[j]));
        if (!s.is_zero())
          throw std::logic_error("LieAlgebra " + name_ + ": Jacobi fails");
      }
}

bool LieAlgebra::contains(const Matrix& x) const {
  std::vector<std::vector<Scalar>> flat;
  for (const auto& b : basis_) flat.push_back(b.flatten());
  return coordinates_in_span(flat, x.flatten()).has_value();
}

std::vector<Scalar> LieAlgebra::coordinates(const Matrix& x) const {
  std::vector<std::vector<Scalar>> flat;
  for (const auto& b : basis_) flat.push_back(b.flatten());
  auto c = coordinates_in_span(flat, x.flatten());
  if (!c) throw std::invalid_argument("LieAlgebra " + name_ +
                                      ": element outside the span");
  return *c;
}

Matrix LieAlgebra::from_coordinates(const std::vector<Scalar>& coords) const {
  if (coords.size() != dim())
    throw std::invalid_argument("from_coordinates: wrong length");
  Matrix x(n_, n_);
  for (std::size_t k = 0; k < coords.size(); ++k) {
    if (coords[k].is_zero()) continue;
    x += coords[k] * basis_[k];
  }
  return x;
}

Matrix LieAlgebra::ad(const Matrix& x) const {
  auto cx = coordinates(x);
  Matrix m(dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j)
    for (std::size_t i = 0; i < dim(); ++i) {
      if (cx[i].is_zero()) continue;
      const auto& col = structure(i, j);
      for (std::size_t k = 0; k < dim(); ++k) m.at(k, j) += cx[i] * col[k];
    }
  return m;
}

Scalar LieAlgebra::killing(const Matrix& x, const Matrix& y) const {
  return (ad(x) * ad(y)).trace();
}

Subspace LieAlgebra::full_subspace() const {
  std::vector<std::vector<Scalar>> vecs;
  for (std::size_t k = 0; k < dim(); ++k) {
    std::vector<Scalar> v(dim(), Scalar(0));
    v[k] = Scalar(1);
    vecs.push_back(std::move(v));
  }
  return Subspace(this, vecs);
}

Subspace LieAlgebra::span(const std::vector<Matrix>& elements) const {
  std::vector<std::vector<Scalar>> vecs;
  for (const auto& e : elements) vecs.push_back(coordinates(e));
  return Subspace(this, vecs);
}

Matrix bracket(const Matrix& x, const Matrix& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols() || !x.is_square())
    throw std::invalid_argument("bracket: shape mismatch");
  return x * y - y * x;
}

Subspace centralizer_in(const Matrix& x, const Subspace& v) {
  const LieAlgebra* g = v.parent();
  if (!g->contains(x))
    throw std::invalid_argument("centralizer_in: x outside parent algebra");
  auto mats = v.basis_matrices();
  if (mats.empty()) return v;
  // Kernel of (coords of [v_k, x]) over the subspace coordinates.
  std::size_t n2 = g->ambient_dim() * g->ambient_dim();
  Matrix m(n2, mats.size());
  for (std::size_t c = 0; c < mats.size(); ++c) {
    Matrix br = bracket(mats[c], x);
    auto flat = br.flatten();
    for (std::size_t r = 0; r < n2; ++r) m.at(r, c) = flat[r];
  }
  std::vector<std::vector<Scalar>> vecs;
  for (const auto& k : m.kernel_basis()) {
    std::vector<Scalar> coords(g->dim(), Scalar(0));
    for (std::size_t c = 0; c < mats.size(); ++c) {
      if (k[c].is_zero()) continue;
      const auto& bc = v.basis_coords()[c];
      for (std::size_t r = 0; r < g->dim(); ++r) coords[r] += k[c] * bc[r];
    }
    vecs.push_back(std::move(coords));
  }
  return Subspace(g, vecs);
}

Polynomial minimal_polynomial(const Matrix& x) {
  if (!x.is_square()) throw std::invalid_argument("minimal_polynomial");
  std::size_t n = x.rows();
  // Find the first linear dependence among I, x, x^2, ...
  std::vector<std::vector<Scalar>> powers;
  Matrix p = Matrix::identity(n);
  for (std::size_t d = 0;; ++d) {
    powers.push_back(p.flatten());
    // Is the last power in the span of the previous ones?
    std::vector<std::vector<Scalar>> prev(powers.begin(), powers.end() - 1);
    auto c = coordinates_in_span(prev, powers.back());
    if (c) {
      std::vector<Scalar> coeffs(d + 1, Scalar(0));
      for (std::size_t k = 0; k < d; ++k) coeffs[k] = -(*c)[k];
      coeffs[d] = Scalar(1);
      return Polynomial::from_univariate_coeffs("t", coeffs);
    }
    p = p * x;
    if (d > n) throw std::logic_error("minimal_polynomial: no dependence");
  }
}

bool is_nilpotent_matrix(const Matrix& x) {
  Matrix p = x;
  for (std::size_t k = 0; k < x.rows(); ++k) {
    if (p.is_zero()) return true;
    p = p * x;
  }
  return p.is_zero();
}

bool is_semisimple_matrix(const Matrix& x) {
  Polynomial m = minimal_polynomial(x);
  Polynomial g = poly_gcd(m, m.derivative("t"), "t");
  return g.degree_in("t") == 0;
}

JordanParts jordan_decompose(const Matrix& x) {
  if (!x.is_square()) throw std::invalid_argument("jordan_decompose");
  Polynomial m = minimal_polynomial(x);
  Polynomial s = squarefree_part(m, "t");
  // Newton iteration on the squarefree part: with u s + v s' = 1, the map
  // y -> y - v(y) s(y) converges to the semisimple part in the nilpotency
  // filtration (Chevalley's algorithm).
  auto [g, u, v] = [&]() {
    // extended euclid for (s, s')
    Polynomial a = s, b = s.derivative("t");
    Polynomial ua = Polynomial::constant(Scalar(1)), va;
    Polynomial ub, vb = Polynomial::constant(Scalar(1));
    while (!b.is_zero()) {
      auto dv = divmod(a, b, "t");
      Polynomial na = b, nua = ub, nva = vb;
      b = dv.remainder;
      ub = ua - dv.quotient * ub;
      vb = va - dv.quotient * vb;
      a = na;
      ua = nua;
      va = nva;
    }
    Scalar lead = a.univariate_coeffs("t").back();  // a = gcd, nonzero
    Scalar inv = lead.inverse();
    return std::tuple<Polynomial, Polynomial, Polynomial>(a * inv, ua * inv,
                                                          va * inv);
  }();
  (void)g;
  auto eval_at = [&](const Polynomial& p, const Matrix& y) {
    auto cs = p.univariate_coeffs("t");
    Matrix acc(y.rows(), y.cols());
    Matrix pw = Matrix::identity(y.rows());
    for (std::size_t k = 0; k < cs.size(); ++k) {
      if (!cs[k].is_zero()) acc += cs[k] * pw;
      pw = pw * y;
    }
    return acc;
  };
  Matrix y = x;
  for (std::size_t guard = 0; guard <= x.rows() + 2; ++guard) {
    Matrix sy = eval_at(s, y);
    if (sy.is_zero()) break;
    y = y - eval_at(v, y) * sy;
  }
  if (!eval_at(s, y).is_zero())
    throw std::logic_error("jordan_decompose: Newton iteration stalled");
  JordanParts parts{y, x - y};
  if (!bracket(parts.semisimple, parts.nilpotent).is_zero())
    throw std::logic_error("jordan_decompose: parts do not commute");
  if (!is_nilpotent_matrix(parts.nilpotent))
    throw std::logic_error("jordan_decompose: nilpotent part is not nilpotent");
  return parts;
}

}  // namespace realform
