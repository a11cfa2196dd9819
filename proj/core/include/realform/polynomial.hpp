#pragma once

#include <map>
#include <string>
#include <vector>

#include "realform/scalar.hpp"

namespace realform {

/// Sparse multivariate polynomial over Q(i). Variables are named and ordered;
/// binary operations merge variable lists by name. Zero coefficients are
/// never stored.
class Polynomial {
 public:
  using Exponents = std::vector<unsigned>;

  Polynomial() = default;
  static Polynomial constant(const Scalar& c);
  static Polynomial variable(const std::string& name);
  /// Monomial c * prod vars[k]^exps[k] over an explicit variable list.
  static Polynomial monomial(const std::vector<std::string>& vars,
                             const Exponents& exps, const Scalar& c);

  const std::vector<std::string>& variables() const { return vars_; }
  const std::map<Exponents, Scalar>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Scalar constant_value() const;  // requires is_constant()
  int total_degree() const;       // -1 for the zero polynomial
  int degree_in(const std::string& var) const;
  bool is_homogeneous() const;
  /// True when at most the given variable occurs.
  bool is_univariate_in(const std::string& var) const;
  /// Names of variables that actually occur.
  std::vector<std::string> support() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) {
    return a += b;
  }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) {
    return a -= b;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial& operator*=(const Scalar& s);
  friend Polynomial operator*(Polynomial a, const Scalar& s) { return a *= s; }
  friend Polynomial operator*(const Scalar& s, Polynomial a) { return a *= s; }
  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) {
    return !(a == b);
  }

  Scalar eval(const std::map<std::string, Scalar>& point) const;
  Polynomial substitute(const std::map<std::string, Polynomial>& subs) const;
  Polynomial derivative(const std::string& var) const;

  /// Coefficients c[0..d] with p = sum c[k] var^k; requires univariate in var.
  std::vector<Scalar> univariate_coeffs(const std::string& var) const;
  static Polynomial from_univariate_coeffs(const std::string& var,
                                           const std::vector<Scalar>& coeffs);

  std::string str() const;

 private:
  void prune();
  std::vector<std::string> vars_;
  std::map<Exponents, Scalar> terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

// -- univariate utilities (inputs must be univariate in `var`) --------------

struct PolyDivision {
  Polynomial quotient, remainder;
};
PolyDivision divmod(const Polynomial& a, const Polynomial& b,
                    const std::string& var);
/// Monic gcd.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b,
                    const std::string& var);
Polynomial squarefree_part(const Polynomial& p, const std::string& var);
/// Factors p = c * prod f_k^k with f_k squarefree pairwise coprime; returns
/// the non-constant (f_k, k) pairs.
std::vector<std::pair<Polynomial, int>> squarefree_decomposition(
    const Polynomial& p, const std::string& var);
/// Sylvester resultant of a and b with respect to var.
Scalar resultant(const Polynomial& a, const Polynomial& b,
                 const std::string& var);
/// Resultant-based discriminant; requires degree >= 1 and univariate input.
Scalar discriminant(const Polynomial& p);

/// All roots of p that lie in Q(i), with multiplicities; `complete` reports
/// whether the found roots account for the full degree.
struct GaussianRoots {
  std::vector<std::pair<Scalar, int>> roots;
  bool complete = false;
  /// Factor of p left after removing the found roots (monic, degree >= 2
  /// with no Q(i) roots, or constant 1 when complete).
  Polynomial remaining;
};
GaussianRoots gaussian_roots(const Polynomial& p, const std::string& var);

// -- characteristic polynomial over an arbitrary commutative Q-algebra ------

template <typename R>
struct RingOps {
  static R zero() { return R(); }
  static R from_int(long k);
  static R div_int(const R& x, long k);
};

template <>
struct RingOps<Scalar> {
  static Scalar zero() { return Scalar(0); }
  static Scalar from_int(long k) { return Scalar(k); }
  static Scalar div_int(const Scalar& x, long k) {
    return x * Scalar(Rat(1, k));
  }
};

template <>
struct RingOps<Polynomial> {
  static Polynomial zero() { return Polynomial(); }
  static Polynomial from_int(long k) {
    return Polynomial::constant(Scalar(k));
  }
  static Polynomial div_int(const Polynomial& x, long k) {
    return x * Scalar(Rat(1, k));
  }
};

/// Characteristic polynomial coefficients of an n x n matrix given by an
/// entry accessor: det(tI - M) = t^n + c[1] t^{n-1} + ... + c[n].
/// Faddeev--LeVerrier; exact over any commutative Q-algebra.
template <typename R, typename Entry>
std::vector<R> charpoly_coeffs(std::size_t n, Entry entry) {
  using Ops = RingOps<R>;
  std::vector<R> c(n + 1, Ops::zero());
  c[0] = Ops::from_int(1);
  // M starts as the zero matrix; iterate M <- A(M + c_k I).
  std::vector<std::vector<R>> m(n, std::vector<R>(n, Ops::zero()));
  for (std::size_t k = 1; k <= n; ++k) {
    // m <- m + c_{k-1} I
    for (std::size_t i = 0; i < n; ++i) m[i][i] += c[k - 1];
    // m <- A * m
    std::vector<std::vector<R>> next(n, std::vector<R>(n, Ops::zero()));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        R acc = Ops::zero();
        for (std::size_t l = 0; l < n; ++l) acc += entry(i, l) * m[l][j];
        next[i][j] = acc;
      }
    m = std::move(next);
    R tr = Ops::zero();
    for (std::size_t i = 0; i < n; ++i) tr += m[i][i];
    c[k] = Ops::div_int(-tr, static_cast<long>(k));
  }
  return c;
}

}  // namespace realform
