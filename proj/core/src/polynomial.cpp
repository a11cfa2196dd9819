#include "realform/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "realform/matrix.hpp"

namespace realform {

Polynomial Polynomial::constant(const Scalar& c) {
  Polynomial p;
  if (!c.is_zero()) p.terms_[{}] = c;
  return p;
}

Polynomial Polynomial::variable(const std::string& name) {
  Polynomial p;
  p.vars_ = {name};
  p.terms_[{1}] = Scalar(1);
  return p;
}

Polynomial Polynomial::monomial(const std::vector<std::string>& vars,
                                const Exponents& exps, const Scalar& c) {
  if (vars.size() != exps.size())
    throw std::invalid_argument("monomial: size mismatch");
  Polynomial p;
  p.vars_ = vars;
  if (!c.is_zero()) p.terms_[exps] = c;
  p.prune();
  return p;
}

bool Polynomial::is_constant() const {
  for (const auto& [e, c] : terms_)
    for (unsigned k : e)
      if (k) return false;
  return true;
}

Scalar Polynomial::constant_value() const {
  if (terms_.empty()) return Scalar(0);
  if (!is_constant()) throw std::domain_error("constant_value: non-constant");
  return terms_.begin()->second;
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int t = 0;
    for (unsigned k : e) t += static_cast<int>(k);
    d = std::max(d, t);
  }
  return d;
}

int Polynomial::degree_in(const std::string& var) const {
  auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) return terms_.empty() ? -1 : 0;
  std::size_t idx = static_cast<std::size_t>(it - vars_.begin());
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_)
    if (idx < e.size()) d = std::max(d, static_cast<int>(e[idx]));
  return d;
}

bool Polynomial::is_homogeneous() const {
  int d = -2;
  for (const auto& [e, c] : terms_) {
    int t = 0;
    for (unsigned k : e) t += static_cast<int>(k);
    if (d == -2) d = t;
    if (t != d) return false;
  }
  return true;
}

bool Polynomial::is_univariate_in(const std::string& var) const {
  for (const auto& [e, c] : terms_)
    for (std::size_t k = 0; k < e.size(); ++k)
      if (e[k] && vars_[k] != var) return false;
  return true;
}

std::vector<std::string> Polynomial::support() const {
  std::vector<bool> used(vars_.size(), false);
  for (const auto& [e, c] : terms_)
    for (std::size_t k = 0; k < e.size(); ++k)
      if (e[k]) used[k] = true;
  std::vector<std::string> out;
  for (std::size_t k = 0; k < vars_.size(); ++k)
    if (used[k]) out.push_back(vars_[k]);
  return out;
}

void Polynomial::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second.is_zero())
      it = terms_.erase(it);
    else
      ++it;
  }
}

namespace {

// Remaps exponent vectors of p onto the merged variable list.
std::map<Polynomial::Exponents, Scalar> remap(
    const Polynomial& p, const std::vector<std::string>& merged) {
  std::vector<std::size_t> where(p.variables().size());
  for (std::size_t k = 0; k < p.variables().size(); ++k) {
    auto it = std::find(merged.begin(), merged.end(), p.variables()[k]);
    where[k] = static_cast<std::size_t>(it - merged.begin());
  }
  std::map<Polynomial::Exponents, Scalar> out;
  for (const auto& [e, c] : p.terms()) {
    Polynomial::Exponents ne(merged.size(), 0);
    for (std::size_t k = 0; k < e.size(); ++k) ne[where[k]] = e[k];
    out[ne] = c;
  }
  return out;
}

std::vector<std::string> merge_vars(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b) {
  std::vector<std::string> merged = a;
  for (const auto& v : b)
    if (std::find(merged.begin(), merged.end(), v) == merged.end())
      merged.push_back(v);
  return merged;
}

}  // namespace

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  auto merged = merge_vars(vars_, o.vars_);
  auto mine = remap(*this, merged);
  auto theirs = remap(o, merged);
  for (const auto& [e, c] : theirs) {
    auto [it, inserted] = mine.emplace(e, c);
    if (!inserted) it->second += c;
  }
  vars_ = std::move(merged);
  terms_ = std::move(mine);
  prune();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  auto merged = merge_vars(a.vars_, b.vars_);
  auto ta = remap(a, merged);
  auto tb = remap(b, merged);
  Polynomial p;
  p.vars_ = merged;
  for (const auto& [ea, ca] : ta)
    for (const auto& [eb, cb] : tb) {
      Polynomial::Exponents e(merged.size());
      for (std::size_t k = 0; k < merged.size(); ++k) e[k] = ea[k] + eb[k];
      auto [it, inserted] = p.terms_.emplace(e, ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  p.prune();
  return p;
}

Polynomial& Polynomial::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  Polynomial d = a;
  d -= b;
  return d.is_zero();
}

Scalar Polynomial::eval(const std::map<std::string, Scalar>& point) const {
  Scalar acc(0);
  for (const auto& [e, c] : terms_) {
    Scalar term = c;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (!e[k]) continue;
      auto it = point.find(vars_[k]);
      if (it == point.end())
        throw std::invalid_argument("eval: missing value for " + vars_[k]);
      for (unsigned j = 0; j < e[k]; ++j) term *= it->second;
    }
    acc += term;
  }
  return acc;
}

Polynomial Polynomial::substitute(
    const std::map<std::string, Polynomial>& subs) const {
  Polynomial acc;
  for (const auto& [e, c] : terms_) {
    Polynomial term = Polynomial::constant(c);
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (!e[k]) continue;
      auto it = subs.find(vars_[k]);
      Polynomial base = (it != subs.end()) ? it->second
                                           : Polynomial::variable(vars_[k]);
      for (unsigned j = 0; j < e[k]; ++j) term = term * base;
    }
    acc += term;
  }
  return acc;
}

Polynomial Polynomial::derivative(const std::string& var) const {
  auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) return Polynomial();
  std::size_t idx = static_cast<std::size_t>(it - vars_.begin());
  Polynomial p;
  p.vars_ = vars_;
  for (const auto& [e, c] : terms_) {
    if (idx >= e.size() || e[idx] == 0) continue;
    Exponents ne = e;
    ne[idx] -= 1;
    p.terms_[ne] = c * Scalar(static_cast<int>(e[idx]));
  }
  p.prune();
  return p;
}

std::vector<Scalar> Polynomial::univariate_coeffs(
    const std::string& var) const {
  if (!is_univariate_in(var))
    throw std::invalid_argument("univariate_coeffs: polynomial in " +
                                std::to_string(support().size()) +
                                " variables is not univariate in " + var);
  int d = degree_in(var);
  std::vector<Scalar> coeffs(static_cast<std::size_t>(std::max(d, 0)) + 1,
                             Scalar(0));
  auto it = std::find(vars_.begin(), vars_.end(), var);
  std::size_t idx = it == vars_.end() ? vars_.size() : it - vars_.begin();
  for (const auto& [e, c] : terms_) {
    unsigned k = (idx < e.size()) ? e[idx] : 0;
    coeffs[k] += c;
  }
  return coeffs;
}

Polynomial Polynomial::from_univariate_coeffs(const std::string& var,
                                              const std::vector<Scalar>& cs) {
  Polynomial p;
  for (std::size_t k = 0; k < cs.size(); ++k)
    p += Polynomial::monomial({var}, {static_cast<unsigned>(k)}, cs[k]);
  return p;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest total degree first for readability.
  std::vector<std::pair<Exponents, Scalar>> sorted(terms_.begin(),
                                                   terms_.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    int da = 0, db = 0;
    for (unsigned k : a.first) da += static_cast<int>(k);
    for (unsigned k : b.first) db += static_cast<int>(k);
    if (da != db) return da > db;
    return a.first > b.first;
  });
  for (const auto& [e, c] : sorted) {
    if (!first) os << " + ";
    first = false;
    bool has_var = false;
    for (unsigned k : e) has_var |= (k != 0);
    std::string cs = c.str();
    if (!has_var) {
      os << "(" << cs << ")";
      continue;
    }
    if (c != Scalar(1)) os << "(" << cs << ")*";
    bool fv = true;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (!e[k]) continue;
      if (!fv) os << "*";
      fv = false;
      os << vars_[k];
      if (e[k] > 1) os << "^" << e[k];
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
  return os << p.str();
}

// ---------- univariate utilities ----------

PolyDivision divmod(const Polynomial& a, const Polynomial& b,
                    const std::string& var) {
  auto ca = a.univariate_coeffs(var);
  auto cb = b.univariate_coeffs(var);
  while (!cb.empty() && cb.back().is_zero()) cb.pop_back();
  if (cb.empty()) throw std::domain_error("divmod: division by zero");
  std::vector<Scalar> rem = ca, quot;
  while (!rem.empty() && rem.back().is_zero()) rem.pop_back();
  int db = static_cast<int>(cb.size()) - 1;
  Scalar lead = cb.back().inverse();
  int dr = static_cast<int>(rem.size()) - 1;
  if (dr >= db) quot.assign(dr - db + 1, Scalar(0));
  while (static_cast<int>(rem.size()) - 1 >= db && !rem.empty()) {
    int d = static_cast<int>(rem.size()) - 1;
    Scalar f = rem.back() * lead;
    quot[d - db] = f;
    for (int k = 0; k <= db; ++k) rem[d - db + k] -= f * cb[k];
    while (!rem.empty() && rem.back().is_zero()) rem.pop_back();
  }
  PolyDivision out;
  out.quotient = Polynomial::from_univariate_coeffs(var, quot);
  out.remainder = Polynomial::from_univariate_coeffs(var, rem);
  return out;
}

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b,
                    const std::string& var) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y, var).remainder;
    x = y;
    y = r;
  }
  if (x.is_zero()) return x;
  auto cs = x.univariate_coeffs(var);
  while (!cs.empty() && cs.back().is_zero()) cs.pop_back();
  Scalar inv = cs.back().inverse();
  return x * inv;
}

Polynomial squarefree_part(const Polynomial& p, const std::string& var) {
  if (p.degree_in(var) <= 0) return p;
  Polynomial g = poly_gcd(p, p.derivative(var), var);
  if (g.degree_in(var) <= 0) return p;
  return divmod(p, g, var).quotient;
}

std::vector<std::pair<Polynomial, int>> squarefree_decomposition(
    const Polynomial& p, const std::string& var) {
  // Yun's algorithm over a characteristic-zero field.
  std::vector<std::pair<Polynomial, int>> out;
  if (p.degree_in(var) <= 0) return out;
  Polynomial dp = p.derivative(var);
  Polynomial a = poly_gcd(p, dp, var);
  Polynomial b = divmod(p, a, var).quotient;
  Polynomial c = divmod(dp, a, var).quotient;
  Polynomial d = c - b.derivative(var);
  int mult = 1;
  while (b.degree_in(var) > 0) {
    Polynomial f = poly_gcd(b, d, var);
    if (f.degree_in(var) > 0) out.emplace_back(f, mult);
    b = divmod(b, f, var).quotient;
    c = divmod(d, f, var).quotient;
    d = c - b.derivative(var);
    ++mult;
  }
  return out;
}

Scalar resultant(const Polynomial& a, const Polynomial& b,
                 const std::string& var) {
  auto ca = a.univariate_coeffs(var);
  auto cb = b.univariate_coeffs(var);
  while (!ca.empty() && ca.back().is_zero()) ca.pop_back();
  while (!cb.empty() && cb.back().is_zero()) cb.pop_back();
  if (ca.empty() || cb.empty()) return Scalar(0);
  int m = static_cast<int>(ca.size()) - 1;
  int n = static_cast<int>(cb.size()) - 1;
  if (m == 0) {
    Scalar r(1);
    for (int k = 0; k < n; ++k) r *= ca[0];
    return r;
  }
  if (n == 0) {
    Scalar r(1);
    for (int k = 0; k < m; ++k) r *= cb[0];
    return r;
  }
  Matrix syl(static_cast<std::size_t>(m + n), static_cast<std::size_t>(m + n));
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k)
      syl.at(static_cast<std::size_t>(r), static_cast<std::size_t>(r + k)) =
          ca[static_cast<std::size_t>(m - k)];
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k)
      syl.at(static_cast<std::size_t>(n + r),
             static_cast<std::size_t>(r + k)) =
          cb[static_cast<std::size_t>(n - k)];
  return syl.det();
}

Scalar discriminant(const Polynomial& p) {
  auto sup = p.support();
  if (sup.size() != 1)
    throw std::invalid_argument("discriminant: univariate input required");
  const std::string var = sup[0];
  int n = p.degree_in(var);
  if (n < 1) throw std::invalid_argument("discriminant: degree >= 1 required");
  auto cs = p.univariate_coeffs(var);
  Scalar lead = cs.back();
  Scalar res = resultant(p, p.derivative(var), var);
  Scalar d = res / lead;
  // sign (-1)^{n(n-1)/2}
  if (((static_cast<long>(n) * (n - 1)) / 2) % 2 == 1) d = -d;
  return d;
}

namespace {

// Gaussian-integer divisor enumeration via factorization of the norm.
// Returns false when trial division exceeds the budget.
bool gaussian_divisors(const Int& a, const Int& b, std::vector<std::pair<Int, Int>>* out) {
  // Norm.
  Int n = a * a + b * b;
  if (n == 0) return false;
  // Factor the norm by trial division.
  std::vector<std::pair<Int, int>> primes;
  Int m = n;
  Int p = 2;
  const Int budget = 2000000;
  while (m > 1) {
    if (p * p > m) {
      primes.emplace_back(m, 1);
      break;
    }
    if (p > budget) return false;
    if (m % p == 0) {
      int e = 0;
      while (m % p == 0) {
        m /= p;
        ++e;
      }
      primes.emplace_back(p, e);
    }
    p += (p == 2) ? 1 : 2;
  }
  // Gaussian prime factors for each rational prime dividing the norm.
  struct GPrime {
    Int re, im;
    int max_pow;
  };
  std::vector<GPrime> gprimes;
  for (const auto& [q, e] : primes) {
    if (q == 2) {
      gprimes.push_back({1, 1, 2 * e});
    } else if (q % 4 == 3) {
      gprimes.push_back({q, 0, e / 2});
    } else {
      // q = x^2 + y^2; find by search (q is small by construction).
      Int x = 1;
      bool found = false;
      for (; x * x <= q; ++x) {
        Int y2 = q - x * x;
        Int y;
        mpz_sqrt(y.get_mpz_t(), y2.get_mpz_t());
        if (y * y == y2) {
          gprimes.push_back({x, y, e});
          gprimes.push_back({x, -y, e});
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
  }
  // All divisor candidates (up to units): products of gaussian prime powers.
  std::vector<std::pair<Int, Int>> divs = {{1, 0}};
  for (const auto& gp : gprimes) {
    std::vector<std::pair<Int, Int>> next;
    for (const auto& d : divs) {
      Int re = d.first, im = d.second;
      for (int k = 0; k <= gp.max_pow; ++k) {
        next.emplace_back(re, im);
        Int nre = re * gp.re - im * gp.im;
        Int nim = re * gp.im + im * gp.re;
        re = nre;
        im = nim;
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    divs = std::move(next);
    if (divs.size() > 100000) return false;
  }
  // Multiply in units.
  std::vector<std::pair<Int, Int>> all;
  for (const auto& d : divs) {
    all.emplace_back(d.first, d.second);
    all.emplace_back(-d.first, -d.second);
    all.emplace_back(-d.second, d.first);
    all.emplace_back(d.second, -d.first);
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  *out = std::move(all);
  return true;
}

// Roots in Q(i) of a squarefree univariate polynomial; returns false when
// the divisor search was not exhaustive.
bool roots_of_squarefree(const Polynomial& p, const std::string& var,
                         std::vector<Scalar>* roots, Polynomial* remaining) {
  *remaining = p;
  int deg = p.degree_in(var);
  if (deg <= 0) return true;
  // Zero roots first.
  Polynomial q = *remaining;
  {
    auto cs = q.univariate_coeffs(var);
    std::size_t k = 0;
    while (k < cs.size() && cs[k].is_zero()) ++k;
    if (k > 0) {
      for (std::size_t j = 0; j < k; ++j) roots->push_back(Scalar(0));
      cs.erase(cs.begin(), cs.begin() + static_cast<long>(k));
      q = Polynomial::from_univariate_coeffs(var, cs);
    }
  }
  bool exhaustive = true;
  // Rational-root search on the integer-scaled polynomial.
  while (q.degree_in(var) > 2) {
    auto cs = q.univariate_coeffs(var);
    // Scale to Gaussian-integer coefficients.
    Int den = 1;
    for (const auto& c : cs) {
      den = den / gcd(den, c.re().get_den()) * c.re().get_den();
      den = den / gcd(den, c.im().get_den()) * c.im().get_den();
    }
    std::vector<std::pair<Int, Int>> ics;
    for (const auto& c : cs) {
      Rat re = c.re() * den, im = c.im() * den;
      ics.emplace_back(re.get_num(), im.get_num());
    }
    std::vector<std::pair<Int, Int>> d0, dn;
    if (!gaussian_divisors(ics.front().first, ics.front().second, &d0) ||
        !gaussian_divisors(ics.back().first, ics.back().second, &dn)) {
      exhaustive = false;
      break;
    }
    bool found = false;
    for (const auto& num : d0) {
      for (const auto& dden : dn) {
        Scalar nu{Rat(num.first), Rat(num.second)};
        Scalar de{Rat(dden.first), Rat(dden.second)};
        if (de.is_zero()) continue;
        Scalar cand = nu / de;
        if (q.eval({{var, cand}}).is_zero()) {
          roots->push_back(cand);
          Polynomial lin =
              Polynomial::variable(var) - Polynomial::constant(cand);
          q = divmod(q, lin, var).quotient;
          found = true;
          break;
        }
      }
      if (found) break;
    }
    if (!found) break;  // no linear factor over Q(i)
  }
  int d = q.degree_in(var);
  if (d == 1) {
    auto cs = q.univariate_coeffs(var);
    roots->push_back(-cs[0] / cs[1]);
    q = Polynomial::constant(cs[1]);
  } else if (d == 2) {
    auto cs = q.univariate_coeffs(var);
    Scalar a = cs[2], b = cs[1], c = cs[0];
    Scalar disc = b * b - Scalar(4) * a * c;
    Scalar sq;
    if (Scalar::sqrt(disc, &sq)) {
      Scalar two_a = Scalar(2) * a;
      roots->push_back((-b + sq) / two_a);
      roots->push_back((-b - sq) / two_a);
      q = Polynomial::constant(a);
    }
  }
  *remaining = q;
  return exhaustive;
}

}  // namespace

GaussianRoots gaussian_roots(const Polynomial& p, const std::string& var) {
  GaussianRoots out;
  out.remaining = Polynomial::constant(Scalar(1));
  if (p.degree_in(var) <= 0) {
    out.complete = true;
    return out;
  }
  bool exhaustive = true;
  Polynomial leftover = Polynomial::constant(Scalar(1));
  for (const auto& [factor, mult] : squarefree_decomposition(p, var)) {
    std::vector<Scalar> roots;
    Polynomial rem;
    if (!roots_of_squarefree(factor, var, &roots, &rem)) exhaustive = false;
    for (const auto& r : roots) out.roots.emplace_back(r, mult);
    if (rem.degree_in(var) > 0)
      for (int k = 0; k < mult; ++k) leftover = leftover * rem;
  }
  std::sort(out.roots.begin(), out.roots.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  int found = 0;
  for (const auto& [r, m] : out.roots) found += m;
  out.complete = exhaustive && (found == p.degree_in(var));
  out.remaining = leftover;
  return out;
}

}  // namespace realform
