#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "realform/polynomial.hpp"
#include "realform/sampler.hpp"

using namespace realform;

namespace {
Polynomial t() { return Polynomial::variable("t"); }
Polynomial c(int k) { return Polynomial::constant(Scalar(k)); }

Polynomial random_poly(Sampler& rng, int max_deg) {
  Polynomial p;
  int d = static_cast<int>(rng.integer(1, max_deg));
  for (int k = 0; k <= d; ++k)
    p += Polynomial::monomial({"t"}, {static_cast<unsigned>(k)},
                              rng.scalar(4, 2));
  return p;
}
}  // namespace

TEST_CASE("arithmetic and variable merging") {
  Polynomial x = Polynomial::variable("x");
  Polynomial y = Polynomial::variable("y");
  Polynomial p = (x + y) * (x - y);
  CHECK(p == x * x - y * y);
  CHECK(p.total_degree() == 2);
  CHECK(p.is_homogeneous());
  CHECK((p + y * y) == x * x);
  CHECK(p.eval({{"x", Scalar(3)}, {"y", Scalar(2)}}) == Scalar(5));
}

TEST_CASE("no zero coefficients survive") {
  Polynomial x = Polynomial::variable("x");
  Polynomial p = x - x;
  CHECK(p.is_zero());
  CHECK(p.terms().empty());
}

TEST_CASE("substitution composes") {
  Polynomial x = Polynomial::variable("x");
  Polynomial p = x * x + c(1);
  Polynomial q = p.substitute({{"x", t() - c(1)}});
  CHECK(q.eval({{"t", Scalar(3)}}) == Scalar(5));
}

TEST_CASE("derivative") {
  Polynomial p = t() * t() * t() + c(2) * t();
  Polynomial d = p.derivative("t");
  CHECK(d == c(3) * t() * t() + c(2));
}

TEST_CASE("divmod and gcd") {
  Polynomial p = t() * t() - c(1);
  Polynomial q = t() - c(1);
  auto dv = divmod(p, q, "t");
  CHECK(dv.remainder.is_zero());
  CHECK(dv.quotient == t() + c(1));
  CHECK(poly_gcd(p, q, "t") == q);
  Polynomial r = poly_gcd(p, t() + c(2), "t");
  CHECK(r.degree_in("t") == 0);
}

TEST_CASE("discriminant frozen examples") {
  // Oracle for t^2-1: resultant(p, p') computed by hand equals -4, and
  // disc = -res/lc for n = 2, giving 4.
  CHECK(discriminant(t() * t() - c(1)) == Scalar(4));
  // Double root.
  CHECK(discriminant(t() * t()) == Scalar(0));
  // b^2 - 4ac oracle: 1 - 0 = 1.
  CHECK(discriminant(t() * t() + t()) == Scalar(1));
  CHECK_THROWS(discriminant(Polynomial::variable("x") + t()));
  CHECK_THROWS(discriminant(c(3)));
}

TEST_CASE("discriminant vanishes exactly on repeated roots") {
  Sampler rng(13);
  for (int trial = 0; trial < 80; ++trial) {
    Polynomial p = random_poly(rng, 6);
    if (p.degree_in("t") < 1) continue;
    Polynomial g = poly_gcd(p, p.derivative("t"), "t");
    bool has_repeat = g.degree_in("t") > 0;
    CHECK((discriminant(p) == Scalar(0)) == has_repeat);
  }
}

TEST_CASE("quadratic discriminant matches b^2-4ac on samples") {
  Sampler rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    Scalar a = rng.nonzero_scalar(), b = rng.scalar(), cc = rng.scalar();
    Polynomial p = Polynomial::constant(a) * t() * t() +
                   Polynomial::constant(b) * t() + Polynomial::constant(cc);
    CHECK(discriminant(p) == b * b - Scalar(4) * a * cc);
  }
}

TEST_CASE("squarefree decomposition") {
  Polynomial p = (t() - c(1)) * (t() - c(1)) * (t() + c(2));
  auto dec = squarefree_decomposition(p, "t");
  REQUIRE(dec.size() == 2);
  CHECK(dec[0].second == 1);
  CHECK(dec[1].second == 2);
  CHECK(dec[0].first == t() + c(2));
  CHECK(dec[1].first == t() - c(1));
  CHECK(squarefree_part(p, "t").degree_in("t") == 2);
}

TEST_CASE("resultant of coprime polynomials is nonzero") {
  Sampler rng(19);
  for (int trial = 0; trial < 60; ++trial) {
    Polynomial p = random_poly(rng, 4), q = random_poly(rng, 4);
    if (p.degree_in("t") < 1 || q.degree_in("t") < 1) continue;
    bool coprime = poly_gcd(p, q, "t").degree_in("t") == 0;
    CHECK((resultant(p, q, "t") != Scalar(0)) == coprime);
  }
}

TEST_CASE("gaussian roots") {
  // (t-2)(t-i)^2 (t^2-2): the quadratic factor has no Q(i) roots.
  Polynomial i_poly = Polynomial::constant(Scalar::i());
  Polynomial p = (t() - c(2)) * (t() - i_poly) * (t() - i_poly) *
                 (t() * t() - c(2));
  auto roots = gaussian_roots(p, "t");
  CHECK_FALSE(roots.complete);
  REQUIRE(roots.roots.size() == 2);
  CHECK(roots.roots[0].first == Scalar::i());
  CHECK(roots.roots[0].second == 2);
  CHECK(roots.roots[1].first == Scalar(2));
  CHECK(roots.roots[1].second == 1);
  CHECK(roots.remaining.degree_in("t") == 2);

  auto all = gaussian_roots((t() - c(3)) * (t() + c(5)) * t(), "t");
  CHECK(all.complete);
  CHECK(all.roots.size() == 3);

  Sampler rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    // Build from known Q(i) roots; recovery must be complete.
    Polynomial p2 = c(1);
    std::vector<Scalar> want;
    int n = static_cast<int>(rng.integer(1, 4));
    for (int k = 0; k < n; ++k) {
      Scalar r = rng.scalar(3, 2);
      want.push_back(r);
      p2 = p2 * (t() - Polynomial::constant(r));
    }
    auto got = gaussian_roots(p2, "t");
    CHECK(got.complete);
    int total = 0;
    for (const auto& [r, m] : got.roots) {
      total += m;
      CHECK(p2.eval({{"t", r}}).is_zero());
    }
    CHECK(total == n);
  }
}

TEST_CASE("charpoly via Faddeev-LeVerrier") {
  // diag(1,2,3): char = t^3 - 6t^2 + 11t - 6.
  std::vector<std::vector<Scalar>> m = {
      {Scalar(1), Scalar(0), Scalar(0)},
      {Scalar(0), Scalar(2), Scalar(0)},
      {Scalar(0), Scalar(0), Scalar(3)}};
  auto cs = charpoly_coeffs<Scalar>(
      3, [&](std::size_t i, std::size_t j) { return m[i][j]; });
  CHECK(cs[0] == Scalar(1));
  CHECK(cs[1] == Scalar(-6));
  CHECK(cs[2] == Scalar(11));
  CHECK(cs[3] == Scalar(-6));
}

TEST_CASE("charpoly over polynomial entries") {
  // [[0, u],[1, 0]]: char = t^2 - u.
  Polynomial u = Polynomial::variable("u");
  std::vector<std::vector<Polynomial>> m = {{Polynomial(), u},
                                            {c(1), Polynomial()}};
  auto cs = charpoly_coeffs<Polynomial>(
      2, [&](std::size_t i, std::size_t j) { return m[i][j]; });
  CHECK(cs[1].is_zero());
  CHECK(cs[2] == -u);
}
