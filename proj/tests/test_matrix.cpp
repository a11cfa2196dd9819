#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "realform/matrix.hpp"
#include "realform/sampler.hpp"

using namespace realform;

namespace {
Matrix random_matrix(Sampler& rng, std::size_t r, std::size_t c) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rng.scalar(4, 2);
  return m;
}
}  // namespace

TEST_CASE("solve_linear identity case") {
  Matrix a = Matrix::identity(2);
  auto sol = solve_linear(a, {Scalar(3), Scalar(4)});
  REQUIRE(sol.solvable());
  CHECK(*sol.particular == std::vector<Scalar>{Scalar(3), Scalar(4)});
  CHECK(sol.kernel.empty());
}

TEST_CASE("solve_linear zero matrix") {
  Matrix a = Matrix::zero(2, 2);
  auto sol = solve_linear(a, {Scalar(0), Scalar(0)});
  REQUIRE(sol.solvable());
  CHECK(*sol.particular == std::vector<Scalar>{Scalar(0), Scalar(0)});
  CHECK(sol.kernel.size() == 2);
}

TEST_CASE("solve_linear inconsistent system") {
  // Hand row-reduction: [[1,1],[2,2]] x = (1,3) reduces to 0 = 1.
  Matrix a{{Scalar(1), Scalar(1)}, {Scalar(2), Scalar(2)}};
  auto sol = solve_linear(a, {Scalar(1), Scalar(3)});
  CHECK_FALSE(sol.solvable());
  CHECK(sol.kernel.size() == 1);
}

TEST_CASE("shape mismatch is a usage error") {
  Matrix a = Matrix::identity(2);
  CHECK_THROWS(solve_linear(a, {Scalar(1)}));
}

TEST_CASE("solutions verify exactly and rank-nullity holds") {
  Sampler rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = static_cast<std::size_t>(rng.integer(1, 5));
    std::size_t m = static_cast<std::size_t>(rng.integer(1, 5));
    Matrix a = random_matrix(rng, n, m);
    CHECK(a.rank() + a.kernel_basis().size() == a.cols());
    // Solvable right-hand side built from a known solution.
    std::vector<Scalar> x0 = rng.scalar_vector(m);
    std::vector<Scalar> b(n, Scalar(0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < m; ++j) b[i] += a.at(i, j) * x0[j];
    auto sol = solve_linear(a, b);
    REQUIRE(sol.solvable());
    for (std::size_t i = 0; i < n; ++i) {
      Scalar acc(0);
      for (std::size_t j = 0; j < m; ++j)
        acc += a.at(i, j) * (*sol.particular)[j];
      CHECK(acc == b[i]);
    }
    for (const auto& k : sol.kernel) {
      for (std::size_t i = 0; i < n; ++i) {
        Scalar acc(0);
        for (std::size_t j = 0; j < m; ++j) acc += a.at(i, j) * k[j];
        CHECK(acc.is_zero());
      }
    }
  }
}

TEST_CASE("determinant and inverse") {
  Matrix j{{Scalar(0), Scalar::i()}, {Scalar::i(), Scalar(0)}};
  CHECK(j.det() == Scalar(1));
  CHECK(j * j.inverse() == Matrix::identity(2));
  Sampler rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    Matrix a = random_matrix(rng, 4, 4);
    Scalar d = a.det();
    if (d.is_zero()) {
      CHECK(a.rank() < 4);
    } else {
      CHECK(a.rank() == 4);
      CHECK(a * a.inverse() == Matrix::identity(4));
      // det is multiplicative against a second sample.
      Matrix b = random_matrix(rng, 4, 4);
      CHECK((a * b).det() == a.det() * b.det());
    }
  }
}

TEST_CASE("coordinates_in_span") {
  std::vector<std::vector<Scalar>> basis = {
      {Scalar(1), Scalar(0), Scalar(1)}, {Scalar(0), Scalar(1), Scalar(1)}};
  auto c = coordinates_in_span(basis, {Scalar(2), Scalar(3), Scalar(5)});
  REQUIRE(c.has_value());
  CHECK((*c)[0] == Scalar(2));
  CHECK((*c)[1] == Scalar(3));
  CHECK_FALSE(
      coordinates_in_span(basis, {Scalar(1), Scalar(0), Scalar(0)}).has_value());
}

TEST_CASE("echelon_span canonicalizes") {
  std::vector<std::vector<Scalar>> v = {{Scalar(2), Scalar(4)},
                                        {Scalar(1), Scalar(2)},
                                        {Scalar(0), Scalar(1)}};
  auto b = echelon_span(v);
  CHECK(b.size() == 2);
  CHECK(b[0] == std::vector<Scalar>{Scalar(1), Scalar(0)});
  CHECK(b[1] == std::vector<Scalar>{Scalar(0), Scalar(1)});
}
