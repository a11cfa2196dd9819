#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "realform/sampler.hpp"
#include "realform/scalar.hpp"

using realform::Rat;
using realform::Sampler;
using realform::Scalar;

TEST_CASE("construction keeps rationals canonical") {
  Scalar s(Rat(2, 4), Rat(-3, -6));
  CHECK(s.re() == Rat(1, 2));
  CHECK(s.im() == Rat(1, 2));
  CHECK(s.re().get_den() == 1 * 2);
}

TEST_CASE("arithmetic basics") {
  Scalar i = Scalar::i();
  CHECK(i * i == Scalar(-1));
  CHECK((Scalar(3) + Scalar(4) * i) * (Scalar(3) - Scalar(4) * i) ==
        Scalar(25));
  CHECK(Scalar(1, 3) + Scalar(1, 6) == Scalar(1, 2));
}

TEST_CASE("inverse and division") {
  Scalar z(Rat(3), Rat(4));
  CHECK(z * z.inverse() == Scalar(1));
  CHECK_THROWS(Scalar(0).inverse());
  CHECK(Scalar(1) / Scalar::i() == -Scalar::i());
}

TEST_CASE("text format round trips") {
  CHECK(Scalar::parse("3/4") == Scalar(3, 4));
  CHECK(Scalar::parse("-1/2 + 5/7*i") == Scalar(Rat(-1, 2), Rat(5, 7)));
  CHECK(Scalar::parse("i") == Scalar::i());
  CHECK(Scalar::parse("-i") == -Scalar::i());
  CHECK(Scalar::parse("2*i") == Scalar(Rat(0), Rat(2)));
  CHECK(Scalar::parse(" 1/2+1/2*i ") == Scalar(Rat(1, 2), Rat(1, 2)));
  Sampler rng(7);
  for (int k = 0; k < 200; ++k) {
    Scalar s = rng.scalar(50, 20);
    CHECK(Scalar::parse(s.str()) == s);
  }
  CHECK_THROWS(Scalar::parse(""));
  CHECK_THROWS(Scalar::parse("1//2"));
}

TEST_CASE("field axioms on sampled triples") {
  Sampler rng(42);
  for (int k = 0; k < 300; ++k) {
    Scalar a = rng.scalar(), b = rng.scalar(), c = rng.scalar();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) - b == a);
    if (!a.is_zero()) CHECK(a * a.inverse() == Scalar(1));
  }
}

TEST_CASE("exact square roots in Q(i)") {
  Scalar r;
  CHECK(Scalar::sqrt(Scalar(Rat(9, 4)), &r));
  CHECK(r * r == Scalar(Rat(9, 4)));
  CHECK(Scalar::sqrt(Scalar(-4), &r));
  CHECK(r * r == Scalar(-4));
  CHECK(Scalar::sqrt(Scalar(Rat(0), Rat(2)), &r));  // sqrt(2i) = 1+i
  CHECK(r * r == Scalar(Rat(0), Rat(2)));
  CHECK_FALSE(Scalar::sqrt(Scalar(2), &r));
  CHECK_FALSE(Scalar::sqrt(Scalar::i(), &r));
  Sampler rng(11);
  for (int k = 0; k < 100; ++k) {
    Scalar s = rng.scalar(8, 4);
    Scalar sq = s * s;
    Scalar back;
    CHECK(Scalar::sqrt(sq, &back));
    CHECK(back * back == sq);
  }
}
