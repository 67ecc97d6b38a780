#include <random>

#include "doctest.h"
#include "leibniz/fields.hpp"

using namespace leibniz;

namespace {

Scalar poly_scalar(const Field& F, poly::Poly num, poly::Poly den = {1}) { return Scalar::rational_function(F, num, den); }

}  // namespace

TEST_CASE("prime field arithmetic") {
  Field F = Field::prime(7);
  Scalar a = F.from_int(3), b = F.from_int(5);
  CHECK((a + b).residue() == 1);
  CHECK((a - b).residue() == 5);
  CHECK((a * b).residue() == 1);
  CHECK((a / b) * b == a);
  CHECK(F.from_int(-1).residue() == 6);
  CHECK_THROWS_AS(a / F.zero(), Error);
  CHECK_THROWS_AS(a + Field::prime(5).one(), Error);
}

TEST_CASE("squares by Euler's criterion") {
  Field F = Field::prime(5);
  // residues 1 and 4 only
  CHECK(is_square(F.zero()));
  CHECK(is_square(F.from_int(1)));
  CHECK_FALSE(is_square(F.from_int(2)));
  CHECK_FALSE(is_square(F.from_int(3)));
  CHECK(is_square(F.from_int(4)));
  Field G = Field::prime(13);
  for (int v = 0; v < 13; ++v) {
    auto r = square_root(G.from_int(v));
    if (r) CHECK(*r * *r == G.from_int(v));
  }
  CHECK(is_square(Field::prime(2).one()));
}

TEST_CASE("rationals are canonical") {
  Field Q = Field::rationals();
  Scalar half = parse_scalar(Q, "2/4");
  CHECK(half.to_string() == "1/2");
  CHECK(parse_scalar(Q, "-3/-6") == half);
  CHECK(is_square(parse_scalar(Q, "9/4")));
  CHECK_FALSE(is_square(parse_scalar(Q, "2")));
  CHECK_FALSE(is_square(parse_scalar(Q, "-1")));
}

TEST_CASE("rational functions reduce by gcd") {
  Field F = Field::rational_function(2);
  Scalar t = F.indeterminate();
  // (t^2 + 1)/(t + 1) = t + 1 over GF(2)
  Scalar q = poly_scalar(F, {1, 0, 1}, {1, 1});
  CHECK(q == t + F.one());
  CHECK(parse_scalar(F, "(t^2+1)/(t+1)") == q);
  CHECK(q.function().den == poly::Poly{1});
  CHECK_FALSE(is_square(t));
  CHECK(is_square(t * t + F.one()));
  CHECK(is_square(parse_scalar(F, "(t^4+t^2)/(t^2+1)^2")));
  CHECK_FALSE(is_square(parse_scalar(F, "t^3/(t+1)")));

  Field G = Field::rational_function(3);
  Scalar s = parse_scalar(G, "(t+1)^2/(t^2+2)^2");
  REQUIRE(square_root(s));
  CHECK(*square_root(s) * *square_root(s) == s);
  CHECK_FALSE(is_square(parse_scalar(G, "2")));
}

TEST_CASE("field descriptors parse") {
  CHECK(parse_field("gf2") == Field::prime(2));
  CHECK(parse_field("gf(5)") == Field::prime(5));
  CHECK(parse_field("q") == Field::rationals());
  CHECK(parse_field("gf2(t)") == Field::rational_function(2));
  CHECK(parse_field("gf(3)(x)").variable() == "x");
  CHECK_THROWS_AS(parse_field("gf(4)"), Error);
  CHECK(Field::rational_function(2).name() == "GF(2)(t)");
}

TEST_CASE("field axioms on random elements") {
  std::mt19937_64 rng(7);
  for (Field F : {Field::prime(2), Field::prime(3), Field::prime(101), Field::rationals(), Field::rational_function(2),
                  Field::rational_function(5)}) {
    CAPTURE(F.name());
    for (int trial = 0; trial < 40; ++trial) {
      Scalar a = random_scalar(F, rng), b = random_scalar(F, rng), c = random_scalar(F, rng);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + (-a) == F.zero());
      if (!a.is_zero()) CHECK(a * a.inverse() == F.one());
      CHECK(is_square(a * a));
    }
  }
}
