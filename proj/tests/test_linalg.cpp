#include <random>

#include "doctest.h"
#include "leibniz/linalg.hpp"

using namespace leibniz;

namespace {

// Number of k-dim subspaces of GF(q)^n.
std::uint64_t gaussian_binomial(std::uint64_t q, std::size_t n, std::size_t k) {
  std::uint64_t num = 1, den = 1;
  for (std::size_t i = 0; i < k; ++i) {
    num *= power_saturating(q, n - i) - 1;
    den *= power_saturating(q, i + 1) - 1;
  }
  return num / den;
}

Vector random_vector(const Field& F, std::size_t n, std::mt19937_64& rng) {
  Vector v(F, n);
  for (std::size_t i = 0; i < n; ++i) v[i] = random_scalar(F, rng, 1);
  return v;
}

Subspace random_subspace(const Field& F, std::size_t n, std::size_t gens, std::mt19937_64& rng) {
  std::vector<Vector> vs;
  for (std::size_t i = 0; i < gens; ++i) vs.push_back(random_vector(F, n, rng));
  return echelonize(F, n, vs);
}

}  // namespace

TEST_CASE("subspace enumeration matches Gaussian binomials") {
  for (auto [q, n] : {std::pair{2u, 3u}, {3u, 2u}, {2u, 4u}, {3u, 3u}, {5u, 2u}}) {
    Field F = Field::prime(q);
    for (std::size_t k = 0; k <= n; ++k) {
      CAPTURE(q);
      CAPTURE(n);
      CAPTURE(k);
      CHECK(enumerate_subspaces(F, n, k).size() == gaussian_binomial(q, n, k));
    }
  }
  CHECK(enumerate_subspaces(Field::prime(2), 3).size() == 16);
}

TEST_CASE("projective points") {
  std::size_t count = 0;
  for_each_projective_point(Field::prime(3), 3, [&](const Vector& v) {
    ++count;
    CHECK(v[v.leading_index()].is_one());
  });
  CHECK(count == 13);
  CHECK_THROWS_AS(for_each_vector(Field::prime(2), 30, [](const Vector&) {}), Error);
  CHECK_THROWS_AS(for_each_vector(Field::rationals(), 1, [](const Vector&) {}), Error);
}

TEST_CASE("echelon form is canonical") {
  Field F = Field::prime(3);
  Vector a(F, {F.from_int(1), F.from_int(2), F.zero()});
  Vector b(F, {F.zero(), F.one(), F.one()});
  Subspace s1 = span(F, 3, {a, b});
  Subspace s2 = span(F, 3, {a + b, a - b});
  CHECK(s1 == s2);
  CHECK(s1.dim() == 2);
  CHECK(s1.contains(a * F.from_int(2) + b));
  CHECK_FALSE(s1.contains(Vector::unit(F, 3, 2)));
}

TEST_CASE("dimension formula and kernels on random data") {
  std::mt19937_64 rng(11);
  for (Field F : {Field::prime(2), Field::prime(3), Field::rationals(), Field::rational_function(2)}) {
    for (int trial = 0; trial < 25; ++trial) {
      Subspace U = random_subspace(F, 4, 1 + trial % 3, rng), W = random_subspace(F, 4, 1 + (trial / 3) % 3, rng);
      CHECK((U + W).dim() + U.intersect(W).dim() == U.dim() + W.dim());
      CHECK(U.contains(U.intersect(W)));
      CHECK(W.contains(U.intersect(W)));

      Matrix M(F, 4, 3);
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 3; ++j) M(i, j) = random_scalar(F, rng, 1);
      Subspace K = left_kernel(M);
      for (const auto& x : K.basis()) CHECK((x * M).is_zero());

      Vector v = random_vector(F, 4, rng);
      if (auto c = U.coordinates(v)) {
        Vector back(F, 4);
        for (std::size_t i = 0; i < U.dim(); ++i) back.add_scaled((*c)[i], U.basis()[i]);
        CHECK(back == v);
      }
    }
  }
}

TEST_CASE("inverse and linear solve") {
  Field F = Field::prime(5);
  Matrix M(F, 2, 2);
  M(0, 0) = F.from_int(1);
  M(0, 1) = F.from_int(2);
  M(1, 0) = F.from_int(3);
  M(1, 1) = F.from_int(4);
  auto inv = inverse(M);
  REQUIRE(inv);
  CHECK(M * *inv == Matrix::identity(F, 2));
  Matrix S(F, 2, 2);
  S(0, 0) = F.one();
  S(1, 0) = F.from_int(2);
  CHECK_FALSE(inverse(S));
  Vector b(F, {F.from_int(4), F.one()});
  auto x = solve_left(M, b);
  REQUIRE(x);
  CHECK(*x * M == b);
}
