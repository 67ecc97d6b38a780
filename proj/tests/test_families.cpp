#include <random>

#include "doctest.h"
#include "leibniz/census.hpp"

using namespace leibniz;

namespace {

ErrorCode code_of(const FamilySpec& s) {
  try {
    build(s);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("build succeeded");
  return ErrorCode::Parse;
}

}  // namespace

TEST_CASE("every family validates") {
  for (Field F : {Field::prime(2), Field::prime(3), Field::rationals(), Field::rational_function(2)})
    for (const auto& [name, L] : family_corpus(F, 5)) {
      CAPTURE(name);
      CHECK(validate(L.table(), Identity::right).holds);
    }
  LeibnizAlgebra E = build(default_spec(Family::example44, Field::rational_function(2)));
  CHECK(validate(E.table(), Identity::left).holds);
}

TEST_CASE("example44 products") {
  Field F = Field::rational_function(2);
  LeibnizAlgebra E = build(default_spec(Family::example44, F));  // c, z, h
  Vector c = E.basis(0), z = E.basis(1), h = E.basis(2);
  CHECK(E.bracket(c, c) == z * F.indeterminate());
  CHECK(E.bracket(h, h) == z);
  CHECK(E.bracket(c, h) == c);
  CHECK(E.bracket(h, c) == c);
  CHECK(ideal_I(E) == span(F, 3, {z}));
  CHECK(center(E) == ideal_I(E));
  CHECK(is_symmetric(E));
  // [u,u] = (t a^2 + b^2) z, nonzero for (a,b) != 0 because t is not a square.
  std::mt19937_64 rng(3);
  for (int i = 0; i < 30; ++i) {
    Scalar a = random_scalar(F, rng), b = random_scalar(F, rng), g = random_scalar(F, rng);
    if (a.is_zero() && b.is_zero()) continue;
    Vector u = c * a + h * b + z * g;
    CHECK_FALSE(E.bracket(u, u).is_zero());
  }
}

TEST_CASE("family preconditions") {
  // The characteristic gate sits behind the square gate.
  CHECK(code_of(default_spec(Family::thm46_char2, Field::prime(3))) == ErrorCode::SquareLambda);
  FamilySpec odd = default_spec(Family::thm46_char2, Field::prime(3));
  odd.lambdas = {Field::prime(3).from_int(2)};
  CHECK(code_of(odd) == ErrorCode::BadCharacteristic);
  CHECK(code_of(default_spec(Family::thm46_char2, Field::prime(2))) == ErrorCode::SquareLambda);
  CHECK(code_of(default_spec(Family::thm46_char2, Field::rationals())) == ErrorCode::SquareLambda);
  FamilySpec sq = default_spec(Family::example44, Field::rational_function(2));
  sq.lambdas = {parse_scalar(Field::rational_function(2), "t^2+1")};
  CHECK(code_of(sq) == ErrorCode::SquareLambda);
  FamilySpec two = default_spec(Family::thm46_char2, Field::rational_function(2));
  two.lambdas = {parse_scalar(two.field, "t"), parse_scalar(two.field, "t^3+t")};
  CHECK(code_of(two) == ErrorCode::SquareLambda);
  CHECK(code_of(FamilySpec{Family::k2, Field::prime(3)}) == ErrorCode::BadCharacteristic);
  FamilySpec one{Family::almost_abelian_lie, Field::prime(2)};
  one.dim = 1;
  CHECK(code_of(one) == ErrorCode::BadDimension);

  // x^2 + 2y^2 over GF(3) vanishes at (1,1).
  FamilySpec iso{Family::extraspecial_sum, Field::prime(3)};
  Matrix B(iso.field, 2, 2);
  B(0, 0) = iso.field.one();
  B(1, 1) = iso.field.from_int(2);
  iso.form = B;
  CHECK(code_of(iso) == ErrorCode::IsotropicForm);
  // -1 is a square mod 5.
  FamilySpec five{Family::extraspecial_sum, Field::prime(5)};
  five.form = Matrix::identity(five.field, 2);
  CHECK(code_of(five) == ErrorCode::IsotropicForm);
}

TEST_CASE("extraspecial sum over GF(3)") {
  FamilySpec s{Family::extraspecial_sum, Field::prime(3)};
  s.form = Matrix::identity(s.field, 2);
  s.dim_Z = 1;
  LeibnizAlgebra L = build(s);
  CHECK(L.dim() == 4);
  CHECK(validate(L.table(), Identity::left).holds);
  CHECK(ideal_I(L).dim() == 1);
  CHECK(center(L).dim() == 2);
}

TEST_CASE("anisotropy decisions") {
  Field Q = Field::rationals();
  CHECK(form_anisotropy(Matrix::identity(Q, 2)).anisotropic);  // x^2 + y^2
  Matrix h(Q, 2, 2);
  h(0, 0) = Q.one();
  h(1, 1) = -Q.one();
  auto r = form_anisotropy(h);
  CHECK_FALSE(r.anisotropic);
  REQUIRE(r.isotropic_vector);
  Field T = Field::rational_function(2);
  CHECK(form_anisotropy(default_anisotropic_form(T, 2)).anisotropic);
  CHECK_FALSE(form_anisotropy(Matrix::identity(T, 3)).decided);
  CHECK(form_anisotropy(default_anisotropic_form(Field::prime(2), 2)).anisotropic);
  CHECK(form_anisotropy(default_anisotropic_form(Field::prime(7), 2)).anisotropic);
}

TEST_CASE("square classes over GF(2)(t)") {
  Field F = Field::rational_function(2);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 30; ++i) {
    Scalar f = random_scalar(F, rng, 3);
    auto [a, b] = square_class_split(f);
    CHECK(a * a + F.indeterminate() * b * b == f);
    CHECK(is_square(f) == b.is_zero());
  }
}

TEST_CASE("two-dimensional catalogue") {
  auto cat = two_dim_catalogue(Field::rationals());
  REQUIRE(cat.size() == 2);
  for (const auto& L : cat) CHECK_FALSE(is_lie(L));
  CHECK(is_nilpotent(cat[0]));
  CHECK(is_solvable(cat[1]));
  CHECK_FALSE(is_nilpotent(cat[1]));
}

TEST_CASE("K2 is simple over GF(2)") {
  LeibnizAlgebra K = build(FamilySpec{Family::k2, Field::prime(2)});
  std::size_t ideals = 0;
  for (const auto& S : enumerate_subspaces(K.field(), 3))
    if (is_ideal(K, S)) ++ideals;
  CHECK(ideals == 2);
}

TEST_CASE("non-Lie almost abelian: Fh quasi-ideal, abelian quotient") {
  for (std::size_t k = 1; k <= 3; ++k) {
    FamilySpec s{Family::non_lie_almost_abelian, Field::prime(3)};
    s.dim_I = k;
    LeibnizAlgebra L = build(s);
    CHECK(is_quasi_ideal(L, span(L.field(), L.dim(), {L.basis(k)})).holds);
    QuotientAlgebra Q = quotient(L, ideal_I(L));
    CHECK(Q.quotient.dim() == 1);
  }
}
