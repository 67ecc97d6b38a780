#include "doctest.h"
#include "leibniz/families.hpp"

using namespace leibniz;

namespace {

LeibnizAlgebra nlaa(const Field& F, std::size_t k) {
  FamilySpec s{Family::non_lie_almost_abelian, F};
  s.dim_I = k;
  return build(s);
}

}  // namespace

TEST_CASE("identity validation") {
  Field F = Field::prime(2);
  MultiplicationTable t(F, 1, {"e"});
  t(0, 0, 0) = F.one();  // [e,e] = e
  auto check = validate(t, Identity::right);
  CHECK_FALSE(check.holds);
  REQUIRE(check.witness);
  CHECK(*check.witness == std::array<std::size_t, 3>{0, 0, 0});
  CHECK_THROWS_AS(LeibnizAlgebra{t}, Error);

  // [b,b] = a is right and left Leibniz but not Lie.
  LeibnizAlgebra L = build(FamilySpec{Family::two_dim_nilpotent_cyclic, Field::rationals()});
  CHECK(validate(L.table(), Identity::right).holds);
  CHECK(validate(L.table(), Identity::left).holds);
  CHECK_FALSE(validate(L.table(), Identity::lie).holds);
}

TEST_CASE("squares ideal and center") {
  Field F = Field::prime(2);
  LeibnizAlgebra L = nlaa(F, 2);  // x, y, h
  CHECK(ideal_I(L) == span(F, 3, {L.basis(0), L.basis(1)}));
  CHECK(center(L).dim() == 0);
  CHECK(is_ideal(L, ideal_I(L)));
  // L/I is one-dimensional abelian.
  QuotientAlgebra Q = quotient(L, ideal_I(L));
  CHECK(Q.quotient.dim() == 1);
  CHECK(is_abelian(Q.quotient));
  CHECK_THROWS_AS(quotient(L, span(F, 3, {L.basis(2)})), Error);

  LeibnizAlgebra lie = build(FamilySpec{Family::k2, F});
  CHECK(ideal_I(lie).dim() == 0);
  CHECK(is_lie(lie));
}

TEST_CASE("series and nilpotency") {
  Field F = Field::prime(3);
  LeibnizAlgebra S = build(FamilySpec{Family::thm45i_solvable, F});
  CHECK_FALSE(is_lie(S));
  CHECK(is_solvable(S));
  CHECK_FALSE(is_nilpotent(S));
  auto lc = series(S, S.whole(), SeriesKind::lower_central);
  CHECK(lc.back().dim() == 1);  // stabilizes at Fa
  LeibnizAlgebra N = build(FamilySpec{Family::two_dim_nilpotent_cyclic, F});
  CHECK(is_nilpotent(N));
  CHECK(series_limit(N, N.whole(), SeriesKind::lower_central).dim() == 0);
  CHECK_THROWS_AS(series(S, span(F, 2, {S.basis(0)}), SeriesKind::derived), Error);

  // K2 is perfect.
  LeibnizAlgebra K = build(FamilySpec{Family::k2, Field::prime(2)});
  CHECK(bracket_subspaces(K, K.whole(), K.whole()) == K.whole());
  CHECK_FALSE(is_solvable(K));
}

TEST_CASE("quotients and restrictions respect brackets") {
  Field F = Field::prime(3);
  FamilySpec s{Family::extraspecial_sum, F};
  s.form_rank = 2;
  s.dim_Z = 1;
  LeibnizAlgebra L = build(s);
  Subspace Z = center(L);
  QuotientAlgebra Q = quotient(L, Z);
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = 0; j < L.dim(); ++j)
      CHECK(Q.project(L.bracket(L.basis(i), L.basis(j))) == Q.quotient.bracket(Q.project(L.basis(i)), Q.project(L.basis(j))));
  CHECK(Q.lift(Q.quotient.zero_subspace()) == Z);
  LeibnizAlgebra R = restrict_to(L, Z);
  CHECK(is_abelian(R));
}

TEST_CASE("formatting uses basis names") {
  LeibnizAlgebra L = build(FamilySpec{Family::thm45i_solvable, Field::prime(3)});
  CHECK(L.format(L.basis(0) + L.basis(1) * Field::prime(3).from_int(2)) == "b+2*a");
  CHECK(L.format(L.zero_vector()) == "0");
}
