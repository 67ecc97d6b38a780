#include <random>

#include "doctest.h"
#include "leibniz/census.hpp"

using namespace leibniz;

TEST_CASE("membership in Q") {
  Field F = Field::prime(2);
  CHECK_FALSE(in_class_Q(build(FamilySpec{Family::k2, F})).in_Q);  // only 2-step subquasi-ideals
  FamilySpec n{Family::non_lie_almost_abelian, F};
  n.dim_I = 2;
  auto m = in_class_Q(build(n));
  CHECK(m.in_Q);
  CHECK(m.oracle_mismatches == 0);
  CHECK(m.subalgebra_count == m.quasi_ideal_count);

  // Heisenberg Lie algebra [x,y] = z = -[y,x] over GF(3): Fx is not a quasi-ideal of it.
  Field G = Field::prime(3);
  MultiplicationTable t(G, 3);
  t.set_product(0, 1, Vector::unit(G, 3, 2));
  t.set_product(1, 0, -Vector::unit(G, 3, 2));
  LeibnizAlgebra H(t);
  auto h = in_class_Q(H);
  CHECK_FALSE(h.in_Q);
  REQUIRE(h.failing);
  CHECK_FALSE(is_quasi_ideal_oracle(H, *h.failing));
}

TEST_CASE("classification round-trips") {
  for (Field F : {Field::prime(2), Field::prime(3), Field::rational_function(2)})
    for (const auto& [name, L] : family_corpus(F, 4)) {
      CAPTURE(name);
      CAPTURE(F.name());
      ClassificationResult r = classify_q_member(L);
      CHECK(replays(L, r));
      if (name.rfind("abelian", 0) == 0) CHECK(r.verdict == CatalogueCase::Abelian);
    }
  ClassificationResult e = classify_q_member(build(default_spec(Family::example44, Field::rational_function(2))));
  CHECK(e.verdict == CatalogueCase::Char2Family);
  CHECK(e.label() == "Char2Family(dim_C=1)");
  ClassificationResult k = classify_q_member(build(FamilySpec{Family::k2, Field::prime(2)}));
  CHECK(k.verdict == CatalogueCase::K2Like);
  ClassificationResult s = classify_q_member(build(FamilySpec{Family::thm45i_solvable, Field::prime(3)}));
  CHECK(s.verdict == CatalogueCase::TwoDimSolvable);
}

TEST_CASE("isomorphism search") {
  Field F = Field::prime(3);
  auto cat = two_dim_catalogue(F);
  CHECK(are_isomorphic(cat[0], cat[0]));
  CHECK_FALSE(are_isomorphic(cat[0], cat[1]));
  // Swap the basis of the solvable algebra.
  MultiplicationTable t = in_basis(cat[1], {cat[1].basis(1), cat[1].basis(0)});
  LeibnizAlgebra swapped(t);
  CHECK_FALSE(swapped.table() == cat[1].table());
  auto g = find_isomorphism(cat[1], swapped);
  REQUIRE(g);
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < 2; ++i) rows.push_back(g->row(i));
  CHECK(in_basis(cat[1], rows) == swapped.table());
}

TEST_CASE("general linear group orders") {
  CHECK(general_linear_group(2, 3).size() == 168);
  CHECK(general_linear_group(3, 2).size() == 48);
  CHECK(general_linear_group(2, 2).size() == 6);
}

TEST_CASE("packed tables") {
  Field F = Field::prime(3);
  LeibnizAlgebra S = build(FamilySpec{Family::thm45i_solvable, F});
  SmallTable t = SmallTable::from_algebra(S);
  CHECK(SmallTable::from_index(3, 2, t.index()) == t);
  CHECK(t.to_table() == S.table());
  CHECK(t.is_right_leibniz());

  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::uint32_t> pick(0, (1u << 27) - 1);
  std::size_t valid = 0;
  for (int i = 0; i < 20000; ++i) {
    std::uint32_t idx = pick(rng);
    bool fast = gf2_dim3_is_leibniz(idx);
    CHECK(fast == SmallTable::from_index(2, 3, idx).is_right_leibniz());
    valid += fast;
  }
  for (std::uint32_t idx : {0u, 65600u}) CHECK(gf2_dim3_is_leibniz(idx) == SmallTable::from_index(2, 3, idx).is_right_leibniz());
  CHECK(gf2_dim3_is_leibniz(0));
}

TEST_CASE("canonical form is an orbit invariant") {
  auto group = general_linear_group(3, 2);
  for (const auto& t : all_leibniz_tables(3, 2, kDefaultTableBudget)) {
    SmallTable c = canonical_form(t, group);
    CHECK(c <= t);
    for (std::size_t i = 0; i < group.size(); i += 7) CHECK(canonical_form(transform(t, group[i]), group) == c);
  }
}

TEST_CASE("small sweeps") {
  SweepOptions o;
  o.run_lemmas = false;
  CensusReport one = sweep_tables(Field::prime(2), 1, o);
  CHECK(one.scanned == 2);
  CHECK(one.valid == 1);
  CHECK(one.classes.size() == 1);

  CensusReport two = sweep_tables(Field::prime(2), 2, o);
  CHECK(two.scanned == 256);
  CHECK(two.non_lie_classes() == 2);
  std::uint64_t total = 0;
  for (const auto& c : two.classes) total += c.orbit_size;
  CHECK(total == two.valid);
  CHECK(two.oracle_mismatches == 0);

  CHECK_THROWS_AS(sweep_tables(Field::rationals(), 2, o), Error);
  o.table_budget = 100;
  CHECK_THROWS_AS(sweep_tables(Field::prime(2), 2, o), Error);
}

TEST_CASE("sample mode is deterministic") {
  SweepOptions o;
  o.exhaustive = false;
  o.samples = 300;
  o.seed = 9;
  o.run_lemmas = false;
  CensusReport a = sweep_tables(Field::prime(3), 2, o);
  o.workers = 2;
  CensusReport b = sweep_tables(Field::prime(3), 2, o);
  REQUIRE(a.classes.size() == b.classes.size());
  for (std::size_t i = 0; i < a.classes.size(); ++i) {
    CHECK(a.classes[i].representative == b.classes[i].representative);
    CHECK(a.classes[i].orbit_size == b.classes[i].orbit_size);
  }
  CHECK(a.scanned == 300);
}

TEST_CASE("lemma harness on a small corpus") {
  HarnessReport r = lemma_harness(family_corpus(Field::prime(2), 3));
  CHECK(r.algebras > 5);
  CHECK(r.failures.empty());
  std::size_t applicable = 0;
  for (const auto& [name, tally] : r.clauses) applicable += tally.applicable;
  CHECK(applicable > 0);
}
