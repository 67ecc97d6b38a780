#include <random>

#include "doctest.h"
#include "leibniz/io.hpp"

using namespace leibniz;
using leibniz::io::Json;

TEST_CASE("scalar and field round-trips") {
  std::mt19937_64 rng(2);
  for (Field F : {Field::prime(7), Field::rationals(), Field::rational_function(3), Field::rational_function(2, "x")}) {
    CHECK(io::field_from_json(io::to_json(F)) == F);
    for (int i = 0; i < 20; ++i) {
      Scalar s = random_scalar(F, rng);
      CHECK(io::scalar_from_json(F, io::to_json(s)) == s);
    }
  }
  Field Q = Field::rationals();
  CHECK(io::scalar_from_json(Q, Json("-3/4")) == Q.from_int(-3) / Q.from_int(4));
  CHECK(io::scalar_from_json(Field::prime(5), Json(-1)) == Field::prime(5).from_int(4));
  CHECK_THROWS_AS(io::field_from_json(Json{{"kind", "prime"}, {"p", 6}}), Error);
}

TEST_CASE("table round-trips") {
  for (Field F : {Field::prime(2), Field::prime(3), Field::rational_function(2)})
    for (const auto& [name, L] : family_corpus(F, 4)) {
      CAPTURE(name);
      Json j = io::to_json(L.table());
      MultiplicationTable back = io::table_from_json(Json::parse(j.dump()));
      CHECK(back == L.table());
      CHECK(back.basis_names() == L.basis_names());
    }
}

TEST_CASE("subspace and matrix round-trips") {
  Field F = Field::prime(3);
  Subspace S = span(F, 3, {Vector(F, {F.one(), F.from_int(2), F.zero()}), Vector::unit(F, 3, 2)});
  CHECK(io::subspace_from_json(F, 3, io::to_json(S)) == S);
  Matrix M = Matrix::identity(F, 3);
  M(0, 2) = F.from_int(2);
  CHECK(io::matrix_from_json(F, io::to_json(M)) == M);
  CHECK_THROWS_AS(io::vector_from_json(F, 3, Json::array({1, 2})), Error);
}

TEST_CASE("census report keys") {
  SweepOptions o;
  CensusReport r = sweep_tables(Field::prime(2), 2, o);
  Json j = io::to_json(r);
  for (const char* key : {"params", "totals", "q_dim_I_distribution", "classes", "discrepancies", "lemma_clauses", "lemma_failures"})
    CHECK(j.contains(key));
  CHECK(j["totals"]["non_lie_classes"] == 2);
  CHECK(j["classes"].size() == r.classes.size());
}
