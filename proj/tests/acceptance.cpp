// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "leibniz/io.hpp"

using namespace leibniz;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

class Recorder {
 public:
  explicit Recorder(Outcome& o) : o_(o) {}
  void require(bool ok, const std::string& what) {
    if (!ok && o_.passed) {
      o_.passed = false;
      o_.detail = what;
    }
  }

 private:
  Outcome& o_;
};

int run(int number, const std::string& title, double limit_seconds, const std::function<Outcome()>& body) {
  auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (o.passed && seconds > limit_seconds) {
    o.passed = false;
    o.detail = "over the time limit";
  }
  std::printf("%s criterion %d: %s (%.2f s, limit %.0f s)%s%s\n", o.passed ? "PASS" : "FAIL", number, title.c_str(),
              seconds, limit_seconds, o.detail.empty() ? "" : ": ", o.detail.c_str());
  std::fflush(stdout);
  return o.passed ? 0 : 1;
}

bool is_symmetric_family(Family f) {
  return f == Family::extraspecial_sum || f == Family::thm46_char2 || f == Family::example44;
}

Field home_field(Family f) {
  switch (f) {
    case Family::k2: return Field::prime(2);
    case Family::thm46_char2:
    case Family::example44: return Field::rational_function(2);
    default: return Field::rationals();
  }
}

Outcome identities() {
  Outcome o;
  Recorder r(o);
  std::size_t built = 0;
  for (Family f : all_families()) {
    LeibnizAlgebra L = build(default_spec(f, home_field(f)));
    ++built;
    std::string name(family_name(f));
    r.require(validate(L.table(), Identity::right).holds, name + " fails the right identity");
    if (is_symmetric_family(f)) r.require(validate(L.table(), Identity::left).holds, name + " fails the left identity");
  }
  for (Field F : {Field::prime(2), Field::prime(3)})
    for (const auto& [name, L] : family_corpus(F, 4)) {
      r.require(validate(L.table(), Identity::right).holds, name + " fails the right identity");
      ++built;
    }
  r.require(built >= 9, "fewer than nine constructors ran");
  if (o.passed) o.detail = std::to_string(built) + " algebras";
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  Recorder r(o);
  std::size_t pairs = 0, mismatches = 0;
  for (Field F : {Field::prime(2), Field::prime(3)})
    for (const auto& [name, L] : family_corpus(F, 4))
      for (const auto& S : all_subalgebras(L)) {
        ++pairs;
        if (is_quasi_ideal(L, S).holds != is_quasi_ideal_oracle(L, S)) ++mismatches;
      }
  r.require(mismatches == 0, std::to_string(mismatches) + " mismatches");
  if (o.passed) o.detail = std::to_string(pairs) + " subalgebras, 0 mismatches";
  return o;
}

Outcome fixtures() {
  Outcome o;
  Recorder r(o);

  // (a) [b,b] = a, [a,b] = a: the only proper nonzero subalgebras are Fa and F(b-a).
  for (Field F : {Field::prime(2), Field::prime(3), Field::prime(5)}) {
    LeibnizAlgebra S = build(FamilySpec{Family::thm45i_solvable, F});
    Vector b = S.basis(0), a = S.basis(1);
    Subspace Fa = span(F, 2, {a}), Fba = span(F, 2, {b - a});
    std::vector<Subspace> proper;
    for (const auto& H : all_subalgebras(S))
      if (H.dim() == 1) proper.push_back(H);
    r.require(proper.size() == 2 && (proper[0] == Fa || proper[1] == Fa) && (proper[0] == Fba || proper[1] == Fba),
              "thm45i subalgebras over " + F.name());
    r.require(is_quasi_ideal(S, Fa).holds && is_quasi_ideal(S, Fba).holds, "thm45i quasi-ideals over " + F.name());
    r.require(core(S, Fba).dim() == 0, "core(F(b-a)) over " + F.name());
  }

  // (b) K2 over GF(2).
  {
    Field F = Field::prime(2);
    LeibnizAlgebra K = build(FamilySpec{Family::k2, F});
    std::size_t ideals = 0;
    for (const auto& S : enumerate_subspaces(F, 3))
      if (is_ideal(K, S)) ++ideals;
    r.require(ideals == 2, "K2 has a proper nonzero ideal");
    r.require(bracket_subspaces(K, K.whole(), K.whole()) == K.whole(), "K2 is not perfect");
    r.require(is_quasi_ideal(K, span(F, 3, {K.basis(2)})).holds, "Fz is not a quasi-ideal of K2");
    SubalgebraLattice lattice(K);
    for (std::size_t i = 0; i < lattice.subalgebras().size(); ++i) {
      auto chain = lattice.shortest_chain(i, 2);
      r.require(chain && verify_chain(K, *chain), "K2 subalgebra without a 2-step chain");
    }
  }

  // (c) c, z, h over GF(2)(t) with [c,c] = tz, [h,h] = z, [c,h] = [h,c] = c.
  // For u = ac + bh + gz, [u,u] = (ta^2 + b^2)z, and ta^2 + b^2 = 0 forces
  // a = b = 0 since t is not a square. So Fu is a subalgebra iff u lies in Fz.
  {
    Field F = Field::rational_function(2);
    LeibnizAlgebra E = build(default_spec(Family::example44, F));
    Vector c = E.basis(0), z = E.basis(1), h = E.basis(2);
    Scalar t = F.indeterminate();
    r.require(is_subalgebra(E, span(F, 3, {z})), "Fz is not a subalgebra");
    r.require(is_quasi_ideal(E, span(F, 3, {z})).holds, "Fz is not a quasi-ideal");
    std::mt19937_64 rng(44);
    std::size_t lines = 0, planes = 0;
    while (lines < 60) {
      Scalar a = random_scalar(F, rng, 2), b = random_scalar(F, rng, 2), g = random_scalar(F, rng, 2);
      if (a.is_zero() && b.is_zero()) continue;
      Vector u = c * a + h * b + z * g;
      r.require(E.bracket(u, u) == z * (t * a * a + b * b), "symbolic square of " + E.format(u));
      r.require(!is_subalgebra(E, span(F, 3, {u})), "F(" + E.format(u) + ") is a subalgebra");
      ++lines;
      if (planes < 12) {
        Subspace P = span(F, 3, {z, u});
        r.require(is_subalgebra(E, P) && is_quasi_ideal(E, P).holds, "plane through z and " + E.format(u));
        ++planes;
      }
    }
    if (o.passed) o.detail = std::to_string(lines) + " lines, " + std::to_string(planes) + " planes sampled";
  }
  return o;
}

std::vector<NamedAlgebra> dim2_gf2_tables() {
  std::vector<NamedAlgebra> out;
  for (const auto& t : all_leibniz_tables(2, 2, kDefaultTableBudget))
    out.push_back({"gf2_dim2_table_" + std::to_string(t.index()), LeibnizAlgebra(t.to_table())});
  return out;
}

Outcome lemmas() {
  Outcome o;
  Recorder r(o);
  HarnessReport total;
  total.merge(lemma_harness(family_corpus(Field::prime(2), 4)));
  total.merge(lemma_harness(family_corpus(Field::prime(3), 4)));
  total.merge(lemma_harness(dim2_gf2_tables()));
  std::size_t applicable = 0;
  for (const auto& [clause, tally] : total.clauses) applicable += tally.applicable;
  if (!total.failures.empty()) {
    const auto& f = total.failures.front();
    r.require(false, std::to_string(total.failures.size()) + " failures, first " + f.clause + " on " + f.algebra);
  }
  r.require(applicable > 0, "no clause was applicable");
  if (o.passed)
    o.detail = std::to_string(total.algebras) + " algebras, " + std::to_string(total.clauses.size()) + " clauses, " +
               std::to_string(applicable) + " applicable instances";
  return o;
}

Outcome two_dim_count() {
  Outcome o;
  Recorder r(o);
  SweepOptions opt;
  opt.run_lemmas = false;
  CensusReport rep = sweep_tables(Field::prime(2), 2, opt);
  r.require(rep.non_lie_classes() == 2, std::to_string(rep.non_lie_classes()) + " non-Lie classes");
  auto cat = two_dim_catalogue(Field::prime(2));
  for (const auto& cls : rep.classes) {
    if (cls.invariants.is_lie) continue;
    LeibnizAlgebra L(cls.representative.to_table());
    r.require(are_isomorphic(L, cat[0]) || are_isomorphic(L, cat[1]), "non-Lie class outside the catalogue");
  }
  if (o.passed) o.detail = std::to_string(rep.classes.size()) + " classes, 2 non-Lie";
  return o;
}

Outcome census_determinism() {
  Outcome o;
  Recorder r(o);
  Field F = Field::prime(2);
  SweepOptions opt;
  opt.workers = 1;
  CensusReport one = sweep_tables(F, 3, opt);
  opt.workers = 2;
  CensusReport two = sweep_tables(F, 3, opt);
  std::string a = io::to_json(one).dump(2), b = io::to_json(two).dump(2);
  r.require(a == b, "reports differ between 1 and 2 workers");
  r.require(one.oracle_mismatches == 0, "oracle mismatches in the census");

  FamilySpec s{Family::non_lie_almost_abelian, F};
  s.dim_I = 2;
  LeibnizAlgebra N = build(s);
  SmallTable key = canonical_form(SmallTable::from_algebra(N), general_linear_group(2, 3));
  std::optional<std::size_t> index;
  for (std::size_t i = 0; i < one.classes.size(); ++i)
    if (one.classes[i].representative == key) index = i;
  r.require(index.has_value(), "the dim I = 2 class is missing");
  if (!index) return o;
  bool oracle = true;
  for (const auto& S : all_subalgebras(N)) oracle = oracle && is_quasi_ideal_oracle(N, S);
  const CensusClass& cls = one.classes[*index];
  r.require(cls.in_Q == oracle, "recorded in_Q differs from the oracle");
  if (oracle) {
    bool listed = std::find(one.discrepancies.begin(), one.discrepancies.end(), *index) != one.discrepancies.end();
    r.require(listed, "the dim I = 2 class is not a discrepancy");
    bool fact = false;
    for (const auto& [k, v] : cls.classification.facts) fact = fact || (k == "dim_I" && v == "2");
    r.require(fact, "the discrepancy does not record dim_I = 2");
  }
  if (o.passed) {
    std::ostringstream d;
    d << one.scanned << " tables, " << one.valid << " valid, " << one.classes.size() << " classes, "
      << one.discrepancies.size() << " discrepancies; dim I = 2 class in_Q=" << (oracle ? "true" : "false")
      << " (oracle agrees)";
    o.detail = d.str();
  }
  return o;
}

Outcome non_perfect_gate() {
  Outcome o;
  Recorder r(o);
  for (Field F : {Field::prime(2), Field::prime(3), Field::rationals()}) {
    ErrorCode code = ErrorCode::Parse;
    bool built = false;
    try {
      build(default_spec(Family::thm46_char2, F));
      built = true;
    } catch (const Error& e) {
      code = e.code();
    }
    r.require(!built && code == ErrorCode::SquareLambda, "thm46 over " + F.name() + " did not raise SquareLambda");
  }
  Field T = Field::rational_function(2);
  FamilySpec s{Family::thm46_char2, T};
  s.lambdas = {T.indeterminate()};
  LeibnizAlgebra L = build(s);
  r.require(classify_q_member(L).verdict == CatalogueCase::Char2Family, "thm46 over GF(2)(t) is not Char2Family");
  r.require(classify_q_member(build(default_spec(Family::example44, T))).verdict == CatalogueCase::Char2Family,
            "example44 is not Char2Family");
  for (Field F : {Field::prime(2), Field::prime(3), Field::rationals()})
    for (const auto& [name, A] : family_corpus(F, 4))
      r.require(classify_q_member(A).verdict != CatalogueCase::Char2Family, name + " over " + F.name() + " is Char2Family");
  return o;
}

}  // namespace

int main() {
  int failures = 0;
  failures += run(1, "family identities", 1, identities);
  failures += run(2, "exact predicate equals oracle", 60, oracle_equivalence);
  failures += run(3, "fixtures", 60, fixtures);
  failures += run(4, "lemma harness", 300, lemmas);
  failures += run(5, "two-dimensional non-Lie count", 10, two_dim_count);
  failures += run(6, "census determinism and discrepancies", 1800, census_determinism);
  failures += run(7, "non-perfect field gate", 1, non_perfect_gate);
  std::printf("%d of 7 criteria passed\n", 7 - failures);
  return failures == 0 ? 0 : 1;
}
