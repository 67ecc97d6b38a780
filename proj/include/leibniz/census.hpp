#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "leibniz/families.hpp"
#include "leibniz/quasi.hpp"

namespace leibniz {

/// Bracket-closed subspaces of L (finite fields).
std::vector<Subspace> all_subalgebras(const LeibnizAlgebra& L, std::uint64_t budget = kDefaultBudget);

struct QMembership {
  bool in_Q = true;
  std::optional<Subspace> failing;  ///< a subalgebra that is not a quasi-ideal
  std::size_t subalgebra_count = 0;
  std::size_t quasi_ideal_count = 0;
  /// Subalgebras where the definitional oracle disagrees with the exact test.
  std::size_t oracle_mismatches = 0;
};

/// Every subalgebra a quasi-ideal. The exact predicate decides; the oracle
/// is replayed on every subalgebra when `cross_check` is set.
QMembership in_class_Q(const LeibnizAlgebra& L, std::uint64_t budget = kDefaultBudget, bool cross_check = true);

struct Invariants {
  std::size_t dim = 0;
  std::size_t dim_I = 0;
  std::size_t dim_center = 0;
  std::size_t dim_square = 0;  ///< dim L^2
  bool is_lie = false;
  bool is_symmetric = false;
  bool is_nilpotent = false;
  bool is_solvable = false;
  std::vector<std::size_t> lower_central;  ///< dims along the lower central series
  std::vector<std::size_t> derived;        ///< dims along the derived series

  friend bool operator==(const Invariants&, const Invariants&) = default;
};

Invariants invariants_of(const LeibnizAlgebra& L);

enum class CatalogueCase {
  Abelian,
  AlmostAbelianLie,
  K2Like,
  NonLieAlmostAbelian,
  TwoDimSolvable,
  ExtraspecialSum,
  Char2Family,
  OutsideCatalogue,
};

std::string_view case_name(CatalogueCase c);

struct ClassificationResult {
  CatalogueCase verdict = CatalogueCase::OutsideCatalogue;
  /// dim_I, dim_E, dim_Z or dim_C depending on the case.
  std::map<std::string, std::size_t> params;
  /// Recorded invariants, in insertion order.
  std::vector<std::pair<std::string, std::string>> facts;
  /// Adapted basis in which the matched case's defining products hold
  /// (empty for Abelian and OutsideCatalogue).
  std::vector<Vector> basis;
  /// lambda_c for Char2Family, relative to [h,h] = z.
  std::vector<Scalar> lambdas;

  /// e.g. "ExtraspecialSum(dim_E=2, dim_Z=0)".
  std::string label() const;
};

/// Decision tree over computed invariants; meaningful for members of Q.
ClassificationResult classify_q_member(const LeibnizAlgebra& L, std::uint64_t budget = kDefaultBudget);
/// Re-derives the matched case's defining equations in result.basis.
bool replays(const LeibnizAlgebra& L, const ClassificationResult& result, std::uint64_t budget = kDefaultBudget);

/// Structure constants of L in the basis `basis` (rows in old coordinates).
MultiplicationTable in_basis(const LeibnizAlgebra& L, const std::vector<Vector>& basis);

/// Invertible g (rows = images of the basis of L1) with L1 in basis g equal to
/// L2's table. Finite prime fields, |GL(n,q)| within budget.
std::optional<Matrix> find_isomorphism(const LeibnizAlgebra& L1, const LeibnizAlgebra& L2,
                                       std::uint64_t budget = kDefaultBudget);
bool are_isomorphic(const LeibnizAlgebra& L1, const LeibnizAlgebra& L2, std::uint64_t budget = kDefaultBudget);

// ---------------------------------------------------------------------------
// Packed tables over GF(q), q < 256, for the sweeps.

/// Structure constants as digits, c[(i*n + j)*n + k] = c_ij^k. The table's
/// index reads the digits as a base-q numeral, most significant first.
struct SmallTable {
  std::uint32_t q = 2;
  std::size_t n = 0;
  std::vector<std::uint8_t> c;

  static SmallTable from_index(std::uint32_t q, std::size_t n, std::uint64_t index);
  static SmallTable from_algebra(const LeibnizAlgebra& L);
  std::uint64_t index() const;
  MultiplicationTable to_table() const;
  bool is_right_leibniz() const;

  friend bool operator==(const SmallTable&, const SmallTable&) = default;
  friend auto operator<=>(const SmallTable& a, const SmallTable& b) { return a.c <=> b.c; }
};

/// g and its inverse, row-major n x n over GF(q).
struct GLElement {
  std::vector<std::uint8_t> g;
  std::vector<std::uint8_t> inv;
};

/// All of GL(n, q); BudgetExceeded when q^(n^2) exceeds the budget.
std::vector<GLElement> general_linear_group(std::uint32_t q, std::size_t n, std::uint64_t budget = kDefaultBudget);
/// The table in the basis f_i = sum_a g_ia e_a.
SmallTable transform(const SmallTable& t, const GLElement& g);
/// Least table (lexicographic digits) in the GL-orbit.
SmallTable canonical_form(const SmallTable& t, const std::vector<GLElement>& group);

/// Fast right-identity test for a GF(2) dim-3 table given by its index.
bool gf2_dim3_is_leibniz(std::uint32_t index);

/// Index-ordered list of every right Leibniz table over GF(q) in dimension n.
std::vector<SmallTable> all_leibniz_tables(std::uint32_t q, std::size_t n, std::uint64_t table_budget);

// ---------------------------------------------------------------------------

struct LemmaTally {
  std::size_t applicable = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
};

struct LemmaFailure {
  std::string algebra;
  std::string subject;  ///< the subalgebra, chain or quotient examined
  std::string clause;
  std::string detail;
};

struct HarnessReport {
  std::size_t algebras = 0;
  std::map<std::string, LemmaTally> clauses;
  std::vector<LemmaFailure> failures;

  void merge(const HarnessReport& other);
};

/// Lemma suites over every quasi-ideal and every subalgebra with a
/// subquasi chain; factor-closure and the central-square lemma for members
/// of Q; Engel implies nilpotent.
HarnessReport lemma_harness(const std::vector<NamedAlgebra>& corpus, std::uint64_t budget = kDefaultBudget);
HarnessReport lemma_harness(const NamedAlgebra& algebra, std::uint64_t budget = kDefaultBudget);

inline constexpr std::uint64_t kDefaultTableBudget = std::uint64_t{1} << 28;

struct SweepOptions {
  bool exhaustive = true;
  std::uint64_t samples = 1000;  ///< tables drawn in sample mode
  std::uint64_t seed = 1;
  unsigned workers = 1;
  std::uint64_t table_budget = kDefaultTableBudget;
  std::uint64_t budget = kDefaultBudget;  ///< per-algebra enumerations
  bool run_lemmas = true;
};

struct CensusClass {
  SmallTable representative;  ///< least table of the class
  std::uint64_t orbit_size = 0;  ///< tables in the class (sample mode: draws that hit it)
  Invariants invariants;
  bool in_Q = false;
  ClassificationResult classification;
  std::size_t subalgebra_count = 0;
  std::size_t quasi_ideal_count = 0;
  std::size_t oracle_mismatches = 0;
};

struct CensusReport {
  Field field;
  std::size_t dim = 0;
  bool exhaustive = true;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;

  std::uint64_t scanned = 0;
  std::uint64_t valid = 0;
  std::vector<CensusClass> classes;
  /// Indices into classes: members of Q classified OutsideCatalogue.
  std::vector<std::size_t> discrepancies;
  /// dim I -> number of Q classes.
  std::map<std::size_t, std::size_t> q_dim_I_distribution;
  std::size_t oracle_mismatches = 0;
  HarnessReport lemmas;

  std::size_t non_lie_classes() const;
};

CensusReport sweep_tables(const Field& field, std::size_t dim, const SweepOptions& options);

}  // namespace leibniz
