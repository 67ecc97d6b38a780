#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "leibniz/algebra.hpp"

namespace leibniz {

/// H permutes with K when [H,K] + [K,H] lies in H + K.
bool permutes_with(const LeibnizAlgebra& L, const Subspace& H, const Subspace& K);

struct QuasiIdealVerdict {
  struct Certificate {
    Vector generator;
    Scalar alpha;  ///< R_h acts on J/H as alpha * id: [x,h] - alpha x in H
    Scalar beta;   ///< L_h acts on J/H as beta * id:  [h,x] - beta x in H
  };
  struct Witness {
    Vector h;
    Vector x;
    Vector value;      ///< [x,h] or [h,x]; not in H + Fx
    bool right_side;   ///< true: value = [x,h]
  };

  bool holds = false;
  std::vector<Certificate> certificate;
  std::optional<Witness> witness;
  std::string reason;
};

/// Exact decision procedure, valid over any field.
///
/// H is a quasi-ideal iff H is a subalgebra and, for every basis vector h of
/// H, the maps induced by R_h and L_h on L/H are scalar multiples of the
/// identity. Permuting with every subspace reduces to permuting with every
/// line Fx by bilinearity, and [x,h] in H + Fx for all x says every vector of
/// L/H is an eigenvector of the induced map, which forces a scalar map.
QuasiIdealVerdict is_quasi_ideal(const LeibnizAlgebra& L, const Subspace& H);
/// The same decision for H inside the subalgebra J (H a quasi-ideal of J).
QuasiIdealVerdict is_quasi_ideal_in(const LeibnizAlgebra& L, const Subspace& H, const Subspace& J);

/// Definitional check over a finite field: H permutes with Fx for one
/// representative x of every line of J (default J = L).
bool is_quasi_ideal_oracle(const LeibnizAlgebra& L, const Subspace& H, std::uint64_t budget = kDefaultBudget);
bool is_quasi_ideal_oracle_in(const LeibnizAlgebra& L, const Subspace& H, const Subspace& J, std::uint64_t budget = kDefaultBudget);

/// Largest ideal of L inside H (greatest fixpoint of "stay inside under
/// brackets with the basis").
Subspace core(const LeibnizAlgebra& L, const Subspace& H);

/// R_x nilpotent.
bool is_left_engel(const LeibnizAlgebra& L, const Vector& x);

struct EngelResult {
  bool holds = true;
  bool sampled = false;  ///< not every element was checked
  std::optional<Vector> counterexample;
};

/// Every element left Engel. Exhaustive over finite fields within budget,
/// otherwise the basis plus `samples` random elements.
EngelResult is_engel_algebra(const LeibnizAlgebra& L, std::uint64_t budget = kDefaultBudget, unsigned samples = 64,
                             std::uint64_t seed = 1);

/// H = chain.front() qu ... qu chain.back() = L; m = chain.size() - 1.
struct SubquasiChain {
  std::vector<Subspace> chain;
  std::size_t steps() const { return chain.empty() ? 0 : chain.size() - 1; }
};

/// Replays a chain: consecutive terms are relative quasi-ideals, ends at L.
bool verify_chain(const LeibnizAlgebra& L, const SubquasiChain& chain);

/// All subalgebras of L over a finite field with memoized relative
/// quasi-ideal verdicts; answers shortest subquasi-ideal chains.
class SubalgebraLattice {
 public:
  explicit SubalgebraLattice(const LeibnizAlgebra& L, std::uint64_t budget = kDefaultBudget);

  const LeibnizAlgebra& algebra() const noexcept { return L_; }
  const std::vector<Subspace>& subalgebras() const noexcept { return subalgebras_; }
  std::optional<std::size_t> index_of(const Subspace& S) const;

  /// Relative verdict for subalgebras[inner] inside subalgebras[outer].
  bool is_quasi_ideal_of(std::size_t inner, std::size_t outer);
  /// Shortest chain from subalgebras[index] up to L, if within max_steps.
  std::optional<SubquasiChain> shortest_chain(std::size_t index, std::size_t max_steps);

 private:
  void compute_distances();

  LeibnizAlgebra L_;
  std::vector<Subspace> subalgebras_;
  std::map<std::pair<std::size_t, std::size_t>, bool> memo_;
  std::vector<std::optional<std::size_t>> distance_;
  std::vector<std::size_t> parent_;
  bool distances_ready_ = false;
};

/// Shortest chain of relative quasi-ideals from H up to L (finite fields).
std::optional<SubquasiChain> subquasi_chain(const LeibnizAlgebra& L, const Subspace& H, std::size_t max_steps,
                                            std::uint64_t budget = kDefaultBudget);

struct ClauseResult {
  std::string clause;
  bool applicable = true;  ///< hypothesis met; a non-applicable clause passes vacuously
  bool passed = true;
  std::string detail;
};

struct LemmaReport {
  std::vector<ClauseResult> clauses;
  std::size_t failures() const;
};

/// Evaluates the quasi-ideal containment lemmas for H = chain.front(). The
/// single-step clauses run only when the chain has one step. Throws
/// PreconditionUnverified when the chain does not replay.
LemmaReport lemma_suite(const LeibnizAlgebra& L, const SubquasiChain& chain, std::uint64_t budget = kDefaultBudget);

}  // namespace leibniz
