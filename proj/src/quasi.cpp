#include "leibniz/quasi.hpp"

#include <algorithm>
#include <deque>

namespace leibniz {

bool permutes_with(const LeibnizAlgebra& L, const Subspace& H, const Subspace& K) {
  Subspace sum = H + K;
  for (const auto& h : H.basis())
    for (const auto& k : K.basis())
      if (!sum.contains(L.bracket(h, k)) || !sum.contains(L.bracket(k, h))) return false;
  return true;
}

namespace {

// Complement of H inside J, and coordinates of (v mod H) along it.
struct RelativeComplement {
  Subspace residues;  // echelon, zero on H's pivot columns

  RelativeComplement(const Subspace& H, const Subspace& J) : residues(Subspace::zero(H.field(), H.ambient_dim())) {
    std::vector<Vector> reduced;
    for (const auto& v : J.basis()) reduced.push_back(H.reduce(v));
    residues = echelonize(H.field(), H.ambient_dim(), reduced);
  }

  std::size_t dim() const { return residues.dim(); }
  const Vector& vector(std::size_t i) const { return residues.basis()[i]; }

  // Requires v in J.
  std::vector<Scalar> coords(const Subspace& H, const Vector& v) const {
    Vector w = H.reduce(v);
    std::vector<Scalar> out;
    for (std::size_t p : residues.pivots()) out.push_back(w[p]);
    return out;
  }
};

// Checks that x_i -> coords(op(x_i)) is alpha * id; fills the witness otherwise.
std::optional<Scalar> scalar_action(const LeibnizAlgebra& L, const Subspace& H, const RelativeComplement& comp, const Vector& h,
                                    bool right_side, QuasiIdealVerdict& verdict) {
  auto apply = [&](const Vector& x) { return right_side ? L.bracket(x, h) : L.bracket(h, x); };
  const std::size_t r = comp.dim();
  std::optional<Scalar> alpha;
  std::size_t alpha_from = 0;
  for (std::size_t i = 0; i < r; ++i) {
    const Vector& x = comp.vector(i);
    Vector value = apply(x);
    std::vector<Scalar> c = comp.coords(H, value);
    for (std::size_t j = 0; j < r; ++j) {
      if (j != i && !c[j].is_zero()) {
        verdict.witness = QuasiIdealVerdict::Witness{h, x, value, right_side};
        verdict.reason = std::string(right_side ? "R_h" : "L_h") + " does not preserve the line of x modulo H";
        return std::nullopt;
      }
    }
    if (!alpha) {
      alpha = c[i];
      alpha_from = i;
    } else if (!(c[i] == *alpha)) {
      Vector x2 = comp.vector(alpha_from) + x;
      verdict.witness = QuasiIdealVerdict::Witness{h, x2, apply(x2), right_side};
      verdict.reason = std::string(right_side ? "R_h" : "L_h") + " has two eigenvalues modulo H";
      return std::nullopt;
    }
  }
  return alpha.value_or(L.field().zero());
}

}  // namespace

QuasiIdealVerdict is_quasi_ideal_in(const LeibnizAlgebra& L, const Subspace& H, const Subspace& J) {
  if (H.ambient_dim() != L.dim() || J.ambient_dim() != L.dim()) throw Error(ErrorCode::DimensionMismatch, "subspace not in L");
  if (!J.contains(H)) throw Error(ErrorCode::PreconditionUnverified, H.to_string() + " is not inside " + J.to_string());
  if (!is_subalgebra(L, J)) throw Error(ErrorCode::NotASubalgebra, J.to_string());

  QuasiIdealVerdict verdict;
  for (const auto& a : H.basis())
    for (const auto& b : H.basis()) {
      Vector ab = L.bracket(a, b);
      if (!H.contains(ab)) {
        verdict.witness = QuasiIdealVerdict::Witness{b, a, ab, true};
        verdict.reason = "not a subalgebra";
        return verdict;
      }
    }

  RelativeComplement comp(H, J);
  for (const auto& h : H.basis()) {
    auto alpha = scalar_action(L, H, comp, h, true, verdict);
    if (!alpha) return verdict;
    auto beta = scalar_action(L, H, comp, h, false, verdict);
    if (!beta) return verdict;
    verdict.certificate.push_back({h, *alpha, *beta});
  }
  verdict.holds = true;
  return verdict;
}

QuasiIdealVerdict is_quasi_ideal(const LeibnizAlgebra& L, const Subspace& H) { return is_quasi_ideal_in(L, H, L.whole()); }

bool is_quasi_ideal_oracle_in(const LeibnizAlgebra& L, const Subspace& H, const Subspace& J, std::uint64_t budget) {
  if (!J.contains(H)) throw Error(ErrorCode::PreconditionUnverified, H.to_string() + " is not inside " + J.to_string());
  bool holds = true;
  for_each_projective_point(
      L.field(), J.dim(),
      [&](const Vector& coords) {
        if (!holds) return;
        Vector x = L.zero_vector();
        for (std::size_t i = 0; i < J.dim(); ++i) x.add_scaled(coords[i], J.basis()[i]);
        if (!permutes_with(L, H, span(L.field(), L.dim(), {x}))) holds = false;
      },
      budget);
  return holds;
}

bool is_quasi_ideal_oracle(const LeibnizAlgebra& L, const Subspace& H, std::uint64_t budget) {
  return is_quasi_ideal_oracle_in(L, H, L.whole(), budget);
}

Subspace core(const LeibnizAlgebra& L, const Subspace& H) {
  const std::size_t n = L.dim();
  Subspace current = H;
  while (current.dim() > 0) {
    const auto& basis = current.basis();
    Matrix m(L.field(), basis.size(), 2 * n * n);
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Vector right = current.reduce(L.bracket(basis[i], L.basis(j)));
        Vector left = current.reduce(L.bracket(L.basis(j), basis[i]));
        for (std::size_t k = 0; k < n; ++k) {
          m(i, j * n + k) = right[k];
          m(i, n * n + j * n + k) = left[k];
        }
      }
    Subspace kernel = left_kernel(m);
    std::vector<Vector> survivors;
    for (const auto& a : kernel.basis()) {
      Vector v = L.zero_vector();
      for (std::size_t i = 0; i < basis.size(); ++i) v.add_scaled(a[i], basis[i]);
      survivors.push_back(std::move(v));
    }
    Subspace next = echelonize(L.field(), n, survivors);
    if (next.dim() == current.dim()) break;
    current = std::move(next);
  }
  return current;
}

bool is_left_engel(const LeibnizAlgebra& L, const Vector& x) {
  Matrix r = L.adjoint(x, LeibnizAlgebra::Side::right);
  Matrix power = r;
  for (std::size_t i = 1; i < L.dim(); ++i) power = power * r;
  return L.dim() == 0 || power.is_zero();
}

EngelResult is_engel_algebra(const LeibnizAlgebra& L, std::uint64_t budget, unsigned samples, std::uint64_t seed) {
  EngelResult result;
  auto check = [&](const Vector& x) {
    if (result.holds && !is_left_engel(L, x)) {
      result.holds = false;
      result.counterexample = x;
    }
  };
  if (L.field().is_finite() && power_saturating(L.field().order(), L.dim()) <= budget) {
    for_each_vector(L.field(), L.dim(), check, budget);
    return result;
  }
  result.sampled = true;
  for (std::size_t i = 0; i < L.dim(); ++i) check(L.basis(i));
  std::mt19937_64 rng(seed);
  for (unsigned s = 0; s < samples && result.holds; ++s) {
    Vector x = L.zero_vector();
    for (std::size_t i = 0; i < L.dim(); ++i) x[i] = random_scalar(L.field(), rng);
    check(x);
  }
  return result;
}

// ---------------------------------------------------------------------------

bool verify_chain(const LeibnizAlgebra& L, const SubquasiChain& chain) {
  if (chain.chain.empty() || !(chain.chain.back() == L.whole())) return false;
  for (std::size_t i = 0; i + 1 < chain.chain.size(); ++i) {
    const Subspace& inner = chain.chain[i];
    const Subspace& outer = chain.chain[i + 1];
    if (!outer.contains(inner) || !is_subalgebra(L, outer)) return false;
    if (!is_quasi_ideal_in(L, inner, outer).holds) return false;
  }
  return is_subalgebra(L, chain.chain.front());
}

SubalgebraLattice::SubalgebraLattice(const LeibnizAlgebra& L, std::uint64_t budget) : L_(L) {
  for_each_subspace(
      L.field(), L.dim(), std::nullopt,
      [&](const Subspace& s) {
        if (is_subalgebra(L_, s)) subalgebras_.push_back(s);
      },
      budget);
}

std::optional<std::size_t> SubalgebraLattice::index_of(const Subspace& S) const {
  for (std::size_t i = 0; i < subalgebras_.size(); ++i)
    if (subalgebras_[i] == S) return i;
  return std::nullopt;
}

bool SubalgebraLattice::is_quasi_ideal_of(std::size_t inner, std::size_t outer) {
  auto key = std::pair{inner, outer};
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  const Subspace& h = subalgebras_[inner];
  const Subspace& j = subalgebras_[outer];
  bool verdict = j.contains(h) && is_quasi_ideal_in(L_, h, j).holds;
  memo_.emplace(key, verdict);
  return verdict;
}

void SubalgebraLattice::compute_distances() {
  const std::size_t count = subalgebras_.size();
  distance_.assign(count, std::nullopt);
  parent_.assign(count, count);
  auto top = index_of(L_.whole());
  distance_[*top] = 0;
  std::deque<std::size_t> queue{*top};
  while (!queue.empty()) {
    std::size_t outer = queue.front();
    queue.pop_front();
    for (std::size_t inner = 0; inner < count; ++inner) {
      if (distance_[inner] || subalgebras_[inner].dim() >= subalgebras_[outer].dim()) continue;
      if (!is_quasi_ideal_of(inner, outer)) continue;
      distance_[inner] = *distance_[outer] + 1;
      parent_[inner] = outer;
      queue.push_back(inner);
    }
  }
  distances_ready_ = true;
}

std::optional<SubquasiChain> SubalgebraLattice::shortest_chain(std::size_t index, std::size_t max_steps) {
  if (!distances_ready_) compute_distances();
  if (!distance_[index] || *distance_[index] > max_steps) return std::nullopt;
  SubquasiChain out;
  for (std::size_t at = index;; at = parent_[at]) {
    out.chain.push_back(subalgebras_[at]);
    if (*distance_[at] == 0) break;
  }
  return out;
}

std::optional<SubquasiChain> subquasi_chain(const LeibnizAlgebra& L, const Subspace& H, std::size_t max_steps, std::uint64_t budget) {
  if (!is_subalgebra(L, H)) return std::nullopt;
  SubalgebraLattice lattice(L, budget);
  return lattice.shortest_chain(*lattice.index_of(H), max_steps);
}

// ---------------------------------------------------------------------------

std::size_t LemmaReport::failures() const {
  return static_cast<std::size_t>(std::count_if(clauses.begin(), clauses.end(), [](const ClauseResult& c) { return !c.passed; }));
}

namespace {

// 1-based term of a stabilized chain; terms past the end repeat the last.
const Subspace& term(const std::vector<Subspace>& chain, std::size_t k) { return chain[std::min(k, chain.size()) - 1]; }

bool two_sided_inside(const LeibnizAlgebra& L, const Subspace& S, const Subspace& target) {
  Subspace whole = L.whole();
  return target.contains(bracket_subspaces(L, whole, S)) && target.contains(bracket_subspaces(L, S, whole));
}

}  // namespace

LemmaReport lemma_suite(const LeibnizAlgebra& L, const SubquasiChain& chain, std::uint64_t budget) {
  if (!verify_chain(L, chain)) throw Error(ErrorCode::PreconditionUnverified, "subquasi-ideal chain does not replay");
  const Subspace& H = chain.chain.front();
  const std::size_t m = chain.steps();
  LemmaReport report;
  auto add = [&](std::string clause, bool applicable, bool passed, std::string detail = {}) {
    report.clauses.push_back({std::move(clause), applicable, !applicable || passed, std::move(detail)});
  };

  const std::vector<Subspace> square_series = series(L, H, SeriesKind::omega_of_square);  // (H^2)^k
  const std::vector<Subspace> derived = series(L, H, SeriesKind::derived);                // H^(k)
  const std::size_t horizon = std::max(square_series.size(), derived.size()) + m + 2;

  if (m == 1) {
    // [x,h] in H implies [h,x] in H. For fixed h the x's form the kernel of
    // x -> [x,h] mod H.
    std::vector<Vector> hs = H.basis();
    if (L.field().is_finite() && power_saturating(L.field().order(), H.dim()) <= budget) {
      hs.clear();
      for_each_vector(L.field(), H.dim(), [&](const Vector& c) {
        Vector h = L.zero_vector();
        for (std::size_t i = 0; i < H.dim(); ++i) h.add_scaled(c[i], H.basis()[i]);
        hs.push_back(std::move(h));
      }, budget);
    }
    bool ok = true;
    std::string detail;
    for (const auto& h : hs) {
      Matrix m_h(L.field(), L.dim(), L.dim());
      for (std::size_t i = 0; i < L.dim(); ++i) {
        Vector r = H.reduce(L.bracket(L.basis(i), h));
        for (std::size_t k = 0; k < L.dim(); ++k) m_h(i, k) = r[k];
      }
      Subspace kernel = left_kernel(m_h);
      for (const auto& x : kernel.basis())
        if (ok && !H.contains(L.bracket(h, x))) {
          ok = false;
          detail = "h=" + L.format(h) + ", x=" + L.format(x);
        }
    }
    add("right_in_H_gives_left_in_H", true, ok, detail);
    add("square_two_sided_in_H", true, two_sided_inside(L, term(square_series, 1), H));
    std::string d24;
    for (std::size_t n = 2; n <= horizon && d24.empty(); ++n)
      if (!two_sided_inside(L, term(square_series, n), term(square_series, n - 1))) d24 = "n=" + std::to_string(n);
    add("square_series_steps_down", true, d24.empty(), d24);
  }

  if (m >= 1) {
    add("square_power_m_two_sided_in_H", true, two_sided_inside(L, term(square_series, m), H));
    bool ok25 = true, ok26 = true;
    std::string d25, d26;
    for (std::size_t n = 1; n <= horizon; ++n) {
      if (ok25 && !two_sided_inside(L, term(square_series, m + n), term(square_series, n))) {
        ok25 = false;
        d25 = "n=" + std::to_string(n);
      }
      if (ok26 && !two_sided_inside(L, term(derived, m + n + 1), term(derived, m + n))) {
        ok26 = false;
        d26 = "n=" + std::to_string(n);
      }
    }
    add("square_series_shift_by_m", true, ok25, d25);
    add("derived_series_shift_by_m", true, ok26, d26);

    const Subspace& square_omega = square_series.back();
    const Subspace& derived_omega = derived.back();
    add("stable_terms_are_ideals", true, is_ideal(L, square_omega) && is_ideal(L, derived_omega));
    bool perfect = bracket_subspaces(L, H, H) == H;
    add("perfect_subquasi_is_ideal", perfect, is_ideal(L, H));
    bool core_free = core(L, H).dim() == 0;
    add("core_free_square_series_vanishes", core_free, square_omega.dim() == 0);
  }

  if (m == 1) {
    bool engel_generated = std::all_of(H.basis().begin(), H.basis().end(), [&](const Vector& h) { return is_left_engel(L, h); });
    add("engel_generated_is_ideal", engel_generated, is_ideal(L, H));
  }
  return report;
}

}  // namespace leibniz
