#include "leibniz/census.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <functional>
#include <mutex>
#include <random>
#include <thread>

namespace leibniz {

std::vector<Subspace> all_subalgebras(const LeibnizAlgebra& L, std::uint64_t budget) {
  std::vector<Subspace> out;
  for_each_subspace(
      L.field(), L.dim(), std::nullopt,
      [&](const Subspace& s) {
        if (is_subalgebra(L, s)) out.push_back(s);
      },
      budget);
  return out;
}

QMembership in_class_Q(const LeibnizAlgebra& L, std::uint64_t budget, bool cross_check) {
  QMembership out;
  for (const auto& S : all_subalgebras(L, budget)) {
    ++out.subalgebra_count;
    bool exact = is_quasi_ideal(L, S).holds;
    if (exact) {
      ++out.quasi_ideal_count;
    } else if (out.in_Q) {
      out.in_Q = false;
      out.failing = S;
    }
    if (cross_check && exact != is_quasi_ideal_oracle(L, S, budget)) ++out.oracle_mismatches;
  }
  return out;
}

Invariants invariants_of(const LeibnizAlgebra& L) {
  Invariants inv;
  Subspace whole = L.whole();
  inv.dim = L.dim();
  inv.dim_I = ideal_I(L).dim();
  inv.dim_center = center(L).dim();
  inv.dim_square = bracket_subspaces(L, whole, whole).dim();
  inv.is_lie = is_lie(L);
  inv.is_symmetric = is_symmetric(L);
  inv.is_nilpotent = is_nilpotent(L);
  inv.is_solvable = is_solvable(L);
  for (const auto& s : series(L, whole, SeriesKind::lower_central)) inv.lower_central.push_back(s.dim());
  for (const auto& s : series(L, whole, SeriesKind::derived)) inv.derived.push_back(s.dim());
  return inv;
}

// ---------------------------------------------------------------------------
// Classification

std::string_view case_name(CatalogueCase c) {
  switch (c) {
    case CatalogueCase::Abelian: return "Abelian";
    case CatalogueCase::AlmostAbelianLie: return "AlmostAbelianLie";
    case CatalogueCase::K2Like: return "K2Like";
    case CatalogueCase::NonLieAlmostAbelian: return "NonLieAlmostAbelian";
    case CatalogueCase::TwoDimSolvable: return "TwoDimSolvable";
    case CatalogueCase::ExtraspecialSum: return "ExtraspecialSum";
    case CatalogueCase::Char2Family: return "Char2Family";
    case CatalogueCase::OutsideCatalogue: return "OutsideCatalogue";
  }
  return "Unknown";
}

std::string ClassificationResult::label() const {
  std::string out(case_name(verdict));
  if (params.empty()) return out;
  out += "(";
  bool first = true;
  // Fixed order so labels list parameters consistently.
  for (const char* key : {"dim_I", "dim_E", "dim_Z", "dim_C"}) {
    auto it = params.find(key);
    if (it == params.end()) continue;
    if (!first) out += ", ";
    out += std::string(key) + "=" + std::to_string(it->second);
    first = false;
  }
  return out + ")";
}

MultiplicationTable in_basis(const LeibnizAlgebra& L, const std::vector<Vector>& basis) {
  const std::size_t n = L.dim();
  if (basis.size() != n) throw Error(ErrorCode::DimensionMismatch, "basis size differs from the dimension");
  Matrix g = Matrix::from_rows(L.field(), n, basis);
  auto ginv = inverse(g);
  if (!ginv) throw Error(ErrorCode::DimensionMismatch, "vectors do not form a basis");
  MultiplicationTable t(L.field(), n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t.set_product(i, j, L.bracket(basis[i], basis[j]) * *ginv);
  return t;
}

namespace {

std::string yes_no(bool b) { return b ? "true" : "false"; }

// Coefficient c with v = c * line.basis()[0]; v must lie on the line.
Scalar along(const Subspace& line, const Vector& v) { return v[line.pivots()[0]]; }

// mu with w = mu * s modulo `modulus`, when it exists (s not in modulus).
std::optional<Scalar> ratio_mod(const Subspace& modulus, const Vector& w, const Vector& s) {
  Vector rs = modulus.reduce(s), rw = modulus.reduce(w);
  std::size_t p = rs.leading_index();
  if (p == rs.size()) return std::nullopt;
  Scalar mu = rw[p] / rs[p];
  if (!(rw == rs * mu)) return std::nullopt;
  return mu;
}

// R_h restricted to S equal to mu * id.
std::optional<Scalar> right_scalar_on(const LeibnizAlgebra& L, const Subspace& S, const Vector& h) {
  std::optional<Scalar> mu;
  for (const auto& s : S.basis()) {
    auto r = ratio_mod(L.zero_subspace(), L.bracket(s, h), s);
    if (!r || (mu && !(*r == *mu))) return std::nullopt;
    mu = r;
  }
  return mu;
}

std::optional<std::vector<Vector>> almost_abelian_lie_basis(const LeibnizAlgebra& L) {
  const std::size_t n = L.dim();
  if (n < 2 || !is_lie(L)) return std::nullopt;
  Subspace whole = L.whole();
  Subspace A = bracket_subspaces(L, whole, whole);
  if (A.dim() != n - 1 || bracket_subspaces(L, A, A).dim() != 0) return std::nullopt;
  Vector a0 = A.complement_basis()[0];
  auto mu = right_scalar_on(L, A, a0);
  if (!mu || mu->is_zero()) return std::nullopt;
  std::vector<Vector> basis = A.basis();
  basis.push_back(a0 * mu->inverse());
  return basis;
}

std::optional<std::vector<Vector>> k2_basis(const LeibnizAlgebra& L, std::uint64_t budget) {
  const Field& F = L.field();
  if (L.dim() != 3 || F.characteristic() != 2 || !F.is_finite() || !is_lie(L)) return std::nullopt;
  Subspace whole = L.whole();
  if (!(bracket_subspaces(L, whole, whole) == whole)) return std::nullopt;
  auto g = find_isomorphism(L, build(FamilySpec{Family::k2, F}), budget);
  if (!g) return std::nullopt;
  std::vector<Vector> basis;
  for (std::size_t i = 0; i < 3; ++i) basis.push_back(g->row(i));
  return basis;
}

std::optional<std::vector<Vector>> two_dim_solvable_basis(const LeibnizAlgebra& L) {
  if (L.dim() != 2 || is_lie(L) || is_nilpotent(L)) return std::nullopt;
  Subspace I = ideal_I(L);
  if (I.dim() != 1) return std::nullopt;
  const Vector& a = I.basis()[0];
  Vector b0 = I.complement_basis()[0];
  Scalar mu = along(I, L.bracket(a, b0));
  if (mu.is_zero()) return std::nullopt;
  Vector b1 = b0 * mu.inverse();
  Scalar nu = along(I, L.bracket(b1, b1));
  Vector b = b1 + a * (L.field().one() - nu);
  return std::vector<Vector>{b, a};
}

std::optional<std::vector<Vector>> non_lie_almost_abelian_basis(const LeibnizAlgebra& L) {
  const std::size_t n = L.dim();
  if (n < 2 || is_lie(L)) return std::nullopt;
  Subspace I = ideal_I(L);
  if (I.dim() != n - 1) return std::nullopt;
  Vector h0 = I.complement_basis()[0];
  auto mu = right_scalar_on(L, I, h0);
  if (!mu || mu->is_zero()) return std::nullopt;
  // [L, I] = 0, so shifting h by an element of I clears [h,h].
  Vector h1 = h0 - L.bracket(h0, h0) * mu->inverse();
  std::vector<Vector> basis = I.basis();
  basis.push_back(h1 * mu->inverse());
  return basis;
}

struct ExtraspecialMatch {
  std::vector<Vector> basis;
  std::size_t dim_E = 0, dim_Z = 0;
};

// L^2 = Fz central and u -> [u,u] anisotropic on L/Z(L).
std::optional<ExtraspecialMatch> extraspecial_match(const LeibnizAlgebra& L, ClassificationResult& out, std::uint64_t budget) {
  Subspace whole = L.whole();
  Subspace S = bracket_subspaces(L, whole, whole);
  Subspace Z = center(L);
  if (S.dim() != 1 || !Z.contains(S)) return std::nullopt;
  std::vector<Vector> U = Z.complement_basis();
  const std::size_t k = U.size();
  Matrix B(L.field(), k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) B(i, j) = along(S, L.bracket(U[i], U[j]));
  Anisotropy an = form_anisotropy(B, budget);
  if (!an.decided) {
    out.facts.emplace_back("anisotropy", "undecided");
    return std::nullopt;
  }
  if (!an.anisotropic) {
    Vector v = L.zero_vector();
    for (std::size_t i = 0; i < k; ++i) v.add_scaled((*an.isotropic_vector)[i], U[i]);
    out.facts.emplace_back("anisotropy", "isotropic at " + L.format(v));
    return std::nullopt;
  }
  out.facts.emplace_back("anisotropy", "anisotropic");
  ExtraspecialMatch m;
  m.basis = U;
  m.basis.push_back(S.basis()[0]);
  Subspace acc = S;
  for (const auto& w : Z.basis()) {
    if (acc.contains(w)) continue;
    acc = acc.add(w);
    m.basis.push_back(w);
  }
  m.dim_E = k + 1;
  m.dim_Z = Z.dim() - 1;
  return m;
}

struct Char2Match {
  std::vector<Vector> basis;  // c_1..c_k, z, h
  std::vector<Scalar> lambdas;
};

// Char 2, Z(L) = I = Fz, L/I almost abelian, and a basis with
// [c,h] = [h,c] = c, [h,h] = z, [c,c'] in Fz, [u,u] != 0 off Fz.
std::optional<Char2Match> char2_match(const LeibnizAlgebra& L, ClassificationResult& out, std::uint64_t budget) {
  const Field& F = L.field();
  const std::size_t n = L.dim();
  if (F.characteristic() != 2 || n < 3) return std::nullopt;
  Subspace I = ideal_I(L);
  if (I.dim() != 1 || !(center(L) == I)) return std::nullopt;
  Subspace whole = L.whole();
  Subspace Cp = bracket_subspaces(L, whole, whole) + I;
  if (Cp.dim() != n - 1 || !I.contains(bracket_subspaces(L, Cp, Cp))) return std::nullopt;

  std::vector<Vector> C0;
  Subspace acc = I;
  for (const auto& v : Cp.basis()) {
    if (acc.contains(v)) continue;
    acc = acc.add(v);
    C0.push_back(v);
  }
  const std::size_t k = C0.size();

  Vector h0 = Cp.complement_basis()[0];
  std::optional<Scalar> mu;
  for (const auto& c : C0) {
    auto r = ratio_mod(I, L.bracket(c, h0), c);
    if (!r || r->is_zero() || (mu && !(*r == *mu))) return std::nullopt;
    mu = r;
  }
  Vector h1 = h0 * mu->inverse();

  // Solve for a in span(C0) with [c, h1 + a] = [h1 + a, c] modulo nothing but
  // the Fz-components: b(c, a) = r(c) + s(c) with b the polar form.
  Matrix A(F, k, k);
  Vector rhs(F, k);
  for (std::size_t i = 0; i < k; ++i) {
    Scalar r = along(I, L.bracket(C0[i], h1) - C0[i]);
    Scalar s = along(I, L.bracket(h1, C0[i]) - C0[i]);
    rhs[i] = r + s;
    for (std::size_t j = 0; j < k; ++j) A(j, i) = along(I, L.bracket(C0[i], C0[j]) + L.bracket(C0[j], C0[i]));
  }
  auto x = solve_left(A, rhs);
  if (!x) return std::nullopt;
  Vector h = h1;
  for (std::size_t j = 0; j < k; ++j) h.add_scaled((*x)[j], C0[j]);

  Vector zz = L.bracket(h, h);
  if (zz.is_zero()) return std::nullopt;
  Char2Match m;
  for (const auto& c : C0) m.basis.push_back(L.bracket(c, h));
  m.basis.push_back(zz);
  m.basis.push_back(h);
  Subspace line = span(F, n, {zz});
  for (std::size_t i = 0; i < k; ++i) m.lambdas.push_back(along(line, L.bracket(m.basis[i], m.basis[i])));

  // Square map on L/Fz in the basis c_1..c_k, h: the z-coordinates.
  MultiplicationTable T = in_basis(L, m.basis);
  Matrix Q(F, k + 1, k + 1);
  auto slot = [&](std::size_t i) { return i < k ? i : k + 1; };
  for (std::size_t i = 0; i <= k; ++i)
    for (std::size_t j = 0; j <= k; ++j) Q(i, j) = T(slot(i), slot(j), k);
  Anisotropy an = form_anisotropy(Q, budget);
  std::string lambdas;
  for (const auto& l : m.lambdas) lambdas += (lambdas.empty() ? "" : ", ") + l.to_string() + (is_square(l) ? " (square)" : "");
  out.facts.emplace_back("lambda", lambdas);
  if (!an.decided) {
    out.facts.emplace_back("square_map", "undecided");
    return std::nullopt;
  }
  out.facts.emplace_back("square_map", an.anisotropic ? "anisotropic" : "isotropic");
  if (!an.anisotropic) return std::nullopt;
  return m;
}

std::string lie_shape(const LeibnizAlgebra& Q, std::uint64_t budget) {
  if (Q.dim() == 0) return "zero";
  if (is_abelian(Q)) return "abelian";
  if (almost_abelian_lie_basis(Q)) return "almost_abelian";
  if (k2_basis(Q, budget)) return "k2";
  return "other";
}

}  // namespace

ClassificationResult classify_q_member(const LeibnizAlgebra& L, std::uint64_t budget) {
  ClassificationResult out;
  const Field& F = L.field();
  const Invariants inv = invariants_of(L);
  Subspace I = ideal_I(L);
  out.facts = {
      {"field", F.name()},
      {"dim", std::to_string(inv.dim)},
      {"is_lie", yes_no(inv.is_lie)},
      {"is_symmetric", yes_no(inv.is_symmetric)},
      {"is_nilpotent", yes_no(inv.is_nilpotent)},
      {"is_solvable", yes_no(inv.is_solvable)},
      {"dim_I", std::to_string(inv.dim_I)},
      {"dim_center", std::to_string(inv.dim_center)},
      {"dim_square", std::to_string(inv.dim_square)},
      {"liesation", lie_shape(quotient(L, I).quotient, budget)},
  };
  auto matched = [&](CatalogueCase c, std::vector<Vector> basis) {
    out.verdict = c;
    out.basis = std::move(basis);
    return out;
  };

  if (is_abelian(L)) return matched(CatalogueCase::Abelian, {});
  if (auto b = almost_abelian_lie_basis(L)) return matched(CatalogueCase::AlmostAbelianLie, *b);
  if (inv.is_lie && F.characteristic() == 2 && inv.dim == 3 && inv.dim_square == 3) {
    if (!F.is_finite()) {
      out.facts.emplace_back("k2_search", "unsupported over " + F.name());
    } else if (auto b = k2_basis(L, budget)) {
      return matched(CatalogueCase::K2Like, *b);
    }
  }
  if (auto b = two_dim_solvable_basis(L)) return matched(CatalogueCase::TwoDimSolvable, *b);
  if (auto b = non_lie_almost_abelian_basis(L)) {
    // Members of Q have dim I <= 1, and dim I = 1 is the two-dimensional
    // solvable algebra above. Larger I is a finding, not a catalogue entry.
    if (inv.dim_I <= 1) {
      out.params["dim_I"] = inv.dim_I;
      return matched(CatalogueCase::NonLieAlmostAbelian, *b);
    }
    out.facts.emplace_back("shape", "non_lie_almost_abelian");
  }
  if (auto m = extraspecial_match(L, out, budget)) {
    out.params["dim_E"] = m->dim_E;
    out.params["dim_Z"] = m->dim_Z;
    return matched(CatalogueCase::ExtraspecialSum, m->basis);
  }
  if (auto m = char2_match(L, out, budget)) {
    out.params["dim_C"] = m->lambdas.size();
    out.lambdas = m->lambdas;
    return matched(CatalogueCase::Char2Family, m->basis);
  }
  out.verdict = CatalogueCase::OutsideCatalogue;
  return out;
}

bool replays(const LeibnizAlgebra& L, const ClassificationResult& r, std::uint64_t budget) {
  const Field& F = L.field();
  const std::size_t n = L.dim();
  if (r.verdict == CatalogueCase::OutsideCatalogue) return true;
  if (r.verdict == CatalogueCase::Abelian) return is_abelian(L);
  if (r.basis.size() != n) return false;
  MultiplicationTable t(F, n);
  try {
    t = in_basis(L, r.basis);
  } catch (const Error&) {
    return false;
  }
  const Scalar zero = F.zero(), one = F.one();
  // Expected table for the case, then exact comparison.
  MultiplicationTable expect(F, n);
  switch (r.verdict) {
    case CatalogueCase::AlmostAbelianLie:
      for (std::size_t i = 0; i + 1 < n; ++i) {
        expect(i, n - 1, i) = one;
        expect(n - 1, i, i) = -one;
      }
      break;
    case CatalogueCase::K2Like:
      expect = build(FamilySpec{Family::k2, F}).table();
      break;
    case CatalogueCase::TwoDimSolvable:
      expect = build(FamilySpec{Family::thm45i_solvable, F}).table();
      break;
    case CatalogueCase::NonLieAlmostAbelian:
      for (std::size_t i = 0; i + 1 < n; ++i) expect(i, n - 1, i) = one;
      break;
    case CatalogueCase::ExtraspecialSum: {
      // Only [u_i,u_j] in Fz is allowed; the form must stay anisotropic.
      const std::size_t k = r.params.at("dim_E") - 1;
      Matrix B(F, k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
          B(i, j) = t(i, j, k);
          expect(i, j, k) = t(i, j, k);
        }
      auto an = form_anisotropy(B, budget);
      if (!an.decided || !an.anisotropic) return false;
      break;
    }
    case CatalogueCase::Char2Family: {
      const std::size_t k = r.params.at("dim_C"), z = k, h = k + 1;
      for (std::size_t i = 0; i < k; ++i) {
        expect(i, h, i) = one;
        expect(h, i, i) = one;
        for (std::size_t j = 0; j < k; ++j) expect(i, j, z) = t(i, j, z);
        if (!(t(i, i, z) == r.lambdas[i]) || is_square(r.lambdas[i])) return false;
      }
      expect(h, h, z) = one;
      if (F.characteristic() != 2) return false;
      break;
    }
    default:
      return false;
  }
  (void)zero;
  return t == expect;
}

// ---------------------------------------------------------------------------
// Packed tables

namespace {

std::uint32_t small_q(const Field& F) {
  if (F.kind() != Field::Kind::prime || F.p() > 255)
    throw Error(ErrorCode::UnsupportedField, "packed tables need GF(p) with p < 256, got " + F.name());
  return F.p();
}

}  // namespace

SmallTable SmallTable::from_index(std::uint32_t q, std::size_t n, std::uint64_t index) {
  SmallTable t{q, n, std::vector<std::uint8_t>(n * n * n)};
  for (std::size_t pos = t.c.size(); pos-- > 0;) {
    t.c[pos] = static_cast<std::uint8_t>(index % q);
    index /= q;
  }
  return t;
}

SmallTable SmallTable::from_algebra(const LeibnizAlgebra& L) {
  const std::uint32_t q = small_q(L.field());
  const std::size_t n = L.dim();
  SmallTable t{q, n, std::vector<std::uint8_t>(n * n * n)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) t.c[(i * n + j) * n + k] = static_cast<std::uint8_t>(L.table()(i, j, k).residue());
  return t;
}

std::uint64_t SmallTable::index() const {
  std::uint64_t out = 0;
  for (std::uint8_t d : c) out = out * q + d;
  return out;
}

MultiplicationTable SmallTable::to_table() const {
  Field F = Field::prime(q);
  MultiplicationTable t(F, n);
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i]) t(i / (n * n), (i / n) % n, i % n) = F.element(c[i]);
  return t;
}

bool SmallTable::is_right_leibniz() const {
  auto P = [&](std::size_t i, std::size_t j, std::size_t k) -> std::uint32_t { return c[(i * n + j) * n + k]; };
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        for (std::size_t m = 0; m < n; ++m) {
          // [x,[y,z]] - [[x,y],z] + [[x,z],y], coordinate m
          std::uint64_t lhs = 0, rhs = 0;
          for (std::size_t k = 0; k < n; ++k) {
            lhs += P(y, z, k) * P(x, k, m) + P(x, z, k) * P(k, y, m);
            rhs += P(x, y, k) * P(k, z, m);
          }
          if (lhs % q != rhs % q) return false;
        }
  return true;
}

std::vector<GLElement> general_linear_group(std::uint32_t q, std::size_t n, std::uint64_t budget) {
  if (power_saturating(q, n * n) > budget)
    throw Error(ErrorCode::BudgetExceeded, "GL(" + std::to_string(n) + "," + std::to_string(q) + ") over budget");
  const std::uint64_t vectors = power_saturating(q, n);
  auto digits = [&](std::uint64_t code) {
    std::vector<std::uint8_t> v(n);
    for (std::size_t i = n; i-- > 0;) {
      v[i] = static_cast<std::uint8_t>(code % q);
      code /= q;
    }
    return v;
  };
  auto encode = [&](const std::vector<std::uint8_t>& v) {
    std::uint64_t code = 0;
    for (auto d : v) code = code * q + d;
    return code;
  };

  std::vector<GLElement> out;
  std::vector<std::vector<std::uint8_t>> rows;
  std::function<void(const std::vector<bool>&)> extend = [&](const std::vector<bool>& in_span) {
    if (rows.size() == n) {
      GLElement e;
      for (const auto& r : rows) e.g.insert(e.g.end(), r.begin(), r.end());
      // Gauss-Jordan on [g | I].
      std::vector<std::vector<std::uint32_t>> a(n, std::vector<std::uint32_t>(2 * n, 0));
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = rows[i][j];
        a[i][n + i] = 1;
      }
      for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (a[piv][col] == 0) ++piv;
        std::swap(a[piv], a[col]);
        std::uint32_t inv = poly::inv_mod(a[col][col], q);
        for (auto& v : a[col]) v = poly::mul_mod(v, inv, q);
        for (std::size_t r = 0; r < n; ++r) {
          if (r == col || a[r][col] == 0) continue;
          std::uint32_t f = a[r][col];
          for (std::size_t j = 0; j < 2 * n; ++j) a[r][j] = poly::sub_mod(a[r][j], poly::mul_mod(f, a[col][j], q), q);
        }
      }
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) e.inv.push_back(static_cast<std::uint8_t>(a[i][n + j]));
      out.push_back(std::move(e));
      return;
    }
    for (std::uint64_t code = 1; code < vectors; ++code) {
      if (in_span[code]) continue;
      auto v = digits(code);
      // New span: old span + multiples of v.
      std::vector<bool> next = in_span;
      for (std::uint64_t s = 0; s < vectors; ++s) {
        if (!in_span[s]) continue;
        auto base = digits(s);
        for (std::uint32_t m = 1; m < q; ++m) {
          std::vector<std::uint8_t> w(n);
          for (std::size_t i = 0; i < n; ++i) w[i] = static_cast<std::uint8_t>((base[i] + m * v[i]) % q);
          next[encode(w)] = true;
        }
      }
      rows.push_back(v);
      extend(next);
      rows.pop_back();
    }
  };
  std::vector<bool> origin(vectors, false);
  origin[0] = true;
  extend(origin);
  return out;
}

SmallTable transform(const SmallTable& t, const GLElement& e) {
  const std::size_t n = t.n;
  const std::uint32_t q = t.q;
  SmallTable out{q, n, std::vector<std::uint8_t>(t.c.size())};
  std::array<std::uint32_t, kMaxAmbientDim> w{};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      w.fill(0);
      for (std::size_t a = 0; a < n; ++a) {
        std::uint32_t ga = e.g[i * n + a];
        if (!ga) continue;
        for (std::size_t b = 0; b < n; ++b) {
          std::uint32_t gb = e.g[j * n + b];
          if (!gb) continue;
          const std::uint8_t* p = &t.c[(a * n + b) * n];
          for (std::size_t k = 0; k < n; ++k) w[k] += ga * gb * p[k];
        }
      }
      for (std::size_t m = 0; m < n; ++m) {
        std::uint32_t acc = 0;
        for (std::size_t k = 0; k < n; ++k) acc += (w[k] % q) * e.inv[k * n + m];
        out.c[(i * n + j) * n + m] = static_cast<std::uint8_t>(acc % q);
      }
    }
  return out;
}

SmallTable canonical_form(const SmallTable& t, const std::vector<GLElement>& group) {
  SmallTable best = t;
  for (const auto& g : group) {
    SmallTable u = transform(t, g);
    if (u.c < best.c) best = std::move(u);
  }
  return best;
}

bool gf2_dim3_is_leibniz(std::uint32_t index) {
  // Product [e_i,e_j] is the 3-bit group at digit position 3(3i+j); the most
  // significant bit of a group is the e_1 coefficient.
  static constexpr std::array<std::uint8_t, 8> kReverse{0, 4, 2, 6, 1, 5, 3, 7};
  std::uint8_t P[3][3];
  for (int g = 0; g < 9; ++g) P[g / 3][g % 3] = kReverse[(index >> (24 - 3 * g)) & 7u];
  auto left = [&](int x, std::uint8_t v) {  // [e_x, v]
    std::uint8_t r = 0;
    for (int k = 0; k < 3; ++k)
      if (v >> k & 1) r ^= P[x][k];
    return r;
  };
  auto right = [&](std::uint8_t v, int z) {  // [v, e_z]
    std::uint8_t r = 0;
    for (int k = 0; k < 3; ++k)
      if (v >> k & 1) r ^= P[k][z];
    return r;
  };
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      for (int z = 0; z < 3; ++z)
        if (left(x, P[y][z]) != (right(P[x][y], z) ^ right(P[x][z], y))) return false;
  return true;
}

namespace {

std::vector<SmallTable> scan_range(std::uint32_t q, std::size_t n, std::uint64_t begin, std::uint64_t end) {
  std::vector<SmallTable> out;
  const bool fast = q == 2 && n == 3;
  for (std::uint64_t idx = begin; idx < end; ++idx) {
    if (fast) {
      if (gf2_dim3_is_leibniz(static_cast<std::uint32_t>(idx))) out.push_back(SmallTable::from_index(q, n, idx));
    } else {
      SmallTable t = SmallTable::from_index(q, n, idx);
      if (t.is_right_leibniz()) out.push_back(std::move(t));
    }
  }
  return out;
}

std::vector<SmallTable> scan_all(std::uint32_t q, std::size_t n, std::uint64_t total, unsigned workers) {
  workers = std::max(1u, workers);
  std::vector<std::vector<SmallTable>> parts(workers);
  std::vector<std::thread> threads;
  const std::uint64_t chunk = (total + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    std::uint64_t b = std::min(total, w * chunk), e = std::min(total, b + chunk);
    threads.emplace_back([&, w, b, e] { parts[w] = scan_range(q, n, b, e); });
  }
  for (auto& t : threads) t.join();
  std::vector<SmallTable> out;
  for (auto& p : parts) out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
  return out;
}

}  // namespace

std::vector<SmallTable> all_leibniz_tables(std::uint32_t q, std::size_t n, std::uint64_t table_budget) {
  std::uint64_t total = power_saturating(q, n * n * n);
  if (total > table_budget) throw Error(ErrorCode::BudgetExceeded, std::to_string(total) + " tables over budget");
  return scan_all(q, n, total, 1);
}

// ---------------------------------------------------------------------------
// Isomorphism

namespace {

const std::vector<GLElement>& cached_group(std::uint32_t q, std::size_t n, std::uint64_t budget) {
  static std::mutex mutex;
  static std::map<std::pair<std::uint32_t, std::size_t>, std::vector<GLElement>> cache;
  std::lock_guard lock(mutex);
  auto key = std::pair{q, n};
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, general_linear_group(q, n, budget)).first;
  return it->second;
}

}  // namespace

std::optional<Matrix> find_isomorphism(const LeibnizAlgebra& L1, const LeibnizAlgebra& L2, std::uint64_t budget) {
  if (!(L1.field() == L2.field())) throw Error(ErrorCode::MixedFields, "algebras over different fields");
  const std::uint32_t q = small_q(L1.field());
  const std::size_t n = L1.dim();
  if (n != L2.dim() || !(invariants_of(L1) == invariants_of(L2))) return std::nullopt;
  if (power_saturating(q, n * n) > budget)
    throw Error(ErrorCode::BudgetExceeded, "GL(" + std::to_string(n) + "," + std::to_string(q) + ") over budget");
  SmallTable a = SmallTable::from_algebra(L1), b = SmallTable::from_algebra(L2);
  for (const auto& g : cached_group(q, n, budget)) {
    if (!(transform(a, g) == b)) continue;
    Matrix m(L1.field(), n, n);
    for (std::size_t i = 0; i < n * n; ++i) m(i / n, i % n) = L1.field().element(g.g[i]);
    return m;
  }
  return std::nullopt;
}

bool are_isomorphic(const LeibnizAlgebra& L1, const LeibnizAlgebra& L2, std::uint64_t budget) {
  return find_isomorphism(L1, L2, budget).has_value();
}

// ---------------------------------------------------------------------------
// Lemma harness

void HarnessReport::merge(const HarnessReport& other) {
  algebras += other.algebras;
  for (const auto& [name, t] : other.clauses) {
    auto& mine = clauses[name];
    mine.applicable += t.applicable;
    mine.passed += t.passed;
    mine.failed += t.failed;
  }
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
}

HarnessReport lemma_harness(const NamedAlgebra& A, std::uint64_t budget) {
  const LeibnizAlgebra& L = A.algebra;
  HarnessReport report;
  report.algebras = 1;
  auto record = [&](const ClauseResult& c, const std::string& subject) {
    auto& t = report.clauses[c.clause];
    if (!c.applicable) return;
    ++t.applicable;
    if (c.passed) {
      ++t.passed;
    } else {
      ++t.failed;
      report.failures.push_back({A.name, subject, c.clause, c.detail});
    }
  };

  SubalgebraLattice lattice(L, budget);
  const std::size_t count = lattice.subalgebras().size();
  const std::size_t top = *lattice.index_of(L.whole());
  bool in_Q = true;
  for (std::size_t i = 0; i < count; ++i) {
    if (!lattice.is_quasi_ideal_of(i, top)) in_Q = false;
    auto chain = lattice.shortest_chain(i, L.dim());
    if (!chain || chain->steps() == 0) continue;
    std::string subject = "H=" + lattice.subalgebras()[i].to_string() + ", m=" + std::to_string(chain->steps());
    for (const auto& c : lemma_suite(L, *chain, budget).clauses) record(c, subject);
  }

  if (in_Q) {
    for (const auto& J : lattice.subalgebras()) {
      if (!is_ideal(L, J)) continue;
      QuotientAlgebra Q = quotient(L, J);
      QMembership m = in_class_Q(Q.quotient, budget, false);
      record({"quotients_stay_in_Q", true, m.in_Q, m.in_Q ? "" : "fails on " + m.failing->to_string()}, "L/" + J.to_string());
    }
    Subspace I = ideal_I(L);
    if (I.dim() == 1) {
      bool hypothesis = true;
      for_each_vector(
          L.field(), L.dim(),
          [&](const Vector& x) {
            if (hypothesis && !I.contains(x) && L.bracket(x, x).is_zero()) hypothesis = false;
          },
          budget);
      record({"square_ideal_is_central", hypothesis, center(L).contains(I), ""}, "I=" + I.to_string());
    }
  }

  EngelResult engel = is_engel_algebra(L, budget);
  record({"engel_implies_nilpotent", engel.holds, is_nilpotent(L), ""}, "L");
  return report;
}

HarnessReport lemma_harness(const std::vector<NamedAlgebra>& corpus, std::uint64_t budget) {
  HarnessReport report;
  for (const auto& A : corpus) report.merge(lemma_harness(A, budget));
  return report;
}

// ---------------------------------------------------------------------------
// Sweeps

std::size_t CensusReport::non_lie_classes() const {
  return static_cast<std::size_t>(std::count_if(classes.begin(), classes.end(), [](const CensusClass& c) { return !c.invariants.is_lie; }));
}

namespace {

struct ClassAnalysis {
  CensusClass cls;
  HarnessReport lemmas;
};

ClassAnalysis analyze(const SmallTable& rep, std::uint64_t orbit, std::size_t position, const SweepOptions& opt) {
  ClassAnalysis out;
  out.cls.representative = rep;
  out.cls.orbit_size = orbit;
  LeibnizAlgebra L(rep.to_table());
  out.cls.invariants = invariants_of(L);
  QMembership m = in_class_Q(L, opt.budget, true);
  out.cls.in_Q = m.in_Q;
  out.cls.subalgebra_count = m.subalgebra_count;
  out.cls.quasi_ideal_count = m.quasi_ideal_count;
  out.cls.oracle_mismatches = m.oracle_mismatches;
  out.cls.classification = classify_q_member(L, opt.budget);
  if (opt.run_lemmas) out.lemmas = lemma_harness(NamedAlgebra{"class " + std::to_string(position), L}, opt.budget);
  return out;
}

}  // namespace

CensusReport sweep_tables(const Field& field, std::size_t dim, const SweepOptions& opt) {
  const std::uint32_t q = small_q(field);
  if (dim == 0 || dim > kMaxAmbientDim) throw Error(ErrorCode::BadDimension, "census dimension out of range");
  CensusReport report{field, dim, opt.exhaustive, opt.exhaustive ? 0 : opt.samples, opt.seed};
  const auto& group = cached_group(q, dim, opt.budget);

  std::vector<std::pair<SmallTable, std::uint64_t>> reps;
  if (opt.exhaustive) {
    const std::uint64_t total = power_saturating(q, dim * dim * dim);
    if (total > opt.table_budget)
      throw Error(ErrorCode::BudgetExceeded, std::to_string(total) + " tables over budget; use sample mode");
    std::vector<SmallTable> valid = scan_all(q, dim, total, opt.workers);
    report.scanned = total;
    report.valid = valid.size();
    // Ascending scan: the first unvisited table is its orbit's least member.
    std::vector<bool> visited(valid.size(), false);
    auto position = [&](const SmallTable& t) {
      return static_cast<std::size_t>(std::lower_bound(valid.begin(), valid.end(), t) - valid.begin());
    };
    for (std::size_t i = 0; i < valid.size(); ++i) {
      if (visited[i]) continue;
      std::uint64_t orbit = 0;
      for (const auto& g : group) {
        std::size_t p = position(transform(valid[i], g));
        if (!visited[p]) {
          visited[p] = true;
          ++orbit;
        }
      }
      reps.emplace_back(valid[i], orbit);
    }
  } else {
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<std::uint32_t> digit(0, q - 1);
    std::map<SmallTable, std::uint64_t> hits;
    for (std::uint64_t s = 0; s < opt.samples; ++s) {
      SmallTable t{q, dim, std::vector<std::uint8_t>(dim * dim * dim)};
      for (auto& d : t.c) d = static_cast<std::uint8_t>(digit(rng));
      if (!t.is_right_leibniz()) continue;
      ++report.valid;
      ++hits[canonical_form(t, group)];
    }
    report.scanned = opt.samples;
    for (auto& [t, n] : hits) reps.emplace_back(t, n);
  }

  std::vector<ClassAnalysis> results(reps.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < reps.size();) results[i] = analyze(reps[i].first, reps[i].second, i, opt);
  };
  std::vector<std::thread> threads;
  for (unsigned w = 1; w < std::max(1u, opt.workers); ++w) threads.emplace_back(work);
  work();
  for (auto& t : threads) t.join();

  for (std::size_t i = 0; i < results.size(); ++i) {
    CensusClass& c = results[i].cls;
    report.oracle_mismatches += c.oracle_mismatches;
    if (c.in_Q) {
      ++report.q_dim_I_distribution[c.invariants.dim_I];
      if (c.classification.verdict == CatalogueCase::OutsideCatalogue) report.discrepancies.push_back(i);
    }
    report.lemmas.merge(results[i].lemmas);
    report.classes.push_back(std::move(c));
  }
  return report;
}

}  // namespace leibniz
