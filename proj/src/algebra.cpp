#include "leibniz/algebra.hpp"

#include <algorithm>

namespace leibniz {

MultiplicationTable::MultiplicationTable(const Field& field, std::size_t dim, std::vector<std::string> basis_names)
    : field_(field), dim_(dim), c_(dim * dim * dim, field.zero()) {
  if (basis_names.empty()) {
    for (std::size_t i = 0; i < dim; ++i) basis_names.push_back("e" + std::to_string(i + 1));
  }
  set_basis_names(std::move(basis_names));
}

void MultiplicationTable::set_basis_names(std::vector<std::string> names) {
  if (names.size() != dim_) throw Error(ErrorCode::DimensionMismatch, "expected " + std::to_string(dim_) + " basis names");
  names_ = std::move(names);
}

void MultiplicationTable::set_product(std::size_t i, std::size_t j, const Vector& value) {
  if (value.size() != dim_) throw Error(ErrorCode::DimensionMismatch, "product vector length");
  if (!(value.field() == field_)) throw Error(ErrorCode::MixedFields, "product vector field");
  for (std::size_t k = 0; k < dim_; ++k) (*this)(i, j, k) = value[k];
}

Vector MultiplicationTable::product(std::size_t i, std::size_t j) const {
  Vector v(field_, dim_);
  for (std::size_t k = 0; k < dim_; ++k) v[k] = (*this)(i, j, k);
  return v;
}

Vector MultiplicationTable::bracket(const Vector& u, const Vector& v) const {
  if (u.size() != dim_ || v.size() != dim_) throw Error(ErrorCode::DimensionMismatch, "bracket operand length");
  if (!(u.field() == field_) || !(v.field() == field_)) throw Error(ErrorCode::MixedFields, "bracket operand field");
  Vector out(field_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (v[j].is_zero()) continue;
      Scalar coef = u[i] * v[j];
      for (std::size_t k = 0; k < dim_; ++k) {
        const Scalar& c = (*this)(i, j, k);
        if (!c.is_zero()) out[k] += coef * c;
      }
    }
  }
  return out;
}

IdentityCheck validate(const MultiplicationTable& table, Identity mode) {
  const std::size_t n = table.dim();
  const Field& field = table.field();
  if (mode == Identity::lie) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        Vector sym = table.product(i, j) + table.product(j, i);
        bool bad = (i == j) ? !table.product(i, i).is_zero() : !sym.is_zero();
        if (bad) return {false, std::array<std::size_t, 3>{i, j, j}};
      }
  }
  std::vector<Vector> products;
  products.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) products.push_back(table.product(i, j));
  auto basis = [&](std::size_t i) { return Vector::unit(field, n, i); };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Vector& xy = products[i * n + j];
        Vector lhs = table.bracket(basis(i), products[j * n + k]);
        Vector rhs = table.bracket(xy, basis(k));
        if (mode == Identity::left) rhs += table.bracket(basis(j), products[i * n + k]);
        else rhs = rhs - table.bracket(products[i * n + k], basis(j));
        if (!(lhs == rhs)) return {false, std::array<std::size_t, 3>{i, j, k}};
      }
  return {};
}

// ---------------------------------------------------------------------------

LeibnizAlgebra::LeibnizAlgebra(MultiplicationTable table) : table_(std::move(table)) {
  IdentityCheck check = validate(table_, Identity::right);
  if (!check.holds) {
    const auto& w = *check.witness;
    const auto& names = table_.basis_names();
    throw Error(ErrorCode::NotLeibniz,
                "right Leibniz identity fails on (" + names[w[0]] + ", " + names[w[1]] + ", " + names[w[2]] + ")");
  }
  products_.reserve(dim() * dim());
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j) products_.push_back(table_.product(i, j));
}

Vector LeibnizAlgebra::bracket(const Vector& u, const Vector& v) const {
  if (u.size() != dim() || v.size() != dim()) throw Error(ErrorCode::DimensionMismatch, "bracket operand length");
  Vector out = zero_vector();
  for (std::size_t i = 0; i < dim(); ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (v[j].is_zero()) continue;
      out.add_scaled(u[i] * v[j], product(i, j));
    }
  }
  return out;
}

Matrix LeibnizAlgebra::adjoint(const Vector& x, Side side) const {
  Matrix m(field(), dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    Vector image = side == Side::right ? bracket(basis(i), x) : bracket(x, basis(i));
    for (std::size_t j = 0; j < dim(); ++j) m(i, j) = image[j];
  }
  return m;
}

std::string LeibnizAlgebra::format(const Vector& v) const {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    std::string coef = v[i].to_string();
    bool negative = coef.front() == '-' && coef.find_first_of("+-/", 1) == std::string::npos;
    if (!out.empty() && !negative) out += "+";
    if (v[i].is_one()) {
      out += basis_names()[i];
    } else if (coef == "-1") {
      out += "-" + basis_names()[i];
    } else {
      bool compound = coef.find_first_of("+/", 0) != std::string::npos || coef.find('-', 1) != std::string::npos;
      out += (compound ? "(" + coef + ")" : coef) + "*" + basis_names()[i];
    }
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------

Subspace bracket_subspaces(const LeibnizAlgebra& L, const Subspace& A, const Subspace& B) {
  if (A.ambient_dim() != L.dim() || B.ambient_dim() != L.dim()) throw Error(ErrorCode::DimensionMismatch, "subspace not in L");
  std::vector<Vector> products;
  for (const auto& a : A.basis())
    for (const auto& b : B.basis()) products.push_back(L.bracket(a, b));
  return echelonize(L.field(), L.dim(), products);
}

bool is_subalgebra(const LeibnizAlgebra& L, const Subspace& S) {
  for (const auto& a : S.basis())
    for (const auto& b : S.basis())
      if (!S.contains(L.bracket(a, b))) return false;
  return true;
}

bool is_ideal(const LeibnizAlgebra& L, const Subspace& S) {
  for (const auto& s : S.basis())
    for (std::size_t j = 0; j < L.dim(); ++j) {
      Vector e = L.basis(j);
      if (!S.contains(L.bracket(s, e)) || !S.contains(L.bracket(e, s))) return false;
    }
  return true;
}

Subspace ideal_I(const LeibnizAlgebra& L) {
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < L.dim(); ++i) {
    gens.push_back(L.product(i, i));
    for (std::size_t j = i + 1; j < L.dim(); ++j) gens.push_back(L.product(i, j) + L.product(j, i));
  }
  return echelonize(L.field(), L.dim(), gens);
}

Subspace center(const LeibnizAlgebra& L) {
  const std::size_t n = L.dim();
  Matrix m(L.field(), n, 2 * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        m(i, j * n + k) = L.product(i, j)[k];
        m(i, n * n + j * n + k) = L.product(j, i)[k];
      }
  return left_kernel(m);
}

Subspace subalgebra_closure(const LeibnizAlgebra& L, const Subspace& S) {
  Subspace current = S;
  while (true) {
    Subspace next = current + bracket_subspaces(L, current, current);
    if (next.dim() == current.dim()) return current;
    current = std::move(next);
  }
}

std::vector<Subspace> series(const LeibnizAlgebra& L, const Subspace& H, SeriesKind kind) {
  if (!is_subalgebra(L, H)) throw Error(ErrorCode::NotASubalgebra, "series of " + H.to_string());
  std::vector<Subspace> chain;
  Subspace anchor = H;  // the fixed right factor of the lower central series
  Subspace term = H;
  if (kind == SeriesKind::omega_of_square) {
    anchor = bracket_subspaces(L, H, H);
    term = anchor;
  }
  chain.push_back(term);
  while (true) {
    Subspace next = kind == SeriesKind::derived ? bracket_subspaces(L, term, term) : bracket_subspaces(L, term, anchor);
    if (next.dim() == term.dim()) return chain;
    chain.push_back(next);
    term = std::move(next);
  }
}

Subspace series_limit(const LeibnizAlgebra& L, const Subspace& H, SeriesKind kind) { return series(L, H, kind).back(); }

bool is_lie(const LeibnizAlgebra& L) { return validate(L.table(), Identity::lie).holds; }
bool is_symmetric(const LeibnizAlgebra& L) { return validate(L.table(), Identity::left).holds; }

bool is_abelian(const LeibnizAlgebra& L) {
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = 0; j < L.dim(); ++j)
      if (!L.product(i, j).is_zero()) return false;
  return true;
}

bool is_nilpotent(const LeibnizAlgebra& L) { return series_limit(L, L.whole(), SeriesKind::lower_central).dim() == 0; }
bool is_solvable(const LeibnizAlgebra& L) { return series_limit(L, L.whole(), SeriesKind::derived).dim() == 0; }

// ---------------------------------------------------------------------------

Subspace QuotientAlgebra::lift(const Subspace& S) const {
  std::vector<std::size_t> free = modulus.free_columns();
  std::vector<Vector> gens = modulus.basis();
  for (const auto& s : S.basis()) {
    Vector v = parent.zero_vector();
    for (std::size_t a = 0; a < free.size(); ++a) v[free[a]] = s[a];
    gens.push_back(std::move(v));
  }
  return echelonize(parent.field(), parent.dim(), gens);
}

QuotientAlgebra quotient(const LeibnizAlgebra& L, const Subspace& J) {
  if (J.ambient_dim() != L.dim()) throw Error(ErrorCode::DimensionMismatch, "modulus not in L");
  if (!is_ideal(L, J)) throw Error(ErrorCode::NotAnIdeal, J.to_string() + " is not an ideal");
  const std::vector<std::size_t> free = J.free_columns();
  const std::size_t m = free.size();
  Matrix projection(L.field(), L.dim(), m);
  for (std::size_t i = 0; i < L.dim(); ++i) {
    Vector r = J.reduce(L.basis(i));
    for (std::size_t a = 0; a < m; ++a) projection(i, a) = r[free[a]];
  }
  std::vector<std::string> names;
  for (std::size_t f : free) names.push_back(L.basis_names()[f]);
  MultiplicationTable table(L.field(), m, names);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) table.set_product(a, b, L.product(free[a], free[b]) * projection);
  return QuotientAlgebra{L, J, LeibnizAlgebra(std::move(table)), std::move(projection)};
}

LeibnizAlgebra restrict_to(const LeibnizAlgebra& L, const Subspace& S) {
  if (!is_subalgebra(L, S)) throw Error(ErrorCode::NotASubalgebra, S.to_string());
  const std::size_t d = S.dim();
  std::vector<std::string> names;
  for (std::size_t a = 0; a < d; ++a) names.push_back(L.format(S.basis()[a]));
  MultiplicationTable table(L.field(), d, names);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      auto coords = S.coordinates(L.bracket(S.basis()[a], S.basis()[b]));
      table.set_product(a, b, Vector(L.field(), *coords));
    }
  return LeibnizAlgebra(std::move(table));
}

}  // namespace leibniz
