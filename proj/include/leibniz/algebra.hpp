#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "leibniz/fields.hpp"
#include "leibniz/linalg.hpp"

namespace leibniz {

/// Raw structure constants [e_i, e_j] = sum_k c(i, j, k) e_k. No identity is
/// promised; wrap in LeibnizAlgebra to get one.
class MultiplicationTable {
 public:
  MultiplicationTable(const Field& field, std::size_t dim, std::vector<std::string> basis_names = {});

  const Field& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return dim_; }
  const std::vector<std::string>& basis_names() const noexcept { return names_; }
  void set_basis_names(std::vector<std::string> names);

  const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * dim_ + j) * dim_ + k]; }
  Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * dim_ + j) * dim_ + k]; }
  /// Sets [e_i, e_j] = value.
  void set_product(std::size_t i, std::size_t j, const Vector& value);
  Vector product(std::size_t i, std::size_t j) const;
  /// Bilinear extension of the table.
  Vector bracket(const Vector& u, const Vector& v) const;

  friend bool operator==(const MultiplicationTable& a, const MultiplicationTable& b) {
    return a.field_ == b.field_ && a.dim_ == b.dim_ && a.c_ == b.c_;
  }

 private:
  Field field_;
  std::size_t dim_;
  std::vector<std::string> names_;
  std::vector<Scalar> c_;
};

enum class Identity {
  right,  ///< [x,[y,z]] = [[x,y],z] - [[x,z],y]
  left,   ///< [x,[y,z]] = [[x,y],z] + [y,[x,z]]
  lie,    ///< right identity plus [x,x] = 0
};

struct IdentityCheck {
  bool holds = true;
  /// First basis triple (i, j, k) on which the identity fails. For the Lie
  /// mode a failing square [e_i,e_i] or antisymmetry is reported as (i, j, j).
  std::optional<std::array<std::size_t, 3>> witness;
};

/// Checks the identity on all basis triples; trilinearity makes that enough.
IdentityCheck validate(const MultiplicationTable& table, Identity mode);

/// A multiplication table verified to satisfy the right Leibniz identity.
class LeibnizAlgebra {
 public:
  /// Throws NotLeibniz with the failing triple when the identity fails.
  explicit LeibnizAlgebra(MultiplicationTable table);

  const MultiplicationTable& table() const noexcept { return table_; }
  const Field& field() const noexcept { return table_.field(); }
  std::size_t dim() const noexcept { return table_.dim(); }
  const std::vector<std::string>& basis_names() const noexcept { return table_.basis_names(); }

  Vector basis(std::size_t i) const { return Vector::unit(field(), dim(), i); }
  const Vector& product(std::size_t i, std::size_t j) const { return products_[i * dim() + j]; }
  Vector bracket(const Vector& u, const Vector& v) const;
  Vector zero_vector() const { return Vector(field(), dim()); }
  Subspace zero_subspace() const { return Subspace::zero(field(), dim()); }
  Subspace whole() const { return Subspace::full(field(), dim()); }

  /// Row-vector matrix of R_x : y -> [y, x] (right) or L_x : y -> [x, y] (left).
  enum class Side { right, left };
  Matrix adjoint(const Vector& x, Side side) const;

  /// Human-readable element, e.g. "b+2*a".
  std::string format(const Vector& v) const;

 private:
  MultiplicationTable table_;
  std::vector<Vector> products_;
};

/// span{[a, b] : a in A, b in B}.
Subspace bracket_subspaces(const LeibnizAlgebra& L, const Subspace& A, const Subspace& B);
bool is_subalgebra(const LeibnizAlgebra& L, const Subspace& S);
bool is_ideal(const LeibnizAlgebra& L, const Subspace& S);

/// span{x^2 : x in L}, from the polarized set [e_i,e_i], [e_i,e_j]+[e_j,e_i].
Subspace ideal_I(const LeibnizAlgebra& L);
Subspace center(const LeibnizAlgebra& L);
/// Least subalgebra containing S.
Subspace subalgebra_closure(const LeibnizAlgebra& L, const Subspace& S);

enum class SeriesKind {
  lower_central,    ///< H^1 = H, H^{k+1} = [H^k, H]
  derived,          ///< H^(1) = H, H^(k+1) = [H^(k), H^(k)]
  omega_of_square,  ///< lower central series of H^2: (H^2)^1 = H^2, (H^2)^{k+1} = [(H^2)^k, H^2]
};

/// Descending chain up to and including its first repeated (stable) term.
/// H must be a subalgebra (NotASubalgebra otherwise).
std::vector<Subspace> series(const LeibnizAlgebra& L, const Subspace& H, SeriesKind kind);
/// The stable term of the chain.
Subspace series_limit(const LeibnizAlgebra& L, const Subspace& H, SeriesKind kind);

bool is_lie(const LeibnizAlgebra& L);
bool is_symmetric(const LeibnizAlgebra& L);
bool is_abelian(const LeibnizAlgebra& L);
bool is_nilpotent(const LeibnizAlgebra& L);
bool is_solvable(const LeibnizAlgebra& L);

struct QuotientAlgebra {
  LeibnizAlgebra parent;
  Subspace modulus;
  LeibnizAlgebra quotient;
  /// n x m matrix: v * projection gives coordinates of v + J in the quotient
  /// basis (the images of the unit vectors at the modulus's free columns).
  Matrix projection;

  Vector project(const Vector& v) const { return v * projection; }
  /// Preimage of a quotient subspace, containing the modulus.
  Subspace lift(const Subspace& S) const;
};

/// Throws NotAnIdeal unless [J,L] + [L,J] is inside J.
QuotientAlgebra quotient(const LeibnizAlgebra& L, const Subspace& J);

/// L restricted to a subalgebra S, in the coordinates of S's echelon basis.
LeibnizAlgebra restrict_to(const LeibnizAlgebra& L, const Subspace& S);

}  // namespace leibniz
