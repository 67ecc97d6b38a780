#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "leibniz/fields.hpp"

namespace leibniz {

/// Default cap on exhaustive enumerations (points, subspaces, group elements).
inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 22;
/// Largest ambient dimension any enumeration accepts.
inline constexpr std::size_t kMaxAmbientDim = 8;

class Vector {
 public:
  Vector(const Field& field, std::size_t dim) : field_(field), entries_(dim, field.zero()) {}
  Vector(const Field& field, std::vector<Scalar> entries);
  static Vector unit(const Field& field, std::size_t dim, std::size_t index);

  const Field& field() const noexcept { return field_; }
  std::size_t size() const noexcept { return entries_.size(); }
  const Scalar& operator[](std::size_t i) const { return entries_[i]; }
  Scalar& operator[](std::size_t i) { return entries_[i]; }
  const std::vector<Scalar>& entries() const noexcept { return entries_; }

  bool is_zero() const;
  /// Index of the first nonzero entry, or size() for the zero vector.
  std::size_t leading_index() const;

  Vector operator+(const Vector& other) const;
  Vector operator-(const Vector& other) const;
  Vector operator-() const;
  Vector operator*(const Scalar& c) const;
  Vector& operator+=(const Vector& other);
  /// this += c * other
  void add_scaled(const Scalar& c, const Vector& other);

  friend bool operator==(const Vector& a, const Vector& b) { return a.field_ == b.field_ && a.entries_ == b.entries_; }

  std::string to_string() const;

 private:
  void require_compatible(const Vector& other) const;

  Field field_;
  std::vector<Scalar> entries_;
};

/// Dense row-major matrix. Linear maps act on row vectors: v -> v * M.
class Matrix {
 public:
  Matrix(const Field& field, std::size_t rows, std::size_t cols);
  static Matrix from_rows(const Field& field, std::size_t cols, std::span<const Vector> rows);
  static Matrix identity(const Field& field, std::size_t n);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Matrix operator*(const Matrix& other) const;
  /// Row vector times matrix.
  friend Vector operator*(const Vector& v, const Matrix& m);
  bool is_zero() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

/// A subspace of F^n held as its reduced row-echelon basis, so equality of
/// subspaces is equality of bases.
class Subspace {
 public:
  static Subspace zero(const Field& field, std::size_t ambient_dim);
  static Subspace full(const Field& field, std::size_t ambient_dim);

  const Field& field() const noexcept { return field_; }
  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<Vector>& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  /// Columns without a pivot; the unit vectors there span a complement.
  std::vector<std::size_t> free_columns() const;
  std::vector<Vector> complement_basis() const;

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  /// v with every pivot coordinate eliminated; zero iff v is a member.
  Vector reduce(const Vector& v) const;
  /// Coefficients of v in basis(), if v is a member.
  std::optional<std::vector<Scalar>> coordinates(const Vector& v) const;

  Subspace operator+(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  Subspace add(const Vector& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.field_ == b.field_ && a.ambient_dim_ == b.ambient_dim_ && a.basis_ == b.basis_;
  }

  std::string to_string() const;

 private:
  friend Subspace echelonize(const Field&, std::size_t, std::span<const Vector>);
  Subspace(const Field& field, std::size_t ambient_dim) : field_(field), ambient_dim_(ambient_dim) {}
  void require_compatible(const Subspace& other) const;

  Field field_;
  std::size_t ambient_dim_;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

/// Span of `vectors` in canonical (reduced row-echelon) form.
Subspace echelonize(const Field& field, std::size_t ambient_dim, std::span<const Vector> vectors);
inline Subspace span(const Field& field, std::size_t ambient_dim, std::initializer_list<Vector> vectors) {
  return echelonize(field, ambient_dim, std::span<const Vector>(vectors.begin(), vectors.size()));
}

/// {x : x * M = 0}, a subspace of F^rows.
Subspace left_kernel(const Matrix& m);

std::optional<Matrix> inverse(const Matrix& m);
/// Some x with x * A = b, if the system is consistent.
std::optional<Vector> solve_left(const Matrix& a, const Vector& b);

/// Throws BudgetExceeded when count > budget, UnsupportedField for infinite fields.
void require_enumerable(const Field& field, std::size_t dim, std::uint64_t budget, const std::string& what);
/// q^dim, saturating at UINT64_MAX.
std::uint64_t power_saturating(std::uint64_t q, std::size_t dim);

/// Visits every vector of F^n (F finite) in counting order.
void for_each_vector(const Field& field, std::size_t n, const std::function<void(const Vector&)>& visit,
                     std::uint64_t budget = kDefaultBudget);
/// Visits one representative (first nonzero coordinate 1) of each 1-dim subspace.
void for_each_projective_point(const Field& field, std::size_t n, const std::function<void(const Vector&)>& visit,
                               std::uint64_t budget = kDefaultBudget);
/// Visits each subspace of F^n exactly once, by dimension, then pivot pattern,
/// then free entries. `only_dim` restricts to one dimension.
void for_each_subspace(const Field& field, std::size_t n, std::optional<std::size_t> only_dim,
                       const std::function<void(const Subspace&)>& visit, std::uint64_t budget = kDefaultBudget);
std::vector<Subspace> enumerate_subspaces(const Field& field, std::size_t n, std::optional<std::size_t> only_dim = std::nullopt,
                                          std::uint64_t budget = kDefaultBudget);

}  // namespace leibniz
