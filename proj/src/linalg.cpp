#include "leibniz/linalg.hpp"

#include <algorithm>
#include <limits>

namespace leibniz {

Vector::Vector(const Field& field, std::vector<Scalar> entries) : field_(field), entries_(std::move(entries)) {
  for (const auto& e : entries_)
    if (!(e.field() == field_)) throw Error(ErrorCode::MixedFields, "vector entry in " + e.field().name() + ", expected " + field_.name());
}

Vector Vector::unit(const Field& field, std::size_t dim, std::size_t index) {
  Vector v(field, dim);
  v[index] = field.one();
  return v;
}

bool Vector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Scalar& s) { return s.is_zero(); });
}

std::size_t Vector::leading_index() const {
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (!entries_[i].is_zero()) return i;
  return entries_.size();
}

void Vector::require_compatible(const Vector& other) const {
  if (!(field_ == other.field_)) throw Error(ErrorCode::MixedFields, field_.name() + " vs " + other.field_.name());
  if (size() != other.size())
    throw Error(ErrorCode::DimensionMismatch, "vector lengths " + std::to_string(size()) + " and " + std::to_string(other.size()));
}

Vector Vector::operator+(const Vector& other) const {
  Vector r = *this;
  r += other;
  return r;
}

Vector Vector::operator-(const Vector& other) const {
  require_compatible(other);
  Vector r = *this;
  for (std::size_t i = 0; i < size(); ++i) r.entries_[i] = entries_[i] - other.entries_[i];
  return r;
}

Vector Vector::operator-() const {
  Vector r = *this;
  for (auto& e : r.entries_) e = -e;
  return r;
}

Vector Vector::operator*(const Scalar& c) const {
  Vector r = *this;
  for (auto& e : r.entries_) e = e * c;
  return r;
}

Vector& Vector::operator+=(const Vector& other) {
  require_compatible(other);
  for (std::size_t i = 0; i < size(); ++i) entries_[i] = entries_[i] + other.entries_[i];
  return *this;
}

void Vector::add_scaled(const Scalar& c, const Vector& other) {
  require_compatible(other);
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < size(); ++i)
    if (!other.entries_[i].is_zero()) entries_[i] = entries_[i] + c * other.entries_[i];
}

std::string Vector::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ", ";
    out += entries_[i].to_string();
  }
  return out + ")";
}

// ---------------------------------------------------------------------------

Matrix::Matrix(const Field& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

Matrix Matrix::from_rows(const Field& field, std::size_t cols, std::span<const Vector> rows) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (!(rows[r].field() == field)) throw Error(ErrorCode::MixedFields, "matrix row field");
    if (rows[r].size() != cols) throw Error(ErrorCode::DimensionMismatch, "matrix row length");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::identity(const Field& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(field_, std::vector<Scalar>(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                                            data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)));
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (cols_ != other.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product shapes");
  if (!(field_ == other.field_)) throw Error(ErrorCode::MixedFields, "matrix product fields");
  Matrix out(field_, rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) += a * other(k, j);
    }
  return out;
}

Vector operator*(const Vector& v, const Matrix& m) {
  if (v.size() != m.rows()) throw Error(ErrorCode::DimensionMismatch, "vector-matrix product shapes");
  Vector out(m.field(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (v[i].is_zero()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) out[j] += v[i] * m(i, j);
  }
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

// ---------------------------------------------------------------------------

Subspace echelonize(const Field& field, std::size_t ambient_dim, std::span<const Vector> vectors) {
  std::vector<Vector> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) {
    if (!(v.field() == field)) throw Error(ErrorCode::MixedFields, v.field().name() + " vector in " + field.name() + " space");
    if (v.size() != ambient_dim)
      throw Error(ErrorCode::DimensionMismatch, "vector of length " + std::to_string(v.size()) + " in dimension " + std::to_string(ambient_dim));
    if (!v.is_zero()) rows.push_back(v);
  }
  Subspace out(field, ambient_dim);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < ambient_dim && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    if (!rows[rank][col].is_one()) rows[rank] = rows[rank] * rows[rank][col].inverse();
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col].is_zero()) continue;
      rows[r].add_scaled(-rows[r][col], rows[rank]);
    }
    out.pivots_.push_back(col);
    ++rank;
  }
  rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(rank), rows.end());
  out.basis_ = std::move(rows);
  return out;
}

Subspace Subspace::zero(const Field& field, std::size_t ambient_dim) { return Subspace(field, ambient_dim); }

Subspace Subspace::full(const Field& field, std::size_t ambient_dim) {
  Subspace s(field, ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    s.basis_.push_back(Vector::unit(field, ambient_dim, i));
    s.pivots_.push_back(i);
  }
  return s;
}

std::vector<std::size_t> Subspace::free_columns() const {
  std::vector<std::size_t> out;
  std::size_t next = 0;
  for (std::size_t c = 0; c < ambient_dim_; ++c) {
    if (next < pivots_.size() && pivots_[next] == c) {
      ++next;
      continue;
    }
    out.push_back(c);
  }
  return out;
}

std::vector<Vector> Subspace::complement_basis() const {
  std::vector<Vector> out;
  for (std::size_t c : free_columns()) out.push_back(Vector::unit(field_, ambient_dim_, c));
  return out;
}

void Subspace::require_compatible(const Subspace& other) const {
  if (!(field_ == other.field_)) throw Error(ErrorCode::MixedFields, field_.name() + " vs " + other.field_.name());
  if (ambient_dim_ != other.ambient_dim_) throw Error(ErrorCode::DimensionMismatch, "subspaces of different ambient dimension");
}

Vector Subspace::reduce(const Vector& v) const {
  if (v.size() != ambient_dim_) throw Error(ErrorCode::DimensionMismatch, "vector length vs ambient dimension");
  Vector r = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Scalar& c = r[pivots_[i]];
    if (!c.is_zero()) r.add_scaled(-c, basis_[i]);
  }
  return r;
}

bool Subspace::contains(const Vector& v) const { return reduce(v).is_zero(); }

bool Subspace::contains(const Subspace& other) const {
  require_compatible(other);
  if (other.dim() > dim()) return false;
  return std::all_of(other.basis_.begin(), other.basis_.end(), [&](const Vector& v) { return contains(v); });
}

std::optional<std::vector<Scalar>> Subspace::coordinates(const Vector& v) const {
  if (!contains(v)) return std::nullopt;
  std::vector<Scalar> coords;
  coords.reserve(basis_.size());
  for (std::size_t p : pivots_) coords.push_back(v[p]);
  return coords;
}

Subspace Subspace::operator+(const Subspace& other) const {
  require_compatible(other);
  std::vector<Vector> all = basis_;
  all.insert(all.end(), other.basis_.begin(), other.basis_.end());
  return echelonize(field_, ambient_dim_, all);
}

Subspace Subspace::add(const Vector& v) const {
  std::vector<Vector> all = basis_;
  all.push_back(v);
  return echelonize(field_, ambient_dim_, all);
}

Subspace Subspace::intersect(const Subspace& other) const {
  require_compatible(other);
  if (dim() == 0 || other.dim() == 0) return zero(field_, ambient_dim_);
  // x A = y B  <=>  (x, -y) [A; B] = 0; the A-part of each kernel vector
  // maps to an element of the intersection.
  std::vector<Vector> stacked = basis_;
  stacked.insert(stacked.end(), other.basis_.begin(), other.basis_.end());
  Subspace kernel = left_kernel(Matrix::from_rows(field_, ambient_dim_, stacked));
  std::vector<Vector> common;
  for (const auto& k : kernel.basis()) {
    Vector w(field_, ambient_dim_);
    for (std::size_t i = 0; i < basis_.size(); ++i) w.add_scaled(k[i], basis_[i]);
    common.push_back(std::move(w));
  }
  return echelonize(field_, ambient_dim_, common);
}

std::string Subspace::to_string() const {
  std::string out = "span{";
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (i) out += ", ";
    out += basis_[i].to_string();
  }
  return out + "}";
}

Subspace left_kernel(const Matrix& m) {
  // x M = 0 means <x, column_j> = 0 for every column j.
  std::vector<Vector> columns;
  columns.reserve(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Vector col(m.field(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) col[i] = m(i, j);
    columns.push_back(std::move(col));
  }
  Subspace constraints = echelonize(m.field(), m.rows(), columns);
  std::vector<Vector> solutions;
  for (std::size_t f : constraints.free_columns()) {
    Vector x = Vector::unit(m.field(), m.rows(), f);
    for (std::size_t r = 0; r < constraints.dim(); ++r) x[constraints.pivots()[r]] = -constraints.basis()[r][f];
    solutions.push_back(std::move(x));
  }
  return echelonize(m.field(), m.rows(), solutions);
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  // Row space of [M | I] in reduced echelon form is [I | M^-1] exactly when M is invertible.
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < n; ++i) {
    Vector r(m.field(), 2 * n);
    for (std::size_t j = 0; j < n; ++j) r[j] = m(i, j);
    r[n + i] = m.field().one();
    rows.push_back(std::move(r));
  }
  Subspace s = echelonize(m.field(), 2 * n, rows);
  if (s.dim() != n || (n > 0 && s.pivots().back() != n - 1)) return std::nullopt;
  Matrix out(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = s.basis()[i][n + j];
  return out;
}

std::optional<Vector> solve_left(const Matrix& a, const Vector& b) {
  if (b.size() != a.cols()) throw Error(ErrorCode::DimensionMismatch, "right-hand side length differs from column count");
  Matrix stacked(a.field(), a.rows() + 1, a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) stacked(i, j) = a(i, j);
  for (std::size_t j = 0; j < a.cols(); ++j) stacked(a.rows(), j) = b[j];
  // (x, -1) in the left kernel of [A; b] gives x A = b.
  Subspace kernel = left_kernel(stacked);
  for (const auto& k : kernel.basis()) {
    const Scalar& last = k[a.rows()];
    if (last.is_zero()) continue;
    Scalar scale = -last.inverse();
    Vector x(a.field(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) x[i] = k[i] * scale;
    return x;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

std::uint64_t power_saturating(std::uint64_t q, std::size_t dim) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / q) return std::numeric_limits<std::uint64_t>::max();
    r *= q;
  }
  return r;
}

void require_enumerable(const Field& field, std::size_t dim, std::uint64_t budget, const std::string& what) {
  if (!field.is_finite()) throw Error(ErrorCode::UnsupportedField, what + " needs a finite field, got " + field.name());
  if (dim > kMaxAmbientDim) throw Error(ErrorCode::BudgetExceeded, what + ": dimension " + std::to_string(dim) + " exceeds cap");
  std::uint64_t count = power_saturating(field.order(), dim);
  if (count > budget)
    throw Error(ErrorCode::BudgetExceeded, what + ": " + field.name() + "^" + std::to_string(dim) + " exceeds budget " + std::to_string(budget));
}

namespace {

// Odometer over q^count digit assignments; `digits` must start all zero.
bool advance(std::vector<std::uint32_t>& digits, std::uint32_t q) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (++digits[i] < q) return true;
    digits[i] = 0;
  }
  return false;
}

}  // namespace

void for_each_vector(const Field& field, std::size_t n, const std::function<void(const Vector&)>& visit, std::uint64_t budget) {
  require_enumerable(field, n, budget, "vector enumeration");
  const auto q = static_cast<std::uint32_t>(field.order());
  std::vector<std::uint32_t> digits(n, 0);
  Vector v(field, n);
  do {
    for (std::size_t i = 0; i < n; ++i) v[i] = field.element(digits[i]);
    visit(v);
  } while (advance(digits, q));
}

void for_each_projective_point(const Field& field, std::size_t n, const std::function<void(const Vector&)>& visit,
                               std::uint64_t budget) {
  require_enumerable(field, n, budget, "projective enumeration");
  const auto q = static_cast<std::uint32_t>(field.order());
  for (std::size_t lead = 0; lead < n; ++lead) {
    std::vector<std::uint32_t> digits(n - lead - 1, 0);
    Vector v(field, n);
    v[lead] = field.one();
    do {
      for (std::size_t i = 0; i < digits.size(); ++i) v[lead + 1 + i] = field.element(digits[i]);
      visit(v);
    } while (advance(digits, q));
  }
}

void for_each_subspace(const Field& field, std::size_t n, std::optional<std::size_t> only_dim,
                       const std::function<void(const Subspace&)>& visit, std::uint64_t budget) {
  require_enumerable(field, n, budget, "subspace enumeration");
  const auto q = static_cast<std::uint32_t>(field.order());
  for (std::size_t k = 0; k <= n; ++k) {
    if (only_dim && *only_dim != k) continue;
    // Pivot patterns as increasing k-subsets of columns, lexicographic.
    std::vector<std::size_t> pivots(k);
    for (std::size_t i = 0; i < k; ++i) pivots[i] = i;
    while (true) {
      std::vector<bool> is_pivot(n, false);
      for (std::size_t p : pivots) is_pivot[p] = true;
      std::vector<std::pair<std::size_t, std::size_t>> free_slots;  // (row, column)
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = pivots[r] + 1; c < n; ++c)
          if (!is_pivot[c]) free_slots.emplace_back(r, c);
      std::vector<std::uint32_t> digits(free_slots.size(), 0);
      do {
        std::vector<Vector> rows;
        for (std::size_t r = 0; r < k; ++r) rows.push_back(Vector::unit(field, n, pivots[r]));
        for (std::size_t s = 0; s < free_slots.size(); ++s) rows[free_slots[s].first][free_slots[s].second] = field.element(digits[s]);
        visit(echelonize(field, n, rows));
      } while (advance(digits, q));

      // Next k-subset.
      std::size_t i = k;
      while (i > 0 && pivots[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++pivots[i - 1];
      for (std::size_t j = i; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
    }
  }
}

std::vector<Subspace> enumerate_subspaces(const Field& field, std::size_t n, std::optional<std::size_t> only_dim, std::uint64_t budget) {
  std::vector<Subspace> out;
  for_each_subspace(field, n, only_dim, [&](const Subspace& s) { out.push_back(s); }, budget);
  return out;
}

}  // namespace leibniz
