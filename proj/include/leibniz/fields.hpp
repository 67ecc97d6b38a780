#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <variant>

#include <boost/multiprecision/cpp_int.hpp>

#include "leibniz/error.hpp"
#include "leibniz/polynomial.hpp"

namespace leibniz {

class Scalar;

/// One of the three coefficient fields: GF(p), the rationals, or GF(p)(t).
///
/// Trivially copyable; every Scalar carries its Field so that arithmetic
/// between different fields is caught at the operation that mixes them.
class Field {
 public:
  enum class Kind : std::uint8_t { prime, rationals, rational_function };

  static Field prime(std::uint32_t p);
  static Field rationals();
  static Field rational_function(std::uint32_t p, std::string_view variable = "t");

  Kind kind() const noexcept { return kind_; }
  /// Prime of GF(p) or GF(p)(t); 0 for the rationals.
  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t characteristic() const noexcept { return p_; }
  std::string_view variable() const noexcept { return std::string_view(var_.data()); }
  bool is_finite() const noexcept { return kind_ == Kind::prime; }
  /// Number of elements; only meaningful when is_finite().
  std::uint64_t order() const;
  std::string name() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t value) const;
  /// The i-th element of a finite field (the residue i); enumeration order.
  Scalar element(std::uint64_t index) const;
  /// The indeterminate t of GF(p)(t).
  Scalar indeterminate() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  Field(Kind kind, std::uint32_t p, std::string_view variable);

  Kind kind_;
  std::uint32_t p_;
  std::array<char, 8> var_{};
};

bool is_prime(std::uint64_t n);

/// An exact field element in canonical form: residues in [0, p), reduced
/// fractions with positive denominator, or reduced rational functions with a
/// monic denominator. Equal values have identical representations.
class Scalar {
 public:
  using Rational = boost::multiprecision::cpp_rational;
  using Integer = boost::multiprecision::cpp_int;

  struct RationalFunction {
    poly::Poly num;
    poly::Poly den;
    friend bool operator==(const RationalFunction&, const RationalFunction&) = default;
  };

  static Scalar residue(const Field& field, std::uint64_t value);
  static Scalar rational(const Rational& value);
  static Scalar rational(const Integer& num, const Integer& den);
  static Scalar rational_function(const Field& field, poly::Poly num, poly::Poly den);

  const Field& field() const noexcept { return field_; }
  bool is_zero() const;
  bool is_one() const;

  std::uint32_t residue() const { return std::get<std::uint32_t>(value_); }
  const Rational& rational() const { return std::get<Rational>(value_); }
  const RationalFunction& function() const { return std::get<RationalFunction>(value_); }

  Scalar operator+(const Scalar& other) const;
  Scalar operator-(const Scalar& other) const;
  Scalar operator*(const Scalar& other) const;
  Scalar operator/(const Scalar& other) const;
  Scalar operator-() const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& other) { return *this = *this + other; }
  Scalar& operator-=(const Scalar& other) { return *this = *this - other; }
  Scalar& operator*=(const Scalar& other) { return *this = *this * other; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.field_ == b.field_ && a.value_ == b.value_; }

  std::string to_string() const;

 private:
  using Value = std::variant<std::uint32_t, Rational, RationalFunction>;
  Scalar(const Field& field, Value value) : field_(field), value_(std::move(value)) {}
  void require_same_field(const Scalar& other) const;

  Field field_;
  Value value_;
};

/// True iff some b in the same field has b*b == a.
bool is_square(const Scalar& a);
/// A b with b*b == a, when one exists.
std::optional<Scalar> square_root(const Scalar& a);

/// Parses an arithmetic expression over the field: integers, the field's
/// indeterminate, + - * / ^ and parentheses ("t", "(t^2+1)/t", "-3/4").
Scalar parse_scalar(const Field& field, std::string_view text);
/// Parses "gf2", "gf(5)", "q", "gf2(t)", "gf(3)(x)".
Field parse_field(std::string_view text);

/// Uniform over a finite field; otherwise numerator and denominator of
/// degree (or bit size, over Q) at most `max_degree`.
Scalar random_scalar(const Field& field, std::mt19937_64& rng, unsigned max_degree = 2);

}  // namespace leibniz
