#include "leibniz/fields.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

namespace leibniz {

namespace mp = boost::multiprecision;
using poly::Poly;

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field::Field(Kind kind, std::uint32_t p, std::string_view variable) : kind_(kind), p_(p) {
  std::copy(variable.begin(), variable.end(), var_.begin());
}

Field Field::prime(std::uint32_t p) {
  if (p > (1u << 31) || !is_prime(p)) throw Error(ErrorCode::UnsupportedField, "GF(p) needs a prime p < 2^31, got " + std::to_string(p));
  return Field(Kind::prime, p, "");
}

Field Field::rationals() { return Field(Kind::rationals, 0, ""); }

Field Field::rational_function(std::uint32_t p, std::string_view variable) {
  if (p > (1u << 31) || !is_prime(p)) throw Error(ErrorCode::UnsupportedField, "GF(p)(t) needs a prime p < 2^31, got " + std::to_string(p));
  if (variable.empty() || variable.size() > 7 || !std::isalpha(static_cast<unsigned char>(variable[0])) ||
      !std::all_of(variable.begin(), variable.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }))
    throw Error(ErrorCode::UnsupportedField, "indeterminate must be an identifier of at most 7 characters");
  return Field(Kind::rational_function, p, variable);
}

std::uint64_t Field::order() const {
  if (!is_finite()) throw Error(ErrorCode::UnsupportedField, name() + " is infinite");
  return p_;
}

std::string Field::name() const {
  switch (kind_) {
    case Kind::prime: return "GF(" + std::to_string(p_) + ")";
    case Kind::rationals: return "Q";
    case Kind::rational_function: return "GF(" + std::to_string(p_) + ")(" + std::string(variable()) + ")";
  }
  return {};
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(std::int64_t value) const {
  switch (kind_) {
    case Kind::prime: {
      std::int64_t r = value % static_cast<std::int64_t>(p_);
      if (r < 0) r += p_;
      return Scalar::residue(*this, static_cast<std::uint64_t>(r));
    }
    case Kind::rationals: return Scalar::rational(Scalar::Rational(value));
    case Kind::rational_function: {
      std::int64_t r = value % static_cast<std::int64_t>(p_);
      if (r < 0) r += p_;
      return Scalar::rational_function(*this, poly::constant(static_cast<std::uint32_t>(r), p_), Poly{1});
    }
  }
  throw Error(ErrorCode::UnsupportedField, "unknown field kind");
}

Scalar Field::element(std::uint64_t index) const {
  if (!is_finite() || index >= p_) throw Error(ErrorCode::UnsupportedField, "element index out of range for " + name());
  return Scalar::residue(*this, index);
}

Scalar Field::indeterminate() const {
  if (kind_ != Kind::rational_function) throw Error(ErrorCode::UnsupportedField, name() + " has no indeterminate");
  return Scalar::rational_function(*this, Poly{0, 1}, Poly{1});
}

// ---------------------------------------------------------------------------

Scalar Scalar::residue(const Field& field, std::uint64_t value) {
  if (field.kind() != Field::Kind::prime) throw Error(ErrorCode::MixedFields, "residue in " + field.name());
  return Scalar(field, static_cast<std::uint32_t>(value % field.p()));
}

Scalar Scalar::rational(const Rational& value) { return Scalar(Field::rationals(), value); }

Scalar Scalar::rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  // Boost rejects a negative denominator in this constructor.
  return den < 0 ? Scalar(Field::rationals(), Rational(-num, -den)) : Scalar(Field::rationals(), Rational(num, den));
}

Scalar Scalar::rational_function(const Field& field, Poly num, Poly den) {
  if (field.kind() != Field::Kind::rational_function) throw Error(ErrorCode::MixedFields, "rational function in " + field.name());
  const std::uint32_t p = field.p();
  for (auto& c : num) c %= p;
  for (auto& c : den) c %= p;
  poly::trim(num);
  poly::trim(den);
  if (den.empty()) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  if (num.empty()) return Scalar(field, RationalFunction{{}, {1}});
  Poly g = poly::gcd(num, den, p);
  if (g.size() > 1) {
    num = poly::divmod(num, g, p).first;
    den = poly::divmod(den, g, p).first;
  }
  std::uint32_t lead_inv = poly::inv_mod(den.back(), p);
  if (lead_inv != 1) {
    num = poly::scale(num, lead_inv, p);
    den = poly::scale(den, lead_inv, p);
  }
  return Scalar(field, RationalFunction{std::move(num), std::move(den)});
}

bool Scalar::is_zero() const {
  switch (value_.index()) {
    case 0: return residue() == 0;
    case 1: return rational() == 0;
    default: return function().num.empty();
  }
}

bool Scalar::is_one() const {
  switch (value_.index()) {
    case 0: return residue() == 1;
    case 1: return rational() == 1;
    default: return function().num == Poly{1} && function().den == Poly{1};
  }
}

void Scalar::require_same_field(const Scalar& other) const {
  if (!(field_ == other.field_)) throw Error(ErrorCode::MixedFields, field_.name() + " vs " + other.field_.name());
}

Scalar Scalar::operator+(const Scalar& other) const {
  require_same_field(other);
  const std::uint32_t p = field_.p();
  switch (value_.index()) {
    case 0: return Scalar(field_, poly::add_mod(residue(), other.residue(), p));
    case 1: return Scalar(field_, Rational(rational() + other.rational()));
    default: {
      const auto& a = function();
      const auto& b = other.function();
      if (a.den == b.den) return rational_function(field_, poly::add(a.num, b.num, p), a.den);
      return rational_function(field_, poly::add(poly::mul(a.num, b.den, p), poly::mul(b.num, a.den, p), p),
                               poly::mul(a.den, b.den, p));
    }
  }
}

Scalar Scalar::operator-() const {
  const std::uint32_t p = field_.p();
  switch (value_.index()) {
    case 0: return Scalar(field_, poly::sub_mod(0, residue(), p));
    case 1: return Scalar(field_, Rational(-rational()));
    default: return Scalar(field_, RationalFunction{poly::neg(function().num, p), function().den});
  }
}

Scalar Scalar::operator-(const Scalar& other) const {
  require_same_field(other);
  return *this + (-other);
}

Scalar Scalar::operator*(const Scalar& other) const {
  require_same_field(other);
  const std::uint32_t p = field_.p();
  switch (value_.index()) {
    case 0: return Scalar(field_, poly::mul_mod(residue(), other.residue(), p));
    case 1: return Scalar(field_, Rational(rational() * other.rational()));
    default: {
      const auto& a = function();
      const auto& b = other.function();
      return rational_function(field_, poly::mul(a.num, b.num, p), poly::mul(a.den, b.den, p));
    }
  }
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  switch (value_.index()) {
    case 0: return Scalar(field_, poly::inv_mod(residue(), field_.p()));
    case 1: return Scalar(field_, Rational(1 / rational()));
    default: return rational_function(field_, function().den, function().num);
  }
}

Scalar Scalar::operator/(const Scalar& other) const {
  require_same_field(other);
  return *this * other.inverse();
}

namespace {

std::string poly_to_string(const Poly& a, std::string_view var) {
  if (a.empty()) return "0";
  std::string out;
  for (std::size_t k = a.size(); k-- > 0;) {
    if (a[k] == 0) continue;
    if (!out.empty()) out += "+";
    bool show_coef = a[k] != 1 || k == 0;
    if (show_coef) out += std::to_string(a[k]);
    if (k > 0) {
      if (show_coef) out += "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

bool is_monomial_like(const Poly& a) {
  return std::count_if(a.begin(), a.end(), [](std::uint32_t c) { return c != 0; }) <= 1;
}

}  // namespace

std::string Scalar::to_string() const {
  switch (value_.index()) {
    case 0: return std::to_string(residue());
    case 1: {
      const auto& r = rational();
      if (mp::denominator(r) == 1) return mp::numerator(r).str();
      return mp::numerator(r).str() + "/" + mp::denominator(r).str();
    }
    default: {
      const auto& f = function();
      std::string num = poly_to_string(f.num, field_.variable());
      if (f.den == Poly{1}) return num;
      if (!is_monomial_like(f.num)) num = "(" + num + ")";
      std::string den = poly_to_string(f.den, field_.variable());
      if (!is_monomial_like(f.den) || f.den.size() > 1) den = "(" + den + ")";
      return num + "/" + den;
    }
  }
}

// ---------------------------------------------------------------------------

std::optional<Scalar> square_root(const Scalar& a) {
  const Field& field = a.field();
  switch (field.kind()) {
    case Field::Kind::prime: {
      auto r = poly::sqrt_mod(a.residue(), field.p());
      if (!r) return std::nullopt;
      return Scalar::residue(field, *r);
    }
    case Field::Kind::rationals: {
      const auto& r = a.rational();
      if (r < 0) return std::nullopt;
      Scalar::Integer num = mp::numerator(r);
      Scalar::Integer den = mp::denominator(r);
      Scalar::Integer num_root = mp::sqrt(num);
      Scalar::Integer den_root = mp::sqrt(den);
      if (num_root * num_root != num || den_root * den_root != den) return std::nullopt;
      return Scalar::rational(num_root, den_root);
    }
    case Field::Kind::rational_function: {
      // The denominator is monic, so num/den is a square iff both are.
      const auto& f = a.function();
      auto num_root = poly::sqrt(f.num, field.p());
      if (!num_root) return std::nullopt;
      auto den_root = poly::sqrt(f.den, field.p());
      if (!den_root) return std::nullopt;
      return Scalar::rational_function(field, *num_root, *den_root);
    }
  }
  return std::nullopt;
}

bool is_square(const Scalar& a) {
  const Field& field = a.field();
  if (field.kind() == Field::Kind::prime) {
    std::uint32_t p = field.p();
    return p == 2 || a.residue() == 0 || poly::pow_mod(a.residue(), (p - 1) / 2, p) == 1;
  }
  if (field.kind() == Field::Kind::rational_function && field.p() == 2) {
    const auto even_only = [](const Poly& f) {
      for (std::size_t i = 1; i < f.size(); i += 2)
        if (f[i] != 0) return false;
      return true;
    };
    return even_only(a.function().num) && even_only(a.function().den);
  }
  return square_root(a).has_value();
}

// ---------------------------------------------------------------------------

namespace {

class ExpressionParser {
 public:
  ExpressionParser(const Field& field, std::string_view text) : field_(field), text_(text) {}

  Scalar parse() {
    Scalar value = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::Parse, "cannot parse \"" + std::string(text_) + "\" in " + field_.name() + ": " + why);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Scalar expression() {
    Scalar value = term();
    while (true) {
      if (accept('+')) value = value + term();
      else if (accept('-')) value = value - term();
      else return value;
    }
  }

  Scalar term() {
    Scalar value = unary();
    while (true) {
      skip_space();
      if (accept('*')) {
        value = value * unary();
      } else if (accept('/')) {
        Scalar divisor = unary();
        if (divisor.is_zero()) throw Error(ErrorCode::DivisionByZero, "in \"" + std::string(text_) + "\"");
        value = value / divisor;
      } else if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '(')) {
        value = value * unary();  // implicit product, as in "3t" or "t(t+1)"
      } else {
        return value;
      }
    }
  }

  Scalar unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Scalar power() {
    Scalar base = primary();
    if (!accept('^')) return base;
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("exponent must be a non-negative integer");
    unsigned long exponent = std::stoul(std::string(text_.substr(start, pos_ - start)));
    if (exponent > 4096) fail("exponent too large");
    Scalar result = field_.one();
    for (unsigned long i = 0; i < exponent; ++i) result = result * base;
    return result;
  }

  Scalar primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Scalar value = expression();
      if (!accept(')')) fail("missing ')'");
      return value;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return integer(text_.substr(start, pos_ - start));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      if (field_.kind() != Field::Kind::rational_function || name != field_.variable())
        fail("unknown symbol '" + std::string(name) + "'");
      return field_.indeterminate();
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Scalar integer(std::string_view digits) const {
    Scalar::Integer value{std::string(digits)};
    if (field_.kind() == Field::Kind::rationals) return Scalar::rational(value, Scalar::Integer(1));
    Scalar::Integer reduced = value % field_.p();
    return field_.from_int(reduced.convert_to<std::int64_t>());
  }

  const Field& field_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(const Field& field, std::string_view text) { return ExpressionParser(field, text).parse(); }

Field parse_field(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (s == "q" || s == "qq" || s == "rationals") return Field::rationals();
  auto fail = [&] { throw Error(ErrorCode::Parse, "unknown field \"" + std::string(text) + "\" (expected gfP, gf(P), q, gfP(t))"); };
  if (s.rfind("gf", 0) != 0) fail();
  std::size_t pos = 2;
  bool paren = pos < s.size() && s[pos] == '(';
  if (paren) ++pos;
  std::size_t start = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (start == pos || pos - start > 10) fail();
  std::uint64_t p = std::stoull(s.substr(start, pos - start));
  if (paren) {
    if (pos >= s.size() || s[pos] != ')') fail();
    ++pos;
  }
  if (p > std::numeric_limits<std::uint32_t>::max()) fail();
  if (pos == s.size()) return Field::prime(static_cast<std::uint32_t>(p));
  if (s[pos] != '(' || s.back() != ')') fail();
  // Keep the variable's original case.
  std::string_view original = text;
  auto open = original.find('(', original.find_first_of("0123456789"));
  auto close = original.rfind(')');
  std::string var;
  for (char c : original.substr(open + 1, close - open - 1))
    if (!std::isspace(static_cast<unsigned char>(c))) var += c;
  return Field::rational_function(static_cast<std::uint32_t>(p), var);
}

Scalar random_scalar(const Field& field, std::mt19937_64& rng, unsigned max_degree) {
  switch (field.kind()) {
    case Field::Kind::prime: return Scalar::residue(field, std::uniform_int_distribution<std::uint64_t>(0, field.p() - 1)(rng));
    case Field::Kind::rationals: {
      std::int64_t bound = std::int64_t{1} << std::min(max_degree + 2, 30u);
      std::uniform_int_distribution<std::int64_t> dist(-bound, bound);
      std::int64_t den = 0;
      while (den == 0) den = dist(rng);
      return Scalar::rational(Scalar::Integer(dist(rng)), Scalar::Integer(den));
    }
    case Field::Kind::rational_function: {
      std::uniform_int_distribution<std::uint32_t> coef(0, field.p() - 1);
      auto random_poly = [&] {
        Poly f(max_degree + 1);
        for (auto& c : f) c = coef(rng);
        poly::trim(f);
        return f;
      };
      Poly num = random_poly();
      Poly den;
      while (den.empty()) den = random_poly();
      return Scalar::rational_function(field, num, den);
    }
  }
  throw Error(ErrorCode::UnsupportedField, "unknown field kind");
}

}  // namespace leibniz
