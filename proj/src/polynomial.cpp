#include "leibniz/polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <tuple>

namespace leibniz::poly {

std::uint32_t add_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint64_t s = std::uint64_t{a} + b;
  return static_cast<std::uint32_t>(s >= p ? s - p : s);
}

std::uint32_t sub_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : static_cast<std::uint32_t>(std::uint64_t{a} + p - b);
}

std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>((std::uint64_t{a} * b) % p);
}

std::uint32_t pow_mod(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
  std::uint32_t result = 1 % p;
  while (e != 0) {
    if (e & 1) result = mul_mod(result, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return result;
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  assert(a % p != 0);
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a % p;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::tie(t, new_t) = std::pair{new_t, t - q * new_t};
    std::tie(r, new_r) = std::pair{new_r, r - q * new_r};
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

// Tonelli-Shanks.
std::optional<std::uint32_t> sqrt_mod(std::uint32_t a, std::uint32_t p) {
  a %= p;
  if (a == 0 || p == 2) return a;
  if (pow_mod(a, (p - 1) / 2, p) != 1) return std::nullopt;
  std::uint32_t q = p - 1;
  unsigned s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  std::uint32_t z = 2;
  while (pow_mod(z, (p - 1) / 2, p) != p - 1) ++z;
  std::uint32_t m = s;
  std::uint32_t c = pow_mod(z, q, p);
  std::uint32_t t = pow_mod(a, q, p);
  std::uint32_t r = pow_mod(a, (q + 1) / 2, p);
  while (t != 1) {
    std::uint32_t i = 0;
    std::uint32_t t2 = t;
    while (t2 != 1) {
      t2 = mul_mod(t2, t2, p);
      ++i;
    }
    std::uint32_t b = c;
    for (std::uint32_t j = 0; j + i + 1 < m; ++j) b = mul_mod(b, b, p);
    m = i;
    c = mul_mod(b, b, p);
    t = mul_mod(t, c, p);
    r = mul_mod(r, b, p);
  }
  return std::min(r, p - r);
}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly constant(std::uint32_t c, std::uint32_t p) {
  c %= p;
  return c == 0 ? Poly{} : Poly{c};
}

Poly add(const Poly& a, const Poly& b, std::uint32_t p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = add_mod(r[i], b[i], p);
  trim(r);
  return r;
}

Poly sub(const Poly& a, const Poly& b, std::uint32_t p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = sub_mod(r[i], b[i], p);
  trim(r);
  return r;
}

Poly neg(const Poly& a, std::uint32_t p) {
  Poly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = sub_mod(0, a[i], p);
  return r;
}

Poly mul(const Poly& a, const Poly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = add_mod(r[i + j], mul_mod(a[i], b[j], p), p);
  }
  trim(r);
  return r;
}

Poly scale(const Poly& a, std::uint32_t c, std::uint32_t p) {
  Poly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mul_mod(a[i], c, p);
  trim(r);
  return r;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, std::uint32_t p) {
  assert(!b.empty());
  Poly rem = a;
  if (rem.size() < b.size()) return {Poly{}, rem};
  Poly quot(rem.size() - b.size() + 1, 0);
  std::uint32_t lead_inv = inv_mod(b.back(), p);
  for (std::size_t k = quot.size(); k-- > 0;) {
    std::uint32_t coef = mul_mod(rem[k + b.size() - 1], lead_inv, p);
    quot[k] = coef;
    if (coef == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) rem[k + j] = sub_mod(rem[k + j], mul_mod(coef, b[j], p), p);
  }
  trim(quot);
  trim(rem);
  return {quot, rem};
}

Poly gcd(Poly a, Poly b, std::uint32_t p) {
  while (!b.empty()) {
    Poly r = divmod(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return a;
  return scale(a, inv_mod(a.back(), p), p);
}

std::optional<Poly> sqrt(const Poly& a, std::uint32_t p) {
  if (a.empty()) return Poly{};
  if (degree(a) % 2 != 0) return std::nullopt;
  const std::size_t m = a.size() / 2;  // degree of the root
  Poly r(m + 1, 0);
  if (p == 2) {
    for (std::size_t i = 0; i <= m; ++i) r[i] = a[2 * i];
  } else {
    auto lead = sqrt_mod(a.back(), p);
    if (!lead) return std::nullopt;
    r[m] = *lead;
    std::uint32_t denom = inv_mod(mul_mod(2, r[m], p), p);
    // Solve for r[k] from the coefficient of t^(m+k), top down.
    for (std::size_t k = m; k-- > 0;) {
      std::uint32_t partial = 0;
      for (std::size_t i = k + 1; i < m; ++i) {
        std::size_t j = m + k - i;
        if (j > k && j < m) partial = add_mod(partial, mul_mod(r[i], r[j], p), p);
      }
      r[k] = mul_mod(sub_mod(a[m + k], partial, p), denom, p);
    }
  }
  trim(r);
  if (mul(r, r, p) != a) return std::nullopt;
  return r;
}

}  // namespace leibniz::poly
