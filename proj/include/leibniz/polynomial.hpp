#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace leibniz::poly {

/// Dense polynomial over GF(p), coefficient of t^i at index i. The zero
/// polynomial is the empty vector; otherwise the last entry is nonzero.
using Poly = std::vector<std::uint32_t>;

std::uint32_t add_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p);
std::uint32_t sub_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p);
std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p);
std::uint32_t pow_mod(std::uint32_t a, std::uint64_t e, std::uint32_t p);
/// Requires a != 0 mod p.
std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p);
std::optional<std::uint32_t> sqrt_mod(std::uint32_t a, std::uint32_t p);

void trim(Poly& a);
inline int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }
inline std::uint32_t leading(const Poly& a) { return a.empty() ? 0 : a.back(); }

Poly constant(std::uint32_t c, std::uint32_t p);
Poly add(const Poly& a, const Poly& b, std::uint32_t p);
Poly sub(const Poly& a, const Poly& b, std::uint32_t p);
Poly neg(const Poly& a, std::uint32_t p);
Poly mul(const Poly& a, const Poly& b, std::uint32_t p);
Poly scale(const Poly& a, std::uint32_t c, std::uint32_t p);
/// Quotient and remainder; b must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, std::uint32_t p);
/// Monic gcd (zero only when both inputs are zero).
Poly gcd(Poly a, Poly b, std::uint32_t p);
/// Returns r with r*r == a, if one exists.
std::optional<Poly> sqrt(const Poly& a, std::uint32_t p);

}  // namespace leibniz::poly
