#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace rsreal {

// GF(2^8) reduction polynomial x^8 + x^4 + x^3 + x^2 + 1.
//
// The field must satisfy alpha^8 = 29 for alpha = 2: shifting 0x80 left gives
// 0x100, and 0x100 ^ 0x11D = 0x1D = 29. Of the primitive degree-8 polynomials
// only 0x11D produces that value, which fixes the choice.
inline constexpr unsigned kReductionPoly = 0x11D;
inline constexpr unsigned kFieldSize = 256;
inline constexpr unsigned kGroupOrder = 255;  // multiplicative group order
inline constexpr unsigned kWordBits = 8;       // w

class GfElement {
 public:
  constexpr GfElement() = default;
  constexpr explicit GfElement(std::uint8_t v) : value_(v) {}

  constexpr std::uint8_t value() const { return value_; }
  constexpr bool is_zero() const { return value_ == 0; }

  friend constexpr bool operator==(GfElement, GfElement) = default;

 private:
  std::uint8_t value_ = 0;
};

inline constexpr GfElement kAlpha{2};

struct GfTables {
  // exp is stored twice over so exp[log a + log b] needs no reduction.
  std::array<std::uint8_t, 2 * kGroupOrder> exp{};
  // log[0] is unused and left at 0.
  std::array<std::uint16_t, kFieldSize> log{};
};

namespace detail {

constexpr GfTables build_tables() {
  GfTables t{};
  unsigned x = 1;
  for (unsigned i = 0; i < kGroupOrder; ++i) {
    t.exp[i] = static_cast<std::uint8_t>(x);
    t.exp[i + kGroupOrder] = static_cast<std::uint8_t>(x);
    t.log[x] = static_cast<std::uint16_t>(i);
    x <<= 1;
    if (x & 0x100) x ^= kReductionPoly;
  }
  return t;
}

inline constexpr GfTables kTables = build_tables();

}  // namespace detail

inline const GfTables& gf_tables() { return detail::kTables; }

// Full 256x256 product table; row c is the multiply-by-c lookup used by the
// region kernels.
using MulTable = std::array<std::array<std::uint8_t, kFieldSize>, kFieldSize>;

// Built on first use, immutable afterwards.
const MulTable& gf_mul_table();

constexpr GfElement gf_add(GfElement a, GfElement b) {
  return GfElement(static_cast<std::uint8_t>(a.value() ^ b.value()));
}
constexpr GfElement gf_sub(GfElement a, GfElement b) { return gf_add(a, b); }

constexpr GfElement gf_mul(GfElement a, GfElement b) {
  if (a.is_zero() || b.is_zero()) return GfElement{};
  const auto& t = detail::kTables;
  return GfElement(t.exp[t.log[a.value()] + t.log[b.value()]]);
}

// Throws std::domain_error("zero divisor") when b is zero.
GfElement gf_div(GfElement a, GfElement b);
GfElement gf_inv(GfElement a);

// Exponents are reduced mod 255; gf_pow(0, 0) is 1 by convention.
constexpr GfElement gf_pow(GfElement a, unsigned long long e) {
  if (e == 0) return GfElement{1};
  if (a.is_zero()) return GfElement{};
  const auto& t = detail::kTables;
  const auto l = (static_cast<unsigned long long>(t.log[a.value()]) * (e % kGroupOrder)) % kGroupOrder;
  return GfElement(t.exp[l]);
}

// alpha^e for any non-negative exponent.
constexpr GfElement alpha_pow(unsigned long long e) {
  return GfElement(detail::kTables.exp[e % kGroupOrder]);
}

constexpr GfElement operator+(GfElement a, GfElement b) { return gf_add(a, b); }
constexpr GfElement operator-(GfElement a, GfElement b) { return gf_add(a, b); }
constexpr GfElement operator*(GfElement a, GfElement b) { return gf_mul(a, b); }
inline GfElement operator/(GfElement a, GfElement b) { return gf_div(a, b); }
constexpr GfElement& operator+=(GfElement& a, GfElement b) { return a = a + b; }
constexpr GfElement& operator*=(GfElement& a, GfElement b) { return a = a * b; }

// Number of 1 bits in the 8x8 binary matrix that multiplies by e.
int bitmatrix_ones(GfElement e);

// Polynomial over GF(2^8), coefficient i belongs to x^i. Trailing zero
// coefficients are always trimmed, so the zero polynomial has no coefficients.
class GfPolynomial {
 public:
  GfPolynomial() = default;
  explicit GfPolynomial(std::vector<GfElement> coeffs);
  GfPolynomial(std::initializer_list<int> coeffs);

  const std::vector<GfElement>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  GfElement coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : GfElement{}; }
  GfElement leading() const { return coeffs_.empty() ? GfElement{} : coeffs_.back(); }

  // Horner evaluation.
  GfElement eval(GfElement x) const;

  friend bool operator==(const GfPolynomial&, const GfPolynomial&) = default;

 private:
  void trim();
  std::vector<GfElement> coeffs_;
};

GfPolynomial poly_add(const GfPolynomial& a, const GfPolynomial& b);
GfPolynomial poly_mul(const GfPolynomial& a, const GfPolynomial& b);
// Remainder of a divided by the monic polynomial g. Throws std::invalid_argument
// for a zero or non-monic divisor.
GfPolynomial poly_mod(const GfPolynomial& a, const GfPolynomial& g);

}  // namespace rsreal
