#include "rsreal/gf256.hpp"

#include <algorithm>
#include <bit>

namespace rsreal {

const MulTable& gf_mul_table() {
  static const MulTable table = [] {
    MulTable t{};
    for (unsigned a = 0; a < kFieldSize; ++a) {
      for (unsigned b = 0; b < kFieldSize; ++b) {
        t[a][b] = gf_mul(GfElement(static_cast<std::uint8_t>(a)),
                         GfElement(static_cast<std::uint8_t>(b)))
                      .value();
      }
    }
    return t;
  }();
  return table;
}

GfElement gf_div(GfElement a, GfElement b) {
  if (b.is_zero()) throw std::domain_error("zero divisor");
  if (a.is_zero()) return GfElement{};
  const auto& t = gf_tables();
  return GfElement(t.exp[t.log[a.value()] + kGroupOrder - t.log[b.value()]]);
}

GfElement gf_inv(GfElement a) { return gf_div(GfElement{1}, a); }

int bitmatrix_ones(GfElement e) {
  static const auto counts = [] {
    std::array<int, kFieldSize> c{};
    for (unsigned v = 0; v < kFieldSize; ++v) {
      GfElement col(static_cast<std::uint8_t>(v));
      for (unsigned j = 0; j < kWordBits; ++j) {
        c[v] += std::popcount(col.value());
        col = gf_mul(col, kAlpha);
      }
    }
    return c;
  }();
  return counts[e.value()];
}

GfPolynomial::GfPolynomial(std::vector<GfElement> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

GfPolynomial::GfPolynomial(std::initializer_list<int> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (int c : coeffs) coeffs_.emplace_back(static_cast<std::uint8_t>(c));
  trim();
}

void GfPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

GfElement GfPolynomial::eval(GfElement x) const {
  GfElement acc{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

GfPolynomial poly_add(const GfPolynomial& a, const GfPolynomial& b) {
  std::vector<GfElement> out(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) + b.coeff(i);
  return GfPolynomial(std::move(out));
}

GfPolynomial poly_mul(const GfPolynomial& a, const GfPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<GfElement> out(a.coeffs().size() + b.coeffs().size() - 1);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) out[i + j] += a.coeffs()[i] * b.coeffs()[j];
  }
  return GfPolynomial(std::move(out));
}

GfPolynomial poly_mod(const GfPolynomial& a, const GfPolynomial& g) {
  if (g.is_zero()) throw std::invalid_argument("zero divisor polynomial");
  if (g.leading() != GfElement{1}) throw std::invalid_argument("divisor polynomial not monic");
  if (a.degree() < g.degree()) return a;

  std::vector<GfElement> rem = a.coeffs();
  const auto dg = static_cast<std::size_t>(g.degree());
  for (std::size_t top = rem.size() - 1; top >= dg; --top) {
    const GfElement q = rem[top];
    if (!q.is_zero()) {
      const std::size_t shift = top - dg;
      for (std::size_t i = 0; i <= dg; ++i) rem[shift + i] += q * g.coeffs()[i];
    }
    if (top == dg) break;
  }
  rem.resize(dg);
  return GfPolynomial(std::move(rem));
}

}  // namespace rsreal
