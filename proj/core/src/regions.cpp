#include "rsreal/regions.hpp"

#include <cassert>
#include <cstring>
#include <stdexcept>

namespace rsreal {
namespace {

void check_geometry(ConstRegion src, Region dst) {
  if (src.size() != dst.size()) throw std::invalid_argument("region length mismatch");
  [[maybe_unused]] const auto* s = src.data();
  [[maybe_unused]] const auto* d = dst.data();
  assert(s == d || s + src.size() <= d || d + dst.size() <= s);
}

inline std::uint64_t load_word(const std::uint8_t* p) {
  std::uint64_t w;
  std::memcpy(&w, p, sizeof w);
  return w;
}

inline void store_word(std::uint8_t* p, std::uint64_t w) { std::memcpy(p, &w, sizeof w); }

}  // namespace

void region_mul_const(ConstRegion src, GfElement c, Region dst, bool accumulate) {
  check_geometry(src, dst);
  const std::size_t n = src.size();
  if (c.is_zero()) {
    if (!accumulate) std::memset(dst.data(), 0, n);
    return;
  }

  const std::uint8_t* row = gf_mul_table()[c.value()].data();
  const std::uint8_t* s = src.data();
  std::uint8_t* d = dst.data();
  if (!accumulate) {
    for (std::size_t i = 0; i < n; ++i) d[i] = row[s[i]];
    return;
  }

  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    std::uint8_t prod[8];
    for (int b = 0; b < 8; ++b) prod[b] = row[s[i + b]];
    store_word(d + i, load_word(d + i) ^ load_word(prod));
  }
  for (; i < n; ++i) d[i] ^= row[s[i]];
}

void region_xor(ConstRegion src, Region dst) {
  check_geometry(src, dst);
  const std::size_t n = src.size();
  const std::uint8_t* s = src.data();
  std::uint8_t* d = dst.data();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) store_word(d + i, load_word(d + i) ^ load_word(s + i));
  for (; i < n; ++i) d[i] ^= s[i];
}

void region_dot(std::span<const GfElement> coeffs, std::span<const ConstRegion> srcs, Region dst) {
  if (coeffs.size() != srcs.size()) throw std::invalid_argument("region length mismatch");
  bool first = true;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    const GfElement c = coeffs[j];
    if (c.is_zero()) continue;
    if (c == GfElement{1}) {
      if (first) {
        check_geometry(srcs[j], dst);
        std::memcpy(dst.data(), srcs[j].data(), dst.size());
      } else {
        region_xor(srcs[j], dst);
      }
    } else {
      region_mul_const(srcs[j], c, dst, !first);
    }
    first = false;
  }
  if (first) std::memset(dst.data(), 0, dst.size());
}

}  // namespace rsreal
