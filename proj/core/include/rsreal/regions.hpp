#pragma once

#include <cstdint>
#include <span>

#include "rsreal/gf256.hpp"

namespace rsreal {

using ConstRegion = std::span<const std::uint8_t>;
using Region = std::span<std::uint8_t>;

// dst[i] = c * src[i], or dst[i] ^= c * src[i] when accumulating. Every
// nonzero constant goes through its multiply-table row, 1 included.
// src and dst must have equal length and must either be the same region or
// not overlap at all. Throws std::invalid_argument on a length mismatch.
void region_mul_const(ConstRegion src, GfElement c, Region dst, bool accumulate);

// dst[i] ^= src[i].
void region_xor(ConstRegion src, Region dst);

// dst = sum_j coeffs[j] * srcs[j]. Coefficient 1 is a plain copy or XOR and
// coefficient 0 is skipped.
void region_dot(std::span<const GfElement> coeffs, std::span<const ConstRegion> srcs, Region dst);

}  // namespace rsreal
