#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rsreal/codec.hpp"

// Slow reference implementations. Nothing here touches the exp/log or
// multiply tables, so they can check the production kernels independently.
namespace rsreal::oracle {

// Carry-less multiply then reduce modulo 0x11D, bit by bit.
std::uint8_t naive_gf_mul(std::uint8_t a, std::uint8_t b);

// Inverse by the extended Euclidean algorithm over GF(2)[x]. a must be
// nonzero.
std::uint8_t naive_gf_inv(std::uint8_t a);

// Determinant by cofactor-free elimination using the naive field routines.
std::uint8_t naive_determinant(std::vector<std::vector<std::uint8_t>> a);

// True iff c(alpha^i) = 0 for i = 0..m-1 at every byte offset, where
// c(x) = p(x) + d(x) x^m and blocks are in index order (data then parity).
bool naive_codeword_check(std::span<const ConstRegion> blocks, const CodingParams& p);

struct SweepFailure {
  std::vector<int> erased;
  std::string detail;
};

struct SweepReport {
  std::size_t patterns = 0;
  std::vector<SweepFailure> failures;
  bool ok() const { return failures.empty(); }
};

// Every erasure pattern of size 1..m on one random stripe; recovered bytes
// must equal the originals.
SweepReport exhaustive_mds_sweep(const Codec& codec, std::size_t block_len, std::uint64_t seed = 1);
SweepReport exhaustive_mds_sweep(CodecId id, const CodingParams& p, std::size_t block_len, std::uint64_t seed = 1);

// Calls fn(indices) for every size-r subset of [0, n) in lexicographic order.
template <typename Fn>
void for_each_combination(int n, int r, Fn&& fn) {
  if (r < 0 || r > n) return;
  std::vector<int> idx(r);
  for (int i = 0; i < r; ++i) idx[i] = i;
  while (true) {
    fn(static_cast<const std::vector<int>&>(idx));
    int i = r - 1;
    while (i >= 0 && idx[i] == n - r + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace rsreal::oracle
