#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "rsreal/codec.hpp"

namespace rsreal::testutil {

inline std::vector<Block> random_blocks(int count, std::size_t len, std::mt19937_64& rng) {
  std::vector<Block> out(count, Block(len));
  std::uniform_int_distribution<int> byte(0, 255);
  for (auto& b : out) {
    for (auto& v : b) v = static_cast<std::uint8_t>(byte(rng));
  }
  return out;
}

inline std::vector<ConstRegion> views(const std::vector<Block>& blocks) {
  return {blocks.begin(), blocks.end()};
}

inline std::vector<Region> mutable_views(std::vector<Block>& blocks) {
  return {blocks.begin(), blocks.end()};
}

// Data then parity, as every decode entry point expects.
inline std::vector<Block> full_stripe(const std::vector<Block>& data, const std::vector<Block>& parity) {
  std::vector<Block> all = data;
  all.insert(all.end(), parity.begin(), parity.end());
  return all;
}

inline std::vector<int> random_erasures(int n, int count, std::mt19937_64& rng) {
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  std::shuffle(idx.begin(), idx.end(), rng);
  idx.resize(count);
  return idx;
}

}  // namespace rsreal::testutil
