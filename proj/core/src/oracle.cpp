#include "rsreal/oracle.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

namespace rsreal::oracle {
namespace {

int degree(unsigned v) {
  int d = -1;
  while (v) {
    ++d;
    v >>= 1;
  }
  return d;
}

unsigned clmul(unsigned a, unsigned b) {
  unsigned r = 0;
  for (int i = 0; b >> i; ++i) {
    if ((b >> i) & 1) r ^= a << i;
  }
  return r;
}

// Remainder of a by b in GF(2)[x].
unsigned poly_rem(unsigned a, unsigned b) {
  const int db = degree(b);
  for (int da = degree(a); da >= db; da = degree(a)) a ^= b << (da - db);
  return a;
}

std::uint8_t naive_add(std::uint8_t a, std::uint8_t b) { return static_cast<std::uint8_t>(a ^ b); }

}  // namespace

std::uint8_t naive_gf_mul(std::uint8_t a, std::uint8_t b) {
  return static_cast<std::uint8_t>(poly_rem(clmul(a, b), 0x11D));
}

std::uint8_t naive_gf_inv(std::uint8_t a) {
  if (a == 0) throw std::domain_error("zero divisor");
  // Invariant: s * a = r (mod 0x11D).
  unsigned r0 = 0x11D, r1 = a;
  unsigned s0 = 0, s1 = 1;
  while (r1 != 1) {
    unsigned q = 0;
    unsigned rem = r0;
    const int d1 = degree(r1);
    for (int d = degree(rem); d >= d1; d = degree(rem)) {
      q ^= 1u << (d - d1);
      rem ^= r1 << (d - d1);
    }
    const unsigned s2 = s0 ^ clmul(q, s1);
    r0 = r1;
    r1 = rem;
    s0 = s1;
    s1 = s2;
  }
  return static_cast<std::uint8_t>(poly_rem(s1, 0x11D));
}

std::uint8_t naive_determinant(std::vector<std::vector<std::uint8_t>> a) {
  const std::size_t n = a.size();
  std::uint8_t det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    std::swap(a[pivot], a[col]);  // sign is irrelevant in characteristic 2
    det = naive_gf_mul(det, a[col][col]);
    const std::uint8_t inv = naive_gf_inv(a[col][col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      const std::uint8_t f = naive_gf_mul(a[r][col], inv);
      if (f == 0) continue;
      for (std::size_t c = col; c < n; ++c) a[r][c] = naive_add(a[r][c], naive_gf_mul(f, a[col][c]));
    }
  }
  return det;
}

bool naive_codeword_check(std::span<const ConstRegion> blocks, const CodingParams& p) {
  if (static_cast<int>(blocks.size()) != p.n()) throw std::invalid_argument("bad stripe geometry");
  const std::size_t len = blocks.front().size();
  std::uint8_t root = 1;
  for (int i = 0; i < p.m; ++i) {
    for (std::size_t o = 0; o < len; ++o) {
      // Horner from the highest coefficient: data k-1 down to data 0, then
      // parity m-1 down to parity 0.
      std::uint8_t acc = 0;
      for (int pos = p.n() - 1; pos >= 0; --pos) {
        const int block = pos < p.m ? p.k + pos : pos - p.m;
        acc = naive_add(naive_gf_mul(acc, root), blocks[block][o]);
      }
      if (acc != 0) return false;
    }
    root = naive_gf_mul(root, 2);
  }
  return true;
}

SweepReport exhaustive_mds_sweep(const Codec& codec, std::size_t block_len, std::uint64_t seed) {
  const auto& p = codec.params();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> byte(0, 255);

  Stripe stripe;
  stripe.data.assign(p.k, Block(block_len));
  for (auto& b : stripe.data) {
    for (auto& v : b) v = static_cast<std::uint8_t>(byte(rng));
  }
  std::vector<ConstRegion> data(stripe.data.begin(), stripe.data.end());
  stripe.parity = codec.encode(data);
  const auto original = stripe.views();

  SweepReport report;
  for (int size = 1; size <= p.m; ++size) {
    for_each_combination(p.n(), size, [&](const std::vector<int>& erased) {
      ++report.patterns;
      std::vector<ConstRegion> blocks = original;
      for (int e : erased) blocks[e] = {};
      try {
        const auto recovered = codec.decode(blocks, ErasurePattern(erased));
        for (std::size_t i = 0; i < erased.size(); ++i) {
          const auto& want = original[erased[i]];
          if (recovered[i].size() != want.size() || !std::equal(want.begin(), want.end(), recovered[i].begin())) {
            std::ostringstream msg;
            msg << "block " << erased[i] << " differs";
            report.failures.push_back({erased, msg.str()});
            return;
          }
        }
      } catch (const std::exception& ex) {
        report.failures.push_back({erased, ex.what()});
      }
    });
  }
  return report;
}

SweepReport exhaustive_mds_sweep(CodecId id, const CodingParams& p, std::size_t block_len, std::uint64_t seed) {
  return exhaustive_mds_sweep(*make_codec(id, p), block_len, seed);
}

}  // namespace rsreal::oracle
