#include "rsreal/matrix_rs.hpp"

#include <algorithm>
#include <cstring>
#include <limits>
#include <stdexcept>

namespace rsreal {

GfMatrix GfMatrix::identity(int size) {
  GfMatrix id(size, size);
  for (int i = 0; i < size; ++i) id.at(i, i) = GfElement{1};
  return id;
}

GfMatrix GfMatrix::select_rows(std::span<const int> which) const {
  GfMatrix out(static_cast<int>(which.size()), cols_);
  for (std::size_t r = 0; r < which.size(); ++r) {
    std::copy_n(row(which[r]).begin(), cols_, &out.at(static_cast<int>(r), 0));
  }
  return out;
}

GfMatrix operator*(const GfMatrix& a, const GfMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch");
  GfMatrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int t = 0; t < a.cols(); ++t) {
      const GfElement s = a.at(i, t);
      if (s.is_zero()) continue;
      for (int j = 0; j < b.cols(); ++j) out.at(i, j) += s * b.at(t, j);
    }
  }
  return out;
}

GfMatrix invert_matrix(const GfMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("matrix not square");
  const int n = a.rows();
  GfMatrix work = a;
  GfMatrix inv = GfMatrix::identity(n);

  for (int col = 0; col < n; ++col) {
    int pivot = col;
    while (pivot < n && work.at(pivot, col).is_zero()) ++pivot;
    if (pivot == n) throw std::domain_error("singular matrix");
    if (pivot != col) {
      for (int j = 0; j < n; ++j) {
        std::swap(work.at(pivot, j), work.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    }
    const GfElement scale = gf_inv(work.at(col, col));
    for (int j = 0; j < n; ++j) {
      work.at(col, j) *= scale;
      inv.at(col, j) *= scale;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const GfElement f = work.at(r, col);
      if (f.is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        work.at(r, j) += f * work.at(col, j);
        inv.at(r, j) += f * inv.at(col, j);
      }
    }
  }
  return inv;
}

GeneratorMatrix::GeneratorMatrix(CodingParams params, GfMatrix rows) : params_(params), rows_(std::move(rows)) {
  params_.validate();
  if (rows_.rows() != params_.n() || rows_.cols() != params_.k) {
    throw std::invalid_argument("generator matrix shape mismatch");
  }
  for (int r = 0; r < params_.k; ++r) {
    for (int c = 0; c < params_.k; ++c) {
      if (rows_.at(r, c) != GfElement(r == c ? 1 : 0)) throw std::invalid_argument("generator matrix not systematic");
    }
  }
}

GfMatrix GeneratorMatrix::parity_block() const {
  GfMatrix out(params_.m, params_.k);
  for (int i = 0; i < params_.m; ++i) {
    for (int j = 0; j < params_.k; ++j) out.at(i, j) = parity_coeff(i, j);
  }
  return out;
}

void CauchySets::validate(const CodingParams& p) const {
  if (static_cast<int>(x.size()) != p.m || static_cast<int>(y.size()) != p.k) {
    throw std::invalid_argument("invalid Cauchy sets");
  }
  std::array<bool, kFieldSize> seen{};
  for (const auto* set : {&x, &y}) {
    for (GfElement e : *set) {
      if (seen[e.value()]) throw std::invalid_argument("invalid Cauchy sets");
      seen[e.value()] = true;
    }
  }
}

CauchySets default_cauchy_sets(const CodingParams& p) {
  p.validate();
  CauchySets s;
  for (int i = 0; i < p.m; ++i) s.x.emplace_back(static_cast<std::uint8_t>(i));
  for (int j = 0; j < p.k; ++j) s.y.emplace_back(static_cast<std::uint8_t>(p.m + j));
  return s;
}

namespace {

GfMatrix stack_identity(const CodingParams& p, const GfMatrix& parity) {
  GfMatrix rows(p.n(), p.k);
  for (int i = 0; i < p.k; ++i) rows.at(i, i) = GfElement{1};
  for (int i = 0; i < p.m; ++i) {
    for (int j = 0; j < p.k; ++j) rows.at(p.k + i, j) = parity.at(i, j);
  }
  return rows;
}

}  // namespace

GeneratorMatrix vandermonde_generator(const CodingParams& p) {
  p.validate();
  const int n = p.n();
  const int k = p.k;

  // Row i evaluates P(x) = d_0 + d_1 x + ... at x = alpha^i; alpha has order
  // 255, so a 256th row (only when n = 256) takes the remaining point x = 0.
  GfMatrix v(n, k);
  for (int i = 0; i < n; ++i) {
    const GfElement x = i < static_cast<int>(kGroupOrder) ? alpha_pow(i) : GfElement{};
    for (int j = 0; j < k; ++j) v.at(i, j) = gf_pow(x, j);
  }

  // Elementary column operations until the top k x k block is the identity.
  auto swap_cols = [&](int a, int b) {
    for (int r = 0; r < n; ++r) std::swap(v.at(r, a), v.at(r, b));
  };
  for (int c = 0; c < k; ++c) {
    if (v.at(c, c).is_zero()) {
      int j = c + 1;
      while (j < k && v.at(c, j).is_zero()) ++j;
      if (j == k) throw std::logic_error("vandermonde systematic transform: no pivot");
      swap_cols(c, j);
    }
    const GfElement scale = gf_inv(v.at(c, c));
    for (int r = 0; r < n; ++r) v.at(r, c) *= scale;
    for (int j = 0; j < k; ++j) {
      if (j == c) continue;
      const GfElement f = v.at(c, j);
      if (f.is_zero()) continue;
      for (int r = 0; r < n; ++r) v.at(r, j) += f * v.at(r, c);
    }
  }
  return GeneratorMatrix(p, std::move(v));
}

GeneratorMatrix cauchy_generator(const CodingParams& p, const CauchySets& sets) {
  p.validate();
  sets.validate(p);
  GfMatrix parity(p.m, p.k);
  for (int i = 0; i < p.m; ++i) {
    for (int j = 0; j < p.k; ++j) parity.at(i, j) = gf_inv(sets.x[i] + sets.y[j]);
  }
  return GeneratorMatrix(p, stack_identity(p, parity));
}

GeneratorMatrix good_cauchy_generator(const CodingParams& p) {
  p.validate();
  constexpr int kRounds = 3;
  constexpr int kYCandidates = 64;

  CauchySets sets = default_cauchy_sets(p);
  std::vector<GfElement> row_scale(p.m, GfElement{1});
  std::vector<GfElement> col_scale(p.k, GfElement{1});

  std::array<bool, kFieldSize> used{};
  for (GfElement e : sets.x) used[e.value()] = true;
  for (GfElement e : sets.y) used[e.value()] = true;

  auto column_cost = [&](GfElement y, GfElement s) {
    int cost = 0;
    for (int i = 0; i < p.m; ++i) cost += bitmatrix_ones(row_scale[i] * s * gf_inv(sets.x[i] + y));
    return cost;
  };

  for (int round = 0; round < kRounds; ++round) {
    // Columns: pick y_j and a column scale minimizing the column's 1 bits.
    for (int j = 0; j < p.k; ++j) {
      GfElement best_y = sets.y[j];
      GfElement best_s = col_scale[j];
      int best = column_cost(best_y, best_s);
      used[sets.y[j].value()] = false;
      int tried = 0;
      for (unsigned cand = 0; cand < kFieldSize && tried < kYCandidates; ++cand) {
        if (used[cand]) continue;
        ++tried;
        const GfElement y(static_cast<std::uint8_t>(cand));
        for (unsigned s = 1; s < kFieldSize; ++s) {
          const GfElement scale(static_cast<std::uint8_t>(s));
          const int cost = column_cost(y, scale);
          if (cost < best) {
            best = cost;
            best_y = y;
            best_s = scale;
          }
        }
      }
      sets.y[j] = best_y;
      col_scale[j] = best_s;
      used[best_y.value()] = true;
    }
    // Rows: rescale each parity row.
    for (int i = 0; i < p.m; ++i) {
      GfElement best_s = row_scale[i];
      int best = std::numeric_limits<int>::max();
      for (unsigned s = 1; s < kFieldSize; ++s) {
        const GfElement scale(static_cast<std::uint8_t>(s));
        int cost = 0;
        for (int j = 0; j < p.k; ++j) cost += bitmatrix_ones(scale * col_scale[j] * gf_inv(sets.x[i] + sets.y[j]));
        if (cost < best || (cost == best && scale == row_scale[i])) {
          best = cost;
          best_s = scale;
        }
      }
      row_scale[i] = best_s;
    }
  }

  // Scaling rows or columns of a Cauchy matrix keeps every square submatrix
  // nonsingular, so the result is still MDS.
  GfMatrix parity(p.m, p.k);
  for (int i = 0; i < p.m; ++i) {
    for (int j = 0; j < p.k; ++j) parity.at(i, j) = row_scale[i] * col_scale[j] * gf_inv(sets.x[i] + sets.y[j]);
  }
  GeneratorMatrix good(p, stack_identity(p, parity));
  GeneratorMatrix plain = cauchy_generator(p, default_cauchy_sets(p));
  return parity_bitmatrix_ones(good) <= parity_bitmatrix_ones(plain) ? good : plain;
}

std::size_t BitMatrix::ones() const { return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1)); }

BitMatrix element_bitmatrix(GfElement e) {
  GfMatrix one(1, 1);
  one.at(0, 0) = e;
  return expand_to_bits(one);
}

BitMatrix expand_to_bits(const GfMatrix& m) {
  BitMatrix out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      GfElement col = m.at(i, j);
      for (int c = 0; c < 8; ++c) {
        for (int r = 0; r < 8; ++r) out.set(8 * i + r, 8 * j + c, (col.value() >> r) & 1);
        col = col * kAlpha;
      }
    }
  }
  return out;
}

BitMatrix to_bitmatrix(const GeneratorMatrix& g) { return expand_to_bits(g.parity_block()); }

std::size_t parity_bitmatrix_ones(const GeneratorMatrix& g) {
  std::size_t total = 0;
  for (int i = 0; i < g.params().m; ++i) {
    for (int j = 0; j < g.params().k; ++j) total += static_cast<std::size_t>(bitmatrix_ones(g.parity_coeff(i, j)));
  }
  return total;
}

void matrix_encode(const GeneratorMatrix& g, std::span<const ConstRegion> data, std::span<const Region> parity) {
  const auto& p = g.params();
  if (static_cast<int>(data.size()) != p.k || static_cast<int>(parity.size()) != p.m) {
    throw std::invalid_argument("bad stripe geometry");
  }
  for (int i = 0; i < p.m; ++i) region_dot(g.rows().row(p.k + i), data, parity[i]);
}

namespace {

// 8x8 bit transpose of a word whose byte t is row t: afterwards byte b holds
// bit b of every input byte.
inline std::uint64_t transpose8(std::uint64_t x) {
  std::uint64_t t;
  t = (x ^ (x >> 7)) & 0x00AA00AA00AA00AAULL;
  x ^= t ^ (t << 7);
  t = (x ^ (x >> 14)) & 0x0000CCCC0000CCCCULL;
  x ^= t ^ (t << 14);
  t = (x ^ (x >> 28)) & 0x00000000F0F0F0F0ULL;
  x ^= t ^ (t << 28);
  return x;
}

// Splits len bytes into 8 bit-planes of len/8 bytes, plane b at planes + b*stride.
void bit_slice(const std::uint8_t* src, std::size_t len, std::uint8_t* planes, std::size_t stride) {
  for (std::size_t q = 0; q < len / 8; ++q) {
    std::uint64_t w;
    std::memcpy(&w, src + 8 * q, 8);
    w = transpose8(w);
    for (std::size_t b = 0; b < 8; ++b) planes[b * stride + q] = static_cast<std::uint8_t>(w >> (8 * b));
  }
}

void bit_unslice(const std::uint8_t* planes, std::size_t stride, std::uint8_t* dst, std::size_t len) {
  for (std::size_t q = 0; q < len / 8; ++q) {
    std::uint64_t w = 0;
    for (std::size_t b = 0; b < 8; ++b) w |= static_cast<std::uint64_t>(planes[b * stride + q]) << (8 * b);
    w = transpose8(w);
    std::memcpy(dst + 8 * q, &w, 8);
  }
}

constexpr std::size_t kBitTile = 4096;

}  // namespace

void bitmatrix_apply(const BitMatrix& b, std::span<const ConstRegion> in, std::span<const Region> out) {
  if (static_cast<int>(in.size()) * 8 != b.cols() || static_cast<int>(out.size()) * 8 != b.rows()) {
    throw std::invalid_argument("bad stripe geometry");
  }
  if (out.empty()) return;
  const std::size_t len = out.front().size();
  for (auto r : in) {
    if (r.size() != len) throw std::invalid_argument("bad stripe geometry");
  }
  for (auto r : out) {
    if (r.size() != len) throw std::invalid_argument("bad stripe geometry");
  }
  if (len % kBitPacketAlign != 0) throw std::invalid_argument("block length not packet-aligned");

  // XOR schedule: the input bit-planes feeding each output bit-plane.
  std::vector<std::vector<int>> schedule(b.rows());
  for (int r = 0; r < b.rows(); ++r) {
    for (int c = 0; c < b.cols(); ++c) {
      if (b.at(r, c)) schedule[r].push_back(c);
    }
  }

  const std::size_t tile = std::min(len, kBitTile);
  const std::size_t max_packet = tile / 8;
  std::vector<std::uint8_t> in_planes(in.size() * tile);
  std::vector<std::uint8_t> out_planes(out.size() * tile);

  for (std::size_t off = 0; off < len; off += tile) {
    const std::size_t chunk = std::min(tile, len - off);
    const std::size_t packet = chunk / 8;
    for (std::size_t j = 0; j < in.size(); ++j) {
      bit_slice(in[j].data() + off, chunk, in_planes.data() + j * tile, max_packet);
    }
    for (int r = 0; r < b.rows(); ++r) {
      Region dst(out_planes.data() + static_cast<std::size_t>(r) * max_packet, packet);
      const auto& cols = schedule[r];
      if (cols.empty()) {
        std::memset(dst.data(), 0, packet);
        continue;
      }
      std::memcpy(dst.data(), in_planes.data() + static_cast<std::size_t>(cols[0]) * max_packet, packet);
      for (std::size_t c = 1; c < cols.size(); ++c) {
        region_xor(ConstRegion(in_planes.data() + static_cast<std::size_t>(cols[c]) * max_packet, packet), dst);
      }
    }
    for (std::size_t i = 0; i < out.size(); ++i) {
      bit_unslice(out_planes.data() + i * tile, max_packet, out[i].data() + off, chunk);
    }
  }
}

void bitmatrix_encode(const BitMatrix& b, std::span<const ConstRegion> data, std::span<const Region> parity) {
  bitmatrix_apply(b, data, parity);
}

MatrixDecodePlan::MatrixDecodePlan(const GeneratorMatrix& g, ErasurePattern erasures, bool bitmatrix)
    : DecodePlan(std::move(erasures)) {
  const auto& p = g.params();
  this->erasures().validate(p);
  for (int idx : this->erasures().indices()) (p.is_data(idx) ? erased_data_ : erased_parity_).push_back(idx);

  if (!erased_data_.empty()) {
    for (int b = 0; b < p.n() && static_cast<int>(survivors_.size()) < p.k; ++b) {
      if (!this->erasures().contains(b)) survivors_.push_back(b);
    }
    const GfMatrix inv = invert_matrix(g.rows().select_rows(survivors_));
    data_rows_ = inv.select_rows(erased_data_);
    if (bitmatrix) data_bits_ = expand_to_bits(data_rows_);
  }
  if (!erased_parity_.empty()) {
    parity_rows_ = g.rows().select_rows(erased_parity_);
    if (bitmatrix) parity_bits_ = expand_to_bits(parity_rows_);
  }
}

MatrixCodec::MatrixCodec(CodecId id, GeneratorMatrix g, bool bitmatrix)
    : Codec(id, g.params()), g_(std::move(g)), bitmatrix_(bitmatrix) {
  if (bitmatrix_) bits_ = to_bitmatrix(g_);
}

void MatrixCodec::do_encode(std::span<const ConstRegion> data, std::span<const Region> parity) const {
  if (bitmatrix_) {
    bitmatrix_encode(bits_, data, parity);
  } else {
    matrix_encode(g_, data, parity);
  }
}

std::unique_ptr<DecodePlan> MatrixCodec::do_plan(const ErasurePattern& erasures) const {
  return std::make_unique<MatrixDecodePlan>(g_, erasures, bitmatrix_);
}

void MatrixCodec::do_decode(const DecodePlan& base, std::span<const ConstRegion> blocks,
                            std::span<const Region> out) const {
  const auto& plan = dynamic_cast<const MatrixDecodePlan&>(base);
  const auto& p = params();
  const std::size_t nd = plan.erased_data().size();

  if (nd > 0) {
    std::vector<ConstRegion> survivors;
    for (int s : plan.survivors()) survivors.push_back(blocks[s]);
    const auto data_out = out.first(nd);
    if (bitmatrix_) {
      bitmatrix_apply(plan.data_bits(), survivors, data_out);
    } else {
      for (std::size_t e = 0; e < nd; ++e) region_dot(plan.data_rows().row(static_cast<int>(e)), survivors, data_out[e]);
    }
  }

  if (plan.erased_parity().empty()) return;
  std::vector<ConstRegion> data(p.k);
  std::size_t next = 0;
  for (int j = 0; j < p.k; ++j) {
    if (next < nd && plan.erased_data()[next] == j) {
      data[j] = out[next++];
    } else {
      data[j] = blocks[j];
    }
  }
  const auto parity_out = out.subspan(nd);
  if (bitmatrix_) {
    bitmatrix_apply(plan.parity_bits(), data, parity_out);
  } else {
    for (std::size_t e = 0; e < parity_out.size(); ++e) {
      region_dot(plan.parity_rows().row(static_cast<int>(e)), data, parity_out[e]);
    }
  }
}

std::vector<Block> matrix_decode(const GeneratorMatrix& g, std::span<const ConstRegion> blocks,
                                 const ErasurePattern& erasures) {
  return MatrixCodec(CodecId::VanderRS, g, false).decode(blocks, erasures);
}

}  // namespace rsreal
