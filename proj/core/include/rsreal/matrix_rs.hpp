#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rsreal/codec.hpp"
#include "rsreal/gf256.hpp"

namespace rsreal {

// Dense row-major matrix over GF(2^8).
class GfMatrix {
 public:
  GfMatrix() = default;
  GfMatrix(int rows, int cols) : rows_(rows), cols_(cols), cells_(static_cast<std::size_t>(rows) * cols) {}

  static GfMatrix identity(int size);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  GfElement& at(int r, int c) { return cells_[static_cast<std::size_t>(r) * cols_ + c]; }
  GfElement at(int r, int c) const { return cells_[static_cast<std::size_t>(r) * cols_ + c]; }
  std::span<const GfElement> row(int r) const { return {cells_.data() + static_cast<std::size_t>(r) * cols_, static_cast<std::size_t>(cols_)}; }

  GfMatrix select_rows(std::span<const int> which) const;

  friend bool operator==(const GfMatrix&, const GfMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<GfElement> cells_;
};

GfMatrix operator*(const GfMatrix& a, const GfMatrix& b);

// Gauss-Jordan inversion. Throws std::domain_error("singular matrix").
GfMatrix invert_matrix(const GfMatrix& a);

// n x k systematic generator: the top k rows are the identity.
class GeneratorMatrix {
 public:
  // Throws std::invalid_argument if the shape is wrong or the top block is
  // not the identity.
  GeneratorMatrix(CodingParams params, GfMatrix rows);

  const CodingParams& params() const { return params_; }
  const GfMatrix& rows() const { return rows_; }
  GfElement parity_coeff(int parity_row, int data_col) const { return rows_.at(params_.k + parity_row, data_col); }
  // The m x k block below the identity.
  GfMatrix parity_block() const;

 private:
  CodingParams params_;
  GfMatrix rows_;
};

struct CauchySets {
  std::vector<GfElement> x;  // one per parity row
  std::vector<GfElement> y;  // one per data column

  // Throws std::invalid_argument("invalid Cauchy sets") unless |x| = m,
  // |y| = k and all elements are pairwise distinct.
  void validate(const CodingParams& p) const;
};

// X = {0..m-1}, Y = {m..m+k-1}.
CauchySets default_cauchy_sets(const CodingParams& p);

GeneratorMatrix vandermonde_generator(const CodingParams& p);
GeneratorMatrix cauchy_generator(const CodingParams& p, const CauchySets& sets);
GeneratorMatrix good_cauchy_generator(const CodingParams& p);

// Binary matrix of (8 * out) x (8 * in) bits. Rows 8i..8i+7 produce bits 0..7
// of output element i; columns 8j..8j+7 consume bits 0..7 of input j.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(int out_elems, int in_elems)
      : rows_(out_elems * 8), cols_(in_elems * 8), bits_(static_cast<std::size_t>(rows_) * cols_) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool at(int r, int c) const { return bits_[static_cast<std::size_t>(r) * cols_ + c] != 0; }
  void set(int r, int c, bool v) { bits_[static_cast<std::size_t>(r) * cols_ + c] = v ? 1 : 0; }
  std::size_t ones() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::uint8_t> bits_;
};

// Column j of the 8x8 image of e holds the bits of e * 2^j.
BitMatrix element_bitmatrix(GfElement e);
BitMatrix expand_to_bits(const GfMatrix& m);
// Expansion of the parity block of g.
BitMatrix to_bitmatrix(const GeneratorMatrix& g);

// Total 1 bits in the bit-matrix expansion of the parity block.
std::size_t parity_bitmatrix_ones(const GeneratorMatrix& g);

// Byte length divisor required by the bit-matrix kernels. Every 8-byte word is
// bit-sliced into w = 8 one-byte packets, one per bit position.
inline constexpr std::size_t kBitPacketAlign = kWordBits;

// Parity row i = sum_j g[k+i][j] * data_j, computed with region kernels.
void matrix_encode(const GeneratorMatrix& g, std::span<const ConstRegion> data, std::span<const Region> parity);

// XOR-only product of a bit matrix with bit-sliced input blocks. Output is
// byte-identical to the GF product with the matrix the bits came from.
// Throws std::invalid_argument("block length not packet-aligned").
void bitmatrix_apply(const BitMatrix& b, std::span<const ConstRegion> in, std::span<const Region> out);
void bitmatrix_encode(const BitMatrix& b, std::span<const ConstRegion> data, std::span<const Region> parity);

// Survivor choice and inverse for one erasure pattern.
class MatrixDecodePlan : public DecodePlan {
 public:
  MatrixDecodePlan(const GeneratorMatrix& g, ErasurePattern erasures, bool bitmatrix);

  // k surviving block indices used for recovery: smallest indices first.
  const std::vector<int>& survivors() const { return survivors_; }
  // Rows of the inverted survivor submatrix that produce each erased data
  // block, in erased order (k columns, one per survivor).
  const GfMatrix& data_rows() const { return data_rows_; }
  const std::vector<int>& erased_data() const { return erased_data_; }
  const std::vector<int>& erased_parity() const { return erased_parity_; }
  const BitMatrix& data_bits() const { return data_bits_; }
  const BitMatrix& parity_bits() const { return parity_bits_; }
  const GfMatrix& parity_rows() const { return parity_rows_; }

 private:
  std::vector<int> survivors_;
  std::vector<int> erased_data_;
  std::vector<int> erased_parity_;
  GfMatrix data_rows_;
  GfMatrix parity_rows_;
  BitMatrix data_bits_;
  BitMatrix parity_bits_;
};

// Drops erased rows, picks k survivors, inverts, multiplies; erased parity is
// then re-encoded from the full data set. Returns erased blocks in index order.
std::vector<Block> matrix_decode(const GeneratorMatrix& g, std::span<const ConstRegion> blocks,
                                 const ErasurePattern& erasures);

// Codec adapter for the three matrix realizations.
class MatrixCodec final : public Codec {
 public:
  MatrixCodec(CodecId id, GeneratorMatrix g, bool bitmatrix);

  std::size_t alignment() const override { return bitmatrix_ ? kBitPacketAlign : 1; }
  const GeneratorMatrix& generator() const { return g_; }
  const BitMatrix& parity_bits() const { return bits_; }

 protected:
  void do_encode(std::span<const ConstRegion> data, std::span<const Region> parity) const override;
  std::unique_ptr<DecodePlan> do_plan(const ErasurePattern& erasures) const override;
  void do_decode(const DecodePlan& plan, std::span<const ConstRegion> blocks, std::span<const Region> out) const override;

 private:
  GeneratorMatrix g_;
  bool bitmatrix_;
  BitMatrix bits_;
};

}  // namespace rsreal
