#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rsreal/codec.hpp"
#include "rsreal/gf256.hpp"
#include "rsreal/matrix_rs.hpp"

namespace rsreal {

// g(x) = (x + alpha^0)(x + alpha^1)...(x + alpha^(m-1)), monic of degree m.
class GeneratorPolynomial {
 public:
  explicit GeneratorPolynomial(const CodingParams& p);

  const CodingParams& params() const { return params_; }
  const GfPolynomial& poly() const { return g_; }

 private:
  CodingParams params_;
  GfPolynomial g_;
};

GeneratorPolynomial build_generator_poly(const CodingParams& p);

// Codeword layout: parity block j is the coefficient of x^j and data block i
// the coefficient of x^(m+i).
inline int codeword_position(int block, const CodingParams& p) { return p.is_data(block) ? p.m + block : block - p.k; }
inline int block_at_position(int pos, const CodingParams& p) { return pos < p.m ? p.k + pos : pos - p.m; }

// Parity = d(x) * x^m mod g(x) per byte offset, as a shift-register division
// streamed over whole data blocks with region kernels.
void poly_encode(const GeneratorPolynomial& g, std::span<const ConstRegion> data, std::span<const Region> parity);

// Multiplications spent on surviving data terms while evaluating D(alpha^j).
// One unit is one GF multiply of one byte.
struct Step1Counter {
  std::uint64_t data_term_muls = 0;
};

// Everything about one erasure pattern that does not depend on block bytes:
// evaluation factors for the surviving positions and the inverted solve
// matrix.
//
// The unknowns are the erased codeword positions u_0 < u_1 < ...; equation j
// (j = 0..e-1) reads D(alpha^j) = sum over unknowns c of alpha^(j*u_c) * c_u.
// With only data erased this is the t x t system over alpha^0..alpha^(t-1).
class PolyDecodePlan : public DecodePlan {
 public:
  PolyDecodePlan(const CodingParams& p, ErasurePattern erasures);

  const CodingParams& params() const { return params_; }
  // Erased codeword positions, ascending; same order as erasures().indices()
  // mapped through codeword_position, then sorted.
  const std::vector<int>& unknown_positions() const { return unknowns_; }
  // Surviving block indices in the order their factors are stored.
  const std::vector<int>& survivor_blocks() const { return survivors_; }
  // factors(j, s) = alpha^(j * position of survivor s).
  const GfMatrix& factors() const { return factors_; }
  // V[j][c] = alpha^(j * u_c).
  const GfMatrix& solve_matrix() const { return solve_; }
  const GfMatrix& inverse() const { return inverse_; }

 private:
  CodingParams params_;
  std::vector<int> unknowns_;
  std::vector<int> survivors_;
  GfMatrix factors_;
  GfMatrix solve_;
  GfMatrix inverse_;
};

GfMatrix vandermonde_solve_matrix(const CodingParams& p, const ErasurePattern& erasures);

// Step 1 over whole regions: one output region per equation, byte o of
// region j being D(alpha^j) at offset o. Erased positions are never touched.
std::vector<Block> eval_error_evaluators(const PolyDecodePlan& plan, std::span<const ConstRegion> blocks,
                                         Step1Counter* counter = nullptr);

// Step 2 over whole regions: unknown values (in unknown_positions order) from
// the Step 1 regions, one inverse-matrix product per byte offset.
std::vector<Block> solve_erased(const PolyDecodePlan& plan, std::span<const ConstRegion> values);

// Both steps, pipelined over cache-sized tiles. Writes one region per erased
// block in ascending block order.
void poly_decode_optimized(const PolyDecodePlan& plan, std::span<const ConstRegion> blocks,
                           std::span<const Region> out, Step1Counter* counter = nullptr);

// Per-vector routines mirroring the HDFS-RAID algorithm: int-per-symbol
// arrays, powers rebuilt by repeated multiplication for every vector, and a
// fresh Gaussian elimination for every vector.
namespace baseline {

// codeword holds n symbols in position order with erased entries zeroed.
// Returns one value per equation j = 0..|unknowns|-1.
std::vector<int> eval_error_evaluators(const std::vector<int>& codeword, std::span<const int> unknown_positions,
                                       const CodingParams& p, Step1Counter* counter = nullptr);

// Gaussian elimination on V x = values. Throws std::domain_error if V is
// singular.
std::vector<int> solve_erased(std::span<const int> values, std::span<const int> unknown_positions);

// Remainder of the symbol vector (m zeros then the data) by g(x).
void encode_vector(const GeneratorPolynomial& g, std::vector<int>& work, std::vector<int>& parity_out);

void encode(const GeneratorPolynomial& g, std::span<const ConstRegion> data, std::span<const Region> parity);
void decode(const GeneratorPolynomial& g, const ErasurePattern& erasures, std::span<const ConstRegion> blocks,
            std::span<const Region> out, Step1Counter* counter = nullptr);

}  // namespace baseline

enum class PolyVariant { Baseline, Optimized };

std::vector<Block> poly_decode(PolyVariant variant, const CodingParams& p, std::span<const ConstRegion> blocks,
                               const ErasurePattern& erasures);

// Parity through the decoder: all m parity blocks are treated as erased.
void encode_via_decode(const PolyDecodePlan& all_parity_plan, std::span<const ConstRegion> data,
                       std::span<const Region> parity);
std::vector<Block> encode_via_decode(const CodingParams& p, std::span<const ConstRegion> data);

class PolyCodec final : public Codec {
 public:
  PolyCodec(CodecId id, const CodingParams& p, PolyVariant variant);

  PolyVariant variant() const { return variant_; }
  const GeneratorPolynomial& generator() const { return g_; }

 protected:
  void do_encode(std::span<const ConstRegion> data, std::span<const Region> parity) const override;
  std::unique_ptr<DecodePlan> do_plan(const ErasurePattern& erasures) const override;
  void do_decode(const DecodePlan& plan, std::span<const ConstRegion> blocks, std::span<const Region> out) const override;

 private:
  PolyVariant variant_;
  GeneratorPolynomial g_;
  std::unique_ptr<PolyDecodePlan> encode_plan_;
};

}  // namespace rsreal
