#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rsreal/regions.hpp"

namespace rsreal {

// Scheme RS(k, m) over GF(2^w). Block indices 0..k-1 are data and k..k+m-1
// are parity everywhere in the library.
struct CodingParams {
  int k = 0;
  int m = 0;
  int w = static_cast<int>(kWordBits);

  int n() const { return k + m; }
  bool is_data(int block) const { return block < k; }

  // Throws std::invalid_argument unless k >= 1, m >= 1, k + m <= 2^w, w == 8.
  void validate() const;
};

enum class CodecId { OrigCRS, GoodCRS, VanderRS, PolyRS, OptPolyRS };

inline constexpr CodecId kAllCodecs[] = {CodecId::OrigCRS, CodecId::GoodCRS, CodecId::VanderRS,
                                         CodecId::PolyRS, CodecId::OptPolyRS};

// Command-line spelling: orig-crs, good-crs, vander-rs, poly-rs, opt-poly-rs.
std::string_view codec_name(CodecId id);
std::optional<CodecId> parse_codec(std::string_view name);

using Block = std::vector<std::uint8_t>;

// Sorted set of erased block indices.
class ErasurePattern {
 public:
  ErasurePattern() = default;
  // Throws std::invalid_argument on duplicate or negative indices.
  explicit ErasurePattern(std::vector<int> erased);

  const std::vector<int>& indices() const { return erased_; }
  std::size_t size() const { return erased_.size(); }
  bool empty() const { return erased_.empty(); }
  bool contains(int block) const;
  std::size_t data_count(const CodingParams& p) const;

  // Throws std::invalid_argument("too many erasures") when more than m blocks
  // are erased, and for indices outside [0, n).
  void validate(const CodingParams& p) const;

  friend bool operator==(const ErasurePattern&, const ErasurePattern&) = default;

 private:
  std::vector<int> erased_;
};

// Views of blocks in index order.
struct Stripe {
  std::vector<Block> data;
  std::vector<Block> parity;

  std::vector<ConstRegion> views() const;
};

// Per-erasure-pattern state a codec precomputes before touching block bytes.
class DecodePlan {
 public:
  explicit DecodePlan(ErasurePattern erasures) : erasures_(std::move(erasures)) {}
  virtual ~DecodePlan() = default;
  const ErasurePattern& erasures() const { return erasures_; }

 private:
  ErasurePattern erasures_;
};

// Uniform interface over all realizations. Instances are immutable after
// construction; encode and decode may run concurrently on distinct stripes.
class Codec {
 public:
  Codec(CodecId id, CodingParams params);
  virtual ~Codec() = default;

  CodecId id() const { return id_; }
  const CodingParams& params() const { return params_; }
  // Block lengths must be a positive multiple of this.
  virtual std::size_t alignment() const { return 1; }

  std::vector<Block> encode(std::span<const ConstRegion> data) const;
  void encode_into(std::span<const ConstRegion> data, std::span<const Region> parity) const;

  std::unique_ptr<DecodePlan> plan_decode(const ErasurePattern& erasures) const;

  // blocks holds all n blocks in index order; entries for erased indices are
  // ignored and may be empty. Returns the erased blocks in ascending index
  // order.
  std::vector<Block> decode(std::span<const ConstRegion> blocks, const ErasurePattern& erasures) const;
  std::vector<Block> decode(const DecodePlan& plan, std::span<const ConstRegion> blocks) const;

 protected:
  virtual void do_encode(std::span<const ConstRegion> data, std::span<const Region> parity) const = 0;
  virtual std::unique_ptr<DecodePlan> do_plan(const ErasurePattern& erasures) const = 0;
  virtual void do_decode(const DecodePlan& plan, std::span<const ConstRegion> blocks,
                         std::span<const Region> out) const = 0;

 private:
  std::size_t check_blocks(std::span<const ConstRegion> blocks, const ErasurePattern* skip) const;

  CodecId id_;
  CodingParams params_;
};

std::unique_ptr<Codec> make_codec(CodecId id, const CodingParams& params);

std::vector<Block> encode(CodecId id, const CodingParams& params, std::span<const ConstRegion> data);
std::vector<Block> decode(CodecId id, const CodingParams& params, std::span<const ConstRegion> blocks,
                          const ErasurePattern& erasures);

}  // namespace rsreal
