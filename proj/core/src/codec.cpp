#include "rsreal/codec.hpp"

#include <algorithm>

#include "rsreal/matrix_rs.hpp"
#include "rsreal/poly_rs.hpp"

namespace rsreal {

void CodingParams::validate() const {
  if (w != static_cast<int>(kWordBits)) throw std::invalid_argument("only w = 8 is supported");
  if (k < 1 || m < 1 || k + m > static_cast<int>(kFieldSize)) {
    throw std::invalid_argument("invalid coding parameters: need k >= 1, m >= 1, k + m <= 256");
  }
}

namespace {

struct CodecNameEntry {
  CodecId id;
  std::string_view name;
};

constexpr CodecNameEntry kCodecNames[] = {
    {CodecId::OrigCRS, "orig-crs"},     {CodecId::GoodCRS, "good-crs"},        {CodecId::VanderRS, "vander-rs"},
    {CodecId::PolyRS, "poly-rs"},       {CodecId::OptPolyRS, "opt-poly-rs"},
};

}  // namespace

std::string_view codec_name(CodecId id) {
  for (const auto& e : kCodecNames) {
    if (e.id == id) return e.name;
  }
  return "unknown";
}

std::optional<CodecId> parse_codec(std::string_view name) {
  for (const auto& e : kCodecNames) {
    if (e.name == name) return e.id;
  }
  return std::nullopt;
}

ErasurePattern::ErasurePattern(std::vector<int> erased) : erased_(std::move(erased)) {
  std::sort(erased_.begin(), erased_.end());
  if (std::adjacent_find(erased_.begin(), erased_.end()) != erased_.end()) {
    throw std::invalid_argument("duplicate erasure index");
  }
  if (!erased_.empty() && erased_.front() < 0) throw std::invalid_argument("negative erasure index");
}

bool ErasurePattern::contains(int block) const { return std::binary_search(erased_.begin(), erased_.end(), block); }

std::size_t ErasurePattern::data_count(const CodingParams& p) const {
  return static_cast<std::size_t>(std::lower_bound(erased_.begin(), erased_.end(), p.k) - erased_.begin());
}

void ErasurePattern::validate(const CodingParams& p) const {
  if (static_cast<int>(erased_.size()) > p.m) throw std::invalid_argument("too many erasures");
  if (!erased_.empty() && erased_.back() >= p.n()) throw std::invalid_argument("erasure index out of range");
}

std::vector<ConstRegion> Stripe::views() const {
  std::vector<ConstRegion> v;
  v.reserve(data.size() + parity.size());
  for (const auto& b : data) v.emplace_back(b);
  for (const auto& b : parity) v.emplace_back(b);
  return v;
}

Codec::Codec(CodecId id, CodingParams params) : id_(id), params_(params) { params_.validate(); }

std::size_t Codec::check_blocks(std::span<const ConstRegion> blocks, const ErasurePattern* skip) const {
  std::size_t len = 0;
  bool first = true;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (skip && skip->contains(static_cast<int>(i))) continue;
    if (first) {
      len = blocks[i].size();
      first = false;
    } else if (blocks[i].size() != len) {
      throw std::invalid_argument("bad stripe geometry");
    }
  }
  if (first || len == 0 || len % alignment() != 0) throw std::invalid_argument("bad stripe geometry");
  return len;
}

void Codec::encode_into(std::span<const ConstRegion> data, std::span<const Region> parity) const {
  if (static_cast<int>(data.size()) != params_.k || static_cast<int>(parity.size()) != params_.m) {
    throw std::invalid_argument("bad stripe geometry");
  }
  const std::size_t len = check_blocks(data, nullptr);
  for (auto r : parity) {
    if (r.size() != len) throw std::invalid_argument("bad stripe geometry");
  }
  do_encode(data, parity);
}

std::vector<Block> Codec::encode(std::span<const ConstRegion> data) const {
  const std::size_t len = check_blocks(data, nullptr);
  std::vector<Block> parity(params_.m, Block(len));
  std::vector<Region> views(parity.begin(), parity.end());
  encode_into(data, views);
  return parity;
}

std::unique_ptr<DecodePlan> Codec::plan_decode(const ErasurePattern& erasures) const {
  erasures.validate(params_);
  return do_plan(erasures);
}

std::vector<Block> Codec::decode(std::span<const ConstRegion> blocks, const ErasurePattern& erasures) const {
  erasures.validate(params_);
  if (erasures.empty()) return {};
  return decode(*plan_decode(erasures), blocks);
}

std::vector<Block> Codec::decode(const DecodePlan& plan, std::span<const ConstRegion> blocks) const {
  const auto& erasures = plan.erasures();
  erasures.validate(params_);
  if (static_cast<int>(blocks.size()) != params_.n()) throw std::invalid_argument("bad stripe geometry");
  if (erasures.empty()) return {};
  const std::size_t len = check_blocks(blocks, &erasures);
  std::vector<Block> out(erasures.size(), Block(len));
  std::vector<Region> views(out.begin(), out.end());
  do_decode(plan, blocks, views);
  return out;
}

std::unique_ptr<Codec> make_codec(CodecId id, const CodingParams& params) {
  switch (id) {
    case CodecId::OrigCRS:
      return std::make_unique<MatrixCodec>(id, cauchy_generator(params, default_cauchy_sets(params)), true);
    case CodecId::GoodCRS:
      return std::make_unique<MatrixCodec>(id, good_cauchy_generator(params), true);
    case CodecId::VanderRS:
      return std::make_unique<MatrixCodec>(id, vandermonde_generator(params), false);
    case CodecId::PolyRS:
      return std::make_unique<PolyCodec>(id, params, PolyVariant::Baseline);
    case CodecId::OptPolyRS:
      return std::make_unique<PolyCodec>(id, params, PolyVariant::Optimized);
  }
  throw std::invalid_argument("unknown codec");
}

std::vector<Block> encode(CodecId id, const CodingParams& params, std::span<const ConstRegion> data) {
  return make_codec(id, params)->encode(data);
}

std::vector<Block> decode(CodecId id, const CodingParams& params, std::span<const ConstRegion> blocks,
                          const ErasurePattern& erasures) {
  return make_codec(id, params)->decode(blocks, erasures);
}

}  // namespace rsreal
