#include "rsreal/poly_rs.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>

namespace rsreal {
namespace {

// alpha has order 255, so the positions 0..n-1 need n <= 255 to stay
// distinct evaluation points.
void validate_poly_params(const CodingParams& p) {
  p.validate();
  if (p.n() > static_cast<int>(kGroupOrder)) {
    throw std::invalid_argument("polynomial realization needs k + m <= 255");
  }
}

constexpr std::size_t kPolyTile = 16 * 1024;

}  // namespace

GeneratorPolynomial::GeneratorPolynomial(const CodingParams& p) : params_(p), g_({1}) {
  validate_poly_params(p);
  for (int i = 0; i < p.m; ++i) g_ = poly_mul(g_, GfPolynomial({alpha_pow(i).value(), 1}));
}

GeneratorPolynomial build_generator_poly(const CodingParams& p) { return GeneratorPolynomial(p); }

void poly_encode(const GeneratorPolynomial& g, std::span<const ConstRegion> data, std::span<const Region> parity) {
  const auto& p = g.params();
  if (static_cast<int>(data.size()) != p.k || static_cast<int>(parity.size()) != p.m) {
    throw std::invalid_argument("bad stripe geometry");
  }
  const std::size_t len = parity.front().size();
  const auto m = static_cast<std::size_t>(p.m);

  // Remainder registers as a ring of buffers; reg[i] is the coefficient of x^i.
  std::vector<std::uint8_t> scratch(m * len, 0);
  std::vector<std::uint8_t*> reg(m);
  for (std::size_t i = 0; i < m; ++i) reg[i] = scratch.data() + i * len;

  const auto& coeffs = g.poly().coeffs();
  for (int j = p.k - 1; j >= 0; --j) {
    std::uint8_t* fb = reg[m - 1];
    region_xor(data[j], Region(fb, len));
    for (std::size_t i = m - 1; i >= 1; --i) {
      region_mul_const(ConstRegion(fb, len), coeffs[i], Region(reg[i - 1], len), true);
    }
    region_mul_const(ConstRegion(fb, len), coeffs[0], Region(fb, len), false);
    std::rotate(reg.begin(), reg.end() - 1, reg.end());
  }
  for (std::size_t i = 0; i < m; ++i) std::memcpy(parity[i].data(), reg[i], len);
}

PolyDecodePlan::PolyDecodePlan(const CodingParams& p, ErasurePattern erasures)
    : DecodePlan(std::move(erasures)), params_(p) {
  validate_poly_params(p);
  this->erasures().validate(p);

  for (int b : this->erasures().indices()) unknowns_.push_back(codeword_position(b, p));
  std::sort(unknowns_.begin(), unknowns_.end());
  for (int b = 0; b < p.n(); ++b) {
    if (!this->erasures().contains(b)) survivors_.push_back(b);
  }

  const int e = static_cast<int>(unknowns_.size());
  factors_ = GfMatrix(e, static_cast<int>(survivors_.size()));
  for (int j = 0; j < e; ++j) {
    for (std::size_t s = 0; s < survivors_.size(); ++s) {
      factors_.at(j, static_cast<int>(s)) = alpha_pow(static_cast<unsigned long long>(j) * codeword_position(survivors_[s], p));
    }
  }
  solve_ = GfMatrix(e, e);
  for (int j = 0; j < e; ++j) {
    for (int c = 0; c < e; ++c) solve_.at(j, c) = alpha_pow(static_cast<unsigned long long>(j) * unknowns_[c]);
  }
  if (e > 0) inverse_ = invert_matrix(solve_);
}

GfMatrix vandermonde_solve_matrix(const CodingParams& p, const ErasurePattern& erasures) {
  return PolyDecodePlan(p, erasures).solve_matrix();
}

namespace {

void check_blocks(const PolyDecodePlan& plan, std::span<const ConstRegion> blocks, std::size_t len) {
  if (static_cast<int>(blocks.size()) != plan.params().n()) throw std::invalid_argument("bad stripe geometry");
  for (int s : plan.survivor_blocks()) {
    if (blocks[s].size() != len) throw std::invalid_argument("bad stripe geometry");
  }
}

// Step 1 for bytes [off, off + len) into e regions of length len.
void step1_tile(const PolyDecodePlan& plan, std::span<const ConstRegion> blocks, std::size_t off, std::size_t len,
                std::span<const Region> values, Step1Counter* counter) {
  const auto& survivors = plan.survivor_blocks();
  const auto& p = plan.params();
  for (std::size_t j = 0; j < values.size(); ++j) {
    for (std::size_t s = 0; s < survivors.size(); ++s) {
      region_mul_const(blocks[survivors[s]].subspan(off, len),
                       plan.factors().at(static_cast<int>(j), static_cast<int>(s)), values[j], s > 0);
      if (counter && p.is_data(survivors[s])) counter->data_term_muls += len;
    }
  }
}

void step2_tile(const PolyDecodePlan& plan, std::span<const ConstRegion> values, std::span<const Region> unknowns) {
  for (std::size_t c = 0; c < unknowns.size(); ++c) {
    for (std::size_t j = 0; j < values.size(); ++j) {
      region_mul_const(values[j], plan.inverse().at(static_cast<int>(c), static_cast<int>(j)), unknowns[c], j > 0);
    }
  }
}

std::size_t survivor_length(const PolyDecodePlan& plan, std::span<const ConstRegion> blocks) {
  if (plan.survivor_blocks().empty() || static_cast<int>(blocks.size()) != plan.params().n()) {
    throw std::invalid_argument("bad stripe geometry");
  }
  return blocks[plan.survivor_blocks().front()].size();
}

}  // namespace

std::vector<Block> eval_error_evaluators(const PolyDecodePlan& plan, std::span<const ConstRegion> blocks,
                                         Step1Counter* counter) {
  const std::size_t len = survivor_length(plan, blocks);
  check_blocks(plan, blocks, len);
  std::vector<Block> values(plan.unknown_positions().size(), Block(len));
  std::vector<Region> views(values.begin(), values.end());
  step1_tile(plan, blocks, 0, len, views, counter);
  return values;
}

std::vector<Block> solve_erased(const PolyDecodePlan& plan, std::span<const ConstRegion> values) {
  if (values.size() != plan.unknown_positions().size()) throw std::invalid_argument("bad stripe geometry");
  if (values.empty()) return {};
  const std::size_t len = values.front().size();
  std::vector<Block> unknowns(values.size(), Block(len));
  std::vector<Region> views(unknowns.begin(), unknowns.end());
  step2_tile(plan, values, views);
  return unknowns;
}

void poly_decode_optimized(const PolyDecodePlan& plan, std::span<const ConstRegion> blocks,
                           std::span<const Region> out, Step1Counter* counter) {
  const auto& p = plan.params();
  const auto& unknowns = plan.unknown_positions();
  if (out.size() != unknowns.size()) throw std::invalid_argument("bad stripe geometry");
  if (unknowns.empty()) return;
  const std::size_t len = survivor_length(plan, blocks);
  check_blocks(plan, blocks, len);

  // Unknown c (position order) lands in output slot slot[c] (block order).
  const auto& erased = plan.erasures().indices();
  std::vector<std::size_t> slot(unknowns.size());
  for (std::size_t c = 0; c < unknowns.size(); ++c) {
    const int block = block_at_position(unknowns[c], p);
    slot[c] = static_cast<std::size_t>(std::lower_bound(erased.begin(), erased.end(), block) - erased.begin());
    if (out[slot[c]].size() != len) throw std::invalid_argument("bad stripe geometry");
  }

  const std::size_t tile = std::min(len, kPolyTile);
  std::vector<std::uint8_t> scratch(unknowns.size() * tile);
  std::vector<Region> values(unknowns.size());
  std::vector<ConstRegion> cvalues(unknowns.size());
  std::vector<Region> targets(unknowns.size());

  for (std::size_t off = 0; off < len; off += tile) {
    const std::size_t chunk = std::min(tile, len - off);
    for (std::size_t j = 0; j < values.size(); ++j) {
      values[j] = Region(scratch.data() + j * tile, chunk);
      cvalues[j] = values[j];
    }
    for (std::size_t c = 0; c < targets.size(); ++c) targets[c] = out[slot[c]].subspan(off, chunk);
    step1_tile(plan, blocks, off, chunk, values, counter);
    step2_tile(plan, cvalues, targets);
  }
}

void encode_via_decode(const PolyDecodePlan& all_parity_plan, std::span<const ConstRegion> data,
                       std::span<const Region> parity) {
  const auto& p = all_parity_plan.params();
  if (static_cast<int>(data.size()) != p.k || static_cast<int>(parity.size()) != p.m ||
      all_parity_plan.erasures().data_count(p) != 0 || static_cast<int>(all_parity_plan.erasures().size()) != p.m) {
    throw std::invalid_argument("bad stripe geometry");
  }
  std::vector<ConstRegion> blocks(p.n());
  std::copy(data.begin(), data.end(), blocks.begin());
  poly_decode_optimized(all_parity_plan, blocks, parity);
}

namespace {

ErasurePattern all_parity(const CodingParams& p) {
  std::vector<int> idx;
  for (int i = p.k; i < p.n(); ++i) idx.push_back(i);
  return ErasurePattern(std::move(idx));
}

}  // namespace

std::vector<Block> encode_via_decode(const CodingParams& p, std::span<const ConstRegion> data) {
  if (data.empty()) throw std::invalid_argument("bad stripe geometry");
  PolyDecodePlan plan(p, all_parity(p));
  std::vector<Block> parity(p.m, Block(data.front().size()));
  std::vector<Region> views(parity.begin(), parity.end());
  encode_via_decode(plan, data, views);
  return parity;
}

namespace baseline {
namespace {

struct GaussScratch {
  std::vector<int> signature;
  std::vector<int> aug;  // e rows of e + 1 columns
};

void solve_in_place(std::vector<int>& values, std::span<const int> unknowns, GaussScratch& s) {
  const auto& mul = gf_mul_table();
  const auto& t = gf_tables();
  const std::size_t e = unknowns.size();
  const std::size_t w = e + 1;
  s.signature.resize(e);
  s.aug.assign(e * w, 0);

  for (std::size_t c = 0; c < e; ++c) {
    s.signature[c] = t.exp[static_cast<std::size_t>(unknowns[c]) % kGroupOrder];
    s.aug[c] = 1;
  }
  for (std::size_t j = 1; j < e; ++j) {
    for (std::size_t c = 0; c < e; ++c) s.aug[j * w + c] = mul[s.aug[(j - 1) * w + c]][s.signature[c]];
  }
  for (std::size_t j = 0; j < e; ++j) s.aug[j * w + e] = values[j];

  for (std::size_t col = 0; col < e; ++col) {
    std::size_t pivot = col;
    while (pivot < e && s.aug[pivot * w + col] == 0) ++pivot;
    if (pivot == e) throw std::domain_error("singular matrix");
    if (pivot != col) {
      for (std::size_t c = 0; c < w; ++c) std::swap(s.aug[pivot * w + c], s.aug[col * w + c]);
    }
    const int inv = gf_inv(GfElement(static_cast<std::uint8_t>(s.aug[col * w + col]))).value();
    for (std::size_t c = col; c < w; ++c) s.aug[col * w + c] = mul[inv][s.aug[col * w + c]];
    for (std::size_t r = 0; r < e; ++r) {
      if (r == col) continue;
      const int f = s.aug[r * w + col];
      if (f == 0) continue;
      for (std::size_t c = col; c < w; ++c) s.aug[r * w + c] ^= mul[f][s.aug[col * w + c]];
    }
  }
  for (std::size_t j = 0; j < e; ++j) values[j] = s.aug[j * w + e];
}

void eval_into(const std::vector<int>& codeword, std::size_t equations, const CodingParams& p,
               std::vector<int>& values, Step1Counter* counter) {
  const auto& mul = gf_mul_table();
  const auto& t = gf_tables();
  values.resize(equations);
  for (std::size_t j = 0; j < equations; ++j) {
    const int x = t.exp[j % kGroupOrder];
    int result = 0;
    int y = 1;
    for (int v : codeword) {
      result ^= mul[v][y];
      y = mul[x][y];
    }
    values[j] = result;
    if (counter) counter->data_term_muls += static_cast<std::uint64_t>(p.k);
  }
}

}  // namespace

std::vector<int> eval_error_evaluators(const std::vector<int>& codeword, std::span<const int> unknown_positions,
                                       const CodingParams& p, Step1Counter* counter) {
  if (static_cast<int>(codeword.size()) != p.n()) throw std::invalid_argument("bad stripe geometry");
  std::vector<int> values;
  eval_into(codeword, unknown_positions.size(), p, values, counter);
  return values;
}

std::vector<int> solve_erased(std::span<const int> values, std::span<const int> unknown_positions) {
  if (values.size() != unknown_positions.size()) throw std::invalid_argument("bad stripe geometry");
  std::vector<int> x(values.begin(), values.end());
  GaussScratch scratch;
  solve_in_place(x, unknown_positions, scratch);
  return x;
}

void encode_vector(const GeneratorPolynomial& g, std::vector<int>& work, std::vector<int>& parity_out) {
  const auto& mul = gf_mul_table();
  const auto& coeffs = g.poly().coeffs();
  std::vector<int> divisor(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) divisor[i] = coeffs[i].value();
  const std::size_t dl = divisor.size();
  const int lead = divisor.back();
  for (std::size_t i = work.size() - dl + 1; i-- > 0;) {
    const int ratio = gf_div(GfElement(static_cast<std::uint8_t>(work[i + dl - 1])),
                             GfElement(static_cast<std::uint8_t>(lead)))
                          .value();
    for (std::size_t j = 0; j < dl; ++j) work[i + j] ^= mul[ratio][divisor[j]];
  }
  parity_out.assign(work.begin(), work.begin() + static_cast<std::ptrdiff_t>(dl - 1));
}

void encode(const GeneratorPolynomial& g, std::span<const ConstRegion> data, std::span<const Region> parity) {
  const auto& p = g.params();
  if (static_cast<int>(data.size()) != p.k || static_cast<int>(parity.size()) != p.m) {
    throw std::invalid_argument("bad stripe geometry");
  }
  const std::size_t len = parity.front().size();
  std::vector<int> work(p.n());
  std::vector<int> out;
  for (std::size_t o = 0; o < len; ++o) {
    std::fill(work.begin(), work.begin() + p.m, 0);
    for (int i = 0; i < p.k; ++i) work[p.m + i] = data[i][o];
    encode_vector(g, work, out);
    for (int j = 0; j < p.m; ++j) parity[j][o] = static_cast<std::uint8_t>(out[j]);
  }
}

void decode(const GeneratorPolynomial& g, const ErasurePattern& erasures, std::span<const ConstRegion> blocks,
            std::span<const Region> out, Step1Counter* counter) {
  const auto& p = g.params();
  erasures.validate(p);
  if (static_cast<int>(blocks.size()) != p.n() || out.size() != erasures.size()) {
    throw std::invalid_argument("bad stripe geometry");
  }
  if (erasures.empty()) return;
  const std::size_t len = out.front().size();
  const auto& erased = erasures.indices();

  if (erasures.data_count(p) == 0) {
    std::vector<int> work(p.n());
    std::vector<int> parity;
    for (std::size_t o = 0; o < len; ++o) {
      std::fill(work.begin(), work.begin() + p.m, 0);
      for (int i = 0; i < p.k; ++i) work[p.m + i] = blocks[i][o];
      encode_vector(g, work, parity);
      for (std::size_t e = 0; e < erased.size(); ++e) out[e][o] = static_cast<std::uint8_t>(parity[erased[e] - p.k]);
    }
    return;
  }

  std::vector<int> unknowns;
  for (int b : erased) unknowns.push_back(codeword_position(b, p));
  std::sort(unknowns.begin(), unknowns.end());
  std::vector<std::size_t> slot(unknowns.size());
  for (std::size_t c = 0; c < unknowns.size(); ++c) {
    const int block = block_at_position(unknowns[c], p);
    slot[c] = static_cast<std::size_t>(std::lower_bound(erased.begin(), erased.end(), block) - erased.begin());
  }

  // Surviving symbol source per codeword position; erased positions read 0.
  std::vector<const std::uint8_t*> source(p.n(), nullptr);
  for (int pos = 0; pos < p.n(); ++pos) {
    const int block = block_at_position(pos, p);
    if (!erasures.contains(block)) source[pos] = blocks[block].data();
  }

  std::vector<int> codeword(p.n());
  std::vector<int> values;
  GaussScratch scratch;
  for (std::size_t o = 0; o < len; ++o) {
    for (int pos = 0; pos < p.n(); ++pos) codeword[pos] = source[pos] ? source[pos][o] : 0;
    eval_into(codeword, unknowns.size(), p, values, counter);
    solve_in_place(values, unknowns, scratch);
    for (std::size_t c = 0; c < unknowns.size(); ++c) out[slot[c]][o] = static_cast<std::uint8_t>(values[c]);
  }
}

}  // namespace baseline

std::vector<Block> poly_decode(PolyVariant variant, const CodingParams& p, std::span<const ConstRegion> blocks,
                               const ErasurePattern& erasures) {
  const CodecId id = variant == PolyVariant::Baseline ? CodecId::PolyRS : CodecId::OptPolyRS;
  return PolyCodec(id, p, variant).decode(blocks, erasures);
}

PolyCodec::PolyCodec(CodecId id, const CodingParams& p, PolyVariant variant)
    : Codec(id, p), variant_(variant), g_(p) {
  if (variant_ == PolyVariant::Optimized) encode_plan_ = std::make_unique<PolyDecodePlan>(p, all_parity(p));
}

void PolyCodec::do_encode(std::span<const ConstRegion> data, std::span<const Region> parity) const {
  if (variant_ == PolyVariant::Baseline) {
    baseline::encode(g_, data, parity);
  } else {
    encode_via_decode(*encode_plan_, data, parity);
  }
}

std::unique_ptr<DecodePlan> PolyCodec::do_plan(const ErasurePattern& erasures) const {
  if (variant_ == PolyVariant::Baseline) {
    erasures.validate(params());
    return std::make_unique<DecodePlan>(erasures);
  }
  return std::make_unique<PolyDecodePlan>(params(), erasures);
}

void PolyCodec::do_decode(const DecodePlan& plan, std::span<const ConstRegion> blocks,
                          std::span<const Region> out) const {
  if (variant_ == PolyVariant::Baseline) {
    baseline::decode(g_, plan.erasures(), blocks, out);
  } else {
    poly_decode_optimized(dynamic_cast<const PolyDecodePlan&>(plan), blocks, out);
  }
}

}  // namespace rsreal
