#include <benchmark/benchmark.h>

#include <random>

#include "rsreal/codec.hpp"
#include "rsreal/regions.hpp"

using namespace rsreal;

namespace {

std::vector<Block> random_blocks(int count, std::size_t len) {
  std::mt19937_64 rng(1);
  std::vector<Block> out(count, Block(len));
  for (auto& b : out) {
    for (auto& v : b) v = static_cast<std::uint8_t>(rng());
  }
  return out;
}

void BM_RegionMulAccumulate(benchmark::State& state) {
  const auto len = static_cast<std::size_t>(state.range(0));
  auto b = random_blocks(2, len);
  for (auto _ : state) {
    region_mul_const(b[0], GfElement{29}, b[1], true);
    benchmark::DoNotOptimize(b[1].data());
  }
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * len));
}
BENCHMARK(BM_RegionMulAccumulate)->Arg(4096)->Arg(1 << 20);

void BM_RegionXor(benchmark::State& state) {
  const auto len = static_cast<std::size_t>(state.range(0));
  auto b = random_blocks(2, len);
  for (auto _ : state) {
    region_xor(b[0], b[1]);
    benchmark::DoNotOptimize(b[1].data());
  }
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * len));
}
BENCHMARK(BM_RegionXor)->Arg(4096)->Arg(1 << 20);

constexpr std::size_t kBlock = 256 * 1024;

void BM_Encode(benchmark::State& state) {
  const auto id = static_cast<CodecId>(state.range(0));
  const CodingParams p{10, 4};
  const auto codec = make_codec(id, p);
  const auto data = random_blocks(p.k, kBlock);
  const std::vector<ConstRegion> views(data.begin(), data.end());
  std::vector<Block> parity(p.m, Block(kBlock));
  const std::vector<Region> out(parity.begin(), parity.end());
  for (auto _ : state) codec->encode_into(views, out);
  state.SetLabel(std::string(codec_name(id)));
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * p.k * kBlock));
}

void BM_Decode(benchmark::State& state) {
  const auto id = static_cast<CodecId>(state.range(0));
  const int erasures = static_cast<int>(state.range(1));
  const CodingParams p{10, 4};
  const auto codec = make_codec(id, p);
  auto all = random_blocks(p.k, kBlock);
  for (auto& b : codec->encode(std::vector<ConstRegion>(all.begin(), all.end()))) all.push_back(std::move(b));
  std::vector<int> erased(erasures);
  for (int i = 0; i < erasures; ++i) erased[i] = i;
  const auto plan = codec->plan_decode(ErasurePattern(erased));
  const std::vector<ConstRegion> views(all.begin(), all.end());
  for (auto _ : state) benchmark::DoNotOptimize(codec->decode(*plan, views));
  state.SetLabel(std::string(codec_name(id)));
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * p.k * kBlock));
}

void codec_args(benchmark::internal::Benchmark* b) {
  for (auto id : kAllCodecs) b->Arg(static_cast<int>(id));
}

void codec_erasure_args(benchmark::internal::Benchmark* b) {
  for (auto id : kAllCodecs) {
    for (int e : {1, 4}) b->Args({static_cast<int>(id), e});
  }
}

BENCHMARK(BM_Encode)->Apply(codec_args)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Decode)->Apply(codec_erasure_args)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
