#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "rsreal/oracle.hpp"
#include "rsreal/poly_rs.hpp"
#include "test_util.hpp"

using namespace rsreal;

namespace {

std::vector<Block> worked_data() { return {{48}, {6}, {112}, {70}}; }

TEST(PolyRs, GeneratorPolynomials) {
  EXPECT_EQ(build_generator_poly(CodingParams{4, 1}).poly(), GfPolynomial({1, 1}));
  EXPECT_EQ(build_generator_poly(CodingParams{4, 3}).poly(), GfPolynomial({8, 14, 7, 1}));
  for (int m = 1; m <= 8; ++m) {
    const auto g = build_generator_poly(CodingParams{10, m});
    EXPECT_EQ(g.poly().degree(), m);
    EXPECT_EQ(g.poly().leading().value(), 1);
    for (int i = 0; i < m; ++i) EXPECT_TRUE(g.poly().eval(alpha_pow(i)).is_zero()) << m << ' ' << i;
  }
}

TEST(PolyRs, RejectsMoreThan255Symbols) {
  EXPECT_THROW(build_generator_poly(CodingParams{250, 6}), std::invalid_argument);
  EXPECT_NO_THROW(build_generator_poly(CodingParams{250, 5}));
}

TEST(PolyRs, PositionMapping) {
  const CodingParams p{4, 3};
  EXPECT_EQ(codeword_position(0, p), 3);
  EXPECT_EQ(codeword_position(4, p), 0);
  for (int b = 0; b < p.n(); ++b) EXPECT_EQ(block_at_position(codeword_position(b, p), p), b);
}

TEST(PolyRs, WorkedEncode) {
  const CodingParams p{4, 3};
  const auto data = worked_data();
  std::vector<Block> parity(3, Block(1));
  poly_encode(build_generator_poly(p), testutil::views(data), testutil::mutable_views(parity));
  EXPECT_EQ(parity, (std::vector<Block>{{243}, {125}, {142}}));
  EXPECT_EQ(encode_via_decode(p, testutil::views(data)), parity);

  std::vector<Block> base(3, Block(1));
  baseline::encode(build_generator_poly(p), testutil::views(data), testutil::mutable_views(base));
  EXPECT_EQ(base, parity);
}

TEST(PolyRs, WorkedDecode) {
  const CodingParams p{4, 3};
  const auto all = testutil::full_stripe(worked_data(), {{243}, {125}, {142}});
  const PolyDecodePlan plan(p, ErasurePattern({0, 1, 2}));
  EXPECT_EQ(plan.unknown_positions(), (std::vector<int>{3, 4, 5}));

  const int rows[3][3] = {{1, 1, 1}, {8, 16, 32}, {64, 29, 116}};
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) EXPECT_EQ(plan.solve_matrix().at(r, c).value(), rows[r][c]);
  }

  const auto d = eval_error_evaluators(plan, testutil::views(all));
  EXPECT_EQ(d, (std::vector<Block>{{70}, {91}, {171}}));
  EXPECT_EQ(solve_erased(plan, testutil::views(d)), (std::vector<Block>{{48}, {6}, {112}}));

  std::vector<int> codeword(7, 0);
  for (int b = 3; b < 7; ++b) codeword[codeword_position(b, p)] = all[b][0];
  EXPECT_EQ(baseline::eval_error_evaluators(codeword, plan.unknown_positions(), p), (std::vector<int>{70, 91, 171}));
  EXPECT_EQ(baseline::solve_erased(std::vector<int>{70, 91, 171}, plan.unknown_positions()),
            (std::vector<int>{48, 6, 112}));

  for (auto v : {PolyVariant::Baseline, PolyVariant::Optimized}) {
    EXPECT_EQ(poly_decode(v, p, testutil::views(all), ErasurePattern({0, 1, 2})),
              (std::vector<Block>{{48}, {6}, {112}}));
  }
}

TEST(PolyRs, OptimizedStepOneSkipsErasedDataTerms) {
  const CodingParams p{10, 4};
  constexpr std::size_t kLen = 64;
  std::mt19937_64 rng(21);
  const auto data = testutil::random_blocks(p.k, kLen, rng);
  const auto all = testutil::full_stripe(data, encode_via_decode(p, testutil::views(data)));
  for (int t = 1; t <= 4; ++t) {
    std::vector<int> erased(t);
    for (int i = 0; i < t; ++i) erased[i] = 2 * i;
    const ErasurePattern pattern(erased);
    const PolyDecodePlan plan(p, pattern);
    Step1Counter opt;
    std::vector<Block> out(t, Block(kLen));
    poly_decode_optimized(plan, testutil::views(all), testutil::mutable_views(out), &opt);
    EXPECT_EQ(opt.data_term_muls, static_cast<std::uint64_t>(t) * (p.k - t) * kLen);

    Step1Counter base;
    std::vector<Block> out2(t, Block(kLen));
    baseline::decode(build_generator_poly(p), pattern, testutil::views(all), testutil::mutable_views(out2), &base);
    EXPECT_EQ(base.data_term_muls, static_cast<std::uint64_t>(t) * p.k * kLen);
    EXPECT_EQ(out, out2);
  }
}

TEST(PolyRs, BaselineAndOptimizedAgreeOnRandomCases) {
  std::mt19937_64 rng(22);
  std::uniform_int_distribution<int> kd(1, 20), md(1, 6), ld(1, 300);
  for (int trial = 0; trial < 200; ++trial) {
    const CodingParams p{kd(rng), md(rng)};
    const std::size_t len = ld(rng);
    const auto data = testutil::random_blocks(p.k, len, rng);
    std::vector<Block> parity(p.m, Block(len));
    poly_encode(build_generator_poly(p), testutil::views(data), testutil::mutable_views(parity));
    const auto all = testutil::full_stripe(data, parity);
    std::uniform_int_distribution<int> ed(1, p.m);
    const ErasurePattern pattern(testutil::random_erasures(p.n(), ed(rng), rng));
    const auto a = poly_decode(PolyVariant::Baseline, p, testutil::views(all), pattern);
    const auto b = poly_decode(PolyVariant::Optimized, p, testutil::views(all), pattern);
    ASSERT_EQ(a, b) << "k=" << p.k << " m=" << p.m;
    for (std::size_t i = 0; i < pattern.size(); ++i) ASSERT_EQ(a[i], all[pattern.indices()[i]]);
  }
}

TEST(PolyRs, PlanReuseOverSlices) {
  const CodingParams p{6, 3};
  std::mt19937_64 rng(23);
  const auto data = testutil::random_blocks(p.k, 200, rng);
  const auto all = testutil::full_stripe(data, encode_via_decode(p, testutil::views(data)));
  const PolyDecodePlan plan(p, ErasurePattern({1, 6, 8}));
  for (std::size_t off : {std::size_t{0}, std::size_t{100}}) {
    std::vector<ConstRegion> half;
    for (const auto& b : all) half.emplace_back(b.data() + off, 100);
    std::vector<Block> out(3, Block(100));
    poly_decode_optimized(plan, half, testutil::mutable_views(out));
    EXPECT_TRUE(std::equal(out[0].begin(), out[0].end(), all[1].begin() + off));
    EXPECT_TRUE(std::equal(out[1].begin(), out[1].end(), all[6].begin() + off));
    EXPECT_TRUE(std::equal(out[2].begin(), out[2].end(), all[8].begin() + off));
  }
}

TEST(PolyRs, EncodeViaDecodeMatchesShiftRegister) {
  std::mt19937_64 rng(24);
  for (auto [k, m] : {std::pair{10, 4}, {1, 1}, {4, 3}, {30, 8}, {200, 55}}) {
    const CodingParams p{k, m};
    const std::size_t len = 16 * 1024 + 13;
    const auto data = testutil::random_blocks(k, len, rng);
    std::vector<Block> lfsr(m, Block(len));
    poly_encode(build_generator_poly(p), testutil::views(data), testutil::mutable_views(lfsr));
    EXPECT_EQ(encode_via_decode(p, testutil::views(data)), lfsr) << k << ',' << m;
  }
}

TEST(PolyRs, StripesAreCodewords) {
  const CodingParams p{10, 4};
  std::mt19937_64 rng(25);
  const auto data = testutil::random_blocks(p.k, 256, rng);
  auto all = testutil::full_stripe(data, encode_via_decode(p, testutil::views(data)));
  EXPECT_TRUE(oracle::naive_codeword_check(testutil::views(all), p));
  all[3][100] ^= 0x40;
  EXPECT_FALSE(oracle::naive_codeword_check(testutil::views(all), p));

  const auto worked = testutil::full_stripe(worked_data(), {{243}, {125}, {142}});
  EXPECT_TRUE(oracle::naive_codeword_check(testutil::views(worked), CodingParams{4, 3}));
  const std::vector<Block> zeros(7, Block(5, 0));
  EXPECT_TRUE(oracle::naive_codeword_check(testutil::views(zeros), CodingParams{4, 3}));
}

}  // namespace
