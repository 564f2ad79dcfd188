#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>
#include <stdexcept>

#include "rsreal/bench.hpp"

using namespace rsreal;

namespace {

bench::BenchConfig small_config() {
  bench::BenchConfig c;
  c.codecs = {CodecId::VanderRS};
  c.block_bytes = {4096};
  c.erasure_counts = {2};
  return c;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

TEST(Bench, ConfigValidation) {
  EXPECT_NO_THROW(bench::BenchConfig{}.validate());
  auto c = small_config();
  c.erasure_counts = {5};
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c = small_config();
  c.trials = 0;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c = small_config();
  c.codecs.clear();
  EXPECT_THROW(c.validate(), std::invalid_argument);
}

TEST(Bench, OneEncodeAndOneDecodePerTrial) {
  const auto records = bench::run_bench(small_config());
  ASSERT_EQ(records.size(), 6u);
  for (int t = 0; t < 3; ++t) {
    EXPECT_EQ(records[2 * t].op, bench::BenchOp::Encode);
    EXPECT_EQ(records[2 * t + 1].op, bench::BenchOp::Decode);
    EXPECT_EQ(records[2 * t + 1].erased.size(), 2u);
    EXPECT_EQ(records[2 * t].trial, t);
  }
}

TEST(Bench, SetupRecordsAreOptIn) {
  auto c = small_config();
  c.report_setup = true;
  const auto records = bench::run_bench(c);
  EXPECT_GT(records.size(), 6u);
  EXPECT_TRUE(std::any_of(records.begin(), records.end(),
                          [](const auto& r) { return r.op == bench::BenchOp::Setup; }));
}

TEST(Bench, InputsAreDeterministic) {
  const auto c = small_config();
  EXPECT_EQ(bench::make_data(c, 4096, 1), bench::make_data(c, 4096, 1));
  EXPECT_NE(bench::make_data(c, 4096, 1), bench::make_data(c, 4096, 2));
  for (int e = 1; e <= 4; ++e) {
    const auto a = bench::erasure_pattern(c, 4096, e, 2);
    EXPECT_EQ(a, bench::erasure_pattern(c, 4096, e, 2));
    EXPECT_EQ(a.size(), static_cast<std::size_t>(e));
  }
  auto other = c;
  other.seed = 99;
  EXPECT_NE(bench::make_data(c, 4096, 0), bench::make_data(other, 4096, 0));
}

TEST(Bench, CsvSchema) {
  const auto records = bench::run_bench(small_config());
  std::ostringstream out;
  bench::emit_csv(records, out);
  const auto rows = lines(out.str());
  ASSERT_EQ(rows.size(), 7u);
  EXPECT_EQ(rows[0], bench::kCsvHeader);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_EQ(std::count(rows[i].begin(), rows[i].end(), ','), 10) << rows[i];
    EXPECT_EQ(rows[i].rfind("vander-rs,10,4,4096,", 0), 0u) << rows[i];
  }
}

TEST(Bench, EmptyRecordsWriteNoFile) {
  const auto path = std::filesystem::temp_directory_path() / "rsreal_empty_records.csv";
  std::filesystem::remove(path);
  EXPECT_THROW(bench::emit_csv({}, path), std::invalid_argument);
  EXPECT_FALSE(std::filesystem::exists(path));
}

TEST(Bench, UnwritablePathThrows) {
  const auto records = bench::run_bench(small_config());
  EXPECT_THROW(bench::emit_csv(records, std::filesystem::path("/nonexistent-dir/x.csv")), std::runtime_error);
}

TEST(Selftest, PassesOnTheRealTables) {
  const auto report = bench::selftest();
  EXPECT_TRUE(report.ok());
  std::ostringstream out;
  bench::print_report(report, out);
  EXPECT_NE(out.str().find("PASS"), std::string::npos);
}

TEST(Selftest, CorruptedTableFails) {
  auto table = gf_mul_table();
  table[7][9] ^= 1;
  const auto report = bench::selftest({&table});
  EXPECT_FALSE(report.ok());
}

}  // namespace
