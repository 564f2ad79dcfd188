#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rsreal/codec.hpp"
#include "rsreal/gf256.hpp"

namespace rsreal::bench {

inline constexpr std::size_t kMiB = 1024 * 1024;

struct BenchConfig {
  std::vector<CodecId> codecs{std::begin(kAllCodecs), std::end(kAllCodecs)};
  int k = 10;
  int m = 4;
  std::vector<std::size_t> block_bytes{4 * kMiB};
  std::vector<int> erasure_counts{1, 2, 3, 4};
  int trials = 3;
  std::uint64_t seed = 1;
  // Emit op=setup records for codec construction and decode planning.
  bool report_setup = false;
  // One untimed run before the first timed run of each (codec, point).
  bool warmup = true;

  // Throws std::invalid_argument on an unusable configuration.
  void validate() const;
};

enum class BenchOp { Setup, Encode, Decode };

std::string_view op_name(BenchOp op);

struct BenchRecord {
  CodecId codec{};
  int k = 0;
  int m = 0;
  std::size_t block_bytes = 0;
  int erasure_count = 0;
  int trial = 0;
  BenchOp op = BenchOp::Encode;
  std::uint64_t elapsed_ns = 0;
  double throughput_mbps = 0;  // k * block_bytes / elapsed, in 10^6 bytes/s
  std::vector<int> erased;
  std::uint64_t seed = 0;
};

// A decode produced bytes different from the original stripe.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Deterministic inputs shared by every codec for a given (seed, block, trial).
std::vector<Block> make_data(const BenchConfig& config, std::size_t block_bytes, int trial);
std::vector<int> erasure_pattern(const BenchConfig& config, std::size_t block_bytes, int erasures, int trial);

using ProgressFn = std::function<void(const BenchRecord&)>;

// Records in iteration order: codec, block size, trial, then one encode
// record followed by one decode record per erasure count.
std::vector<BenchRecord> run_bench(const BenchConfig& config, const ProgressFn& progress = {});

inline constexpr std::string_view kCsvHeader =
    "codec,k,m,block_bytes,erasures,trial,op,elapsed_ns,throughput_mbps,erased,seed";

void emit_csv(std::span<const BenchRecord> records, std::ostream& out);
// Throws std::invalid_argument for an empty record list (no file is created)
// and std::runtime_error when the file cannot be written.
void emit_csv(std::span<const BenchRecord> records, const std::filesystem::path& path);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SelftestReport {
  std::vector<CheckResult> checks;
  bool ok() const;
};

struct SelftestOptions {
  // Multiply table to validate instead of the library's own; lets tests
  // inject a corrupted table.
  const MulTable* mul_table = nullptr;
};

SelftestReport selftest(const SelftestOptions& options = {});
void print_report(const SelftestReport& report, std::ostream& out);

}  // namespace rsreal::bench
