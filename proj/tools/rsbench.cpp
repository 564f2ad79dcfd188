// rsbench: benchmark, self-test and file-level encode/decode for the rsreal
// codecs.
//
// Exit codes: 0 success, 1 verification or self-test failure (and I/O
// errors), 2 usage error.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <string>
#include <vector>

#include "rsreal/bench.hpp"
#include "rsreal/codec.hpp"

namespace {

using namespace rsreal;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<CodecId> parse_codec_list(const std::vector<std::string>& names) {
  std::vector<CodecId> out;
  for (const auto& n : names) {
    const auto id = parse_codec(n);
    if (!id) throw UsageError("unknown codec '" + n + "'");
    out.push_back(*id);
  }
  return out;
}

Block read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  return Block(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void write_file(const std::string& path, const Block& block) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out.write(reinterpret_cast<const char*>(block.data()), static_cast<std::streamsize>(block.size()));
  if (!out) throw std::runtime_error("cannot write " + path);
}

struct BenchArgs {
  std::vector<std::string> codecs{"orig-crs", "good-crs", "vander-rs", "poly-rs", "opt-poly-rs"};
  int k = 10;
  int m = 4;
  std::vector<std::size_t> block_bytes{4 * bench::kMiB};
  std::vector<int> erasures{1, 2, 3, 4};
  int trials = 3;
  std::uint64_t seed = 1;
  std::string out = "results.csv";
  bool setup = false;
  bool quiet = false;
};

int run_bench_cmd(const BenchArgs& args) {
  bench::BenchConfig config;
  config.codecs = parse_codec_list(args.codecs);
  config.k = args.k;
  config.m = args.m;
  config.block_bytes = args.block_bytes;
  config.erasure_counts = args.erasures;
  config.trials = args.trials;
  config.seed = args.seed;
  config.report_setup = args.setup;
  try {
    config.validate();
  } catch (const std::invalid_argument& ex) {
    throw UsageError(ex.what());
  }

  bench::ProgressFn progress;
  if (!args.quiet) {
    progress = [](const bench::BenchRecord& r) {
      std::cerr << codec_name(r.codec) << " block=" << r.block_bytes << " trial=" << r.trial << ' '
                << bench::op_name(r.op);
      if (r.op != bench::BenchOp::Encode) std::cerr << " erasures=" << r.erasure_count;
      std::cerr << ' ' << r.elapsed_ns / 1000 << "us\n";
    };
  }
  std::vector<bench::BenchRecord> records;
  try {
    records = bench::run_bench(config, progress);
  } catch (const bench::VerificationError& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return kExitFailure;
  }
  bench::emit_csv(records, std::filesystem::path(args.out));
  std::cerr << "wrote " << records.size() << " records to " << args.out << '\n';
  return kExitOk;
}

int run_encode_cmd(CodecId id, const CodingParams& p, const std::vector<std::string>& data_files,
                   const std::vector<std::string>& parity_files) {
  if (static_cast<int>(data_files.size()) != p.k) throw UsageError("expected k data files");
  if (static_cast<int>(parity_files.size()) != p.m) throw UsageError("expected m parity output files");
  std::vector<Block> data;
  for (const auto& f : data_files) data.push_back(read_file(f));
  std::vector<ConstRegion> views(data.begin(), data.end());
  const auto parity = make_codec(id, p)->encode(views);
  for (std::size_t i = 0; i < parity.size(); ++i) write_file(parity_files[i], parity[i]);
  return kExitOk;
}

int run_decode_cmd(CodecId id, const CodingParams& p, const std::vector<std::string>& block_files,
                   const std::vector<int>& erased, const std::vector<std::string>& out_files) {
  if (static_cast<int>(block_files.size()) != p.n()) throw UsageError("expected k + m block paths");
  const ErasurePattern pattern(erased);
  if (out_files.size() != pattern.size()) throw UsageError("expected one output file per erased block");
  std::vector<Block> blocks(p.n());
  for (int i = 0; i < p.n(); ++i) {
    if (!pattern.contains(i)) blocks[i] = read_file(block_files[i]);
  }
  std::vector<ConstRegion> views(blocks.begin(), blocks.end());
  const auto recovered = make_codec(id, p)->decode(views, pattern);
  for (std::size_t i = 0; i < recovered.size(); ++i) write_file(out_files[i], recovered[i]);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reed-Solomon realization benchmark and tools"};
  app.require_subcommand(1);

  BenchArgs bargs;
  auto* bench_cmd = app.add_subcommand("bench", "Time encode/decode over random in-memory stripes");
  bench_cmd->add_option("--codecs", bargs.codecs, "Codecs to run")->delimiter(',');
  bench_cmd->add_option("--k", bargs.k, "Data blocks");
  bench_cmd->add_option("--m", bargs.m, "Parity blocks");
  bench_cmd->add_option("--block-bytes", bargs.block_bytes, "Block sizes in bytes")->delimiter(',');
  bench_cmd->add_option("--erasures", bargs.erasures, "Erasure counts to decode")->delimiter(',');
  bench_cmd->add_option("--trials", bargs.trials, "Trials per point");
  bench_cmd->add_option("--seed", bargs.seed, "RNG seed");
  bench_cmd->add_option("--out", bargs.out, "CSV output path");
  bench_cmd->add_flag("--setup", bargs.setup, "Also emit op=setup records");
  bench_cmd->add_flag("--quiet", bargs.quiet, "No progress output");

  auto* selftest_cmd = app.add_subcommand("selftest", "Run built-in correctness checks");

  std::string codec = "opt-poly-rs";
  int k = 0;
  int m = 0;
  std::vector<std::string> data_files;
  std::vector<std::string> parity_files;
  auto* encode_cmd = app.add_subcommand("encode", "Encode data block files into parity block files");
  encode_cmd->add_option("--codec", codec, "Codec")->required();
  encode_cmd->add_option("--k", k, "Data blocks")->required();
  encode_cmd->add_option("--m", m, "Parity blocks")->required();
  encode_cmd->add_option("--data", data_files, "k data files")->required();
  encode_cmd->add_option("--parity", parity_files, "m parity output files")->required();

  std::vector<std::string> block_files;
  std::vector<int> erased;
  std::vector<std::string> out_files;
  auto* decode_cmd = app.add_subcommand("decode", "Recover erased block files");
  decode_cmd->add_option("--codec", codec, "Codec")->required();
  decode_cmd->add_option("--k", k, "Data blocks")->required();
  decode_cmd->add_option("--m", m, "Parity blocks")->required();
  decode_cmd->add_option("--blocks", block_files, "k + m block paths in index order (erased ones are not read)")
      ->required();
  decode_cmd->add_option("--erased", erased, "Erased block indices")->delimiter(',')->required();
  decode_cmd->add_option("--out", out_files, "Output file per erased block, ascending index")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*bench_cmd) return run_bench_cmd(bargs);
    if (*selftest_cmd) {
      const auto report = bench::selftest();
      bench::print_report(report, std::cout);
      return report.ok() ? kExitOk : kExitFailure;
    }
    const auto id = parse_codec(codec);
    if (!id) throw UsageError("unknown codec '" + codec + "'");
    const CodingParams p{k, m};
    try {
      p.validate();
    } catch (const std::invalid_argument& ex) {
      throw UsageError(ex.what());
    }
    if (*encode_cmd) return run_encode_cmd(*id, p, data_files, parity_files);
    if (*decode_cmd) return run_decode_cmd(*id, p, block_files, erased, out_files);
  } catch (const UsageError& ex) {
    std::cerr << "usage error: " << ex.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
