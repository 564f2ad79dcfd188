#include "rsreal/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

#include "rsreal/oracle.hpp"
#include "rsreal/poly_rs.hpp"

namespace rsreal::bench {
namespace {

std::mt19937_64 seeded_rng(std::uint64_t seed, std::size_t block_bytes, int trial, std::uint32_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(block_bytes), static_cast<std::uint32_t>(block_bytes >> 32),
                    static_cast<std::uint32_t>(trial), stream};
  return std::mt19937_64(seq);
}

constexpr std::uint32_t kDataStream = 1;
constexpr std::uint32_t kPatternStream = 2;

template <typename Fn>
std::uint64_t time_ns(Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  fn();
  const auto stop = std::chrono::steady_clock::now();
  return static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
}

double throughput(const CodingParams& p, std::size_t block_bytes, std::uint64_t ns) {
  if (ns == 0) ns = 1;
  return static_cast<double>(p.k) * static_cast<double>(block_bytes) / (static_cast<double>(ns) * 1e-9) / 1e6;
}

std::string join_indices(const std::vector<int>& v, char sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace

std::string_view op_name(BenchOp op) {
  switch (op) {
    case BenchOp::Setup:
      return "setup";
    case BenchOp::Encode:
      return "encode";
    case BenchOp::Decode:
      return "decode";
  }
  return "unknown";
}

void BenchConfig::validate() const {
  CodingParams{k, m}.validate();
  if (codecs.empty()) throw std::invalid_argument("no codecs selected");
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (block_bytes.empty()) throw std::invalid_argument("no block sizes given");
  for (std::size_t b : block_bytes) {
    if (b == 0 || b % kWordBits != 0) throw std::invalid_argument("block size must be a positive multiple of 8 bytes");
  }
  for (int e : erasure_counts) {
    if (e < 1 || e > m) throw std::invalid_argument("erasure counts must lie in [1, m]");
  }
}

std::vector<Block> make_data(const BenchConfig& config, std::size_t block_bytes, int trial) {
  auto rng = seeded_rng(config.seed, block_bytes, trial, kDataStream);
  std::vector<Block> data(config.k, Block(block_bytes));
  for (auto& block : data) {
    std::size_t i = 0;
    for (; i + 8 <= block.size(); i += 8) {
      const std::uint64_t w = rng();
      std::memcpy(block.data() + i, &w, 8);
    }
    for (; i < block.size(); ++i) block[i] = static_cast<std::uint8_t>(rng());
  }
  return data;
}

std::vector<int> erasure_pattern(const BenchConfig& config, std::size_t block_bytes, int erasures, int trial) {
  const int n = config.k + config.m;
  if (erasures == 1) return {trial % n};
  if (trial == 0) {
    std::vector<int> prefix(erasures);
    std::iota(prefix.begin(), prefix.end(), 0);
    return prefix;
  }
  auto rng = seeded_rng(config.seed, block_bytes, trial * 256 + erasures, kPatternStream);
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(erasures);
  std::sort(all.begin(), all.end());
  return all;
}

std::vector<BenchRecord> run_bench(const BenchConfig& config, const ProgressFn& progress) {
  config.validate();
  const CodingParams params{config.k, config.m};
  std::vector<BenchRecord> records;

  auto emit = [&](BenchRecord r) {
    if (progress) progress(r);
    records.push_back(std::move(r));
  };
  auto base_record = [&](CodecId id, std::size_t block, int trial, BenchOp op) {
    BenchRecord r;
    r.codec = id;
    r.k = config.k;
    r.m = config.m;
    r.block_bytes = block;
    r.trial = trial;
    r.op = op;
    r.seed = config.seed;
    return r;
  };

  for (CodecId id : config.codecs) {
    std::unique_ptr<Codec> codec;
    const std::uint64_t build_ns = time_ns([&] { codec = make_codec(id, params); });
    if (config.report_setup) {
      auto r = base_record(id, 0, 0, BenchOp::Setup);
      r.elapsed_ns = build_ns;
      emit(std::move(r));
    }

    for (std::size_t block : config.block_bytes) {
      if (block % codec->alignment() != 0) {
        throw std::invalid_argument("block size not aligned for codec " + std::string(codec_name(id)));
      }
      for (int trial = 0; trial < config.trials; ++trial) {
        Stripe stripe;
        stripe.data = make_data(config, block, trial);
        stripe.parity.assign(config.m, Block(block));
        std::vector<ConstRegion> data(stripe.data.begin(), stripe.data.end());
        std::vector<Region> parity(stripe.parity.begin(), stripe.parity.end());

        if (trial == 0 && config.warmup) codec->encode_into(data, parity);
        auto enc = base_record(id, block, trial, BenchOp::Encode);
        enc.elapsed_ns = time_ns([&] { codec->encode_into(data, parity); });
        enc.throughput_mbps = throughput(params, block, enc.elapsed_ns);
        emit(std::move(enc));

        const auto original = stripe.views();
        for (int count : config.erasure_counts) {
          const ErasurePattern pattern(erasure_pattern(config, block, count, trial));
          std::unique_ptr<DecodePlan> plan;
          const std::uint64_t plan_ns = time_ns([&] { plan = codec->plan_decode(pattern); });
          if (config.report_setup) {
            auto r = base_record(id, block, trial, BenchOp::Setup);
            r.erasure_count = count;
            r.erased = pattern.indices();
            r.elapsed_ns = plan_ns;
            emit(std::move(r));
          }

          std::vector<ConstRegion> blocks = original;
          for (int e : pattern.indices()) blocks[e] = {};
          if (trial == 0 && config.warmup) (void)codec->decode(*plan, blocks);

          std::vector<Block> recovered;
          auto dec = base_record(id, block, trial, BenchOp::Decode);
          dec.erasure_count = count;
          dec.erased = pattern.indices();
          dec.elapsed_ns = time_ns([&] { recovered = codec->decode(*plan, blocks); });
          dec.throughput_mbps = throughput(params, block, dec.elapsed_ns);

          for (std::size_t i = 0; i < pattern.size(); ++i) {
            const auto& want = original[pattern.indices()[i]];
            if (!std::equal(want.begin(), want.end(), recovered[i].begin(), recovered[i].end())) {
              std::ostringstream msg;
              msg << "decode verification failed: codec=" << codec_name(id) << " k=" << config.k
                  << " m=" << config.m << " block_bytes=" << block << " trial=" << trial
                  << " erased=" << join_indices(pattern.indices(), ';') << " seed=" << config.seed;
              throw VerificationError(msg.str());
            }
          }
          emit(std::move(dec));
        }
      }
    }
  }
  return records;
}

void emit_csv(std::span<const BenchRecord> records, std::ostream& out) {
  out << kCsvHeader << '\n';
  for (const auto& r : records) {
    out << codec_name(r.codec) << ',' << r.k << ',' << r.m << ',' << r.block_bytes << ',' << r.erasure_count << ','
        << r.trial << ',' << op_name(r.op) << ',' << r.elapsed_ns << ',' << std::fixed << std::setprecision(3)
        << r.throughput_mbps << ',' << join_indices(r.erased, ';') << ',' << r.seed << '\n';
  }
}

void emit_csv(std::span<const BenchRecord> records, const std::filesystem::path& path) {
  if (records.empty()) throw std::invalid_argument("no records to write");
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw std::runtime_error("cannot open " + path.string() + " for writing");
  emit_csv(records, static_cast<std::ostream&>(file));
  file.flush();
  if (!file) throw std::runtime_error("failed writing " + path.string());
}

bool SelftestReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

namespace {

std::string join_bytes(const std::vector<std::uint8_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

template <typename Fn>
CheckResult run_check(std::string name, Fn&& fn) {
  CheckResult r{std::move(name), false, {}};
  try {
    r.pass = fn(r.detail);
  } catch (const std::exception& ex) {
    r.pass = false;
    r.detail = std::string("exception: ") + ex.what();
  }
  return r;
}

}  // namespace

SelftestReport selftest(const SelftestOptions& options) {
  SelftestReport report;
  const MulTable& table = options.mul_table ? *options.mul_table : gf_mul_table();

  report.checks.push_back(run_check("gf exp/log tables", [](std::string& detail) {
    const auto& t = gf_tables();
    std::array<bool, kFieldSize> seen{};
    for (unsigned i = 0; i < kGroupOrder; ++i) {
      if (seen[t.exp[i]] || t.exp[i] == 0) return false;
      seen[t.exp[i]] = true;
      if (t.log[t.exp[i]] != i) return false;
    }
    detail = "alpha=2 has period 255 under 0x11D";
    return gf_pow(kAlpha, 255) == GfElement{1};
  }));

  report.checks.push_back(run_check("gf multiply table vs naive", [&](std::string& detail) {
    std::size_t bad = 0;
    for (unsigned a = 0; a < kFieldSize; ++a) {
      for (unsigned b = 0; b < kFieldSize; ++b) {
        if (table[a][b] != oracle::naive_gf_mul(static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b))) ++bad;
      }
    }
    detail = std::to_string(65536 - bad) + "/65536 products agree";
    return bad == 0;
  }));

  const CodingParams ex{4, 3};
  report.checks.push_back(run_check("generator polynomial m=3", [&](std::string& detail) {
    const auto g = build_generator_poly(ex);
    const auto& c = g.poly().coeffs();
    std::vector<std::uint8_t> v;
    for (auto it = c.rbegin(); it != c.rend(); ++it) v.push_back(it->value());
    detail = "g(x) coefficients high to low: " + join_bytes(v);
    return v == std::vector<std::uint8_t>{1, 7, 14, 8};
  }));

  const std::vector<Block> data{{48}, {6}, {112}, {70}};
  const std::vector<ConstRegion> data_views(data.begin(), data.end());
  report.checks.push_back(run_check("polynomial encode example", [&](std::string& detail) {
    std::vector<Block> parity(3, Block(1));
    std::vector<Region> pv(parity.begin(), parity.end());
    poly_encode(build_generator_poly(ex), data_views, pv);
    const auto via_decode = encode_via_decode(ex, data_views);
    const std::vector<std::uint8_t> got{parity[0][0], parity[1][0], parity[2][0]};
    detail = "parity " + join_bytes(got);
    return got == std::vector<std::uint8_t>{243, 125, 142} && via_decode == parity;
  }));

  report.checks.push_back(run_check("polynomial decode example", [&](std::string& detail) {
    const std::vector<Block> stripe{{0}, {0}, {0}, {70}, {243}, {125}, {142}};
    std::vector<ConstRegion> blocks(stripe.begin(), stripe.end());
    for (int i = 0; i < 3; ++i) blocks[i] = {};
    const ErasurePattern erased({0, 1, 2});
    PolyDecodePlan plan(ex, erased);
    const auto values = eval_error_evaluators(plan, blocks);
    const std::vector<std::uint8_t> d{values[0][0], values[1][0], values[2][0]};
    bool ok = d == std::vector<std::uint8_t>{70, 91, 171};
    for (auto variant : {PolyVariant::Baseline, PolyVariant::Optimized}) {
      const auto rec = poly_decode(variant, ex, blocks, erased);
      ok = ok && rec == std::vector<Block>{{48}, {6}, {112}};
    }
    detail = "D values " + join_bytes(d) + ", recovered 48,6,112";
    return ok;
  }));

  report.checks.push_back(run_check("mds sweep (4,3) all codecs", [&](std::string& detail) {
    std::size_t patterns = 0;
    std::size_t failures = 0;
    for (CodecId id : kAllCodecs) {
      const auto r = oracle::exhaustive_mds_sweep(id, ex, 8);
      patterns += r.patterns;
      failures += r.failures.size();
    }
    detail = std::to_string(patterns) + " patterns, " + std::to_string(failures) + " failures";
    return failures == 0 && patterns == 5 * 63;
  }));

  return report;
}

void print_report(const SelftestReport& report, std::ostream& out) {
  for (const auto& c : report.checks) {
    out << (c.pass ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) out << ": " << c.detail;
    out << '\n';
  }
  out << (report.ok() ? "selftest passed" : "selftest FAILED") << '\n';
}

}  // namespace rsreal::bench
