// polystego: embed and extract LSB-plane messages as polynomial-division
// syndromes, validate the family search against an exhaustive oracle, and
// measure comparison-count scaling.

#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "polystego/polystego.hpp"

namespace {

using namespace polystego;

// Exit codes: 0 success, 1 usage, 2 format, 3 capacity/consistency, 4 guard
// or internal invariant failure.
constexpr int kExitUsage = 1;
constexpr int kExitFormat = 2;
constexpr int kExitCapacity = 3;
constexpr int kExitGuard = 4;

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

std::string format_bytes(double bytes, const std::string& units) {
  char buf[64];
  if (units == "bytes") {
    std::snprintf(buf, sizeof buf, "%.10g", bytes);
    return buf;
  }
  const bool binary = units == "binary";
  const double base = binary ? 1024.0 : 1000.0;
  static const char* decimal_names[] = {"B", "KB", "MB", "GB", "TB"};
  static const char* binary_names[] = {"B", "KiB", "MiB", "GiB", "TiB"};
  int scale = 0;
  double value = bytes;
  while (value >= base && scale < 4) {
    value /= base;
    ++scale;
  }
  std::snprintf(buf, sizeof buf, "%.4g %s", value, (binary ? binary_names : decimal_names)[scale]);
  return buf;
}

struct EmbedOptions {
  std::string cover_path;
  std::string message_path;
  std::string costs_path;
  std::string gen_path;
  bool lcdm = false;
  std::string out_path;
  std::uint64_t budget = kFullEnumeration;
};

int run_embed(const EmbedOptions& opt) {
  const CoverImage cover = read_pgm(opt.cover_path);
  const BitVector message = read_message(opt.message_path);
  const StegoCode code = opt.lcdm ? make_lcdm(cover.size(), message.size())
                                  : StegoCode::make(cover.size(), read_gen(opt.gen_path));
  if (message.size() != code.message_length()) {
    throw CapacityError("message has " + std::to_string(message.size()) +
                        " bits but the code carries " + std::to_string(code.message_length()));
  }
  const DistortionMap costs = read_costs(opt.costs_path, cover.size());

  EmbedStrategy strategy = code.is_lcdm()
                               ? EmbedStrategy(DffaStrategy{costs})
                               : EmbedStrategy(ExhaustiveStrategy{costs, opt.budget});
  const EmbedResult result = embed(code, cover, message, strategy);
  write_pgm(opt.out_path, result.stego);
  std::cout << "cost " << format_double(result.total_cost) << "\n"
            << "comparisons " << result.comparisons << "\n";
  return 0;
}

struct ExtractOptions {
  std::string stego_path;
  std::string gen_path;
  bool lcdm = false;
  std::size_t msg_len = 0;
  std::string out_path;
};

int run_extract(const ExtractOptions& opt) {
  const CoverImage stego = read_pgm(opt.stego_path);
  const StegoCode code = opt.lcdm ? make_lcdm(stego.size(), opt.msg_len)
                                  : StegoCode::make(stego.size(), read_gen(opt.gen_path));
  write_message(opt.out_path, extract(code, stego));
  return 0;
}

struct OracleOptions {
  std::size_t n = 0;
  std::size_t msg_len = 0;
  std::uint64_t trials = 10;
  std::uint64_t seed = 0;
};

int run_oracle(const OracleOptions& opt) {
  const StegoCode code = make_lcdm(opt.n, opt.msg_len);
  const std::uint64_t expected_count = std::uint64_t{1} << code.dimension();
  bool all_gap_zero = true;
  bool all_counts_ok = true;
  for (std::uint64_t t = 0; t < opt.trials; ++t) {
    const std::uint64_t sub_seed = splitmix64(opt.seed ^ splitmix64(t));
    std::mt19937_64 rng(sub_seed);
    const Gf2Poly v = sigma(random_bits(rng, opt.n));
    const Gf2Poly m = sigma(random_bits(rng, opt.msg_len));
    const DistortionMap costs = random_costs(rng, opt.n);
    const OracleReport report = verify_dffa(code, v, m, costs, sub_seed);
    std::cout << report.to_line() << "\n";
    all_gap_zero = all_gap_zero && report.gap == 0.0;
    all_counts_ok = all_counts_ok && report.modifier_count == expected_count;
  }
  std::cout << "summary trials=" << opt.trials << " modifier_count_ok="
            << (all_counts_ok ? "yes" : "no") << " gap_zero=" << (all_gap_zero ? "yes" : "no")
            << "\n";
  return (all_gap_zero && all_counts_ok) ? 0 : kExitGuard;
}

struct BenchOptions {
  std::vector<std::size_t> sizes;
  double msg_rate = 0.1;
  std::uint64_t seed = 0;
  std::string units = "bytes";
};

int run_bench(const BenchOptions& opt) {
  const auto records = run_suite(opt.sizes, opt.msg_rate, opt.seed);
  std::cout << "n,comparisons,wall_time_s,matrix_bytes,poly_bytes\n";
  for (const BenchRecord& rec : records) {
    std::cout << rec.n << ',' << rec.comparisons << ',' << format_double(rec.wall_time_s) << ','
              << format_bytes(rec.matrix_bytes, opt.units) << ','
              << format_bytes(rec.poly_bytes, opt.units) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polynomial-domain syndrome-coding LSB steganography"};
  app.require_subcommand(1);

  EmbedOptions embed_opt;
  CLI::App* embed_cmd = app.add_subcommand("embed", "Hide a message in a cover image");
  embed_cmd->add_option("--cover", embed_opt.cover_path, "Cover image (binary PGM)")->required();
  embed_cmd->add_option("--message", embed_opt.message_path, "Message bits ('0'/'1' text)")
      ->required();
  embed_cmd->add_option("--costs", embed_opt.costs_path, "Per-pixel flip costs")->required();
  auto* embed_gen = embed_cmd->add_option("--gen", embed_opt.gen_path,
                                          "Generator polynomial file (ascending exponents)");
  auto* embed_lcdm =
      embed_cmd->add_flag("--lcdm", embed_opt.lcdm, "Use the 1+x^(n-k) generator, n-k from the message");
  embed_cmd->add_option("--out", embed_opt.out_path, "Output stego PGM")->required();
  embed_cmd->add_option("--budget", embed_opt.budget,
                        "Cap on modifiers scored when the generator is not 1+x^(n-k)");
  embed_gen->excludes(embed_lcdm);
  embed_lcdm->excludes(embed_gen);

  ExtractOptions extract_opt;
  CLI::App* extract_cmd = app.add_subcommand("extract", "Recover the message from a stego image");
  extract_cmd->add_option("--stego", extract_opt.stego_path, "Stego image (binary PGM)")->required();
  auto* extract_gen = extract_cmd->add_option("--gen", extract_opt.gen_path,
                                              "Generator polynomial file (ascending exponents)");
  auto* extract_lcdm = extract_cmd->add_flag("--lcdm", extract_opt.lcdm,
                                             "Use the 1+x^(n-k) generator; requires --msg-len");
  auto* extract_msg_len =
      extract_cmd->add_option("--msg-len", extract_opt.msg_len, "Message length n-k for --lcdm");
  extract_cmd->add_option("--out", extract_opt.out_path, "Output message file")->required();
  extract_gen->excludes(extract_lcdm);
  extract_lcdm->excludes(extract_gen);
  extract_lcdm->needs(extract_msg_len);

  OracleOptions oracle_opt;
  CLI::App* oracle_cmd =
      app.add_subcommand("oracle", "Check family-search optimality against exhaustive search");
  oracle_cmd->add_option("--n", oracle_opt.n, "Cover length (capped at 20)")->required();
  oracle_cmd->add_option("--msg-len", oracle_opt.msg_len, "Message length n-k")->required();
  oracle_cmd->add_option("--trials", oracle_opt.trials, "Random instances to run");
  oracle_cmd->add_option("--seed", oracle_opt.seed, "Instance generator seed");

  BenchOptions bench_opt;
  CLI::App* bench_cmd = app.add_subcommand("bench", "Comparison-count and footprint measurements");
  bench_cmd->add_option("--sizes", bench_opt.sizes, "Cover sizes, comma separated")
      ->required()
      ->delimiter(',');
  bench_cmd->add_option("--msg-rate", bench_opt.msg_rate, "Message bits per cover position");
  bench_cmd->add_option("--seed", bench_opt.seed, "Instance generator seed");
  bench_cmd->add_option("--units", bench_opt.units, "Byte-column units")
      ->check(CLI::IsMember({"bytes", "decimal", "binary"}));

  try {
    app.parse(argc, argv);
    if (embed_cmd->parsed()) {
      if (!embed_opt.lcdm && embed_opt.gen_path.empty()) {
        std::cerr << "error: embed needs either --gen or --lcdm\n";
        return kExitUsage;
      }
      return run_embed(embed_opt);
    }
    if (extract_cmd->parsed()) {
      if (!extract_opt.lcdm && extract_opt.gen_path.empty()) {
        std::cerr << "error: extract needs either --gen or --lcdm --msg-len N\n";
        return kExitUsage;
      }
      return run_extract(extract_opt);
    }
    if (oracle_cmd->parsed()) return run_oracle(oracle_opt);
    if (bench_cmd->parsed()) {
      if (bench_opt.sizes.empty()) {
        std::cerr << "error: --sizes must list at least one cover size\n";
        return kExitUsage;
      }
      return run_bench(bench_opt);
    }
    return kExitUsage;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFormat;
  } catch (const StrategyError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const CapacityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const GuardError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitGuard;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitGuard;
  }
}
