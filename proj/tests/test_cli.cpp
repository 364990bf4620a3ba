#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "polystego/bench.hpp"
#include "polystego/stego_io.hpp"
#include "support/reference.hpp"
#include "support/temp_dir.hpp"

using namespace polystego;

namespace {

struct CmdResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr combined
};

CmdResult run_cli(const ref::TempDir& tmp, const std::string& args) {
  const auto capture = tmp.file("capture.log");
  const std::string cmd =
      std::string(POLYSTEGO_CLI_PATH) + " " + args + " > " + capture.string() + " 2>&1";
  const int status = std::system(cmd.c_str());
  CmdResult result;
  if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
  std::ifstream in(capture, std::ios::binary);
  result.output.assign((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return result;
}

std::string read_raw(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

void write_raw(const std::filesystem::path& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

// cover.pgm, message.txt, costs.txt, gen.txt for the 11-pixel worked instance
void write_worked_fixture(const ref::TempDir& tmp) {
  write_pgm(tmp.file("cover.pgm"), ref::worked_cover());
  write_raw(tmp.file("message.txt"), "101\n");
  write_raw(tmp.file("costs.txt"), "223 3 12 4 163 43 2 12 1 23 2\n");
  write_raw(tmp.file("gen.txt"), "0 3\n");
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::istringstream in(line);
  std::string field;
  while (std::getline(in, field, ',')) fields.push_back(field);
  return fields;
}

}  // namespace

TEST_CASE("embed reproduces the worked stego image and cost") {
  ref::TempDir tmp;
  write_worked_fixture(tmp);

  const CmdResult r = run_cli(tmp, "embed --cover " + tmp.file("cover.pgm").string() +
                                       " --message " + tmp.file("message.txt").string() +
                                       " --costs " + tmp.file("costs.txt").string() + " --lcdm" +
                                       " --out " + tmp.file("stego.pgm").string());
  CHECK(r.exit_code == 0);
  CHECK(r.output == "cost 1\ncomparisons 3\n");

  const CoverImage stego = read_pgm(tmp.file("stego.pgm"));
  CHECK(stego.pixels == ref::kStegoPixels);
  CHECK(stego.pixels[8] == 242);
}

TEST_CASE("embed accepts an explicit generator file") {
  ref::TempDir tmp;
  write_worked_fixture(tmp);

  const CmdResult r = run_cli(tmp, "embed --cover " + tmp.file("cover.pgm").string() +
                                       " --message " + tmp.file("message.txt").string() +
                                       " --costs " + tmp.file("costs.txt").string() + " --gen " +
                                       tmp.file("gen.txt").string() + " --out " +
                                       tmp.file("stego.pgm").string());
  CHECK(r.exit_code == 0);
  CHECK(read_pgm(tmp.file("stego.pgm")).pixels == ref::kStegoPixels);
}

TEST_CASE("extract recovers the worked message") {
  ref::TempDir tmp;
  write_pgm(tmp.file("stego.pgm"), ref::worked_stego());

  const CmdResult r = run_cli(tmp, "extract --stego " + tmp.file("stego.pgm").string() +
                                       " --lcdm --msg-len 3 --out " +
                                       tmp.file("recovered.txt").string());
  CHECK(r.exit_code == 0);
  CHECK(read_raw(tmp.file("recovered.txt")) == "101\n");
}

TEST_CASE("embedding the current syndrome writes a byte-identical cover") {
  ref::TempDir tmp;
  write_worked_fixture(tmp);
  write_raw(tmp.file("message.txt"), "100\n");  // the cover's own syndrome

  const CmdResult r = run_cli(tmp, "embed --cover " + tmp.file("cover.pgm").string() +
                                       " --message " + tmp.file("message.txt").string() +
                                       " --costs " + tmp.file("costs.txt").string() + " --lcdm" +
                                       " --out " + tmp.file("stego.pgm").string());
  CHECK(r.exit_code == 0);
  CHECK(r.output == "cost 0\ncomparisons 0\n");
  CHECK(read_raw(tmp.file("stego.pgm")) == read_raw(tmp.file("cover.pgm")));
}

TEST_CASE("embed and extract round-trip a four-kilopixel cover") {
  ref::TempDir tmp;
  std::mt19937_64 rng(801);
  const std::size_t n = 4096;
  const std::size_t msg_len = 512;

  write_pgm(tmp.file("cover.pgm"), random_cover(rng, n));
  const BitVector message = random_bits(rng, msg_len);
  write_message(tmp.file("message.txt"), message);
  write_costs(tmp.file("costs.txt"), random_costs(rng, n));

  const CmdResult embed_run = run_cli(
      tmp, "embed --cover " + tmp.file("cover.pgm").string() + " --message " +
               tmp.file("message.txt").string() + " --costs " + tmp.file("costs.txt").string() +
               " --lcdm --out " + tmp.file("stego.pgm").string());
  CHECK(embed_run.exit_code == 0);

  const CmdResult extract_run = run_cli(
      tmp, "extract --stego " + tmp.file("stego.pgm").string() + " --lcdm --msg-len 512 --out " +
               tmp.file("recovered.txt").string());
  CHECK(extract_run.exit_code == 0);
  CHECK(read_message(tmp.file("recovered.txt")) == message);
}

TEST_CASE("identical inputs produce byte-identical stego files") {
  ref::TempDir tmp;
  write_worked_fixture(tmp);
  const std::string base = "embed --cover " + tmp.file("cover.pgm").string() + " --message " +
                           tmp.file("message.txt").string() + " --costs " +
                           tmp.file("costs.txt").string() + " --lcdm --out ";

  CHECK(run_cli(tmp, base + tmp.file("first.pgm").string()).exit_code == 0);
  CHECK(run_cli(tmp, base + tmp.file("second.pgm").string()).exit_code == 0);
  CHECK(read_raw(tmp.file("first.pgm")) == read_raw(tmp.file("second.pgm")));
}

TEST_CASE("a truncated stego file fails with the format exit code") {
  ref::TempDir tmp;
  write_raw(tmp.file("broken.pgm"), "P5\n4 4\n255\nab");
  const CmdResult r = run_cli(tmp, "extract --stego " + tmp.file("broken.pgm").string() +
                                       " --lcdm --msg-len 3 --out " +
                                       tmp.file("out.txt").string());
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("error:") != std::string::npos);
  CHECK_FALSE(std::filesystem::exists(tmp.file("out.txt")));
}

TEST_CASE("a capacity mismatch fails without writing any output") {
  ref::TempDir tmp;
  write_worked_fixture(tmp);
  write_raw(tmp.file("message.txt"), "1011\n");  // four bits against a three-bit code

  const CmdResult r = run_cli(tmp, "embed --cover " + tmp.file("cover.pgm").string() +
                                       " --message " + tmp.file("message.txt").string() +
                                       " --costs " + tmp.file("costs.txt").string() + " --gen " +
                                       tmp.file("gen.txt").string() + " --out " +
                                       tmp.file("stego.pgm").string());
  CHECK(r.exit_code == 3);
  CHECK(r.output.find("error:") != std::string::npos);
  CHECK_FALSE(std::filesystem::exists(tmp.file("stego.pgm")));
}

TEST_CASE("embed requires a generator choice") {
  ref::TempDir tmp;
  write_worked_fixture(tmp);
  const CmdResult r = run_cli(tmp, "embed --cover " + tmp.file("cover.pgm").string() +
                                       " --message " + tmp.file("message.txt").string() +
                                       " --costs " + tmp.file("costs.txt").string() + " --out " +
                                       tmp.file("stego.pgm").string());
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("error:") != std::string::npos);
}

TEST_CASE("the oracle command validates family-search optimality") {
  ref::TempDir tmp;
  const CmdResult r = run_cli(tmp, "oracle --n 11 --msg-len 3 --trials 3 --seed 7");
  CHECK(r.exit_code == 0);
  const auto lines = split_lines(r.output);
  REQUIRE(lines.size() == 4);
  for (int i = 0; i < 3; ++i) {
    CHECK(lines[i].find("oracle n=11 msg_len=3") != std::string::npos);
    CHECK(lines[i].find("modifiers=256") != std::string::npos);
    CHECK(lines[i].find("gap=0") != std::string::npos);
  }
  CHECK(lines[3] == "summary trials=3 modifier_count_ok=yes gap_zero=yes");

  SECTION("repeated runs print identical reports") {
    const CmdResult again = run_cli(tmp, "oracle --n 11 --msg-len 3 --trials 3 --seed 7");
    CHECK(again.output == r.output);
  }

  SECTION("a dimension-four code reports sixteen modifiers per trial") {
    const CmdResult small = run_cli(tmp, "oracle --n 6 --msg-len 2 --trials 2 --seed 3");
    CHECK(small.exit_code == 0);
    const auto small_lines = split_lines(small.output);
    REQUIRE(small_lines.size() == 3);
    CHECK(small_lines[0].find("modifiers=16") != std::string::npos);
    CHECK(small_lines[1].find("modifiers=16") != std::string::npos);
  }
}

TEST_CASE("the oracle refuses covers past its scan cap") {
  ref::TempDir tmp;
  const CmdResult r = run_cli(tmp, "oracle --n 30 --msg-len 3 --trials 1");
  CHECK(r.exit_code == 4);
  CHECK(r.output.find("error:") != std::string::npos);
}

TEST_CASE("bench reports the memory formulas for a 700000-pixel cover") {
  ref::TempDir tmp;
  const CmdResult r = run_cli(tmp, "bench --sizes 700000 --msg-rate 0.1 --seed 1");
  CHECK(r.exit_code == 0);
  const auto lines = split_lines(r.output);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == "n,comparisons,wall_time_s,matrix_bytes,poly_bytes");
  const auto fields = split_fields(lines[1]);
  REQUIRE(fields.size() == 5);
  CHECK(fields[0] == "700000");
  CHECK(std::stoull(fields[1]) <= 700000);
  CHECK(fields[3] == "6125000000");
  CHECK(fields[4] == "8750.125");
}

TEST_CASE("bench unit scaling matches the byte conventions") {
  ref::TempDir tmp;
  const CmdResult decimal = run_cli(tmp, "bench --sizes 700000 --units decimal --seed 1");
  CHECK(decimal.exit_code == 0);
  CHECK(decimal.output.find("6.125 GB") != std::string::npos);

  const CmdResult binary = run_cli(tmp, "bench --sizes 700000 --units binary --seed 1");
  CHECK(binary.exit_code == 0);
  CHECK(binary.output.find("GiB") != std::string::npos);
}

TEST_CASE("bench output is reproducible except for the wall-time column") {
  ref::TempDir tmp;
  const std::string args = "bench --sizes 1024,4096 --msg-rate 0.1 --seed 5";
  const CmdResult a = run_cli(tmp, args);
  const CmdResult b = run_cli(tmp, args);
  CHECK(a.exit_code == 0);
  CHECK(b.exit_code == 0);

  const auto lines_a = split_lines(a.output);
  const auto lines_b = split_lines(b.output);
  REQUIRE(lines_a.size() == 3);
  REQUIRE(lines_b.size() == 3);
  for (std::size_t i = 1; i < lines_a.size(); ++i) {
    const auto fa = split_fields(lines_a[i]);
    const auto fb = split_fields(lines_b[i]);
    REQUIRE(fa.size() == 5);
    REQUIRE(fb.size() == 5);
    CHECK(fa[0] == fb[0]);
    CHECK(fa[1] == fb[1]);
    CHECK(fa[3] == fb[3]);
    CHECK(fa[4] == fb[4]);
  }
}

TEST_CASE("bench requires a size list") {
  ref::TempDir tmp;
  const CmdResult r = run_cli(tmp, "bench --msg-rate 0.1");
  CHECK(r.exit_code == 1);
}

TEST_CASE("help exits cleanly") {
  ref::TempDir tmp;
  CHECK(run_cli(tmp, "--help").exit_code == 0);
  CHECK(run_cli(tmp, "embed --help").exit_code == 0);
}
