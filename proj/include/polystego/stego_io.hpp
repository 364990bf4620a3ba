#pragma once

#include <charconv>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <string_view>
#include <vector>

#include "polystego/errors.hpp"
#include "polystego/gf2poly.hpp"
#include "polystego/types.hpp"

namespace polystego {

namespace detail {

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path.string());
  std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw FormatError("read error on " + path.string());
  return data;
}

// Writes through a sibling temp file and renames into place, so a failure
// partway never leaves a truncated output behind.
inline void write_file_atomic(const std::filesystem::path& path, std::string_view data) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw FormatError("cannot open " + tmp.string() + " for writing");
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    out.flush();
    if (!out) {
      out.close();
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      throw FormatError("write error on " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw FormatError("cannot move " + tmp.string() + " into place");
  }
}

inline bool is_pgm_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

// Skips netpbm whitespace and '#' comments; returns false at end of input.
inline bool skip_pgm_space(std::string_view data, std::size_t& i) {
  while (i < data.size()) {
    if (is_pgm_space(data[i])) {
      ++i;
    } else if (data[i] == '#') {
      while (i < data.size() && data[i] != '\n') ++i;
    } else {
      return true;
    }
  }
  return false;
}

inline std::uint64_t parse_pgm_int(std::string_view data, std::size_t& i, const char* what) {
  if (!skip_pgm_space(data, i) || data[i] < '0' || data[i] > '9') {
    throw FormatError(std::string("malformed PGM header: missing ") + what);
  }
  std::uint64_t value = 0;
  while (i < data.size() && data[i] >= '0' && data[i] <= '9') {
    value = value * 10 + static_cast<std::uint64_t>(data[i] - '0');
    if (value > (std::uint64_t{1} << 32)) throw FormatError(std::string(what) + " is out of range");
    ++i;
  }
  return value;
}

inline std::vector<std::string_view> split_tokens(std::string_view text) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_pgm_space(text[i])) ++i;
    if (i == text.size()) break;
    std::size_t j = i;
    while (j < text.size() && !is_pgm_space(text[j])) ++j;
    tokens.push_back(text.substr(i, j - i));
    i = j;
  }
  return tokens;
}

}  // namespace detail

/// Binary PGM ("P5"), 8-bit samples, maxval 255. Pixels are row-major, which
/// fixes the pixel-to-polynomial-exponent correspondence for both endpoints.
inline CoverImage read_pgm(const std::filesystem::path& path) {
  const std::string data = detail::read_file(path);
  if (data.size() >= 2 && data[0] == 'P' && data[1] == '2') {
    throw FormatError("ASCII PGM (P2) is not supported; use binary P5");
  }
  if (data.size() < 2 || data[0] != 'P' || data[1] != '5') {
    throw FormatError("not a P5 PGM file: " + path.string());
  }
  std::size_t i = 2;
  if (i >= data.size() || !(detail::is_pgm_space(data[i]) || data[i] == '#')) {
    throw FormatError("malformed PGM header: no whitespace after magic");
  }
  const std::uint64_t width = detail::parse_pgm_int(data, i, "width");
  const std::uint64_t height = detail::parse_pgm_int(data, i, "height");
  const std::uint64_t maxval = detail::parse_pgm_int(data, i, "maxval");
  if (width == 0 || height == 0) throw FormatError("PGM dimensions must be positive");
  if (maxval != 255) throw FormatError("unsupported PGM maxval (must be 255)");
  if (i >= data.size() || !detail::is_pgm_space(data[i])) {
    throw FormatError("malformed PGM header: missing separator before pixel data");
  }
  ++i;  // exactly one whitespace byte separates header and payload
  const std::uint64_t count = width * height;
  if (data.size() - i < count) throw FormatError("truncated PGM pixel data");
  if (data.size() - i > count) throw FormatError("trailing bytes after PGM pixel data");
  std::vector<std::uint8_t> pixels(data.begin() + static_cast<std::ptrdiff_t>(i), data.end());
  return CoverImage::make(width, height, std::move(pixels));
}

inline void write_pgm(const std::filesystem::path& path, const CoverImage& image) {
  std::string out = "P5\n" + std::to_string(image.width) + " " + std::to_string(image.height) +
                    "\n255\n";
  out.append(reinterpret_cast<const char*>(image.pixels.data()), image.pixels.size());
  detail::write_file_atomic(path, out);
}

/// Whitespace-separated nonnegative decimal costs, exactly `expected` values.
inline DistortionMap read_costs(const std::filesystem::path& path, std::size_t expected) {
  const std::string data = detail::read_file(path);
  const auto tokens = detail::split_tokens(data);
  if (tokens.size() != expected) {
    throw CapacityError("cost map has " + std::to_string(tokens.size()) + " values, expected " +
                        std::to_string(expected));
  }
  std::vector<double> costs;
  costs.reserve(tokens.size());
  for (std::string_view token : tokens) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      throw FormatError("invalid cost value '" + std::string(token) + "'");
    }
    if (value < 0.0) throw FormatError("negative cost '" + std::string(token) + "'");
    costs.push_back(value);
  }
  return DistortionMap::make(std::move(costs));
}

inline void write_costs(const std::filesystem::path& path, const DistortionMap& costs) {
  std::string out;
  char buf[64];
  for (std::size_t i = 0; i < costs.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g", costs[i]);
    if (i != 0) out += ' ';
    out += buf;
  }
  out += '\n';
  detail::write_file_atomic(path, out);
}

/// ASCII '0'/'1' message, index 0 first; trailing whitespace tolerated.
inline BitVector read_message(const std::filesystem::path& path) {
  std::string data = detail::read_file(path);
  while (!data.empty() && detail::is_pgm_space(data.back())) data.pop_back();
  BitVector bits;
  for (char c : data) {
    if (c != '0' && c != '1') {
      throw FormatError(std::string("message may contain only '0' and '1', got '") + c + "'");
    }
    bits.push_back(c == '1');
  }
  return bits;
}

inline void write_message(const std::filesystem::path& path, const BitVector& bits) {
  std::string out;
  out.reserve(bits.size() + 1);
  for (std::uint8_t b : bits) out += b ? '1' : '0';
  out += '\n';
  detail::write_file_atomic(path, out);
}

/// Generator polynomial as an ascending exponent list, e.g. "0 3" for 1+x^3.
inline Gf2Poly read_gen(const std::filesystem::path& path) {
  return Gf2Poly::parse_exponents(detail::read_file(path));
}

inline void write_gen(const std::filesystem::path& path, const Gf2Poly& g) {
  detail::write_file_atomic(path, g.to_exponents() + "\n");
}

}  // namespace polystego
