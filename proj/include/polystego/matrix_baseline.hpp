#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "polystego/errors.hpp"
#include "polystego/gf2poly.hpp"
#include "polystego/types.hpp"

namespace polystego {

inline constexpr std::size_t kParityCoverLimit = std::size_t{1} << 16;

/// Dense bit-packed (n-k) x n parity matrix. Row r, column c holds the
/// coefficient of x^r in rem(x^c, g), the unique choice for which the
/// matrix-vector product reproduces the polynomial remainder.
class ParityMatrix {
 public:
  ParityMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), words_per_row_((cols + 63) / 64), bits_(rows_ * words_per_row_, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool bit(std::size_t r, std::size_t c) const {
    return (bits_[r * words_per_row_ + c / 64] >> (c % 64)) & 1u;
  }

  void set_bit(std::size_t r, std::size_t c) {
    bits_[r * words_per_row_ + c / 64] |= std::uint64_t{1} << (c % 64);
  }

  BitVector row(std::size_t r) const {
    BitVector out(cols_);
    for (std::size_t c = 0; c < cols_; ++c) out.set(c, bit(r, c));
    return out;
  }

  /// GF(2) matrix-vector product: result bit r is the parity of <row r, v>.
  BitVector multiply(const std::vector<std::uint64_t>& packed) const {
    BitVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      std::uint64_t acc = 0;
      const std::uint64_t* row_words = bits_.data() + r * words_per_row_;
      for (std::size_t w = 0; w < words_per_row_; ++w) acc ^= row_words[w] & packed[w];
      out.set(r, std::popcount(acc) & 1u);
    }
    return out;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::size_t words_per_row_;
  std::vector<std::uint64_t> bits_;
};

/// Materializes the parity matrix column by column: column c is the bit
/// pattern of rem(x^c, g), advanced incrementally as x * previous mod g.
/// Guarded, since the quadratic footprint is exactly what the polynomial
/// route avoids.
inline ParityMatrix build_parity(const StegoCode& code) {
  const std::size_t n = code.cover_length();
  if (n > kParityCoverLimit) {
    throw GuardError("parity matrix construction is capped at n <= 65536");
  }
  const std::size_t rows = code.message_length();
  ParityMatrix h(rows, n);
  Gf2Poly residue = Gf2Poly::one();  // rem(x^0, g), since deg g >= 1
  for (std::size_t c = 0; c < n; ++c) {
    residue.for_each_term([&](std::size_t r) { h.set_bit(r, c); });
    residue = residue.shifted(1);
    if (residue.coeff(rows)) residue += code.generator();  // reduce the leading term
  }
  return h;
}

/// Matrix-domain syndrome; must agree with the polynomial remainder bits.
inline BitVector matrix_syndrome(const ParityMatrix& h, const BitVector& v) {
  if (v.size() != h.cols()) throw CapacityError("vector length does not match matrix columns");
  std::vector<std::uint64_t> packed((v.size() + 63) / 64, 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i]) packed[i / 64] |= std::uint64_t{1} << (i % 64);
  }
  return h.multiply(packed);
}

/// Storage needed for the dense binary parity matrix vs. the generator
/// polynomial alone, in bytes. Exact values, fractional where the bit count
/// is not a multiple of 8.
struct MemoryFootprint {
  double matrix_bytes = 0.0;  // n(n-k) bits
  double poly_bytes = 0.0;    // n-k+1 bits
};

inline MemoryFootprint memory_footprint(std::size_t n, std::size_t msg_len) {
  MemoryFootprint f;
  f.matrix_bytes = static_cast<double>(n) * static_cast<double>(msg_len) / 8.0;
  f.poly_bytes = (static_cast<double>(msg_len) + 1.0) / 8.0;
  return f;
}

}  // namespace polystego
