#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "polystego/errors.hpp"
#include "polystego/gf2poly.hpp"

namespace polystego {

/// Sequence of {0,1} values. Index i corresponds to the coefficient of x^i
/// under the vector/polynomial maps in codec.hpp.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t n) : bits_(n, 0) {}

  /// Validating constructor: every element must be 0 or 1.
  static BitVector from(std::vector<std::uint8_t> bits) {
    for (std::uint8_t b : bits) {
      if (b > 1) throw CapacityError("bit vector values must be 0 or 1");
    }
    BitVector v;
    v.bits_ = std::move(bits);
    return v;
  }

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
  void set(std::size_t i, bool value) { bits_[i] = value ? 1 : 0; }
  void push_back(bool value) { bits_.push_back(value ? 1 : 0); }

  auto begin() const { return bits_.begin(); }
  auto end() const { return bits_.end(); }
  const std::vector<std::uint8_t>& values() const { return bits_; }

  friend bool operator==(const BitVector&, const BitVector&) = default;

  friend std::ostream& operator<<(std::ostream& os, const BitVector& v) {
    for (std::uint8_t b : v.bits_) os << (b ? '1' : '0');
    return os;
  }

 private:
  std::vector<std::uint8_t> bits_;
};

/// 8-bit grayscale image in row-major order. Pixel i is code position i.
struct CoverImage {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<std::uint8_t> pixels;

  static CoverImage make(std::size_t width, std::size_t height, std::vector<std::uint8_t> pixels) {
    if (width == 0 || height == 0) throw CapacityError("image dimensions must be positive");
    if (pixels.size() != width * height) {
      throw CapacityError("pixel count does not match image dimensions");
    }
    return CoverImage{width, height, std::move(pixels)};
  }

  std::size_t size() const { return pixels.size(); }

  friend bool operator==(const CoverImage&, const CoverImage&) = default;
};

/// An (n, k) syndrome code described only by its generator polynomial.
/// n is the cover length and deg(g) = n - k the message length.
class StegoCode {
 public:
  static StegoCode make(std::size_t n, Gf2Poly generator) {
    const auto deg = generator.degree();
    if (!deg || *deg < 1 || *deg >= n) {
      throw CapacityError("generator degree must lie in [1, n-1]");
    }
    return StegoCode(n, n - *deg, std::move(generator));
  }

  std::size_t cover_length() const { return n_; }
  std::size_t dimension() const { return k_; }
  std::size_t message_length() const { return n_ - k_; }
  const Gf2Poly& generator() const { return g_; }

  /// True when the generator is 1 + x^(n-k).
  bool is_lcdm() const {
    return g_ == Gf2Poly::monomial(message_length()) + Gf2Poly::one();
  }

 private:
  StegoCode(std::size_t n, std::size_t k, Gf2Poly g) : n_(n), k_(k), g_(std::move(g)) {}

  std::size_t n_;
  std::size_t k_;
  Gf2Poly g_;
};

/// Per-position flip costs; all entries finite and >= 0. The family-minimum
/// optimality argument in lcdm.hpp depends on nonnegativity, so negative
/// inputs are rejected here, at load.
class DistortionMap {
 public:
  DistortionMap() = default;

  static DistortionMap make(std::vector<double> costs) {
    for (double c : costs) {
      if (!std::isfinite(c)) throw CapacityError("distortion costs must be finite");
      if (c < 0.0) throw CapacityError("distortion costs must be nonnegative");
    }
    DistortionMap d;
    d.costs_ = std::move(costs);
    return d;
  }

  std::size_t size() const { return costs_.size(); }
  double operator[](std::size_t i) const { return costs_[i]; }
  const std::vector<double>& values() const { return costs_; }

 private:
  std::vector<double> costs_;
};

}  // namespace polystego
