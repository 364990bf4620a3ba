#pragma once

#include <algorithm>
#include <bit>
#include <charconv>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "polystego/errors.hpp"

namespace polystego {

/// Dense bit-packed polynomial over GF(2).
///
/// Bit i of the packed storage is the coefficient of x^i (LSB-first).
/// Addition is coefficient-wise XOR; since the characteristic is 2 it is its
/// own inverse and subtraction is the same operation. Trailing zero padding
/// may be present in the representation; equality, degree and ordering never
/// depend on it.
///
/// Values behave as immutable once built: every operation returns a fresh
/// polynomial and is safe to call concurrently on shared inputs.
class Gf2Poly {
 public:
  Gf2Poly() = default;  // the zero polynomial

  static Gf2Poly zero() { return {}; }
  static Gf2Poly one() { return monomial(0); }

  /// x^exponent
  static Gf2Poly monomial(std::size_t exponent) {
    Gf2Poly p;
    p.set_coeff(exponent, true);
    return p;
  }

  /// Coefficient of x^i taken from bit i of `bits`.
  static Gf2Poly from_word(std::uint64_t bits) {
    Gf2Poly p;
    if (bits != 0) p.words_.push_back(bits);
    return p;
  }

  static Gf2Poly from_exponents(std::span<const std::size_t> exponents) {
    Gf2Poly p;
    for (std::size_t e : exponents) p.set_coeff(e, true);
    return p;
  }

  static Gf2Poly from_exponents(std::initializer_list<std::size_t> exponents) {
    return from_exponents(std::span<const std::size_t>(exponents.begin(), exponents.size()));
  }

  bool coeff(std::size_t i) const {
    const std::size_t w = i / kWordBits;
    if (w >= words_.size()) return false;
    return (words_[w] >> (i % kWordBits)) & 1u;
  }

  void set_coeff(std::size_t i, bool value) {
    const std::size_t w = i / kWordBits;
    const std::uint64_t mask = std::uint64_t{1} << (i % kWordBits);
    if (value) {
      if (w >= words_.size()) words_.resize(w + 1, 0);
      words_[w] |= mask;
    } else if (w < words_.size()) {
      words_[w] &= ~mask;
    }
  }

  /// Largest exponent with a nonzero coefficient; nullopt for zero.
  std::optional<std::size_t> degree() const {
    for (std::size_t w = words_.size(); w-- > 0;) {
      if (words_[w] != 0) {
        return w * kWordBits + (kWordBits - 1 - std::countl_zero(words_[w]));
      }
    }
    return std::nullopt;
  }

  bool is_zero() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
  }

  /// Number of nonzero coefficients.
  std::size_t term_count() const {
    std::size_t n = 0;
    for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  /// Ascending exponents of the nonzero coefficients.
  std::vector<std::size_t> exponents() const {
    std::vector<std::size_t> out;
    out.reserve(term_count());
    for_each_term([&](std::size_t e) { out.push_back(e); });
    return out;
  }

  /// Calls fn(exponent) for every nonzero coefficient, ascending.
  template <typename Fn>
  void for_each_term(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int tz = std::countr_zero(bits);
        fn(w * kWordBits + static_cast<std::size_t>(tz));
        bits &= bits - 1;
      }
    }
  }

  /// Multiplication by x^s.
  Gf2Poly shifted(std::size_t s) const {
    if (is_zero()) return {};
    if (s == 0) return *this;
    Gf2Poly out;
    out.xor_shifted(*this, s);
    out.trim();
    return out;
  }

  friend Gf2Poly operator+(const Gf2Poly& a, const Gf2Poly& b) {
    Gf2Poly out = a.words_.size() >= b.words_.size() ? a : b;
    const Gf2Poly& small = a.words_.size() >= b.words_.size() ? b : a;
    for (std::size_t i = 0; i < small.words_.size(); ++i) out.words_[i] ^= small.words_[i];
    out.trim();
    return out;
  }

  Gf2Poly& operator+=(const Gf2Poly& other) {
    if (other.words_.size() > words_.size()) words_.resize(other.words_.size(), 0);
    for (std::size_t i = 0; i < other.words_.size(); ++i) words_[i] ^= other.words_[i];
    return *this;
  }

  /// Carry-less schoolbook product.
  friend Gf2Poly operator*(const Gf2Poly& a, const Gf2Poly& b) {
    Gf2Poly out;
    if (a.is_zero() || b.is_zero()) return out;
    a.for_each_term([&](std::size_t e) { out.xor_shifted(b, e); });
    out.trim();
    return out;
  }

  struct DivResult;

  /// Top-down long division: numerator = quotient*divisor + remainder.
  /// The cost is one XOR of the shifted divisor per set quotient bit.
  static DivResult divmod(const Gf2Poly& numerator, const Gf2Poly& divisor);

  static Gf2Poly rem(const Gf2Poly& numerator, const Gf2Poly& divisor);

  /// Coefficient-wise equality, ignoring trailing zero padding.
  friend bool operator==(const Gf2Poly& a, const Gf2Poly& b) {
    const std::size_t n = std::max(a.words_.size(), b.words_.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (a.word_or_zero(i) != b.word_or_zero(i)) return false;
    }
    return true;
  }

  /// Total order by value of the packed bits read as a big integer.
  friend std::strong_ordering operator<=>(const Gf2Poly& a, const Gf2Poly& b) {
    const std::size_t n = std::max(a.words_.size(), b.words_.size());
    for (std::size_t i = n; i-- > 0;) {
      const std::uint64_t wa = a.word_or_zero(i);
      const std::uint64_t wb = b.word_or_zero(i);
      if (wa != wb) return wa <=> wb;
    }
    return std::strong_ordering::equal;
  }

  /// Packs the coefficients into one machine word. Requires degree < 64.
  std::uint64_t to_word() const {
    for (std::size_t i = 1; i < words_.size(); ++i) {
      if (words_[i] != 0) throw CapacityError("polynomial does not fit in 64 coefficients");
    }
    return words_.empty() ? 0 : words_[0];
  }

  /// Whitespace-separated ascending exponent list: "0 3" <-> 1 + x^3.
  /// The zero polynomial renders as the empty string.
  std::string to_exponents() const {
    std::string out;
    for_each_term([&](std::size_t e) {
      if (!out.empty()) out += ' ';
      out += std::to_string(e);
    });
    return out;
  }

  static Gf2Poly parse_exponents(std::string_view text) {
    Gf2Poly p;
    bool have_prev = false;
    std::size_t prev = 0;
    std::size_t i = 0;
    while (i < text.size()) {
      while (i < text.size() && is_space(text[i])) ++i;
      if (i == text.size()) break;
      std::size_t j = i;
      while (j < text.size() && !is_space(text[j])) ++j;
      const std::string_view token = text.substr(i, j - i);
      std::uint64_t value = 0;
      const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw FormatError("invalid exponent token '" + std::string(token) + "'");
      }
      if (value > kMaxParseExponent) {
        throw FormatError("exponent " + std::string(token) + " is too large");
      }
      if (have_prev) {
        if (value == prev) throw FormatError("duplicate exponent " + std::string(token));
        if (value < prev) throw FormatError("exponents must be ascending, got " + std::string(token));
      }
      p.set_coeff(static_cast<std::size_t>(value), true);
      prev = static_cast<std::size_t>(value);
      have_prev = true;
      i = j;
    }
    return p;
  }

  friend std::ostream& operator<<(std::ostream& os, const Gf2Poly& p) {
    return os << '[' << p.to_exponents() << ']';
  }

 private:
  static constexpr std::size_t kWordBits = 64;
  static constexpr std::uint64_t kMaxParseExponent = std::uint64_t{1} << 26;

  std::vector<std::uint64_t> words_;

  static bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
  }

  std::uint64_t word_or_zero(std::size_t i) const { return i < words_.size() ? words_[i] : 0; }

  void trim() {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
  }

  // this ^= other << shift
  void xor_shifted(const Gf2Poly& other, std::size_t shift) {
    const std::size_t word_shift = shift / kWordBits;
    const unsigned bit_shift = static_cast<unsigned>(shift % kWordBits);
    const std::size_t needed = other.words_.size() + word_shift + (bit_shift != 0 ? 1 : 0);
    if (words_.size() < needed) words_.resize(needed, 0);
    if (bit_shift == 0) {
      for (std::size_t i = 0; i < other.words_.size(); ++i) {
        words_[word_shift + i] ^= other.words_[i];
      }
      return;
    }
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < other.words_.size(); ++i) {
      const std::uint64_t w = other.words_[i];
      words_[word_shift + i] ^= (w << bit_shift) | carry;
      carry = w >> (kWordBits - bit_shift);
    }
    words_[word_shift + other.words_.size()] ^= carry;
  }
};

struct Gf2Poly::DivResult {
  Gf2Poly quotient;
  Gf2Poly remainder;  // degree(remainder) < degree(divisor)
};

inline Gf2Poly::DivResult Gf2Poly::divmod(const Gf2Poly& numerator, const Gf2Poly& divisor) {
  const auto ddeg = divisor.degree();
  if (!ddeg) throw DivisionByZeroError{};
  DivResult res;
  res.remainder = numerator;
  auto& rw = res.remainder.words_;
  std::size_t wi = rw.size();
  while (wi > 0) {
    const std::uint64_t w = rw[wi - 1];
    if (w == 0) {
      --wi;
      continue;
    }
    const std::size_t top =
        (wi - 1) * kWordBits + (kWordBits - 1 - static_cast<std::size_t>(std::countl_zero(w)));
    if (top < *ddeg) break;
    const std::size_t shift = top - *ddeg;
    res.quotient.set_coeff(shift, true);
    res.remainder.xor_shifted(divisor, shift);  // clears bit `top`
    if (rw.size() > wi && rw.back() == 0) rw.pop_back();
  }
  res.remainder.trim();
  return res;
}

inline Gf2Poly Gf2Poly::rem(const Gf2Poly& numerator, const Gf2Poly& divisor) {
  return divmod(numerator, divisor).remainder;
}

}  // namespace polystego
