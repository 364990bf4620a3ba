#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <utility>
#include <variant>

#include "polystego/errors.hpp"
#include "polystego/gf2poly.hpp"
#include "polystego/lcdm.hpp"
#include "polystego/types.hpp"

namespace polystego {

/// LSB plane of a cover: bit i = pixel i mod 2.
inline BitVector phi(const CoverImage& cover) {
  BitVector bits(cover.size());
  for (std::size_t i = 0; i < cover.size(); ++i) bits.set(i, cover.pixels[i] & 1u);
  return bits;
}

/// Vector -> polynomial: index i becomes the coefficient of x^i.
inline Gf2Poly sigma(const BitVector& v) {
  Gf2Poly p;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i]) p.set_coeff(i, true);
  }
  return p;
}

/// Polynomial -> vector of length n, zero-padded. Requires degree(p) < n,
/// which makes this the exact inverse of sigma on length-n vectors.
inline BitVector sigma_inv(const Gf2Poly& p, std::size_t n) {
  const auto deg = p.degree();
  if (deg && *deg >= n) {
    throw CapacityError("polynomial degree exceeds the target vector length");
  }
  BitVector bits(n);
  p.for_each_term([&](std::size_t e) { bits.set(e, true); });
  return bits;
}

/// Remainder of (cover polynomial - message polynomial) by the generator:
/// the canonical modifier of degree below the message length. All equivalent
/// modifiers differ from it by a multiple of the generator.
inline Gf2Poly base_modifier(const StegoCode& code, const Gf2Poly& v, const Gf2Poly& m) {
  const auto vdeg = v.degree();
  if (vdeg && *vdeg >= code.cover_length()) {
    throw CoverSizeError("cover polynomial degree must be below the cover length");
  }
  const auto mdeg = m.degree();
  if (mdeg && *mdeg >= code.message_length()) {
    throw MessageSizeError("message polynomial degree must be below the message length");
  }
  return Gf2Poly::rem(v + m, code.generator());  // subtraction is XOR in GF(2)
}

/// Sentinel budget meaning "every one of the 2^k modifiers".
inline constexpr std::uint64_t kFullEnumeration = std::numeric_limits<std::uint64_t>::max();

/// Lazy stream of the modifier set: e_base + F*g with F's coefficient bits
/// counting up as a binary integer, so element 0 is e_base itself. Yields
/// min(budget, 2^k) values, all distinct; asking for more than 2^k simply
/// ends the stream early. Never materializes the set.
class ModifierStream {
 public:
  ModifierStream(const StegoCode& code, Gf2Poly e_base, std::uint64_t budget)
      : e_base_(std::move(e_base)), generator_(code.generator()) {
    const auto deg = e_base_.degree();
    if (deg && *deg >= code.message_length()) {
      throw CapacityError("base modifier degree must be below the message length");
    }
    const std::size_t k = code.dimension();
    if (budget == kFullEnumeration) {
      if (k > 63) throw GuardError("full modifier enumeration requires k <= 63");
      limit_ = std::uint64_t{1} << k;
    } else if (k <= 63) {
      limit_ = std::min(budget, std::uint64_t{1} << k);
    } else {
      limit_ = budget;
    }
  }

  std::optional<Gf2Poly> next() {
    if (index_ == limit_) return std::nullopt;
    const Gf2Poly f = Gf2Poly::from_word(index_);
    ++index_;
    return e_base_ + f * generator_;
  }

  std::uint64_t produced() const { return index_; }
  std::uint64_t limit() const { return limit_; }

 private:
  Gf2Poly e_base_;
  Gf2Poly generator_;
  std::uint64_t limit_ = 0;
  std::uint64_t index_ = 0;
};

inline ModifierStream enumerate_modifiers(const StegoCode& code, const Gf2Poly& e_base,
                                          std::uint64_t budget = kFullEnumeration) {
  return ModifierStream(code, e_base, budget);
}

/// Flips the LSB of every pixel where e is set; all other bits untouched.
/// Applying the same modifier twice restores the original.
inline CoverImage apply_modifier(const CoverImage& cover, const BitVector& e) {
  if (e.size() != cover.size()) {
    throw CapacityError("modifier length must equal the pixel count");
  }
  CoverImage out = cover;
  for (std::size_t i = 0; i < out.pixels.size(); ++i) out.pixels[i] ^= e[i];
  return out;
}

/// The n-k message bits carried by a stego image: the remainder of its LSB
/// polynomial modulo the generator.
inline BitVector extract(const StegoCode& code, const CoverImage& stego) {
  if (stego.size() != code.cover_length()) {
    throw CapacityError("stego length must equal the code's cover length");
  }
  const Gf2Poly syndrome = Gf2Poly::rem(sigma(phi(stego)), code.generator());
  return sigma_inv(syndrome, code.message_length());
}

/// Minimizes over the cyclic-shift families; the generator must be 1+x^(n-k).
struct DffaStrategy {
  DistortionMap costs;
};

/// Scores enumerated modifiers one by one and keeps the cheapest; ties go to
/// the earliest enumerated. Feasible only for small k unless a budget caps
/// the search, so the full-enumeration default is guarded at k <= 24.
struct ExhaustiveStrategy {
  DistortionMap costs;
  std::uint64_t budget = kFullEnumeration;
};

using EmbedStrategy = std::variant<DffaStrategy, ExhaustiveStrategy>;

struct EmbedResult {
  CoverImage stego;
  Gf2Poly base_modifier;      // canonical modifier before minimization
  Gf2Poly modifier;           // the modifier actually applied
  double total_cost = 0.0;
  std::uint64_t comparisons = 0;
};

namespace detail {
template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;
}  // namespace detail

/// Full embedding pipeline: base modifier from the LSB plane, strategy
/// choice of the applied modifier, LSB flips. The stego image always
/// extracts back to `message`, whichever modifier the strategy picks.
inline EmbedResult embed(const StegoCode& code, const CoverImage& cover, const BitVector& message,
                         const EmbedStrategy& strategy) {
  if (cover.size() != code.cover_length()) {
    throw CapacityError("cover length does not match the code");
  }
  if (message.size() != code.message_length()) {
    throw CapacityError("message length does not match the code capacity n-k");
  }

  EmbedResult result;
  result.base_modifier = base_modifier(code, sigma(phi(cover)), sigma(message));

  std::visit(detail::Overloaded{
                 [&](const DffaStrategy& s) {
                   DffaResult r = dffa(code, result.base_modifier, s.costs);
                   result.modifier = std::move(r.ideal);
                   result.total_cost = r.total_cost;
                   result.comparisons = r.comparisons;
                 },
                 [&](const ExhaustiveStrategy& s) {
                   if (s.costs.size() != code.cover_length()) {
                     throw CapacityError("cost map length must equal the cover length");
                   }
                   if (s.budget == 0) throw GuardError("exhaustive budget must be at least 1");
                   if (s.budget == kFullEnumeration && code.dimension() > 24) {
                     throw GuardError("full exhaustive embedding is capped at k <= 24");
                   }
                   ModifierStream stream = enumerate_modifiers(code, result.base_modifier, s.budget);
                   bool found = false;
                   while (auto e = stream.next()) {
                     ++result.comparisons;
                     const double cost = modifier_cost(*e, s.costs);
                     if (!found || cost < result.total_cost) {
                       found = true;
                       result.total_cost = cost;
                       result.modifier = std::move(*e);
                     }
                   }
                 }},
             strategy);

  result.stego = apply_modifier(cover, sigma_inv(result.modifier, code.cover_length()));
  return result;
}

}  // namespace polystego
