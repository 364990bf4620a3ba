#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "polystego/errors.hpp"
#include "polystego/gf2poly.hpp"
#include "polystego/types.hpp"

namespace polystego {

/// One head exponent h of the base modifier together with every position
/// that carries the same syndrome contribution under the 1+x^(n-k)
/// generator: the exponents congruent to h modulo n-k, below n.
struct HeadFamily {
  std::size_t head_exponent = 0;
  std::vector<std::size_t> positions;   // ascending: h, h+(n-k), h+2(n-k), ...
  std::size_t chosen_position = 0;      // cost argmin; ties go to the smallest position
  double chosen_cost = 0.0;
};

struct DffaResult {
  Gf2Poly ideal;                 // one term per family, at the chosen positions
  double total_cost = 0.0;       // sum of chosen costs
  std::uint64_t comparisons = 0; // cost lookups performed
};

/// Code with generator 1 + x^msg_len over a cover of n positions.
inline StegoCode make_lcdm(std::size_t n, std::size_t msg_len) {
  if (msg_len == 0 || msg_len >= n) {
    throw CapacityError("message length must lie in [1, n-1]");
  }
  Gf2Poly g;
  g.set_coeff(0, true);
  g.set_coeff(msg_len, true);
  return StegoCode::make(n, std::move(g));
}

/// Total flip cost of a modifier polynomial.
inline double modifier_cost(const Gf2Poly& modifier, const DistortionMap& costs) {
  const auto deg = modifier.degree();
  if (deg && *deg >= costs.size()) {
    throw CapacityError("modifier refers to positions beyond the cost map");
  }
  double total = 0.0;
  modifier.for_each_term([&](std::size_t e) { total += costs[e]; });
  return total;
}

/// One family per nonzero coefficient of e_base, cheapest position chosen.
/// Requires the 1+x^(n-k) generator; family sizes follow floor((n-1-h)/(n-k))+1,
/// so classes are uneven whenever (n-k) does not divide n.
inline std::vector<HeadFamily> head_families(const StegoCode& code, const Gf2Poly& e_base,
                                             const DistortionMap& costs) {
  if (!code.is_lcdm()) {
    throw StrategyError("cyclic-shift families require the 1+x^(n-k) generator");
  }
  const std::size_t n = code.cover_length();
  const std::size_t step = code.message_length();
  if (costs.size() != n) throw CapacityError("cost map length must equal the cover length");
  const auto deg = e_base.degree();
  if (deg && *deg >= step) {
    throw CapacityError("base modifier degree must be below the message length");
  }

  std::vector<HeadFamily> families;
  families.reserve(e_base.term_count());
  e_base.for_each_term([&](std::size_t head) {
    HeadFamily family;
    family.head_exponent = head;
    family.positions.reserve((n - 1 - head) / step + 1);
    for (std::size_t pos = head; pos < n; pos += step) family.positions.push_back(pos);
    family.chosen_position = family.positions.front();
    family.chosen_cost = costs[family.chosen_position];
    for (std::size_t pos : family.positions) {
      if (costs[pos] < family.chosen_cost) {  // strict: ties keep the smaller position
        family.chosen_cost = costs[pos];
        family.chosen_position = pos;
      }
    }
    families.push_back(std::move(family));
  });
  return families;
}

/// Distortion family finding: picks, independently per family, the cheapest
/// position equivalent to the head flip, and assembles the result. The
/// comparison count is the number of cost lookups, at most n in total.
inline DffaResult dffa(const StegoCode& code, const Gf2Poly& e_base, const DistortionMap& costs) {
  DffaResult result;
  for (const HeadFamily& family : head_families(code, e_base, costs)) {
    result.ideal.set_coeff(family.chosen_position, true);
    result.total_cost += family.chosen_cost;
    result.comparisons += family.positions.size();
  }
  return result;
}

/// Evaluates x^h + sum_{l=1..L} x^h * g * x^((l-1)(n-k)) with polynomial
/// arithmetic and compares it against x^(h + L(n-k)). The sum telescopes, so
/// this returns true for every in-range (h, L); it exists as a checkable
/// identity, not as a computation step.
inline bool shift_identity_check(std::size_t h, std::size_t shift_count, const StegoCode& code) {
  const std::size_t step = code.message_length();
  const std::size_t n = code.cover_length();
  if (h >= n || shift_count > (n - 1 - h) / step) {
    throw GuardError("cyclic shift runs past the last cover position");
  }
  Gf2Poly lhs = Gf2Poly::monomial(h);
  for (std::size_t l = 1; l <= shift_count; ++l) {
    lhs += (Gf2Poly::monomial(h) * code.generator()).shifted((l - 1) * step);
  }
  return lhs == Gf2Poly::monomial(h + shift_count * step);
}

}  // namespace polystego
