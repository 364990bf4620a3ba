#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "polystego/codec.hpp"
#include "polystego/errors.hpp"
#include "polystego/gf2poly.hpp"
#include "polystego/lcdm.hpp"
#include "polystego/types.hpp"

namespace polystego {

inline constexpr std::size_t kOracleScanLimit = 20;  // 2^n brute force up to here
inline constexpr std::size_t kOracleSetLimit = 24;   // 2^k enumeration up to here

/// Ground truth for one instance: the exhaustive best modifier next to what
/// the family search returned. gap = best_cost - dffa_cost; it cannot be
/// positive (the family result is itself in the scanned set) and is zero
/// whenever costs are nonnegative.
struct OracleReport {
  std::size_t n = 0;
  std::size_t msg_len = 0;
  std::uint64_t seed = 0;
  std::uint64_t modifier_count = 0;
  double best_cost = 0.0;
  Gf2Poly best_modifier;
  double dffa_cost = 0.0;
  double gap = 0.0;

  std::string to_line() const {
    std::ostringstream os;
    os << "oracle n=" << n << " msg_len=" << msg_len << " seed=" << seed
       << " modifiers=" << modifier_count << " best_cost=" << best_cost
       << " dffa_cost=" << dffa_cost << " gap=" << gap
       << " best_modifier=[" << best_modifier.to_exponents() << "]";
    return os.str();
  }
};

/// Every polynomial e of degree < n with rem(v - e, g) = m, in ascending
/// packed-bits order.
///
/// For n <= 20 this scans all 2^n candidate bit patterns, so the result does
/// not presuppose the e_base + F*g form at all. Larger covers fall back to
/// that explicit form and are capped at k <= 24.
inline std::vector<Gf2Poly> exhaust_modifiers(const StegoCode& code, const Gf2Poly& v,
                                              const Gf2Poly& m) {
  const std::size_t n = code.cover_length();
  std::vector<Gf2Poly> found;

  if (n <= kOracleScanLimit) {
    const std::uint64_t v_bits = v.to_word();
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      // rem(v - e, g) with v - e computed as XOR
      if (Gf2Poly::rem(Gf2Poly::from_word(v_bits ^ mask), code.generator()) == m) {
        found.push_back(Gf2Poly::from_word(mask));
      }
    }
    return found;  // ascending by construction
  }

  if (code.dimension() > kOracleSetLimit) {
    throw GuardError("exhaustive modifier search is capped at n <= 20 or k <= 24");
  }
  ModifierStream stream = enumerate_modifiers(code, base_modifier(code, v, m));
  while (auto e = stream.next()) found.push_back(std::move(*e));
  std::sort(found.begin(), found.end());
  return found;
}

/// Scores every valid modifier exhaustively and compares the minimum against
/// the family search on the same instance. `seed` is carried through verbatim
/// so a failing instance can be replayed.
inline OracleReport verify_dffa(const StegoCode& code, const Gf2Poly& v, const Gf2Poly& m,
                                const DistortionMap& costs, std::uint64_t seed = 0) {
  if (code.cover_length() > kOracleScanLimit) {
    throw GuardError("verify_dffa is capped at n <= 20");
  }
  OracleReport report;
  report.n = code.cover_length();
  report.msg_len = code.message_length();
  report.seed = seed;

  const std::vector<Gf2Poly> modifiers = exhaust_modifiers(code, v, m);
  report.modifier_count = modifiers.size();
  bool found = false;
  for (const Gf2Poly& e : modifiers) {
    const double cost = modifier_cost(e, costs);
    if (!found || cost < report.best_cost) {
      found = true;
      report.best_cost = cost;
      report.best_modifier = e;
    }
  }

  report.dffa_cost = dffa(code, base_modifier(code, v, m), costs).total_cost;
  report.gap = report.best_cost - report.dffa_cost;
  return report;
}

}  // namespace polystego
