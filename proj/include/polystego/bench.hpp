#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "polystego/codec.hpp"
#include "polystego/errors.hpp"
#include "polystego/lcdm.hpp"
#include "polystego/matrix_baseline.hpp"
#include "polystego/types.hpp"

namespace polystego {

/// Counters from one LCDM embed. comparisons <= n always holds: the families
/// cover disjoint residue classes. wall_time_s is informational only; the
/// comparison count is the machine-independent metric.
struct BenchRecord {
  std::size_t n = 0;
  std::size_t msg_len = 0;
  std::uint64_t comparisons = 0;
  std::size_t nonzero_heads = 0;
  double wall_time_s = 0.0;
  double matrix_bytes = 0.0;
  double poly_bytes = 0.0;
};

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Instance generators. Draws come straight off mt19937_64 so identical seeds
// give identical instances on every platform.

inline CoverImage random_cover(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::uint8_t> pixels(n);
  for (auto& p : pixels) p = static_cast<std::uint8_t>(rng() & 0xFF);
  return CoverImage::make(n, 1, std::move(pixels));
}

inline BitVector random_bits(std::mt19937_64& rng, std::size_t len) {
  BitVector bits(len);
  for (std::size_t i = 0; i < len; ++i) bits.set(i, rng() & 1u);
  return bits;
}

/// Integer-valued costs in [0, max_cost]; sums of these compare exactly.
inline DistortionMap random_costs(std::mt19937_64& rng, std::size_t n,
                                  std::uint32_t max_cost = 1000) {
  std::vector<double> costs(n);
  for (auto& c : costs) c = static_cast<double>(rng() % (max_cost + 1));
  return DistortionMap::make(std::move(costs));
}

/// Uniform random polynomial with degree < len.
inline Gf2Poly random_poly(std::mt19937_64& rng, std::size_t len) {
  Gf2Poly p;
  for (std::size_t i = 0; i < len; ++i) {
    if (rng() & 1u) p.set_coeff(i, true);
  }
  return p;
}

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 1.0;
};

inline LinearFit linear_fit(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = x.size();
  if (n != y.size() || n < 2) throw CapacityError("linear fit needs >= 2 matched points");
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / static_cast<double>(n);
  const double my = sy / static_cast<double>(n);
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  LinearFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss_res = 0, ss_tot = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double pred = fit.intercept + fit.slope * x[i];
    ss_res += (y[i] - pred) * (y[i] - pred);
    ss_tot += (y[i] - my) * (y[i] - my);
  }
  fit.r_squared = ss_tot == 0.0 ? 1.0 : 1.0 - ss_res / ss_tot;
  return fit;
}

/// One LCDM embed per size with fresh random cover, message and costs.
/// Runs are sequential so the timings stay honest.
inline std::vector<BenchRecord> run_suite(std::span<const std::size_t> sizes, double msg_rate,
                                          std::uint64_t seed) {
  if (sizes.empty()) throw CapacityError("size list is empty");
  if (!(msg_rate > 0.0) || !(msg_rate < 1.0)) {
    throw CapacityError("message rate must lie strictly between 0 and 1");
  }
  std::vector<BenchRecord> records;
  records.reserve(sizes.size());
  for (std::size_t n : sizes) {
    const auto msg_len = static_cast<std::size_t>(static_cast<double>(n) * msg_rate + 0.5);
    if (msg_len == 0 || msg_len >= n) {
      throw CapacityError("message rate yields no capacity at n=" + std::to_string(n));
    }
    std::mt19937_64 rng(splitmix64(seed ^ splitmix64(n)));
    const StegoCode code = make_lcdm(n, msg_len);
    const CoverImage cover = random_cover(rng, n);
    const BitVector message = random_bits(rng, msg_len);
    const DistortionMap costs = random_costs(rng, n);

    const auto t0 = std::chrono::steady_clock::now();
    const EmbedResult result = embed(code, cover, message, DffaStrategy{costs});
    const auto t1 = std::chrono::steady_clock::now();

    BenchRecord rec;
    rec.n = n;
    rec.msg_len = msg_len;
    rec.comparisons = result.comparisons;
    rec.nonzero_heads = result.base_modifier.term_count();
    rec.wall_time_s = std::chrono::duration<double>(t1 - t0).count();
    const MemoryFootprint footprint = memory_footprint(n, msg_len);
    rec.matrix_bytes = footprint.matrix_bytes;
    rec.poly_bytes = footprint.poly_bytes;
    records.push_back(rec);
  }
  return records;
}

}  // namespace polystego
