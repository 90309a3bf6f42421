#pragma once

// Seeded simulation of the walk, used as an end-to-end check on the exact
// character-sum machinery.
//
// Randomness is counter based: sample s under seed σ runs its own SplitMix64
// stream started from mix(σ, s). Any sample can be regenerated in isolation,
// and the aggregate is a sum of integer counts, so the output does not depend
// on evaluation order.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "abelmix/group.hpp"
#include "abelmix/mixing.hpp"

namespace abelmix {

struct SimConfig {
  std::int64_t t = 0;
  std::int64_t samples = 1;
  std::uint64_t seed = 0;

  friend bool operator==(const SimConfig&, const SimConfig&) = default;
};

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t state) : state_(state) {}

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix(state_);
  }

  /// Uniform draw from {0, ..., bound-1} by multiply-high (bias below bound / 2^64).
  std::uint64_t below(std::uint64_t bound) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(next()) * bound) >> 64);
  }

 private:
  std::uint64_t state_;
};

inline SplitMix64 sample_stream(std::uint64_t seed, std::uint64_t sample_index) {
  return SplitMix64(SplitMix64::mix(seed ^ SplitMix64::mix(sample_index + 0x632be59bd9b4e019ULL)));
}

namespace detail {

// Row s holds x + symbol_s for every element x.
inline std::vector<std::vector<std::int32_t>> symbol_shift_table(const WalkSpec& walk) {
  const auto& g = walk.group();
  const auto symbols = walk.symbol_indices();
  std::vector<std::vector<std::int32_t>> table(symbols.size(),
                                               std::vector<std::int32_t>(static_cast<std::size_t>(g.order())));
  for (std::size_t s = 0; s < symbols.size(); ++s) {
    for (std::int64_t x = 0; x < g.order(); ++x) {
      table[s][static_cast<std::size_t>(x)] = static_cast<std::int32_t>(g.add_index(x, symbols[s]));
    }
  }
  return table;
}

inline std::int64_t run_path(const std::vector<std::vector<std::int32_t>>& shift, std::int64_t t, SplitMix64& rng) {
  std::int32_t x = 0;
  const auto bound = static_cast<std::uint64_t>(shift.size());
  for (std::int64_t i = 0; i < t; ++i) x = shift[rng.below(bound)][static_cast<std::size_t>(x)];
  return x;
}

}  // namespace detail

/// Endpoint of one t-step path from the identity: each step draws one of the
/// 2r+1 symbols uniformly (symbols, not distinct elements).
inline GroupElement sample_path(const WalkSpec& walk, std::int64_t t, std::uint64_t seed,
                                std::uint64_t sample_index = 0) {
  if (t < 0) throw Error(ErrorKind::invalid_argument, "negative step count");
  auto rng = sample_stream(seed, sample_index);
  return walk.group().element(detail::run_path(detail::symbol_shift_table(walk), t, rng));
}

struct EmpiricalDistribution {
  std::vector<std::int64_t> counts;
  Distribution dist;
};

inline EmpiricalDistribution empirical_distribution(const WalkSpec& walk, const SimConfig& cfg) {
  if (cfg.samples < 1) throw Error(ErrorKind::invalid_argument, "sample count must be at least 1");
  if (cfg.t < 0) throw Error(ErrorKind::invalid_argument, "negative step count");
  const auto shift = detail::symbol_shift_table(walk);
  const auto n = static_cast<std::size_t>(walk.group().order());
  EmpiricalDistribution out{std::vector<std::int64_t>(n, 0), Distribution{std::vector<double>(n, 0.0)}};
  for (std::int64_t s = 0; s < cfg.samples; ++s) {
    auto rng = sample_stream(cfg.seed, static_cast<std::uint64_t>(s));
    ++out.counts[static_cast<std::size_t>(detail::run_path(shift, cfg.t, rng))];
  }
  const auto total = static_cast<double>(cfg.samples);
  for (std::size_t x = 0; x < n; ++x) out.dist.mass[x] = static_cast<double>(out.counts[x]) / total;
  return out;
}

struct EmpiricalCheck {
  double max_abs_dev = 0.0;  // max_x |freq(x) - P^t(x)|
  std::int64_t violations = 0;  // coordinates outside 5 sigma
  std::vector<double> exact;
  std::vector<double> band;
  EmpiricalDistribution empirical;
};

inline constexpr std::int64_t kMinCheckSamples = 10'000;

/// Compares frequencies against the exact law P^t = 1/N + dev_t with
/// per-coordinate bands 5 sqrt(p(1-p)/S).
inline EmpiricalCheck empirical_check(const DistanceEvaluator& eval, const SimConfig& cfg) {
  if (cfg.samples < kMinCheckSamples) {
    throw Error(ErrorKind::invalid_argument, "empirical_check needs at least 10^4 samples");
  }
  EmpiricalCheck out;
  out.empirical = empirical_distribution(eval.walk(), cfg);
  const auto field = eval.deviation(cfg.t);
  const auto n = field.dev.size();
  const double inv_n = 1.0 / static_cast<double>(n);
  const auto s = static_cast<double>(cfg.samples);
  out.exact.resize(n);
  out.band.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    const double p = inv_n + field.dev[x];
    const double pc = std::min(1.0, std::max(0.0, p));
    out.exact[x] = p;
    out.band[x] = 5.0 * std::sqrt(pc * (1.0 - pc) / s);
    const double diff = std::abs(out.empirical.dist.mass[x] - p);
    out.max_abs_dev = std::max(out.max_abs_dev, diff);
    // 1e-15 absorbs rounding in p where the true value is 0 or 1 (zero-width band).
    if (diff > out.band[x] + 1e-15) ++out.violations;
  }
  return out;
}

inline EmpiricalCheck empirical_check(const WalkSpec& walk, const SimConfig& cfg) {
  return empirical_check(DistanceEvaluator(walk), cfg);
}

}  // namespace abelmix
