#pragma once

// Characters and eigenvalues. For the walk with generators a_1..a_r the
// character indexed by k is an eigenvector with eigenvalue
//   lambda_k = (1 + 2 * sum_i cos(2 pi <k, a_i>)) / (2r + 1),
// where <k, x> = sum_j k_j x_j / n_j is the character pairing.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

#include "abelmix/group.hpp"

namespace abelmix {

struct CharacterIndex {
  std::vector<std::int64_t> k;

  friend bool operator==(const CharacterIndex&, const CharacterIndex&) = default;
};

/// The pairing <k, x> scaled to the common denominator N = |G|, reduced to [0, N).
inline std::int64_t pairing_phase(const AbelianGroup& group, const std::vector<std::int64_t>& k,
                                  const std::vector<std::int64_t>& x) {
  const std::int64_t n = group.order();
  std::int64_t phase = 0;
  for (std::size_t j = 0; j < group.factors(); ++j) {
    const std::int64_t nj = group.moduli()[j];
    const std::int64_t term = ((k[j] % nj) * (x[j] % nj)) % nj;
    phase = (phase + term * (n / nj)) % n;
  }
  if (phase < 0) phase += n;
  return phase;
}

/// cos(2 pi m / n). The argument is folded to m <= n/2 first so that
/// m and n - m give bit-identical results.
inline double unit_cos(std::int64_t m, std::int64_t n) {
  m %= n;
  if (m < 0) m += n;
  if (2 * m > n) m = n - m;
  if (4 * m == n) return 0.0;
  if (2 * m == n) return -1.0;
  return std::cos(2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(n));
}

inline double unit_sin(std::int64_t m, std::int64_t n) {
  m %= n;
  if (m < 0) m += n;
  if (m == 0 || 2 * m == n) return 0.0;
  if (4 * m == n) return 1.0;
  if (4 * m == 3 * n) return -1.0;
  return std::sin(2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(n));
}

inline double eigenvalue(const WalkSpec& walk, const CharacterIndex& k) {
  const AbelianGroup& g = walk.group();
  if (!g.is_reduced(GroupElement{k.k})) throw Error(ErrorKind::invalid_argument, "character index not reduced");
  double acc = 0.0;
  for (const auto& a : walk.generators()) acc += unit_cos(pairing_phase(g, k.k, a.coords), g.order());
  return (1.0 + 2.0 * acc) / static_cast<double>(walk.symbol_count());
}

struct Spectrum {
  std::vector<double> values;  // lambda_k by mixed-radix index of k
  CharacterIndex dominant_index;
  std::int64_t dominant_flat = 0;
  double dominant_value = 0.0;  // signed lambda_m
  double gap = 0.0;             // 1 - |lambda_m|
};

/// All eigenvalues plus the dominant nontrivial mode: the k != 0 of largest
/// |lambda_k|, ties resolved toward the smallest index.
inline Spectrum spectrum(const WalkSpec& walk) {
  const AbelianGroup& g = walk.group();
  const std::int64_t n = g.order();
  Spectrum s;
  s.values.resize(static_cast<std::size_t>(n));
  s.values[0] = 1.0;
  double best = -1.0;
  for (std::int64_t k = 1; k < n; ++k) {
    const double lambda = eigenvalue(walk, CharacterIndex{g.element(k).coords});
    s.values[static_cast<std::size_t>(k)] = lambda;
    if (std::abs(lambda) > best) {
      best = std::abs(lambda);
      s.dominant_flat = k;
    }
  }
  s.dominant_index = CharacterIndex{g.element(s.dominant_flat).coords};
  s.dominant_value = s.values[static_cast<std::size_t>(s.dominant_flat)];
  s.gap = 1.0 - std::abs(s.dominant_value);
  return s;
}

inline double spectral_gap(const Spectrum& s) { return s.gap; }

}  // namespace abelmix
