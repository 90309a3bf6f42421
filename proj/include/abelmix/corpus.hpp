#pragma once

// The fixed verification corpus: cyclic groups with one to three generators
// plus a handful of product groups. Used by the bounds harness and the tests.

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "abelmix/families.hpp"

namespace abelmix {

inline const std::vector<std::int64_t>& corpus_cycle_orders() {
  static const std::vector<std::int64_t> orders{4,  5,  6,  7,  8,  9,   10,  12,  16,  25,
                                                27, 32, 36, 48, 64, 100, 128, 200, 256, 512};
  return orders;
}

namespace detail {

inline std::int64_t icbrt(std::int64_t n) {
  std::int64_t r = 1;
  while ((r + 1) * (r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace detail

/// Generator sets used for each cyclic order n:
///   r = 1: {1}, and {3} when gcd(3, n) = 1 and n > 6
///   r = 2: {1, 2} for n >= 5, {1, floor(sqrt n)} for n >= 9
///   r = 3: {1, 2, 3} for n >= 7, {1, c, c^2} with c = floor(cbrt n) for n >= 27
inline std::vector<WalkDescription> cyclic_corpus_for(std::int64_t n) {
  std::vector<WalkDescription> out;
  out.push_back(cycle_description(n, {1}));
  if (n > 6 && std::gcd<std::int64_t>(3, n) == 1) out.push_back(cycle_description(n, {3}));
  if (n >= 5) out.push_back(cycle_description(n, {1, 2}));
  if (n >= 9) out.push_back(cycle_description(n, {1, detail::isqrt(n)}));
  if (n >= 7) out.push_back(cycle_description(n, {1, 2, 3}));
  if (n >= 27) {
    const auto c = detail::icbrt(n);
    out.push_back(cycle_description(n, {1, c, c * c}));
  }
  return out;
}

inline std::vector<WalkDescription> product_corpus() {
  return {
      WalkDescription{{2, 2}, {{1, 0}, {0, 1}}, false},
      WalkDescription{{4, 6}, {{1, 0}, {0, 1}}, false},
      WalkDescription{{4, 6}, {{1, 1}, {0, 1}}, false},
      WalkDescription{{2, 4}, {{1, 1}, {0, 1}}, false},
      WalkDescription{{3, 3}, {{1, 0}, {0, 1}}, false},
      WalkDescription{{2, 2, 2}, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, false},
      WalkDescription{{3, 5}, {{1, 2}}, false},
      hypercube_description(5),
  };
}

/// The full corpus (every N <= 512).
inline std::vector<WalkDescription> standard_corpus() {
  std::vector<WalkDescription> out;
  for (auto n : corpus_cycle_orders()) {
    for (auto& d : cyclic_corpus_for(n)) out.push_back(std::move(d));
  }
  for (auto& d : product_corpus()) out.push_back(std::move(d));
  return out;
}

/// Cyclic walks used for per-mode bound checks, extended to n = 4096.
inline std::vector<WalkDescription> extended_cyclic_corpus() {
  std::vector<WalkDescription> out;
  auto orders = corpus_cycle_orders();
  for (std::int64_t n : {1024, 2048, 4096}) orders.push_back(n);
  for (auto n : orders) {
    for (auto& d : cyclic_corpus_for(n)) out.push_back(std::move(d));
  }
  return out;
}

}  // namespace abelmix
