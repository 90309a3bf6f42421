#pragma once

// Distance to stationarity d(t) = |P^t - uniform|_1 and the quantities
// derived from it.
//
// The deviation P^t(x) - 1/N is evaluated directly from the nontrivial modes,
//   dev(x) = (1/N) sum_{k != 0} lambda_k^t chi_k(x),
// so it never subtracts 1/N from a number near 1/N. Distances stay accurate
// down to the underflow range.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "abelmix/detail/summation.hpp"
#include "abelmix/group.hpp"
#include "abelmix/spectral.hpp"

namespace abelmix {

struct DeviationField {
  std::vector<double> dev;
  std::int64_t t = 0;
};

struct MixingCurve {
  std::vector<double> d_values;  // L1 scale, t = 0, 1, ...
  bool stopped_early = false;    // true when the floor ended the curve before t_max

  double tv(std::size_t t) const { return 0.5 * d_values[t]; }
};

/// Owns a walk, its spectrum, and the character tables needed to evaluate
/// deviation fields repeatedly.
class DistanceEvaluator {
 public:
  explicit DistanceEvaluator(WalkSpec walk) : DistanceEvaluator(walk, spectrum(walk)) {}

  DistanceEvaluator(WalkSpec walk, Spectrum spec) : walk_(std::move(walk)), spec_(std::move(spec)) {
    const AbelianGroup& g = walk_.group();
    if (g.is_cyclic()) {
      const std::int64_t n = g.order();
      cos_table_.resize(static_cast<std::size_t>(n));
      for (std::int64_t m = 0; m < n; ++m) cos_table_[static_cast<std::size_t>(m)] = unit_cos(m, n);
    } else {
      for (auto nj : g.moduli()) {
        std::vector<std::complex<double>> roots(static_cast<std::size_t>(nj));
        for (std::int64_t m = 0; m < nj; ++m) {
          const double c = unit_cos(m, nj);
          const double s = unit_sin(m, nj);
          roots[static_cast<std::size_t>(m)] = {c, s};
        }
        axis_roots_.push_back(std::move(roots));
      }
    }
  }

  const WalkSpec& walk() const { return walk_; }
  const Spectrum& spectrum_values() const { return spec_; }
  std::int64_t order() const { return walk_.group().order(); }

  /// d(0) = 2(N-1)/N.
  double initial_distance() const {
    const auto n = static_cast<double>(order());
    return 2.0 * (n - 1.0) / n;
  }

  DeviationField deviation(std::int64_t t) const {
    if (t < 0) throw Error(ErrorKind::invalid_argument, "negative time");
    const std::int64_t n = order();
    if (t == 0) {
      // delta_0 - uniform, written directly so that P^0 is exact.
      DeviationField out{std::vector<double>(static_cast<std::size_t>(n), -1.0 / static_cast<double>(n)), 0};
      out.dev[0] = 1.0 - 1.0 / static_cast<double>(n);
      return out;
    }
    std::vector<double> coeff(static_cast<std::size_t>(n));
    coeff[0] = 0.0;
    for (std::int64_t k = 1; k < n; ++k) {
      coeff[static_cast<std::size_t>(k)] = power(spec_.values[static_cast<std::size_t>(k)], t);
    }
    DeviationField out{std::vector<double>(static_cast<std::size_t>(n)), t};
    if (walk_.group().is_cyclic()) {
      cyclic_transform(coeff, out.dev);
    } else {
      product_transform(coeff, out.dev);
    }
    return out;
  }

  double l1(std::int64_t t) const {
    const auto field = deviation(t);
    detail::CompensatedSum acc;
    for (double v : field.dev) acc.add(std::abs(v));
    return acc.value();
  }

 private:
  static double power(double base, std::int64_t t) {
    if (t == 0) return 1.0;
    return std::pow(base, static_cast<double>(t));
  }

  // Cyclic groups: lambda_k = lambda_{n-k} bit-for-bit, so pair the two
  // modes and evaluate only x <= n/2 (dev is even in x).
  void cyclic_transform(const std::vector<double>& coeff, std::vector<double>& dev) const {
    const std::int64_t n = order();
    const double inv_n = 1.0 / static_cast<double>(n);
    const std::int64_t half = (n - 1) / 2;  // paired modes k = 1..half
    for (std::int64_t x = 0; 2 * x <= n; ++x) {
      detail::CompensatedSum acc;
      std::int64_t phase = 0;
      for (std::int64_t k = 1; k <= half; ++k) {
        phase += x;
        if (phase >= n) phase -= n;
        const double c = coeff[static_cast<std::size_t>(k)];
        if (c != 0.0) acc.add(2.0 * c * cos_table_[static_cast<std::size_t>(phase)]);
      }
      if (n % 2 == 0) {
        const double c = coeff[static_cast<std::size_t>(n / 2)];
        acc.add(x % 2 == 0 ? c : -c);
      }
      const double v = acc.value() * inv_n;
      dev[static_cast<std::size_t>(x)] = v;
      if (x != 0) dev[static_cast<std::size_t>(n - x)] = v;
    }
  }

  // Product groups: separable transform, one axis at a time.
  void product_transform(const std::vector<double>& coeff, std::vector<double>& dev) const {
    const AbelianGroup& g = walk_.group();
    const std::int64_t n = g.order();
    std::vector<std::complex<double>> data(coeff.begin(), coeff.end());
    std::vector<std::complex<double>> line;
    for (std::size_t j = 0; j < g.factors(); ++j) {
      const std::int64_t nj = g.moduli()[j];
      const std::int64_t stride = g.stride(j);
      const auto& roots = axis_roots_[j];
      line.resize(static_cast<std::size_t>(nj));
      for (std::int64_t base = 0; base < n; ++base) {
        if ((base / stride) % nj != 0) continue;  // base must have digit j == 0
        for (std::int64_t x = 0; x < nj; ++x) {
          detail::CompensatedSum re;
          detail::CompensatedSum im;
          for (std::int64_t k = 0; k < nj; ++k) {
            const auto v = data[static_cast<std::size_t>(base + k * stride)];
            if (v == std::complex<double>{}) continue;
            const auto w = roots[static_cast<std::size_t>((k * x) % nj)];
            re.add(v.real() * w.real());
            re.add(-v.imag() * w.imag());
            im.add(v.real() * w.imag());
            im.add(v.imag() * w.real());
          }
          line[static_cast<std::size_t>(x)] = {re.value(), im.value()};
        }
        for (std::int64_t x = 0; x < nj; ++x) data[static_cast<std::size_t>(base + x * stride)] = line[static_cast<std::size_t>(x)];
      }
    }
    const double inv_n = 1.0 / static_cast<double>(n);
    for (std::int64_t x = 0; x < n; ++x) dev[static_cast<std::size_t>(x)] = data[static_cast<std::size_t>(x)].real() * inv_n;
  }

  WalkSpec walk_;
  Spectrum spec_;
  std::vector<double> cos_table_;
  std::vector<std::vector<std::complex<double>>> axis_roots_;
};

inline DeviationField deviation_field(const WalkSpec& walk, const Spectrum& spec, std::int64_t t) {
  return DistanceEvaluator(walk, spec).deviation(t);
}

inline double l1_distance(const DistanceEvaluator& eval, std::int64_t t) { return eval.l1(t); }

inline double l1_distance(const WalkSpec& walk, std::int64_t t) { return DistanceEvaluator(walk).l1(t); }

inline MixingCurve mixing_curve(const DistanceEvaluator& eval, std::int64_t t_max, double floor) {
  if (t_max < 0) throw Error(ErrorKind::invalid_argument, "t_max must be non-negative");
  if (!(floor >= 0.0)) throw Error(ErrorKind::invalid_argument, "floor must be non-negative");
  MixingCurve curve;
  for (std::int64_t t = 0; t <= t_max; ++t) {
    const double d = eval.l1(t);
    curve.d_values.push_back(d);
    if (d < floor) {
      curve.stopped_early = t < t_max;
      break;
    }
  }
  return curve;
}

inline MixingCurve mixing_curve(const WalkSpec& walk, std::int64_t t_max, double floor) {
  return mixing_curve(DistanceEvaluator(walk), t_max, floor);
}

namespace detail {

inline void check_level(const DistanceEvaluator& eval, double d) {
  if (!(d > 0.0) || d > 2.0) throw Error(ErrorKind::invalid_argument, "distance level must lie in (0, 2]");
  if (d > eval.initial_distance()) {
    throw Error(ErrorKind::threshold_undefined, "level " + std::to_string(d) + " exceeds d(0) = " +
                                                    std::to_string(eval.initial_distance()) + " for " +
                                                    eval.walk().describe());
  }
}

inline Error cap_error(const DistanceEvaluator& eval, double d, std::int64_t t_cap) {
  return Error(ErrorKind::cap_exceeded, "d(t) still >= " + std::to_string(d) + " at t_cap = " +
                                            std::to_string(t_cap) + " for " + eval.walk().describe());
}

}  // namespace detail

/// Reference semantics for t(d) = max{t : d(t) >= d}: scan t = 1, 2, ... for
/// the first t with d(t) < d and return t - 1.
inline std::int64_t threshold_scan(const DistanceEvaluator& eval, double d, std::int64_t t_cap) {
  detail::check_level(eval, d);
  for (std::int64_t t = 1; t <= t_cap; ++t) {
    if (eval.l1(t) < d) return t - 1;
  }
  throw detail::cap_error(eval, d, t_cap);
}

/// Same result as threshold_scan (d(t) is non-increasing in t), found by
/// doubling then bisection so large thresholds cost O(log t) evaluations.
inline std::int64_t threshold(const DistanceEvaluator& eval, double d, std::int64_t t_cap) {
  detail::check_level(eval, d);
  if (t_cap < 1) throw detail::cap_error(eval, d, t_cap);
  std::int64_t lo = 0;  // d(lo) >= d
  std::int64_t hi = 1;
  while (eval.l1(hi) >= d) {
    lo = hi;
    if (hi == t_cap) throw detail::cap_error(eval, d, t_cap);
    hi = std::min(2 * hi, t_cap);
  }
  while (hi - lo > 1) {  // invariant: d(lo) >= d > d(hi)
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (eval.l1(mid) >= d) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

inline std::int64_t threshold(const WalkSpec& walk, double d, std::int64_t t_cap) {
  return threshold(DistanceEvaluator(walk), d, t_cap);
}

/// t(eps) / t(1 - eps), both levels on the L1 scale. Empty when t(1 - eps) = 0.
inline std::optional<double> cutoff_ratio(const DistanceEvaluator& eval, double eps, std::int64_t t_cap) {
  if (!(eps > 0.0) || !(eps < 1.0)) throw Error(ErrorKind::invalid_argument, "epsilon must lie in (0, 1)");
  const std::int64_t t_eps = threshold(eval, eps, t_cap);
  const std::int64_t t_far = threshold(eval, 1.0 - eps, t_cap);
  if (t_far == 0) return std::nullopt;
  return static_cast<double>(t_eps) / static_cast<double>(t_far);
}

inline std::optional<double> cutoff_ratio(const WalkSpec& walk, double eps, std::int64_t t_cap) {
  return cutoff_ratio(DistanceEvaluator(walk), eps, t_cap);
}

struct SandwichResult {
  double lower;     // lambda_m^{2t}
  double exact_sq;  // d(t)^2
  double upper;     // sum_{k != 0} lambda_k^{2t}
  bool holds;
};

inline SandwichResult lemma2_sandwich(const DistanceEvaluator& eval, std::int64_t t) {
  if (t < 0) throw Error(ErrorKind::invalid_argument, "negative time");
  constexpr double slack = 1e-12;
  const auto& spec = eval.spectrum_values();
  const double d = eval.l1(t);
  SandwichResult out{};
  out.lower = t == 0 ? 1.0 : std::pow(std::abs(spec.dominant_value), 2.0 * static_cast<double>(t));
  out.exact_sq = d * d;
  detail::CompensatedSum acc;
  for (std::size_t k = 1; k < spec.values.size(); ++k) {
    acc.add(t == 0 ? 1.0 : std::pow(std::abs(spec.values[k]), 2.0 * static_cast<double>(t)));
  }
  out.upper = acc.value();
  out.holds = out.lower <= out.exact_sq + slack && out.exact_sq <= out.upper + slack;
  return out;
}

inline SandwichResult lemma2_sandwich(const WalkSpec& walk, std::int64_t t) {
  return lemma2_sandwich(DistanceEvaluator(walk), t);
}

struct PeresProducts {
  double gap_product;  // (1 - |lambda_m|) * t(1/2)
  double log_product;  // -ln|lambda_m| * t(1/2)
  std::int64_t t_half;
};

inline PeresProducts peres_products(const DistanceEvaluator& eval, std::int64_t t_cap) {
  const std::int64_t t_half = threshold(eval, 0.5, t_cap);
  const double lm = std::abs(eval.spectrum_values().dominant_value);
  return PeresProducts{(1.0 - lm) * static_cast<double>(t_half), -std::log(lm) * static_cast<double>(t_half), t_half};
}

inline PeresProducts peres_products(const WalkSpec& walk, std::int64_t t_cap) {
  return peres_products(DistanceEvaluator(walk), t_cap);
}

}  // namespace abelmix
