#pragma once

// Numerical checks of every inequality in the no-cutoff argument:
// trigonometric/exponential comparisons, the per-mode eigenvalue bound, the
// short mode and the resulting lower bound on |lambda_m|, shifted lattices
// Z^r + Z(a/n) with certified theta sums, the rank-r theta bound, and the
// chain from d(t)^2 down to a bound in terms of lambda_m alone.
//
// Every check uses additive slack kSlack. A comparison that fails by more is
// reported as a violation; nothing is clamped.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <numeric>
#include <optional>
#include <vector>

#include "abelmix/detail/summation.hpp"
#include "abelmix/group.hpp"
#include "abelmix/mixing.hpp"
#include "abelmix/spectral.hpp"

namespace abelmix {

inline constexpr double kSlack = 1e-12;

/// <x>: x minus its nearest integer, in (-1/2, 1/2]; both +-1/2 map to +1/2.
inline double frac(double x) { return x - std::ceil(x - 0.5); }

/// <num/den> computed exactly in integers before the single division.
inline double frac_ratio(std::int64_t num, std::int64_t den) {
  std::int64_t r = num % den;
  if (r < 0) r += den;
  if (2 * r > den) r -= den;
  return static_cast<double>(r) / static_cast<double>(den);
}

struct FracVector {
  std::vector<double> v;  // v_i = <pairing(k, a_i)>
  std::int64_t k = 0;     // mixed-radix index of the source mode

  double norm_sq() const {
    double s = 0.0;
    for (double x : v) s += x * x;
    return s;
  }
  double linf() const {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
  }
};

inline FracVector frac_vector(const WalkSpec& walk, std::int64_t k) {
  const AbelianGroup& g = walk.group();
  const auto kc = g.element(k).coords;
  FracVector out;
  out.k = k;
  for (const auto& a : walk.generators()) out.v.push_back(frac_ratio(pairing_phase(g, kc, a.coords), g.order()));
  return out;
}

struct TrigBounds {
  double x;
  double cos_x;
  double upper;  // exp(-x^2 / (2 pi^2)), valid for |x| <= 3 pi / 2
  double lower;  // exp(-x^2), valid for |x| <= 1
  std::optional<bool> upper_ok;  // empty outside the valid range
  std::optional<bool> lower_ok;

  double upper_slack() const { return upper - cos_x; }
  double lower_slack() const { return cos_x - lower; }
};

inline TrigBounds trig_bounds(double x) {
  using std::numbers::pi;
  TrigBounds b{x, std::cos(x), std::exp(-x * x / (2.0 * pi * pi)), std::exp(-x * x), std::nullopt, std::nullopt};
  if (std::abs(x) <= 1.5 * pi) b.upper_ok = b.cos_x <= b.upper + kSlack;
  if (std::abs(x) <= 1.0) b.lower_ok = b.lower <= b.cos_x + kSlack;
  return b;
}

struct ConcavityPair {
  double geometric;  // exp(-a^2/2 - b^2/2)
  double mean;       // (exp(-a^2) + exp(-b^2)) / 2
  double midpoint;   // exp(-((a + b) / 2)^2)
  bool left_ok;
  std::optional<bool> right_ok;  // only for a, b in [-1/sqrt 2, 1/sqrt 2]
};

inline ConcavityPair concavity_pair(double a, double b) {
  ConcavityPair p{};
  p.geometric = std::exp(-0.5 * a * a - 0.5 * b * b);
  p.mean = 0.5 * std::exp(-a * a) + 0.5 * std::exp(-b * b);
  const double mid = 0.5 * a + 0.5 * b;
  p.midpoint = std::exp(-mid * mid);
  p.left_ok = p.geometric <= p.mean + kSlack;
  const double edge = std::numbers::sqrt2 / 2.0;
  if (std::abs(a) <= edge && std::abs(b) <= edge) p.right_ok = p.mean <= p.midpoint + kSlack;
  return p;
}

struct EigenBound {
  double lambda;
  double bound;  // exp(-8 |<k a/n>|^2 / (2r+1)^2)
  bool holds;
  FracVector frac;
};

inline EigenBound eigen_exp_bound(const WalkSpec& walk, std::int64_t k) {
  if (k <= 0 || k >= walk.group().order()) throw Error(ErrorKind::invalid_argument, "mode index must be nonzero");
  EigenBound e{};
  e.frac = frac_vector(walk, k);
  e.lambda = eigenvalue(walk, CharacterIndex{walk.group().element(k).coords});
  const double s = static_cast<double>(walk.symbol_count());
  e.bound = std::exp(-8.0 / (s * s) * e.frac.norm_sq());
  e.holds = e.lambda <= e.bound + kSlack;
  return e;
}

namespace detail {

inline void require_cyclic(const WalkSpec& walk, const char* what) {
  if (!walk.group().is_cyclic()) {
    throw Error(ErrorKind::invalid_argument, std::string(what) + " is defined for cyclic groups only");
  }
}

}  // namespace detail

struct ShortMode {
  std::int64_t k;
  double linf;  // max_i |<k a_i / n>|
  bool within_pigeonhole;  // linf <= 1/(2 pi)
};

/// Exhaustive scan of k = 1..n-1 for the smallest max_i |<k a_i/n>|.
inline ShortMode short_mode(const WalkSpec& walk) {
  detail::require_cyclic(walk, "short_mode");
  const std::int64_t n = walk.group().order();
  std::int64_t best_k = 1;
  std::int64_t best_num = n;  // linf * n, exact
  for (std::int64_t k = 1; k < n; ++k) {
    std::int64_t num = 0;
    for (const auto& a : walk.generators()) {
      std::int64_t r = (k * a.coords[0]) % n;
      if (2 * r > n) r = n - r;
      num = std::max(num, r);
    }
    if (num < best_num) {
      best_num = num;
      best_k = k;
    }
  }
  const double linf = static_cast<double>(best_num) / static_cast<double>(n);
  return ShortMode{best_k, linf, linf <= 1.0 / (2.0 * std::numbers::pi)};
}

struct LambdaLowerBound {
  std::int64_t k;
  double bound;  // exp(-8 pi^2 |<k a/n>|^2 / (2r+1))
  double lambda_k_abs;
  double lambda_m_abs;
  bool holds;
};

inline LambdaLowerBound lambda_lower_bound(const WalkSpec& walk, const Spectrum& spec) {
  const ShortMode sm = short_mode(walk);
  if (!sm.within_pigeonhole) {
    throw Error(ErrorKind::bound_not_applicable,
                walk.describe() + ": no mode with all |<k a_i/n>| <= 1/(2 pi) (best " + std::to_string(sm.linf) + ")");
  }
  LambdaLowerBound out{};
  out.k = sm.k;
  const auto fv = frac_vector(walk, sm.k);
  out.bound = std::exp(-8.0 * std::numbers::pi * std::numbers::pi / static_cast<double>(walk.symbol_count()) * fv.norm_sq());
  out.lambda_k_abs = std::abs(spec.values[static_cast<std::size_t>(sm.k)]);
  out.lambda_m_abs = std::abs(spec.dominant_value);
  out.holds = out.lambda_m_abs + kSlack >= out.lambda_k_abs && out.lambda_k_abs >= out.bound - kSlack;
  return out;
}

inline LambdaLowerBound lambda_lower_bound(const WalkSpec& walk) { return lambda_lower_bound(walk, spectrum(walk)); }

/// The rank-r lattice Z^r + Z * (a_1, ..., a_r)/n. Coset representatives
/// <k a/n>, k = 0..n-1, lie in (-1/2, 1/2]^r. n = 1 gives Z^r itself.
/// The fraction is stored in lowest terms so that the cosets are distinct.
class ShiftedLattice {
 public:
  ShiftedLattice(std::int64_t n, std::vector<std::int64_t> shifts) : n_(n), shifts_(std::move(shifts)) {
    if (n_ < 1) throw Error(ErrorKind::invalid_argument, "lattice denominator must be positive");
    if (shifts_.empty()) throw Error(ErrorKind::invalid_argument, "lattice rank must be positive");
    std::int64_t g = n_;
    for (auto a : shifts_) g = std::gcd(g, a);
    n_ /= g;
    for (auto& a : shifts_) {
      a = (a / g) % n_;
      if (a < 0) a += n_;
    }
    reps_.resize(static_cast<std::size_t>(n_));
    mu_sq_ = 1.0;
    for (std::int64_t k = 0; k < n_; ++k) {
      auto& rep = reps_[static_cast<std::size_t>(k)];
      for (auto a : shifts_) rep.push_back(frac_ratio(k * a, n_));
      if (k == 0) continue;
      double s = 0.0;
      for (double x : rep) s += x * x;
      if (s > 0.0) mu_sq_ = std::min(mu_sq_, s);
    }
  }

  std::int64_t denominator() const { return n_; }
  std::size_t rank() const { return shifts_.size(); }
  const std::vector<std::int64_t>& shifts() const { return shifts_; }
  const std::vector<std::vector<double>>& cosets() const { return reps_; }
  double mu() const { return std::sqrt(mu_sq_); }
  double mu_sq() const { return mu_sq_; }

 private:
  std::int64_t n_;
  std::vector<std::int64_t> shifts_;
  std::vector<std::vector<double>> reps_;
  double mu_sq_ = 1.0;
};

inline ShiftedLattice walk_lattice(const WalkSpec& walk) {
  detail::require_cyclic(walk, "walk_lattice");
  std::vector<std::int64_t> shifts;
  for (const auto& a : walk.generators()) shifts.push_back(a.coords[0]);
  return ShiftedLattice(walk.group().order(), std::move(shifts));
}

struct ThetaSumResult {
  double value;       // sum over |m|_inf <= radius of exp(-c |sigma|^2)
  double excess;      // value - 1, accumulated without the subtraction
  double tail_bound;  // proven bound on the omitted terms
  std::int64_t radius;
};

namespace detail {

// Upper bound on sum_{|m| > M} exp(-c (m + f)^2) for any |f| <= 1/2.
inline double theta_tail_1d(double c, std::int64_t m) {
  const double h = static_cast<double>(m) + 0.5;
  return 2.0 * std::exp(-c * h * h) / -std::expm1(-2.0 * c * h);
}

// Upper bound on sum_m exp(-c (m + f)^2) for any |f| <= 1/2: the sorted
// distances |m + f| are at least 0, 1/2, 1, 3/2, ...
inline double theta_full_1d(double c) { return 1.0 + 1.0 / std::expm1(c / 4.0); }

inline double theta_tail_total(const ShiftedLattice& lat, double c, std::int64_t m) {
  const auto r = static_cast<double>(lat.rank());
  return static_cast<double>(lat.denominator()) * r * theta_tail_1d(c, m) *
         std::pow(theta_full_1d(c), r - 1.0);
}

}  // namespace detail

/// Theta sum truncated to the box |m|_inf <= radius. The box sum factorises
/// per coordinate within each coset.
inline ThetaSumResult theta_sum_at_radius(const ShiftedLattice& lat, double c, std::int64_t radius) {
  if (!(c > 0.0)) throw Error(ErrorKind::invalid_argument, "theta parameter must be positive");
  if (radius < 0) throw Error(ErrorKind::invalid_argument, "negative truncation radius");
  detail::CompensatedSum excess;
  for (std::size_t k = 0; k < lat.cosets().size(); ++k) {
    const auto& rep = lat.cosets()[k];
    // Per-coordinate sums split as s_i = origin_i + rest_i, where origin_i is
    // the m = 0 term. Only coset 0 contains the origin, whose term is 1.
    double full = 1.0;
    double rest = 0.0;  // product minus the origin term, for coset 0
    for (double f : rep) {
      detail::CompensatedSum others;
      for (std::int64_t m = 1; m <= radius; ++m) {
        const double p = static_cast<double>(m) + f;
        const double q = static_cast<double>(-m) + f;
        others.add(std::exp(-c * p * p));
        others.add(std::exp(-c * q * q));
      }
      const double centre = std::exp(-c * f * f);
      const double s = centre + others.value();
      if (k == 0) {
        rest = rest * (1.0 + others.value()) + others.value();  // centre == 1 here
      }
      full *= s;
    }
    excess.add(k == 0 ? rest : full);
  }
  const double ex = excess.value();
  return ThetaSumResult{1.0 + ex, ex, detail::theta_tail_total(lat, c, radius), radius};
}

/// Smallest radius whose certified tail is at most tail_tol.
inline ThetaSumResult theta_sum(const ShiftedLattice& lat, double c, double tail_tol) {
  if (!(c > 0.0)) throw Error(ErrorKind::invalid_argument, "theta parameter must be positive");
  if (!(tail_tol > 0.0)) throw Error(ErrorKind::invalid_argument, "tail tolerance must be positive");
  std::int64_t radius = 1;
  constexpr std::int64_t kMaxRadius = 1 << 20;
  while (detail::theta_tail_total(lat, c, radius) > tail_tol) {
    if (radius >= kMaxRadius) throw Error(ErrorKind::invalid_argument, "theta truncation radius out of range");
    radius = radius < 64 ? radius + 1 : radius * 2;
  }
  return theta_sum_at_radius(lat, c, radius);
}

inline constexpr double kThetaTailTol = 1e-14;

struct Lemma3Result {
  double theta;
  double tail_bound;
  double bound1;  // 1 + kappa / (e^{c mu^2} - 1)
  double bound_r; // 1 + kappa / (e^{c mu^2} - 1)^r
  bool holds1;
  bool holds_r;
  bool holds;     // theta <= max(bound1, bound_r)
};

inline Lemma3Result lemma3_check(const ShiftedLattice& lat, double c, double kappa) {
  if (!(kappa >= 0.0)) throw Error(ErrorKind::invalid_argument, "kappa must be non-negative");
  const auto th = theta_sum(lat, c, kThetaTailTol);
  const double g = std::expm1(c * lat.mu_sq());
  Lemma3Result out{};
  out.theta = th.value;
  out.tail_bound = th.tail_bound;
  out.bound1 = 1.0 + kappa / g;
  out.bound_r = 1.0 + kappa / std::pow(g, static_cast<double>(lat.rank()));
  // theta + tail is a certified upper estimate of the full sum.
  const double upper = th.excess + th.tail_bound;
  out.holds1 = upper <= kappa / g + kSlack;
  out.holds_r = upper <= kappa / std::pow(g, static_cast<double>(lat.rank())) + kSlack;
  out.holds = out.holds1 || out.holds_r;
  return out;
}

/// Every link of the bound
///   d(t)^2 <= sum_{k != 0} lambda_k^{2t} <= theta(c) - 1
///          <= max{kappa/(e^{c mu^2}-1), kappa/(e^{c mu^2}-1)^r}
///          <= max{kappa/(X-1), kappa/(X-1)^r}
/// with c = 16 t / (2r+1)^2 and X = |lambda_m|^{-2t/(pi^2 (2r+1))}.
struct ChainReport {
  std::int64_t t;
  double kappa;
  double c;
  double mu;
  double d_sq;
  double mode_sum;
  double theta_excess;  // theta - 1
  double theta_tail;
  double lattice_bound;
  double x;
  double spectral_bound;  // +inf when vacuous
  bool sandwich_ok;
  bool modes_theta_ok;
  bool lemma3_ok;
  bool vacuous;  // X <= 1: the final link says nothing
  std::optional<bool> spectral_ok;
  std::optional<bool> overall_ok;  // d^2 <= spectral_bound

  bool holds() const {
    return sandwich_ok && modes_theta_ok && lemma3_ok && spectral_ok.value_or(true) && overall_ok.value_or(true);
  }
};

namespace detail {

inline double max_form(double kappa, double g, std::size_t r) {
  return std::max(kappa / g, kappa / std::pow(g, static_cast<double>(r)));
}

}  // namespace detail

inline ChainReport chain_check(const DistanceEvaluator& eval, std::int64_t t, double kappa) {
  const WalkSpec& walk = eval.walk();
  detail::require_cyclic(walk, "chain_check");
  if (t < 1) throw Error(ErrorKind::invalid_argument, "chain_check needs t >= 1");
  using std::numbers::pi;
  const auto& spec = eval.spectrum_values();
  const std::size_t r = walk.rank();
  const double s = static_cast<double>(walk.symbol_count());
  const double tt = static_cast<double>(t);

  ChainReport rep{};
  rep.t = t;
  rep.kappa = kappa;
  rep.c = 16.0 * tt / (s * s);
  const ShiftedLattice lat = walk_lattice(walk);
  rep.mu = lat.mu();

  const double d = eval.l1(t);
  rep.d_sq = d * d;
  detail::CompensatedSum modes;
  for (std::size_t k = 1; k < spec.values.size(); ++k) modes.add(std::pow(std::abs(spec.values[k]), 2.0 * tt));
  rep.mode_sum = modes.value();

  const auto th = theta_sum(lat, rep.c, kThetaTailTol);
  rep.theta_excess = th.excess;
  rep.theta_tail = th.tail_bound;
  rep.lattice_bound = detail::max_form(kappa, std::expm1(rep.c * lat.mu_sq()), r);

  // ln X = -2t ln|lambda_m| / (pi^2 (2r+1)); X - 1 = expm1(ln X).
  const double log_x = -2.0 * tt * std::log(std::abs(spec.dominant_value)) / (pi * pi * s);
  rep.x = std::exp(log_x);
  rep.vacuous = !(log_x > 0.0);

  rep.sandwich_ok = rep.d_sq <= rep.mode_sum + kSlack;
  rep.modes_theta_ok = rep.mode_sum <= rep.theta_excess + rep.theta_tail + kSlack;
  rep.lemma3_ok = rep.theta_excess + rep.theta_tail <= rep.lattice_bound + kSlack;
  if (rep.vacuous) {
    rep.spectral_bound = std::numeric_limits<double>::infinity();
  } else {
    rep.spectral_bound = detail::max_form(kappa, std::expm1(log_x), r);
    rep.spectral_ok = rep.lattice_bound <= rep.spectral_bound + kSlack;
    rep.overall_ok = rep.d_sq <= rep.spectral_bound + kSlack;
  }
  return rep;
}

inline ChainReport chain_check(const WalkSpec& walk, std::int64_t t, double kappa) {
  return chain_check(DistanceEvaluator(walk), t, kappa);
}

struct RatioFloor {
  double floor;  // -ln(eps) / (2 pi^2 (2r+1) kappa)
  bool applicable;  // eps < exp(-2 pi^2 (2r+1) kappa), i.e. floor > 1
};

/// Floor on t(eps)/t(1-eps) from the log of 1/eps, which keeps tiny eps exact.
inline RatioFloor ratio_floor_from_log(std::size_t r, double kappa, double neg_log_eps) {
  if (!(kappa > 0.0)) throw Error(ErrorKind::invalid_argument, "kappa must be positive");
  if (!(neg_log_eps > 0.0)) throw Error(ErrorKind::invalid_argument, "epsilon must lie in (0, 1)");
  using std::numbers::pi;
  const double scale = 2.0 * pi * pi * (2.0 * static_cast<double>(r) + 1.0) * kappa;
  return RatioFloor{neg_log_eps / scale, neg_log_eps > scale};
}

inline RatioFloor ratio_floor(std::size_t r, double kappa, double eps) {
  if (!(eps > 0.0) || !(eps < 1.0)) throw Error(ErrorKind::invalid_argument, "epsilon must lie in (0, 1)");
  return ratio_floor_from_log(r, kappa, -std::log(eps));
}

inline RatioFloor ratio_floor(const WalkSpec& walk, double kappa, double eps) {
  return ratio_floor(walk.rank(), kappa, eps);
}

}  // namespace abelmix
