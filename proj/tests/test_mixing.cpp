#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "abelmix/corpus.hpp"
#include "abelmix/mixing.hpp"
#include "support/oracles.hpp"

namespace abelmix {
namespace {

WalkSpec cycle(std::int64_t n, std::vector<std::int64_t> gens) { return instantiate(cycle_description(n, gens)); }

TEST(DeviationTest, InitialFieldIsDeltaMinusUniform) {
  for (const auto& desc : {cycle_description(8, {1}), WalkDescription{{4, 6}, {{1, 1}, {0, 1}}, false}}) {
    const auto w = instantiate(desc);
    const auto f = deviation_field(w, spectrum(w), 0);
    const double n = static_cast<double>(w.group().order());
    EXPECT_NEAR(f.dev[0], 1.0 - 1.0 / n, 1e-14);
    for (std::size_t x = 1; x < f.dev.size(); ++x) EXPECT_NEAR(f.dev[x], -1.0 / n, 1e-14);
  }
}

TEST(DeviationTest, CycleOfFourByHand) {
  const auto w = cycle(4, {1});
  const auto s = spectrum(w);
  const auto f1 = deviation_field(w, s, 1);
  EXPECT_NEAR(f1.dev[0], 1.0 / 12, 1e-15);
  EXPECT_NEAR(f1.dev[1], 1.0 / 12, 1e-15);
  EXPECT_NEAR(f1.dev[2], -1.0 / 4, 1e-15);
  EXPECT_NEAR(f1.dev[3], 1.0 / 12, 1e-15);
  const auto f2 = deviation_field(w, s, 2);
  EXPECT_NEAR(f2.dev[0], 1.0 / 12, 1e-15);
  for (int x : {1, 2, 3}) EXPECT_NEAR(f2.dev[static_cast<std::size_t>(x)], -1.0 / 36, 1e-15);
}

TEST(DeviationTest, SumsToZeroAndIsEven) {
  for (const auto& desc : standard_corpus()) {
    const auto w = instantiate(desc);
    const DistanceEvaluator eval(w);
    for (std::int64_t t : {1, 7, 40}) {
      const auto f = eval.deviation(t);
      double sum = 0.0;
      double scale = 0.0;
      for (double v : f.dev) {
        sum += v;
        scale = std::max(scale, std::abs(v));
      }
      EXPECT_LE(std::abs(sum), 1e-12 * (scale + 1e-300) * static_cast<double>(f.dev.size())) << w.describe();
      for (std::int64_t x = 0; x < w.group().order(); ++x) {
        EXPECT_NEAR(f.dev[static_cast<std::size_t>(x)], f.dev[static_cast<std::size_t>(w.group().negate_index(x))],
                    1e-15)
            << w.describe();
      }
    }
  }
}

TEST(DistanceTest, CycleOfFourClosedForm) {
  const auto w = cycle(4, {1});
  const DistanceEvaluator eval(w);
  EXPECT_NEAR(eval.l1(0), 1.5, 1e-15);
  EXPECT_NEAR(eval.l1(1), 0.5, 1e-15);
  for (std::int64_t t = 1; t <= 30; ++t) {
    const double expected = 1.5 * std::pow(3.0, -static_cast<double>(t));
    EXPECT_NEAR(eval.l1(t) / expected, 1.0, 1e-12) << "t=" << t;
  }
}

TEST(DistanceTest, AgreesWithMatrixPowersAndConvolution) {
  for (const auto& desc : standard_corpus()) {
    const auto w = instantiate(desc);
    if (w.group().order() > 64) continue;
    const DistanceEvaluator eval(w);
    const auto oracle = testing::matrix_power_curve(w, 40);
    for (std::int64_t t = 0; t <= 40; ++t) {
      EXPECT_NEAR(eval.l1(t), oracle[static_cast<std::size_t>(t)], 1e-10) << w.describe() << " t=" << t;
    }
    EXPECT_NEAR(eval.l1(40), testing::direct_distance(w, 40), 1e-10);
  }
}

TEST(CurveTest, Examples) {
  const auto c = mixing_curve(cycle(4, {1}), 3, 0.0);
  ASSERT_EQ(c.d_values.size(), 4u);
  const double expected[] = {1.5, 0.5, 1.0 / 6, 1.0 / 18};
  for (int t = 0; t < 4; ++t) EXPECT_NEAR(c.d_values[static_cast<std::size_t>(t)], expected[t], 1e-15);
  EXPECT_FALSE(c.stopped_early);
  EXPECT_NEAR(c.tv(1), 0.25, 1e-15);

  const auto single = mixing_curve(cycle(8, {1}), 0, 0.0);
  ASSERT_EQ(single.d_values.size(), 1u);
  EXPECT_NEAR(single.d_values[0], 1.75, 1e-15);
}

TEST(CurveTest, CycleOfEightStopsAtFloor) {
  const auto w = cycle(8, {1});
  const auto c = mixing_curve(w, 100000, 1e-12);
  EXPECT_TRUE(c.stopped_early);
  EXPECT_LT(c.d_values.back(), 1e-12);
  EXPECT_GE(c.d_values[c.d_values.size() - 2], 1e-12);
  const auto oracle = testing::matrix_power_curve(w, 19);
  for (std::size_t t = 0; t < 20; ++t) EXPECT_NEAR(c.d_values[t], oracle[t], 1e-13);
  // Frozen from the numpy FFT oracle (tests/oracle/fixtures.py).
  EXPECT_NEAR(c.d_values[2], 0.8055555555555554, 1e-14);
  EXPECT_NEAR(c.d_values[19], 0.01946166021350165, 1e-14);
  for (std::size_t t = 1; t < c.d_values.size(); ++t) EXPECT_LE(c.d_values[t], c.d_values[t - 1] + 1e-12);
}

TEST(ThresholdTest, CycleOfFour) {
  const DistanceEvaluator eval(cycle(4, {1}));
  EXPECT_EQ(threshold(eval, 0.5, 100), 1);
  EXPECT_EQ(threshold(eval, 0.1, 100), 2);
  EXPECT_EQ(threshold(eval, 1.5, 100), 0);
  EXPECT_EQ(threshold(eval, 1.0, 100), 0);
  try {
    threshold(eval, 1.9, 100);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::threshold_undefined);
  }
  try {
    threshold(eval, 1e-6, 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::cap_exceeded);
  }
  EXPECT_THROW(threshold(eval, 0.0, 5), Error);
  EXPECT_THROW(threshold(eval, 2.5, 5), Error);
}

TEST(ThresholdTest, BisectionMatchesForwardScanAndDefinition) {
  for (const auto& desc : standard_corpus()) {
    const auto w = instantiate(desc);
    if (w.group().order() > 128) continue;
    const DistanceEvaluator eval(w);
    for (double d : {1.2, 0.95, 0.5, 0.05, 1e-3}) {
      if (d > eval.initial_distance()) continue;
      const auto fast = threshold(eval, d, 1'000'000);
      EXPECT_EQ(fast, threshold_scan(eval, d, 1'000'000)) << w.describe() << " d=" << d;
      EXPECT_GE(eval.l1(fast), d);
      EXPECT_LT(eval.l1(fast + 1), d);
    }
  }
}

TEST(CutoffRatioTest, Examples) {
  EXPECT_FALSE(cutoff_ratio(cycle(4, {1}), 0.05, 1000).has_value());

  // Frozen from two independent oracles: numpy FFT bisection and the
  // step-by-step convolution scan below.
  const auto z64 = cycle(64, {1});
  EXPECT_EQ(testing::direct_threshold(z64, 0.05, 100000), 1006);
  EXPECT_EQ(testing::direct_threshold(z64, 0.95, 100000), 104);
  const auto ratio64 = cutoff_ratio(z64, 0.05, 100000);
  ASSERT_TRUE(ratio64.has_value());
  EXPECT_DOUBLE_EQ(*ratio64, 1006.0 / 104.0);

  const auto cube = instantiate(hypercube_description(8));
  EXPECT_EQ(testing::direct_threshold(cube, 0.05, 10000), 23);
  EXPECT_EQ(testing::direct_threshold(cube, 0.95, 10000), 3);
  const auto ratio_cube = cutoff_ratio(cube, 0.05, 10000);
  ASSERT_TRUE(ratio_cube.has_value());
  EXPECT_DOUBLE_EQ(*ratio_cube, 23.0 / 3.0);
  EXPECT_LT(std::abs(*ratio_cube - 1.0), std::abs(*ratio64 - 1.0));
}

TEST(SandwichTest, Examples) {
  const auto s = lemma2_sandwich(cycle(4, {1}), 1);
  EXPECT_NEAR(s.lower, 1.0 / 9, 1e-14);
  EXPECT_NEAR(s.exact_sq, 1.0 / 4, 1e-14);
  EXPECT_NEAR(s.upper, 1.0 / 3, 1e-14);
  EXPECT_TRUE(s.holds);

  for (std::int64_t n : {2, 3, 4, 9}) {
    const auto w = cycle(n, {1});
    const auto z = lemma2_sandwich(w, 0);
    const double d0 = 2.0 * (static_cast<double>(n) - 1.0) / static_cast<double>(n);
    EXPECT_EQ(z.lower, 1.0);
    EXPECT_NEAR(z.exact_sq, d0 * d0, 1e-14);
    EXPECT_NEAR(z.upper, static_cast<double>(n - 1), 1e-14);
    EXPECT_TRUE(z.holds) << n;
  }

  const auto w8 = cycle(8, {1});
  const auto s8 = lemma2_sandwich(w8, 10);
  const double d10 = testing::matrix_power_curve(w8, 10).back();
  EXPECT_NEAR(s8.exact_sq, d10 * d10, 1e-13);
  EXPECT_NEAR(s8.lower, std::pow((1.0 + std::sqrt(2.0)) / 3.0, 20.0), 1e-14);
  EXPECT_TRUE(s8.holds);
}

TEST(SandwichTest, RelativeFormWhereValuesAreNormal) {
  // The additive slack makes deep-t comparisons vacuous; check the
  // multiplicative form too while the numbers are far from underflow.
  for (const auto& desc : standard_corpus()) {
    const auto w = instantiate(desc);
    const DistanceEvaluator eval(w);
    for (std::int64_t t : {1, 5, 25, 125}) {
      const auto s = lemma2_sandwich(eval, t);
      if (s.lower < 1e-250) continue;
      EXPECT_LE(s.lower, s.exact_sq * (1.0 + 1e-9)) << w.describe() << " t=" << t;
      EXPECT_LE(s.exact_sq, s.upper * (1.0 + 1e-9)) << w.describe() << " t=" << t;
    }
  }
}

TEST(PeresTest, Examples) {
  const auto p4 = peres_products(cycle(4, {1}), 100);
  EXPECT_EQ(p4.t_half, 1);
  EXPECT_NEAR(p4.gap_product, 2.0 / 3, 1e-15);
  EXPECT_NEAR(p4.log_product, std::log(3.0), 1e-15);

  const auto p8 = peres_products(cycle(8, {1}), 1000);
  EXPECT_EQ(p8.t_half, 4);  // numpy oracle
  EXPECT_NEAR(p8.gap_product, 0.7810485835025403, 1e-12);
  EXPECT_NEAR(p8.log_product, 0.868954806594267, 1e-12);
  EXPECT_LE(p8.log_product, 12.0 * std::numbers::pi * std::numbers::pi);
}

TEST(DeepDistanceTest, DominantModeAsymptote) {
  // Z/16 {1}: for large t only k = 1, 15 matter, so
  // d(t) ~ (2/16) lambda_1^t sum_x |cos(2 pi x / 16)|.
  const auto w = cycle(16, {1});
  const DistanceEvaluator eval(w);
  const double lambda1 = eval.spectrum_values().dominant_value;
  double cos_sum = 0.0;
  for (int x = 0; x < 16; ++x) cos_sum += std::abs(std::cos(2.0 * std::numbers::pi * x / 16.0));
  for (std::int64_t t : {1800, 3000, 4600}) {
    const double d = eval.l1(t);
    const double asymptote = 2.0 / 16.0 * std::pow(lambda1, static_cast<double>(t)) * cos_sum;
    EXPECT_LT(d, 1e-40);
    EXPECT_GT(d, 0.0);
    EXPECT_NEAR(d / asymptote, 1.0, 0.01) << "t=" << t;
  }
}

}  // namespace
}  // namespace abelmix
