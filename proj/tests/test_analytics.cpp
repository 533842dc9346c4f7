// Copyright 2026 The erravg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "erravg/analytics.hpp"
#include "erravg/rational.hpp"

namespace erravg::analytics {
namespace {

// Exact Gaussian oracles, written from E[e^{i(a-b)}] = e^{-v} for independent draws.
double exact_chain_correct_noavg(double mv) { return (1.0 + std::exp(-mv / 2.0)) / 2.0; }

double exact_whole_success(double mv, std::size_t n) {
  const double q = 1.0 - 1.0 / static_cast<double>(n);
  return 1.0 - q * (1.0 - std::exp(-mv));
}

double exact_each_success(double v, std::size_t m, std::size_t n) {
  const double q = 1.0 - 1.0 / static_cast<double>(n);
  return std::pow(1.0 - q * (1.0 - std::exp(-v)), static_cast<double>(m));
}

TEST(Analytics, MeanPhaseFactor) {
  EXPECT_EQ(mean_phase_factor(0.0), 1.0);
  EXPECT_NEAR(mean_phase_factor(0.1), 0.951229, 5e-7);
  EXPECT_THROW(mean_phase_factor(-0.1), std::invalid_argument);

  std::mt19937_64 rng(8);
  std::normal_distribution<double> g(0.0, std::sqrt(0.1));
  const int n = 100000;
  double sum = 0.0;
  double sum2 = 0.0;
  for (int k = 0; k < n; ++k) {
    const double c = std::cos(g(rng));
    sum += c;
    sum2 += c * c;
  }
  const double mean = sum / n;
  const double se = std::sqrt((sum2 / n - mean * mean) / n);
  EXPECT_LT(std::abs(mean - mean_phase_factor(0.1)), 3.0 * se);
}

TEST(Analytics, CommutingMeanScale) {
  EXPECT_EQ(commuting_mean_scale({{0.0, 0.0}, true}), 1.0);
  EXPECT_NEAR(commuting_mean_scale({{std::sqrt(0.1)}, true}), mean_phase_factor(0.1), 1e-15);
  EXPECT_NEAR(commuting_mean_scale({{0.1, 0.1, 0.1, 0.1}, true}), std::exp(-0.02), 1e-15);
  EXPECT_THROW(commuting_mean_scale({{0.1}, false}), UnsupportedError);
  EXPECT_THROW(commuting_mean_scale({{-0.1}, true}), std::invalid_argument);
}

TEST(Analytics, SinglePhotonFormulas) {
  EXPECT_NEAR(sp_success(0.1, 1u << 30), 0.95, 1e-9);
  EXPECT_NEAR(sp_correct_post(0.1, 8), 0.996875, 1e-15);
  EXPECT_NEAR(sp_success_exact(0.1, 8), 0.958366, 5e-7);
  EXPECT_EQ(sp_success_exact(0.0, 5), 1.0);
  for (double v : {0.01, 0.05}) {
    // At N=1 the unpostselected value is the postselected one times success, to first order.
    EXPECT_NEAR(sp_correct_nopost(v, 1), sp_correct_post(v, 1) * sp_success(v, 1), v * v);
  }
  EXPECT_THROW(sp_success(0.1, 0), std::invalid_argument);
}

TEST(Analytics, FirstOrderSuccessIsTaylorOfExact) {
  for (std::size_t n : {1, 2, 4, 8, 32}) {
    const double h = 1e-7;
    const double slope_exact = (sp_success_exact(h, n) - sp_success_exact(0.0, n)) / h;
    const double slope_first = sp_success(1.0, n) - sp_success(0.0, n);
    EXPECT_NEAR(sp_success(0.0, n), sp_success_exact(0.0, n), 1e-15);
    EXPECT_NEAR(slope_exact, slope_first, 1e-7);
  }
}

TEST(Analytics, TwoPhotonFormulas) {
  EXPECT_EQ(tp_expect_coinc(0.0), 1.0);
  EXPECT_EQ(tp_coincidence_post(0.0, 4), 1.0);
  EXPECT_EQ(tp_success(0.0, 4), 1.0);
  EXPECT_NEAR(tp_coincidence_post(0.1, 4), 0.9875, 1e-15);
  const double v = 1e-4;
  EXPECT_NEAR(tp_success(v, 4) * tp_coincidence_post(v, 4), 1.0 - v, 2.0 * v * v);
}

TEST(Analytics, ChainNoAveraging) {
  EXPECT_EQ(chain_correct_noavg({0, 0.1, 1}), 1.0);
  EXPECT_NEAR(chain_correct_noavg({4, 0.005, 1}), 0.995025, 1e-15);
  for (double mv : {0.02, 0.05, 0.1}) {
    const double err = std::abs(chain_correct_noavg({1, mv, 1}) - exact_chain_correct_noavg(mv));
    EXPECT_LT(err, mv * mv * mv / 50.0) << mv;
  }
}

TEST(Analytics, ChainWholeMatchesExactToThirdOrder) {
  EXPECT_EQ(chain_success_avg_whole({5, 0.1, 1}), 1.0);
  const ChainParams p{3, 0.005, 4};
  const double mv = 0.015;
  EXPECT_LT(std::abs(chain_success_avg_whole(p) - exact_whole_success(mv, 4)), mv * mv * mv);
  // In the interferometer only half the amplitude crosses the shifter: P = (1 + |S|^2) / 2.
  for (std::size_t n : {1, 2, 8}) {
    const double v = 1e-4;
    EXPECT_NEAR((1.0 + chain_success_avg_whole({1, v, n})) / 2.0, sp_success(v, n), v * v);
  }
  EXPECT_NEAR(chain_correct_avg_whole({1, 0.0, 4}), 1.0, 1e-15);
}

TEST(Analytics, ChainEachMatchesExactAndMonteCarlo) {
  EXPECT_EQ(chain_success_avg_each({3, 0.0, 4}), 1.0);
  for (double v : {0.01, 0.2})
    EXPECT_EQ(chain_success_avg_each({1, v, 4}), chain_success_avg_whole({1, v, 4}));

  const std::size_t m = 8;
  const std::size_t n = 16;
  const double v = 0.1;
  // Formula vs exact: per-step error is (1 - 1/N) v^3 / 6.
  EXPECT_LT(std::abs(chain_success_avg_each({m, v, n}) - exact_each_success(v, m, n)),
            static_cast<double>(m) * v * v * v / 6.0);

  // Exact oracle vs direct simulation of the product-of-averages amplitude.
  std::mt19937_64 rng(12);
  std::normal_distribution<double> g(0.0, std::sqrt(v));
  const int trials = 100000;
  double sum = 0.0;
  double sum2 = 0.0;
  for (int t = 0; t < trials; ++t) {
    std::complex<double> a = 1.0;
    for (std::size_t k = 0; k < m; ++k) {
      std::complex<double> s = 0.0;
      for (std::size_t j = 0; j < n; ++j) s += std::polar(1.0, g(rng));
      a *= s / static_cast<double>(n);
    }
    const double p = std::norm(a);
    sum += p;
    sum2 += p * p;
  }
  const double mean = sum / trials;
  const double se = std::sqrt((sum2 / trials - mean * mean) / trials);
  EXPECT_LT(std::abs(mean - exact_each_success(v, m, n)), 3.0 * se);
}

TEST(Analytics, StrategiesAgreeToFirstOrder) {
  for (std::size_t m : {1, 4, 15})
    for (std::size_t n : {2, 4, 16}) {
      const double v = 1e-4;
      const double d = chain_success_avg_whole({m, v, n}) - chain_success_avg_each({m, v, n});
      EXPECT_LT(std::abs(d), static_cast<double>(m * m) * v * v);
    }
}

TEST(Analytics, VarianceFormulas) {
  EXPECT_NEAR(variance_predicted(0.1, 4, 4), 0.1, 1e-15);
  EXPECT_NEAR(variance_predicted(0.3, 1, 1), 0.3, 1e-15);
  EXPECT_NEAR(variance_max(), 3.289868, 5e-7);
}

TEST(Analytics, RecurrenceExamples) {
  const RecurrenceParams r{1, 2};
  EXPECT_EQ(recurrence_correct_coefficients(r, 2), (LinearInV{1, Rational(-3, 4)}));
  EXPECT_EQ(recurrence_wrong_coefficients(r, 2), (LinearInV{0, Rational(1, 4)}));
  const RecurrenceParams s{3, 2};
  EXPECT_EQ(recurrence_correct_coefficients(s, 2), (LinearInV{1, Rational(-7, 4)}));
  EXPECT_EQ(recurrence_correct_post_coefficients(s, 2), (LinearInV{1, Rational(-3, 4)}));
  EXPECT_EQ(recurrence_asymptote_success_coefficients(s), (LinearInV{1, Rational(-2)}));
  EXPECT_NEAR(recurrence_correct(r, 2, 0.1), 0.925, 1e-15);
}

TEST(Analytics, RecurrenceStructure) {
  for (const RecurrenceParams r : {RecurrenceParams{1, 2}, RecurrenceParams{3, 2}, RecurrenceParams{2, 5}}) {
    // Round one reproduces the inputs.
    EXPECT_EQ(recurrence_correct_coefficients(r, 1), (LinearInV{1, -Rational(r.a1, r.b1)}));
    EXPECT_EQ(recurrence_wrong_coefficients(r, 1), (LinearInV{0, Rational(r.a1, r.b1)}));
    EXPECT_EQ(recurrence_success_coefficients(r, 1), (LinearInV{1, 0}));
    for (int n = 1; n < 10; ++n) {
      EXPECT_EQ(recurrence_wrong_coefficients(r, n + 1).slope / recurrence_wrong_coefficients(r, n).slope,
                Rational(1, 2));
      // Probabilities of correct, wrong and loss add to one.
      const auto c = recurrence_correct_coefficients(r, n);
      const auto w = recurrence_wrong_coefficients(r, n);
      const auto s = recurrence_success_coefficients(r, n);
      EXPECT_EQ(c.slope + w.slope, s.slope);
    }
    EXPECT_NEAR(recurrence_correct_post(r, 60, 0.1), 1.0, 1e-15);
    EXPECT_NEAR(recurrence_success(r, 60, 0.1), recurrence_asymptote_success(r, 0.1), 1e-15);
  }
  EXPECT_THROW(recurrence_correct_coefficients({1, 2}, 0), std::invalid_argument);
  EXPECT_THROW(recurrence_correct_coefficients({0, 2}, 1), std::invalid_argument);
}

TEST(Analytics, MultiphotonSuccess) {
  EXPECT_EQ(multiphoton_success(0, 5, 0.3), 1.0);
  EXPECT_NEAR(multiphoton_success(1, 1, std::sqrt(0.1)), mean_phase_factor(0.1), 1e-15);
  const double c = 0.2;
  for (std::size_t n : {1, 10, 100, 1000})
    EXPECT_NEAR(multiphoton_success(2, n, c / static_cast<double>(n)), std::exp(-c * c), 1e-12);
}

TEST(Rational, ArithmeticAndPrinting) {
  EXPECT_EQ(Rational(2, -4), Rational(-1, 2));
  EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
  EXPECT_EQ(Rational(3, 4) / Rational(3, 2), Rational(1, 2));
  EXPECT_THROW(Rational(1, 0), std::invalid_argument);
  EXPECT_EQ((LinearInV{1, Rational(-3, 4)}).to_string(), "1 - 3/4 v");
  EXPECT_EQ((LinearInV{0, Rational(1, 4)}).to_string(), "1/4 v");
  EXPECT_EQ((LinearInV{1, Rational(-1)}).to_string(), "1 - v");
  EXPECT_EQ((LinearInV{1, 0}).to_string(), "1");
  EXPECT_EQ((LinearInV{0, Rational(-1, 2)}).to_string(), "-1/2 v");
  EXPECT_NEAR((LinearInV{1, Rational(-3, 4)}).at(0.1), 0.925, 1e-15);
}

}  // namespace
}  // namespace erravg::analytics
