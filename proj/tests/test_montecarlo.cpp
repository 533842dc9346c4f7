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
#include <random>

#include "erravg/analytics.hpp"
#include "erravg/circuits.hpp"
#include "erravg/montecarlo.hpp"

namespace erravg {
namespace {

MCConfig mz_config(double v, std::size_t n, std::uint64_t trials, Strategy s = Strategy::whole) {
  MCConfig c;
  c.trials = trials;
  c.master_seed = 42;
  c.circuit = encode(mz_circuit(v), {n, Encoder::tree, s});
  c.input = FockState{1, 0};
  c.observables = {Observable::success(), Observable::probability({1, 0}, "correct"),
                   Observable::conditional_probability({1, 0}, "correct_post"),
                   Observable::mode_expectation(0, "n0"), Observable::mode_expectation(1, "n1")};
  return c;
}

TEST(Moments, MatchTwoPassFormulas) {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> g;
  std::vector<double> xs;
  std::vector<double> ys;
  MomentAccumulator a;
  for (int k = 0; k < 1000; ++k) {
    xs.push_back(g(rng) + 3.0);
    ys.push_back(0.5 * xs.back() + g(rng));
    a.add(xs.back(), ys.back());
  }
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    mx += xs[k];
    my += ys[k];
  }
  mx /= 1000.0;
  my /= 1000.0;
  double vx = 0.0;
  double vy = 0.0;
  double cxy = 0.0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    vx += (xs[k] - mx) * (xs[k] - mx);
    vy += (ys[k] - my) * (ys[k] - my);
    cxy += (xs[k] - mx) * (ys[k] - my);
  }
  EXPECT_NEAR(a.mean_x(), mx, 1e-12);
  EXPECT_NEAR(a.mean_y(), my, 1e-12);
  EXPECT_NEAR(a.var_x(), vx / 999.0, 1e-12);
  EXPECT_NEAR(a.var_y(), vy / 999.0, 1e-12);
  EXPECT_NEAR(a.cov_xy(), cxy / 999.0, 1e-12);

  // Split into uneven parts and merge in either grouping.
  MomentAccumulator p1, p2, p3;
  for (std::size_t k = 0; k < xs.size(); ++k) (k < 17 ? p1 : k < 600 ? p2 : p3).add(xs[k], ys[k]);
  MomentAccumulator left = p1;
  left.merge(p2);
  left.merge(p3);
  MomentAccumulator right = p2;
  right.merge(p3);
  MomentAccumulator right_total = p1;
  right_total.merge(right);
  for (const auto* m : {&left, &right_total}) {
    EXPECT_EQ(m->count(), 1000u);
    EXPECT_NEAR(m->mean_x(), mx, 1e-12);
    EXPECT_NEAR(m->var_x(), vx / 999.0, 1e-12);
    EXPECT_NEAR(m->cov_xy(), cxy / 999.0, 1e-12);
  }
  MomentAccumulator empty;
  left.merge(empty);
  EXPECT_EQ(left.count(), 1000u);
}

TEST(MonteCarlo, NoiselessRunIsExact) {
  const auto res = run(mz_config(0.0, 4, 3000));
  EXPECT_NEAR(find(res, "p_success").mean, 1.0, 1e-14);
  EXPECT_NEAR(find(res, "p_success").std_error, 0.0, 1e-14);
  EXPECT_NEAR(find(res, "correct").mean, 1.0, 1e-14);
  EXPECT_NEAR(find(res, "correct_post").std_error, 0.0, 1e-14);
  EXPECT_EQ(find(res, "p_success").trials, 3000u);
}

TEST(MonteCarlo, SinglePhotonSuccessMatchesExactOracle) {
  const auto res = run(mz_config(0.1, 8, 100000));
  const auto& e = find(res, "p_success");
  EXPECT_LT(std::abs(e.mean - analytics::sp_success_exact(0.1, 8)), 3.0 * e.std_error);
  EXPECT_NEAR(analytics::sp_success_exact(0.1, 8), 0.958366, 5e-7);
}

TEST(MonteCarlo, RatioEstimatorIsRatioOfMeans) {
  const auto res = run(mz_config(0.2, 2, 5000));
  EXPECT_NEAR(find(res, "correct_post").mean, find(res, "correct").mean / find(res, "p_success").mean, 1e-14);
  EXPECT_GT(find(res, "correct_post").std_error, 0.0);
  // Photons surviving in the kept modes account for the success probability.
  EXPECT_NEAR(find(res, "n0").mean + find(res, "n1").mean, find(res, "p_success").mean, 1e-13);
}

TEST(MonteCarlo, DeterministicAndWorkerIndependent) {
  auto a = mz_config(0.1, 4, 5000);
  a.workers = 1;
  auto b = a;
  b.workers = 4;
  const auto ra = run(a);
  const auto rb = run(b);
  const auto rc = run(a);
  ASSERT_EQ(ra.size(), rb.size());
  for (std::size_t k = 0; k < ra.size(); ++k) {
    EXPECT_EQ(ra[k].estimate.mean, rb[k].estimate.mean);
    EXPECT_EQ(ra[k].estimate.std_error, rb[k].estimate.std_error);
    EXPECT_EQ(ra[k].estimate.mean, rc[k].estimate.mean);
  }
  a.master_seed = 43;
  EXPECT_NE(find(run(a), "p_success").mean, find(ra, "p_success").mean);
}

TEST(MonteCarlo, ProjectedPathMatchesFullDistribution) {
  for (auto s : {Strategy::whole, Strategy::each}) {
    MCConfig c;
    c.trials = 300;
    c.master_seed = 7;
    c.circuit = encode(four_mode_circuit(0.1), {2, Encoder::tree, s});
    c.input = FockState{1, 1, 0, 0};
    c.observables = {Observable::success(), Observable::probability({1, 0, 1, 0}, "p1010"),
                     Observable::conditional_probability({1, 1, 0, 0}, "post1100"),
                     Observable::coincidence(0, 1, "c01"), Observable::conditional_coincidence(0, 1, "cc01")};
    auto full = c;
    full.full_distribution = true;
    const auto a = run(c);
    const auto b = run(full);
    for (std::size_t k = 0; k < a.size(); ++k) {
      EXPECT_NEAR(a[k].estimate.mean, b[k].estimate.mean, 1e-12) << a[k].name;
      EXPECT_NEAR(a[k].estimate.std_error, b[k].estimate.std_error, 1e-12) << a[k].name;
    }
  }
}

TEST(MonteCarlo, SlopeOfSingleShifter) {
  // P(correct) = (1 + e^{-v/2}) / 2 for one unencoded shifter.
  MCConfig c;
  c.trials = 20000;
  c.master_seed = 3;
  c.circuit = unencoded(mz_circuit(0.0));
  c.input = FockState{1, 0};
  c.observables = {Observable::probability({1, 0}, "correct"),
                   Observable::conditional_probability({1, 0}, "correct_post")};
  const double v1 = 0.004;
  const double v2 = 0.008;
  const auto res = run_slopes(c, v1, v2);
  const double secant = ((1.0 + std::exp(-v2 / 2.0)) - (1.0 + std::exp(-v1 / 2.0))) / 2.0 / (v2 - v1);
  const auto& e = find(res, "correct");
  EXPECT_LT(std::abs(e.mean - secant), 4.0 * e.std_error);
  EXPECT_NEAR(e.mean, -0.25, 0.01);
  // No loss channel, so post-selection changes nothing.
  EXPECT_NEAR(find(res, "correct_post").mean, e.mean, 1e-12);
  EXPECT_THROW(run_slopes(c, 0.008, 0.004), std::invalid_argument);
}

TEST(MonteCarlo, PhaseLineSuccessMatchesExactOracle) {
  // A photon crossing M averaged shifters survives with E|S|^2 = 1/N + (1 - 1/N) e^{-Mv}.
  const std::size_t m = 5;
  const std::size_t n = 4;
  const double v = 0.05;
  MCConfig c;
  c.trials = 40000;
  c.master_seed = 17;
  c.circuit = encode(phase_line_circuit(m, v), {n, Encoder::tree, Strategy::whole});
  c.input = FockState{1};
  c.observables = {Observable::success()};
  const auto& e = find(run(c), "p_success");
  const double exact = 0.25 + 0.75 * std::exp(-static_cast<double>(m) * v);
  EXPECT_LT(std::abs(e.mean - exact), 3.0 * e.std_error);
  EXPECT_NEAR(e.mean, analytics::chain_success_avg_whole({m, v, n}), 0.01);
}

TEST(MonteCarlo, RejectsBadConfigs) {
  auto c = mz_config(0.1, 2, 10);
  c.trials = 0;
  EXPECT_THROW(run(c), std::invalid_argument);
  c = mz_config(0.1, 2, 10);
  c.input = FockState{1, 0, 0};
  EXPECT_THROW(run(c), std::invalid_argument);
  c = mz_config(0.1, 2, 10);
  c.observables.push_back(Observable::probability({1, 1}, "bad"));
  EXPECT_THROW(run(c), std::invalid_argument);
  c = mz_config(0.1, 2, 10);
  c.observables.push_back(Observable::mode_expectation(2, "bad"));
  EXPECT_THROW(run(c), std::invalid_argument);
  EXPECT_THROW(find(run(mz_config(0.1, 2, 10)), "missing"), std::out_of_range);
}

TEST(VarianceScan, NoiselessScanIsIdentity) {
  VarianceScanOptions o;
  o.v = 0.0;
  o.seeds = 10;
  o.redundancies = {1, 4};
  const auto rows = variance_scan(four_mode_circuit(0.0), o);
  ASSERT_EQ(rows.size(), 32u);
  for (const auto& r : rows) {
    EXPECT_NEAR(r.mean_re, r.row == r.col ? 1.0 : 0.0, 1e-13);
    EXPECT_NEAR(r.mean_im, 0.0, 1e-13);
    EXPECT_NEAR(r.var_re + r.var_im, 0.0, 1e-24);
  }
  EXPECT_THROW(total_variance(rows, 2), std::invalid_argument);
}

TEST(VarianceScan, VarianceHalvesWithRedundancy) {
  VarianceScanOptions o;
  o.v = 0.1;
  o.seeds = 500;
  o.redundancies = {1, 2};
  const auto rows = variance_scan(four_mode_circuit(0.0), o);
  const double ratio = total_variance(rows, 1) / total_variance(rows, 2);
  EXPECT_NEAR(ratio, 2.0, 0.5);
  o.seeds = 1;
  EXPECT_THROW(variance_scan(four_mode_circuit(0.0), o), std::invalid_argument);
}

}  // namespace
}  // namespace erravg
