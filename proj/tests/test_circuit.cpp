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
#include <random>

#include "erravg/circuit.hpp"
#include "erravg/circuits.hpp"
#include "erravg/netlist.hpp"
#include "erravg/random.hpp"

namespace erravg {
namespace {

// Closed form of BS * diag(e^{i phi}, 1) * BS.
NetworkMatrix mz_block(Complex a) {
  NetworkMatrix m(2, 2);
  m << (a + 1.0) / 2.0, (a - 1.0) / 2.0, (a - 1.0) / 2.0, (a + 1.0) / 2.0;
  return m;
}

NetworkMatrix mz_closed_form(double phi) { return mz_block(std::polar(1.0, phi)); }

TEST(Circuit, BeamSplitterIsHadamard) {
  Circuit c(2);
  c.add(BeamSplitter{0, 1});
  const auto u = compile(c, zero_realization(c));
  const double s = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(std::abs(u(0, 0) - s), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(u(0, 1) - s), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(u(1, 0) - s), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(u(1, 1) + s), 0.0, 1e-15);
}

TEST(Circuit, MachZehnderMatchesClosedForm) {
  for (double theta : {0.0, 0.3, 1.7, -2.5}) {
    const auto c = mz_circuit(0.1, theta);
    ASSERT_EQ(c.phase_shifter_count(), 1u);
    NoiseRealization r{{0.05}};
    EXPECT_LT(max_abs_difference(compile(c, r), mz_closed_form(theta + 0.05)), 1e-14);
  }
}

TEST(Circuit, PhaseShifterActsOnItsRowOnly) {
  Circuit c(3);
  c.add(PhaseShifter{1, 0.4, 0.0});
  const auto u = compile(c, zero_realization(c));
  EXPECT_NEAR(std::abs(u(1, 1) - std::polar(1.0, 0.4)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(u(0, 0) - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(u(2, 2) - 1.0), 0.0, 1e-15);
}

TEST(Circuit, ElementsComposeLeftToRight) {
  // PS after BS multiplies rows of the BS output.
  Circuit c(2);
  c.add(BeamSplitter{0, 1});
  c.add(PhaseShifter{0, 0.9, 0.0});
  const auto u = compile(c, zero_realization(c));
  const double s = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(std::abs(u(0, 1) - std::polar(s, 0.9)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(u(1, 1) + s), 0.0, 1e-15);
}

TEST(Circuit, CompileColumnsMatchesFullCompile) {
  const auto c = four_mode_circuit(0.2);
  auto rng = trial_stream(7, 3);
  const auto r = sample_realization(c, rng);
  const auto full = compile(c, r);
  const std::vector<std::size_t> cols{2, 0};
  const auto part = compile_columns(c, r, cols);
  ASSERT_EQ(part.cols(), 2);
  EXPECT_LT((part.col(0) - full.col(2)).cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_LT((part.col(1) - full.col(0)).cwiseAbs().maxCoeff(), 1e-14);
  const std::vector<std::size_t> bad{4};
  EXPECT_THROW(compile_columns(c, r, bad), std::invalid_argument);
}

TEST(Circuit, CompiledNetworksAreUnitary) {
  const auto c = four_mode_circuit(0.5);
  std::mt19937_64 rng(11);
  for (int k = 0; k < 20; ++k) EXPECT_TRUE(is_unitary(compile(c, sample_realization(c, rng))));
}

TEST(Circuit, ZeroNoiseFourModeIsIdentity) {
  const auto c = four_mode_circuit(0.1);
  EXPECT_LT(max_abs_difference(compile(c, zero_realization(c)), identity(4)), 1e-14);
}

TEST(Circuit, MeanMatrixScalesPhaseFactor) {
  // E[e^{i delta}] = e^{-v/2}
  const double v = 0.3;
  const auto c = mz_circuit(v, 0.0);
  EXPECT_LT(max_abs_difference(mean_matrix(c), mz_block(std::exp(-v / 2.0))), 1e-15);
}

TEST(Circuit, MeanMatrixAgreesWithSampleAverage) {
  const auto c = four_mode_circuit(0.4);
  NetworkMatrix acc = NetworkMatrix::Zero(4, 4);
  const int n = 40000;
  for (int k = 0; k < n; ++k) {
    auto rng = trial_stream(5, static_cast<std::uint64_t>(k));
    acc += compile(c, sample_realization(c, rng));
  }
  acc /= static_cast<double>(n);
  EXPECT_LT(max_abs_difference(acc, mean_matrix(c)), 0.02);
}

TEST(Circuit, RealizationIsDeterministicPerStream) {
  const auto c = four_mode_circuit(0.1);
  auto a = trial_stream(42, 17);
  auto b = trial_stream(42, 17);
  auto other = trial_stream(42, 18);
  const auto ra = sample_realization(c, a);
  EXPECT_EQ(ra.deltas, sample_realization(c, b).deltas);
  EXPECT_NE(ra.deltas, sample_realization(c, other).deltas);
  EXPECT_EQ(ra.deltas.size(), 4u);
}

TEST(Circuit, WithVarianceRewritesEveryShifter) {
  const auto c = four_mode_circuit(0.1).with_variance(0.7);
  for (const auto& e : c.elements()) {
    if (const auto* ps = std::get_if<PhaseShifter>(&e)) {
      EXPECT_EQ(ps->variance, 0.7);
    }
  }
  EXPECT_THROW(four_mode_circuit(0.1).with_variance(-1.0), std::invalid_argument);
}

TEST(Circuit, RejectsInvalidElements) {
  Circuit c(2);
  EXPECT_THROW(Circuit(0), std::invalid_argument);
  EXPECT_THROW(c.add(PhaseShifter{2, 0.0, 0.0}), std::invalid_argument);
  EXPECT_THROW(c.add(PhaseShifter{0, 0.0, -0.1}), std::invalid_argument);
  EXPECT_THROW(c.add(PhaseShifter{0, NAN, 0.0}), std::invalid_argument);
  EXPECT_THROW(c.add(BeamSplitter{1, 1}), std::invalid_argument);
  EXPECT_THROW(c.add(BeamSplitter{0, 5}), std::invalid_argument);
  NetworkMatrix bad(2, 2);
  bad << 1, 1, 0, 1;
  EXPECT_THROW(c.add(FixedUnitary{{0, 1}, bad}), std::invalid_argument);
  EXPECT_THROW(c.add(FixedUnitary{{0, 0}, identity(2)}), std::invalid_argument);
  EXPECT_THROW(c.add(FixedUnitary{{0}, identity(2)}), std::invalid_argument);
  EXPECT_THROW(mz_tunable_bs(1, 1, 0.0, 0.0), std::invalid_argument);
  EXPECT_EQ(c.elements().size(), 0u);
}

TEST(Circuit, RealizationSizeIsChecked) {
  const auto c = four_mode_circuit(0.1);
  EXPECT_THROW(compile(c, NoiseRealization{{0.0}}), std::invalid_argument);
}

TEST(Netlist, RoundTripPreservesCircuit) {
  Circuit c(3);
  c.append(mz_tunable_bs(0, 2, 0.25, 0.01));
  c.add(FixedUnitary{{1, 2}, dft_matrix(2)});
  c.add(PhaseShifter{1, -0.5, 0.0});
  const auto j = to_json(c);
  const auto back = circuit_from_json(j);
  EXPECT_TRUE(back == c);
  EXPECT_EQ(to_json(back), j);
}

TEST(Netlist, RejectsMalformedInput) {
  EXPECT_ANY_THROW(circuit_from_json(nlohmann::json::object()));
  auto j = to_json(mz_circuit(0.1));
  j["mode_count"] = 0;
  EXPECT_ANY_THROW(circuit_from_json(j));
}

}  // namespace
}  // namespace erravg
