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
#include <numeric>
#include <random>

#include "erravg/circuits.hpp"
#include "erravg/encoding.hpp"
#include "erravg/random.hpp"

namespace erravg {
namespace {

NetworkMatrix random_unitary(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  NetworkMatrix a(n, n);
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) a(i, j) = Complex(g(rng), g(rng));
  Eigen::HouseholderQR<NetworkMatrix> qr(a);
  return qr.householderQ();
}

NoiseRealization slice(const NoiseRealization& r, std::size_t k, std::size_t p) {
  return NoiseRealization{{r.deltas.begin() + static_cast<long>(k * p),
                           r.deltas.begin() + static_cast<long>((k + 1) * p)}};
}

TEST(Encoding, ParseRoundTrip) {
  for (auto e : {Encoder::dft, Encoder::tree}) EXPECT_EQ(parse_encoder(to_string(e)), e);
  for (auto s : {Strategy::whole, Strategy::each}) EXPECT_EQ(parse_strategy(to_string(s)), s);
  EXPECT_THROW(parse_encoder("fft"), std::invalid_argument);
  EXPECT_THROW(parse_strategy("some"), std::invalid_argument);
}

TEST(Encoding, PowerOfTwo) {
  EXPECT_FALSE(is_power_of_two(0));
  EXPECT_TRUE(is_power_of_two(1));
  EXPECT_TRUE(is_power_of_two(16));
  EXPECT_FALSE(is_power_of_two(12));
}

TEST(Encoding, TreeFansOutUniformly) {
  for (std::size_t n : {1, 2, 4, 8, 16}) {
    const auto f = fanout_tree(n);
    EXPECT_TRUE(is_unitary(f));
    for (Eigen::Index i = 0; i < f.rows(); ++i)
      EXPECT_NEAR(std::abs(f(i, 0) - 1.0 / std::sqrt(static_cast<double>(n))), 0.0, 1e-14);
  }
  EXPECT_THROW(fanout_tree(6), std::invalid_argument);
}

TEST(Encoding, TreeNestsInHalves) {
  // F_{2n} = (H on pairs (k, k+n)) * (F_n (+) I_n); the upper half starts in vacuum.
  for (std::size_t n : {1, 2, 4, 8}) {
    const auto big = fanout_tree(2 * n);
    const auto half = fanout_tree(n);
    const auto ni = static_cast<Eigen::Index>(n);
    NetworkMatrix stacked = NetworkMatrix::Zero(2 * ni, 2 * ni);
    stacked.topLeftCorner(ni, ni) = half;
    stacked.bottomRightCorner(ni, ni) = NetworkMatrix::Identity(ni, ni);
    NetworkMatrix h = NetworkMatrix::Zero(2 * ni, 2 * ni);
    const double s = 1.0 / std::sqrt(2.0);
    for (Eigen::Index k = 0; k < ni; ++k) {
      h(k, k) = s;
      h(k, k + ni) = s;
      h(k + ni, k) = s;
      h(k + ni, k + ni) = -s;
    }
    EXPECT_LT(max_abs_difference(big, h * stacked), 1e-14) << "n=" << n;
  }
}

TEST(Encoding, KeptModesLayout) {
  EXPECT_EQ(kept_modes_for(3, 4), (std::vector<std::size_t>{0, 4, 8}));
  const auto enc = encode(four_mode_circuit(0.1), {4, Encoder::tree, Strategy::whole});
  EXPECT_EQ(enc.circuit.mode_count(), 16u);
  EXPECT_EQ(enc.kept_modes, kept_modes_for(4, 4));
  EXPECT_EQ(enc.error_modes.size(), 12u);
  EXPECT_EQ(enc.redundancy, 4u);
}

TEST(Encoding, EncodeMatrixKeptBlockIsCopyMean) {
  std::mt19937_64 rng(3);
  for (auto encoder : {Encoder::tree, Encoder::dft}) {
    for (std::size_t n : {1, 2, 4, 8}) {
      std::vector<NetworkMatrix> copies;
      for (std::size_t k = 0; k < n; ++k) copies.push_back(random_unitary(3, rng));
      const auto u = encode_matrix(copies, encoder);
      EXPECT_TRUE(is_unitary(u));
      const auto kept = kept_modes_for(3, n);
      EXPECT_LT(max_abs_difference(kept_block(u, kept), effective_matrix(copies)), 1e-13);
    }
  }
}

TEST(Encoding, DftAllowsAnyRedundancy) {
  std::mt19937_64 rng(4);
  std::vector<NetworkMatrix> copies;
  for (int k = 0; k < 3; ++k) copies.push_back(random_unitary(2, rng));
  const auto u = encode_matrix(copies, Encoder::dft);
  EXPECT_LT(max_abs_difference(kept_block(u, kept_modes_for(2, 3)), effective_matrix(copies)), 1e-13);
  EXPECT_THROW(encode_matrix(copies, Encoder::tree), std::invalid_argument);
}

TEST(Encoding, WholeCircuitKeptBlockIsMeanOfClones) {
  const auto target = four_mode_circuit(0.3);
  const std::size_t p = target.phase_shifter_count();
  for (auto encoder : {Encoder::tree, Encoder::dft}) {
    for (std::size_t n : {2, 4}) {
      const auto enc = encode(target, {n, encoder, Strategy::whole});
      ASSERT_EQ(enc.circuit.phase_shifter_count(), n * p);
      auto rng = trial_stream(9, n);
      const auto r = sample_realization(enc.circuit, rng);
      std::vector<NetworkMatrix> copies;
      for (std::size_t k = 0; k < n; ++k) copies.push_back(compile(target, slice(r, k, p)));
      const auto u = compile(enc.circuit, r);
      EXPECT_TRUE(is_unitary(u));
      EXPECT_LT(max_abs_difference(kept_block(u, enc.kept_modes), effective_matrix(copies)), 1e-13);
      EXPECT_LT(max_abs_difference(u, encode_matrix(copies, encoder)), 1e-13);
    }
  }
}

TEST(Encoding, ZeroNoiseWholeNetworkIsIdentity) {
  for (auto encoder : {Encoder::tree, Encoder::dft}) {
    const auto enc = encode(four_mode_circuit(0.1), {8, encoder, Strategy::whole});
    const auto u = compile(enc.circuit, zero_realization(enc.circuit));
    EXPECT_LT(max_abs_difference(u, identity(32)), 1e-13);
  }
}

TEST(Encoding, EachStrategyAveragesEveryShifter) {
  const std::size_t m = 3;
  const std::size_t n = 4;
  const auto target = phase_chain_circuit(m, 0.2);
  const auto enc = encode(target, {n, Encoder::tree, Strategy::each});
  EXPECT_EQ(enc.circuit.mode_count(), 2 + m * (n - 1));
  EXPECT_EQ(enc.error_modes.size(), m * (n - 1));
  EXPECT_EQ(enc.kept_modes, (std::vector<std::size_t>{0, 1}));

  auto rng = trial_stream(1, 1);
  const auto r = sample_realization(enc.circuit, rng);
  // Gadget k holds deltas [k*n, (k+1)*n).
  Complex a = 1.0;
  for (std::size_t k = 0; k < m; ++k) {
    Complex step = 0.0;
    for (std::size_t j = 0; j < n; ++j) step += std::polar(1.0, r.deltas[k * n + j]);
    a *= step / static_cast<double>(n);
  }
  NetworkMatrix expect(2, 2);
  expect << (a + 1.0) / 2.0, (a - 1.0) / 2.0, (a - 1.0) / 2.0, (a + 1.0) / 2.0;
  const auto u = compile(enc.circuit, r);
  EXPECT_LT(max_abs_difference(kept_block(u, enc.kept_modes), expect), 1e-13);
}

TEST(Encoding, EachAndWholeAgreeForSingleShifter) {
  const auto target = mz_circuit(0.2);
  const auto whole = encode(target, {4, Encoder::tree, Strategy::whole});
  const auto each = encode(target, {4, Encoder::tree, Strategy::each});
  NoiseRealization r{{0.1, -0.3, 0.2, 0.05}};
  EXPECT_LT(max_abs_difference(kept_block(compile(whole.circuit, r), whole.kept_modes),
                               kept_block(compile(each.circuit, r), each.kept_modes)),
            1e-13);
}

TEST(Encoding, RedundancyOneIsTransparent) {
  const auto target = four_mode_circuit(0.1);
  for (auto s : {Strategy::whole, Strategy::each}) {
    const auto enc = encode(target, {1, Encoder::tree, s});
    NoiseRealization r{{0.1, 0.2, -0.3, 0.4}};
    EXPECT_LT(max_abs_difference(compile(enc.circuit, r), compile(target, r)), 1e-14);
  }
}

TEST(Encoding, RejectsBadSchemes) {
  const auto target = mz_circuit(0.1);
  EXPECT_THROW(encode(target, {0, Encoder::dft, Strategy::whole}), std::invalid_argument);
  EXPECT_THROW(encode(target, {3, Encoder::tree, Strategy::each}), std::invalid_argument);
  EXPECT_NO_THROW(encode(target, {3, Encoder::dft, Strategy::each}));
  std::vector<NetworkMatrix> mixed{identity(2), identity(3)};
  EXPECT_THROW(effective_matrix(mixed), std::invalid_argument);
}

}  // namespace
}  // namespace erravg
