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

#include "erravg/phase_stats.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

namespace erravg {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
// Below this the phase of the averaged amplitude is rounding noise.
constexpr double kZeroAmplitude = 1e-12;
}  // namespace

PhaseSample wrap(double theta) {
  if (!std::isfinite(theta)) throw std::invalid_argument("wrap: phase must be finite");
  double w = theta - kTwoPi * std::round(theta / kTwoPi);
  if (w <= -kPi) w += kTwoPi;
  if (w > kPi) w -= kTwoPi;
  return PhaseSample(w);
}

PhaseSample total_phase(const Eigen::MatrixXd& deltas, PhaseScheme scheme) {
  const Eigen::Index m = deltas.rows();
  const Eigen::Index n = deltas.cols();
  if (m == 0 || n == 0) throw std::invalid_argument("total_phase: empty realization");

  std::complex<double> amplitude;
  switch (scheme) {
    case PhaseScheme::noavg:
      if (n != 1) throw std::invalid_argument("total_phase: noavg needs N = 1");
      return wrap(deltas.col(0).sum());
    case PhaseScheme::whole: {
      amplitude = 0.0;
      for (Eigen::Index j = 0; j < n; ++j) amplitude += std::polar(1.0, deltas.col(j).sum());
      amplitude /= static_cast<double>(n);
      break;
    }
    case PhaseScheme::each: {
      amplitude = 1.0;
      for (Eigen::Index k = 0; k < m; ++k) {
        std::complex<double> step = 0.0;
        for (Eigen::Index j = 0; j < n; ++j) step += std::polar(1.0, deltas(k, j));
        amplitude *= step / static_cast<double>(n);
      }
      break;
    }
  }
  if (std::abs(amplitude) < kZeroAmplitude)
    throw UndefinedPhaseError("total_phase: averaged amplitude is zero");
  return wrap(std::arg(amplitude));
}

double sample_variance(std::span<const PhaseSample> samples) {
  if (samples.size() < 2) throw std::invalid_argument("sample_variance: need at least two samples");
  // Welford
  double mean = 0.0;
  double m2 = 0.0;
  std::size_t k = 0;
  for (const auto& s : samples) {
    ++k;
    const double d = s.value() - mean;
    mean += d / static_cast<double>(k);
    m2 += d * (s.value() - mean);
  }
  return m2 / static_cast<double>(k - 1);
}

Histogram phase_histogram(std::span<const PhaseSample> samples, std::size_t bins) {
  if (bins == 0) throw std::invalid_argument("phase_histogram: need at least one bin");
  Histogram h;
  const double width = kTwoPi / static_cast<double>(bins);
  for (std::size_t b = 0; b <= bins; ++b) h.edges.push_back(-kPi + width * static_cast<double>(b));
  h.counts.assign(bins, 0);
  for (const auto& s : samples) {
    // Bins are (lo, hi]; -pi never occurs after wrapping.
    auto idx = static_cast<long>(std::ceil((s.value() + kPi) / width)) - 1;
    idx = std::clamp<long>(idx, 0, static_cast<long>(bins) - 1);
    ++h.counts[static_cast<std::size_t>(idx)];
  }
  return h;
}

}  // namespace erravg
