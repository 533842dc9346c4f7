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

#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace erravg {

/// Phase wrapped into (-pi, pi].
class PhaseSample {
 public:
  PhaseSample() = default;
  double value() const { return value_; }

  friend PhaseSample wrap(double theta);

 private:
  explicit PhaseSample(double v) : value_(v) {}
  double value_ = 0.0;
};

/// theta - 2 pi round(theta / 2 pi), with -pi mapped to +pi.
PhaseSample wrap(double theta);

/// Raised when the averaged amplitude is zero and has no argument.
class UndefinedPhaseError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class PhaseScheme { noavg, whole, each };

/// Total phase of an M-shifter chain from an M x N matrix of deltas
/// (row k = shifter, column j = copy).
///   noavg: wrap(sum_k delta_k)                    (requires N = 1)
///   whole: arg((1/N) sum_j exp(i sum_k delta_jk))
///   each:  arg(prod_k (1/N) sum_j exp(i delta_jk))
PhaseSample total_phase(const Eigen::MatrixXd& deltas, PhaseScheme scheme);

/// Ordinary (not circular) unbiased sample variance of wrapped values.
double sample_variance(std::span<const PhaseSample> samples);

struct Histogram {
  std::vector<double> edges;        // size bins + 1
  std::vector<std::size_t> counts;  // size bins
};

/// Fixed-width bins on (-pi, pi]; the default width is pi/50 (100 bins).
Histogram phase_histogram(std::span<const PhaseSample> samples, std::size_t bins = 100);

}  // namespace erravg
