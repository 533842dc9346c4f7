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
#include <cstdint>
#include <string>
#include <vector>

#include "erravg/circuit.hpp"
#include "erravg/encoding.hpp"
#include "erravg/fock.hpp"

namespace erravg {

/// Mean and co-moments of a pair (x, y) with an order-independent merge
/// (Chan et al. pairwise update). Single observables leave y at 0.
class MomentAccumulator {
 public:
  void add(double x, double y = 0.0);
  void merge(const MomentAccumulator& other);

  std::uint64_t count() const { return n_; }
  double mean_x() const { return mean_x_; }
  double mean_y() const { return mean_y_; }
  /// Sample (n - 1) variances and covariance.
  double var_x() const;
  double var_y() const;
  double cov_xy() const;

 private:
  std::uint64_t n_ = 0;
  double mean_x_ = 0.0;
  double mean_y_ = 0.0;
  double cxx_ = 0.0;
  double cyy_ = 0.0;
  double cxy_ = 0.0;
};

struct MCEstimate {
  double mean = 0.0;
  double std_error = 0.0;  // sample stddev / sqrt(trials)
  std::uint64_t trials = 0;
};

/// Observables are evaluated on the vacuum-projected output state, i.e. on
/// outcomes with no photons in error modes. Mode indices and targets refer
/// to positions in the encoded circuit's kept_modes list.
struct Observable {
  enum class Kind {
    success,                  // P(no photon in error modes)
    probability,              // P(success and kept outcome == target)
    conditional_probability,  // P(kept outcome == target | success)
    mode_expectation,         // <psi| n_a |psi>, un-normalised
    coincidence,              // <psi| n_a n_b |psi>, un-normalised
    conditional_coincidence,  // <n_a n_b | success>
  };

  Kind kind = Kind::success;
  std::string name;
  FockState target;
  std::size_t mode_a = 0;
  std::size_t mode_b = 0;

  static Observable success(std::string name = "p_success");
  static Observable probability(FockState target, std::string name);
  static Observable conditional_probability(FockState target, std::string name);
  static Observable mode_expectation(std::size_t mode, std::string name);
  static Observable coincidence(std::size_t a, std::size_t b, std::string name);
  static Observable conditional_coincidence(std::size_t a, std::size_t b, std::string name);

  bool is_ratio() const {
    return kind == Kind::conditional_probability || kind == Kind::conditional_coincidence;
  }
};

struct MCConfig {
  std::uint64_t trials = 1;
  std::uint64_t master_seed = 0;
  EncodedCircuit circuit = unencoded(Circuit(1));
  FockState input;  // over kept modes
  std::vector<Observable> observables;
  /// 0 = hardware concurrency.
  unsigned workers = 0;
  /// Evaluate through the full output_distribution + postselect path
  /// instead of the projected kept-mode state. Same values, much slower.
  bool full_distribution = false;
};

struct MCResult {
  std::string name;
  MCEstimate estimate;
};

/// Trials are grouped in fixed-size chunks that are merged in chunk order,
/// so results are bit-identical for any worker count.
std::vector<MCResult> run(const MCConfig& config);

/// Secant estimate of d/dv of every observable between variances v1 < v2.
/// Both evaluations of a trial share the same standard-normal draws, so the
/// difference carries no first-order sampling noise. All phase-shifter
/// variances of config.circuit are replaced. Ratio observables are
/// linearised around their noiseless value.
std::vector<MCResult> run_slopes(const MCConfig& config, double v1, double v2);

/// Finds a result by observable name; throws std::out_of_range.
const MCEstimate& find(const std::vector<MCResult>& results, const std::string& name);

/// One row of a variance scan: sample variance over seeds of the real and
/// imaginary parts of one kept-block entry of M_N.
struct VarianceScanRow {
  std::size_t n = 1;
  std::size_t row = 0;
  std::size_t col = 0;
  double mean_re = 0.0;
  double mean_im = 0.0;
  double var_re = 0.0;
  double var_im = 0.0;
};

struct VarianceScanOptions {
  double v = 0.1;
  std::vector<std::size_t> redundancies{1, 2, 4, 8, 16};
  std::uint64_t seeds = 500;
  std::uint64_t master_seed = 0;
  Encoder encoder = Encoder::tree;
};

/// Per-entry variance of the post-selected matrix M_N of `target` (all
/// phase variances set to options.v) under whole-circuit averaging.
std::vector<VarianceScanRow> variance_scan(const Circuit& target, const VarianceScanOptions& options);

/// Sum over entries of var_re + var_im for one redundancy.
double total_variance(const std::vector<VarianceScanRow>& rows, std::size_t n);

}  // namespace erravg
