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

// Closed-form results for phase-noise averaging. Everything here is a pure
// function; the Monte Carlo layer uses these as reference values.
//
// Notation: v is the variance (rad^2) of one Gaussian phase error, N the
// redundancy, M the number of phase shifters in series.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "erravg/rational.hpp"

namespace erravg::analytics {

/// Raised for parameter regimes the closed forms do not cover.
class UnsupportedError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// E[e^{i delta}] for delta ~ Normal(0, v): e^{-v/2}.
double mean_phase_factor(double v);

struct GeneratorNoise {
  std::vector<double> sigmas;  // per-generator standard deviation, rad
  bool involutory = true;      // T_l^2 = I
};

/// c in M = c U for small commuting generator noise: prod_l e^{-sigma_l^2 / 2}.
/// Throws UnsupportedError for non-involutory generators.
double commuting_mean_scale(const GeneratorNoise& g);

// Single photon through an MZ whose phase is averaged N times (first order in v).
double sp_success(double v, std::size_t n);         // 1 + v/2N - v/2
double sp_correct_nopost(double v, std::size_t n);  // 1 - (2N-1) v / 4N
double sp_correct_post(double v, std::size_t n);    // 1 - v / 4N

/// Exact Gaussian value of the single-photon success probability:
/// (1 + 1/N + (1 - 1/N) e^{-v}) / 2.
double sp_success_exact(double v, std::size_t n);

// Two photons |1,1> through the same MZ (first order in v).
double tp_expect_coinc(double v);                      // 1 - v
double tp_coincidence_post(double v, std::size_t n);   // 1 - v/2N
double tp_success(double v, std::size_t n);            // 1 - v + v/2N

struct ChainParams {
  std::size_t m = 1;    // phase shifters in series
  double v = 0.0;       // rad^2 per shifter
  std::size_t n = 1;    // redundancy
};

// Phase chain inside an MZ, second order in v.
double chain_correct_noavg(const ChainParams& p);
double chain_success_avg_whole(const ChainParams& p);
double chain_correct_avg_whole(const ChainParams& p);
double chain_success_avg_each(const ChainParams& p);
double chain_correct_avg_each(const ChainParams& p);

// Same quantities truncated at first order in v.
double chain_success_avg_whole_first_order(const ChainParams& p);
double chain_success_avg_each_first_order(const ChainParams& p);

/// Linear total-phase variance vM/N (N = 1: no averaging).
double variance_predicted(double v, std::size_t m, std::size_t n);
/// Variance of a uniform phase on (-pi, pi]: pi^2 / 3.
double variance_max();

struct RecurrenceParams {
  std::int64_t a1 = 1;
  std::int64_t b1 = 2;
};

// Four-mode averaging recurrence; round n = 1 is unaveraged, round n has
// redundancy N = 2^{n-1}. Coefficient forms are exact.
LinearInV recurrence_correct_coefficients(const RecurrenceParams& r, int n);
LinearInV recurrence_wrong_coefficients(const RecurrenceParams& r, int n);
LinearInV recurrence_success_coefficients(const RecurrenceParams& r, int n);
LinearInV recurrence_correct_post_coefficients(const RecurrenceParams& r, int n);
LinearInV recurrence_asymptote_success_coefficients(const RecurrenceParams& r);

double recurrence_correct(const RecurrenceParams& r, int n, double v);
double recurrence_wrong(const RecurrenceParams& r, int n, double v);
double recurrence_success(const RecurrenceParams& r, int n, double v);
double recurrence_correct_post(const RecurrenceParams& r, int n, double v);
double recurrence_asymptote_success(const RecurrenceParams& r, double v);

/// e^{-k n^2 sigma^2 / 2}: success amplitude factor for k photons through an
/// n-mode unitary with n^2 noisy generators of deviation sigma.
double multiphoton_success(unsigned k, std::size_t n, double sigma);

}  // namespace erravg::analytics
