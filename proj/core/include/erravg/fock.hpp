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
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "erravg/linalg.hpp"

namespace erravg {

inline constexpr unsigned kPhotonCap = 4;

/// Occupation-number vector over modes.
class FockState {
 public:
  FockState() = default;
  explicit FockState(std::vector<unsigned> occupations) : occ_(std::move(occupations)) {}
  FockState(std::initializer_list<unsigned> occupations) : occ_(occupations) {}

  /// All photons in vacuum except `photons` in `mode`.
  static FockState single_mode(std::size_t modes, std::size_t mode, unsigned photons = 1);

  std::size_t mode_count() const { return occ_.size(); }
  unsigned photons() const;
  unsigned operator[](std::size_t mode) const { return occ_[mode]; }
  const std::vector<unsigned>& occupations() const { return occ_; }

  /// Mode index of each photon, ascending, with repeats (|2,0,1> -> {0,0,2}).
  std::vector<std::size_t> photon_modes() const;

  /// Same occupations placed on `modes` of a larger `total`-mode register.
  FockState embed(std::span<const std::size_t> modes, std::size_t total) const;
  /// Occupations restricted to `modes`, in that order.
  FockState restrict_to(std::span<const std::size_t> modes) const;

  /// "|1,0,2>"
  std::string to_string() const;

  auto operator<=>(const FockState&) const = default;

 private:
  std::vector<unsigned> occ_;
};

std::ostream& operator<<(std::ostream& os, const FockState& s);

/// All n-photon states on m modes, ascending lexicographic order of the
/// occupation vectors (|0,..,0,n> first, |n,0,..,0> last).
std::vector<FockState> enumerate_states(std::size_t modes, unsigned photons);

/// Probability table over n-photon outcomes, keys in lexicographic order.
class OutputDistribution {
 public:
  OutputDistribution(std::size_t modes, unsigned photons,
                     std::vector<std::pair<FockState, double>> entries);

  std::size_t mode_count() const { return modes_; }
  unsigned total_photons() const { return photons_; }
  const std::vector<std::pair<FockState, double>>& entries() const { return entries_; }

  /// 0 for outcomes not present.
  double probability(const FockState& s) const;
  double total() const;

 private:
  std::size_t modes_;
  unsigned photons_;
  std::vector<std::pair<FockState, double>> entries_;
};

struct PostselectionResult {
  double p_success = 0.0;
  /// Renormalised distribution over the kept modes; empty when p_success == 0.
  std::optional<OutputDistribution> conditional;
};

/// perm(U[out rows, in cols]) / sqrt(prod in! prod out!).
Complex transition_amplitude(const NetworkMatrix& u, const FockState& in, const FockState& out,
                             unsigned cap = kPhotonCap);

OutputDistribution output_distribution(const NetworkMatrix& u, const FockState& in,
                                       unsigned cap = kPhotonCap);

PostselectionResult postselect(const OutputDistribution& d, std::span<const std::size_t> kept);

/// sum_s s[mode] p(s)
double mode_expectation(const OutputDistribution& d, std::size_t mode);
/// sum_s s[a] s[b] p(s)
double mode_correlation(const OutputDistribution& d, std::size_t a, std::size_t b);

/// Amplitudes of the vacuum-projected (un-normalised) output state: every
/// outcome with photons only in `kept`, keyed by occupations on `kept`.
/// `columns` holds the network's columns for the occupied input modes, as
/// returned by compile_columns for in.photon_modes() deduplicated and sorted.
struct ProjectedState {
  std::vector<FockState> outcomes;
  std::vector<Complex> amplitudes;

  double norm_squared() const;
};

/// Cached form of project_output for repeated evaluation with the same
/// input, kept set and compiled columns (Monte Carlo inner loop).
class Projector {
 public:
  Projector(const FockState& in, std::span<const std::size_t> column_modes,
            std::span<const std::size_t> kept, unsigned cap = kPhotonCap);

  const std::vector<FockState>& outcomes() const { return outcomes_; }
  /// Writes one amplitude per outcome into `out` (resized).
  void amplitudes(const NetworkMatrix& columns, std::vector<Complex>& out) const;

 private:
  std::vector<FockState> outcomes_;
  std::vector<std::vector<std::size_t>> rows_;
  std::vector<double> norms_;
  std::vector<std::size_t> cols_;
  std::size_t column_count_;
};

ProjectedState project_output(const NetworkMatrix& columns, std::span<const std::size_t> column_modes,
                              const FockState& in, std::span<const std::size_t> kept,
                              unsigned cap = kPhotonCap);

/// Distinct occupied modes of `in`, ascending.
std::vector<std::size_t> occupied_modes(const FockState& in);

}  // namespace erravg
