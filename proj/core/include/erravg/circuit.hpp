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

#include <cmath>
#include <cstddef>
#include <random>
#include <span>
#include <variant>
#include <vector>

#include "erravg/linalg.hpp"

namespace erravg {

/// Phase shift e^{i(theta + delta)} on one mode, delta ~ Normal(0, variance).
struct PhaseShifter {
  std::size_t mode = 0;
  double theta = 0.0;     // rad
  double variance = 0.0;  // rad^2
};

/// Fixed 50:50 beam splitter H = (1/sqrt2)[[1,1],[1,-1]] on (first, second).
struct BeamSplitter {
  std::size_t first = 0;
  std::size_t second = 1;
};

/// Noiseless dense block acting on an ordered list of modes. Used for DFT
/// encoders; `matrix` must be unitary and sized to `modes`.
struct FixedUnitary {
  std::vector<std::size_t> modes;
  NetworkMatrix matrix;
};

using Element = std::variant<PhaseShifter, BeamSplitter, FixedUnitary>;

/// Ordered list of optical elements on a fixed number of modes. The network
/// matrix is the product of element matrices in order (first element acts
/// first).
class Circuit {
 public:
  explicit Circuit(std::size_t mode_count);

  std::size_t mode_count() const { return mode_count_; }
  const std::vector<Element>& elements() const { return elements_; }
  std::size_t phase_shifter_count() const { return phase_shifters_; }

  Circuit& add(Element e);
  Circuit& append(std::span<const Element> fragment);

  /// Copy with every phase shifter's variance replaced by `variance`.
  Circuit with_variance(double variance) const;

  friend bool operator==(const Circuit& a, const Circuit& b);

 private:
  void check(const Element& e) const;

  std::size_t mode_count_;
  std::vector<Element> elements_;
  std::size_t phase_shifters_ = 0;
};

/// One draw of every phase error, in phase-shifter element order.
struct NoiseRealization {
  std::vector<double> deltas;
};

/// MZ tunable beam splitter on (i, j): BS, phase in arm i, BS.
std::vector<Element> mz_tunable_bs(std::size_t i, std::size_t j, double theta, double variance);

NoiseRealization zero_realization(const Circuit& c);

/// delta_k = sqrt(v_k) * z_k with one standard normal consumed per phase
/// shifter, including those with v = 0. Deltas are not wrapped.
template <class URBG>
NoiseRealization sample_realization(const Circuit& c, URBG& rng) {
  NoiseRealization r;
  r.deltas.reserve(c.phase_shifter_count());
  for (const auto& e : c.elements()) {
    if (const auto* ps = std::get_if<PhaseShifter>(&e)) {
      std::normal_distribution<double> normal(0.0, 1.0);
      r.deltas.push_back(std::sqrt(ps->variance) * normal(rng));
    }
  }
  return r;
}

/// Network matrix for one realization.
NetworkMatrix compile(const Circuit& c, const NoiseRealization& r);

/// Only the listed input columns of compile(c, r), as an m x cols.size()
/// matrix. Costs O(cols) per element instead of O(m).
NetworkMatrix compile_columns(const Circuit& c, const NoiseRealization& r,
                              std::span<const std::size_t> cols);

/// E[compile(c, .)]: each phase factor replaced by e^{i theta} e^{-v/2}.
NetworkMatrix mean_matrix(const Circuit& c);

}  // namespace erravg
