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

#include "erravg/circuit.hpp"

#include <numbers>
#include <stdexcept>
#include <string>

namespace erravg {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// Left-multiplies `state` (rows = modes) by each element in turn. `phase`
// maps (shifter, delta) to the complex factor applied on its row.
template <class PhaseFactor>
void apply_elements(const Circuit& c, std::span<const double> deltas, NetworkMatrix& state,
                    PhaseFactor&& phase) {
  std::size_t k = 0;
  for (const auto& element : c.elements()) {
    std::visit(
        Overloaded{
            [&](const PhaseShifter& ps) {
              const Complex f = phase(ps, deltas.empty() ? 0.0 : deltas[k]);
              ++k;
              state.row(static_cast<Eigen::Index>(ps.mode)) *= f;
            },
            [&](const BeamSplitter& bs) {
              const auto i = static_cast<Eigen::Index>(bs.first);
              const auto j = static_cast<Eigen::Index>(bs.second);
              for (Eigen::Index col = 0; col < state.cols(); ++col) {
                const Complex a = state(i, col);
                const Complex b = state(j, col);
                state(i, col) = kInvSqrt2 * (a + b);
                state(j, col) = kInvSqrt2 * (a - b);
              }
            },
            [&](const FixedUnitary& fu) {
              const auto n = static_cast<Eigen::Index>(fu.modes.size());
              NetworkMatrix rows(n, state.cols());
              for (Eigen::Index r = 0; r < n; ++r)
                rows.row(r) = state.row(static_cast<Eigen::Index>(fu.modes[r]));
              const NetworkMatrix mixed = fu.matrix * rows;
              for (Eigen::Index r = 0; r < n; ++r)
                state.row(static_cast<Eigen::Index>(fu.modes[r])) = mixed.row(r);
            },
        },
        element);
  }
}

void check_realization(const Circuit& c, const NoiseRealization& r) {
  if (r.deltas.size() != c.phase_shifter_count())
    throw std::invalid_argument("compile: realization has " + std::to_string(r.deltas.size()) +
                                " deltas, circuit has " +
                                std::to_string(c.phase_shifter_count()) + " phase shifters");
}

Complex noisy_phase(const PhaseShifter& ps, double delta) {
  return std::polar(1.0, ps.theta + delta);
}

}  // namespace

Circuit::Circuit(std::size_t mode_count) : mode_count_(mode_count) {
  if (mode_count == 0) throw std::invalid_argument("Circuit: mode_count must be positive");
}

void Circuit::check(const Element& e) const {
  auto in_range = [&](std::size_t m) {
    if (m >= mode_count_)
      throw std::invalid_argument("Circuit: mode " + std::to_string(m) + " out of range for " +
                                  std::to_string(mode_count_) + " modes");
  };
  std::visit(Overloaded{
                 [&](const PhaseShifter& ps) {
                   in_range(ps.mode);
                   if (!(ps.variance >= 0.0) || !std::isfinite(ps.variance))
                     throw std::invalid_argument("PhaseShifter: variance must be >= 0");
                   if (!std::isfinite(ps.theta))
                     throw std::invalid_argument("PhaseShifter: theta must be finite");
                 },
                 [&](const BeamSplitter& bs) {
                   in_range(bs.first);
                   in_range(bs.second);
                   if (bs.first == bs.second)
                     throw std::invalid_argument("BeamSplitter: modes must differ");
                 },
                 [&](const FixedUnitary& fu) {
                   const auto n = static_cast<Eigen::Index>(fu.modes.size());
                   if (n == 0 || fu.matrix.rows() != n || fu.matrix.cols() != n)
                     throw std::invalid_argument("FixedUnitary: matrix size must match modes");
                   std::vector<bool> seen(mode_count_, false);
                   for (auto m : fu.modes) {
                     in_range(m);
                     if (seen[m]) throw std::invalid_argument("FixedUnitary: repeated mode");
                     seen[m] = true;
                   }
                   if (!is_unitary(fu.matrix))
                     throw std::invalid_argument("FixedUnitary: matrix is not unitary");
                 },
             },
             e);
}

Circuit& Circuit::add(Element e) {
  check(e);
  if (std::holds_alternative<PhaseShifter>(e)) ++phase_shifters_;
  elements_.push_back(std::move(e));
  return *this;
}

Circuit& Circuit::append(std::span<const Element> fragment) {
  for (const auto& e : fragment) add(e);
  return *this;
}

Circuit Circuit::with_variance(double variance) const {
  if (!(variance >= 0.0)) throw std::invalid_argument("with_variance: variance must be >= 0");
  Circuit out = *this;
  for (auto& e : out.elements_)
    if (auto* ps = std::get_if<PhaseShifter>(&e)) ps->variance = variance;
  return out;
}

bool operator==(const Circuit& a, const Circuit& b) {
  if (a.mode_count_ != b.mode_count_ || a.elements_.size() != b.elements_.size()) return false;
  for (std::size_t i = 0; i < a.elements_.size(); ++i) {
    const auto& x = a.elements_[i];
    const auto& y = b.elements_[i];
    if (x.index() != y.index()) return false;
    const bool same = std::visit(
        Overloaded{
            [&](const PhaseShifter& p) {
              const auto& q = std::get<PhaseShifter>(y);
              return p.mode == q.mode && p.theta == q.theta && p.variance == q.variance;
            },
            [&](const BeamSplitter& p) {
              const auto& q = std::get<BeamSplitter>(y);
              return p.first == q.first && p.second == q.second;
            },
            [&](const FixedUnitary& p) {
              const auto& q = std::get<FixedUnitary>(y);
              return p.modes == q.modes && p.matrix == q.matrix;
            },
        },
        x);
    if (!same) return false;
  }
  return true;
}

std::vector<Element> mz_tunable_bs(std::size_t i, std::size_t j, double theta, double variance) {
  if (i == j) throw std::invalid_argument("mz_tunable_bs: modes must differ");
  return {BeamSplitter{i, j}, PhaseShifter{i, theta, variance}, BeamSplitter{i, j}};
}

NoiseRealization zero_realization(const Circuit& c) {
  return NoiseRealization{std::vector<double>(c.phase_shifter_count(), 0.0)};
}

NetworkMatrix compile(const Circuit& c, const NoiseRealization& r) {
  check_realization(c, r);
  NetworkMatrix state = identity(c.mode_count());
  apply_elements(c, r.deltas, state, noisy_phase);
  return state;
}

NetworkMatrix compile_columns(const Circuit& c, const NoiseRealization& r,
                              std::span<const std::size_t> cols) {
  check_realization(c, r);
  const auto m = static_cast<Eigen::Index>(c.mode_count());
  NetworkMatrix state = NetworkMatrix::Zero(m, static_cast<Eigen::Index>(cols.size()));
  for (std::size_t k = 0; k < cols.size(); ++k) {
    if (cols[k] >= c.mode_count()) throw std::invalid_argument("compile_columns: column out of range");
    state(static_cast<Eigen::Index>(cols[k]), static_cast<Eigen::Index>(k)) = 1.0;
  }
  apply_elements(c, r.deltas, state, noisy_phase);
  return state;
}

NetworkMatrix mean_matrix(const Circuit& c) {
  NetworkMatrix state = identity(c.mode_count());
  apply_elements(c, {}, state, [](const PhaseShifter& ps, double) {
    return std::polar(std::exp(-ps.variance / 2.0), ps.theta);
  });
  return state;
}

}  // namespace erravg
