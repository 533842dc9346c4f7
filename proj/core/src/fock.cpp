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

#include "erravg/fock.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace erravg {

namespace {

double factorial(unsigned n) {
  double f = 1.0;
  for (unsigned k = 2; k <= n; ++k) f *= k;
  return f;
}

double occupation_norm(const FockState& s) {
  double p = 1.0;
  for (auto n : s.occupations()) p *= factorial(n);
  return p;
}

void check_cap(unsigned photons, unsigned cap) {
  if (photons > cap)
    throw ResourceLimitError("photon number " + std::to_string(photons) + " exceeds cap " +
                             std::to_string(cap));
}

// Recursively fills occupations[pos..] with `left` photons, largest-last so
// the output is ascending lexicographic.
void enumerate(std::vector<unsigned>& occ, std::size_t pos, unsigned left, std::vector<FockState>& out) {
  if (pos + 1 == occ.size()) {
    occ[pos] = left;
    out.emplace_back(occ);
    return;
  }
  for (unsigned k = 0; k <= left; ++k) {
    occ[pos] = k;
    enumerate(occ, pos + 1, left - k, out);
  }
  occ[pos] = 0;
}

}  // namespace

FockState FockState::single_mode(std::size_t modes, std::size_t mode, unsigned photons) {
  if (mode >= modes) throw std::invalid_argument("FockState::single_mode: mode out of range");
  std::vector<unsigned> occ(modes, 0);
  occ[mode] = photons;
  return FockState(std::move(occ));
}

unsigned FockState::photons() const { return std::accumulate(occ_.begin(), occ_.end(), 0u); }

std::vector<std::size_t> FockState::photon_modes() const {
  std::vector<std::size_t> out;
  for (std::size_t m = 0; m < occ_.size(); ++m)
    for (unsigned k = 0; k < occ_[m]; ++k) out.push_back(m);
  return out;
}

FockState FockState::embed(std::span<const std::size_t> modes, std::size_t total) const {
  if (modes.size() != occ_.size()) throw std::invalid_argument("FockState::embed: mode count mismatch");
  std::vector<unsigned> occ(total, 0);
  for (std::size_t i = 0; i < modes.size(); ++i) {
    if (modes[i] >= total) throw std::invalid_argument("FockState::embed: mode out of range");
    occ[modes[i]] = occ_[i];
  }
  return FockState(std::move(occ));
}

FockState FockState::restrict_to(std::span<const std::size_t> modes) const {
  std::vector<unsigned> occ;
  occ.reserve(modes.size());
  for (auto m : modes) occ.push_back(occ_.at(m));
  return FockState(std::move(occ));
}

std::string FockState::to_string() const {
  std::ostringstream os;
  os << '|';
  for (std::size_t i = 0; i < occ_.size(); ++i) os << (i ? "," : "") << occ_[i];
  os << '>';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const FockState& s) { return os << s.to_string(); }

std::vector<FockState> enumerate_states(std::size_t modes, unsigned photons) {
  if (modes == 0) throw std::invalid_argument("enumerate_states: need at least one mode");
  std::vector<FockState> out;
  std::vector<unsigned> occ(modes, 0);
  enumerate(occ, 0, photons, out);
  return out;
}

OutputDistribution::OutputDistribution(std::size_t modes, unsigned photons,
                                       std::vector<std::pair<FockState, double>> entries)
    : modes_(modes), photons_(photons), entries_(std::move(entries)) {
  for (const auto& [s, p] : entries_) {
    if (s.mode_count() != modes_ || s.photons() != photons_)
      throw std::invalid_argument("OutputDistribution: inconsistent key " + s.to_string());
    (void)p;
  }
}

double OutputDistribution::probability(const FockState& s) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), s,
                             [](const auto& e, const FockState& key) { return e.first < key; });
  return (it != entries_.end() && it->first == s) ? it->second : 0.0;
}

double OutputDistribution::total() const {
  double t = 0.0;
  for (const auto& e : entries_) t += e.second;
  return t;
}

Complex transition_amplitude(const NetworkMatrix& u, const FockState& in, const FockState& out,
                             unsigned cap) {
  const auto m = static_cast<std::size_t>(u.rows());
  if (u.rows() != u.cols()) throw std::invalid_argument("transition_amplitude: matrix must be square");
  if (in.mode_count() != m || out.mode_count() != m)
    throw std::invalid_argument("transition_amplitude: mode count mismatch");
  const unsigned n = in.photons();
  if (out.photons() != n) throw std::invalid_argument("transition_amplitude: photon number mismatch");
  check_cap(n, cap);
  const auto rows = out.photon_modes();
  const auto cols = in.photon_modes();
  return permanent_of_selection(u, rows, cols) /
         std::sqrt(occupation_norm(in) * occupation_norm(out));
}

OutputDistribution output_distribution(const NetworkMatrix& u, const FockState& in, unsigned cap) {
  const unsigned n = in.photons();
  check_cap(n, cap);
  if (u.rows() != u.cols() || static_cast<std::size_t>(u.rows()) != in.mode_count())
    throw std::invalid_argument("output_distribution: matrix/state size mismatch");
  const auto cols = in.photon_modes();
  const double in_norm = occupation_norm(in);
  std::vector<std::pair<FockState, double>> entries;
  for (auto& s : enumerate_states(in.mode_count(), n)) {
    const auto rows = s.photon_modes();
    const Complex a = permanent_of_selection(u, rows, cols) / std::sqrt(in_norm * occupation_norm(s));
    entries.emplace_back(std::move(s), std::norm(a));
  }
  return OutputDistribution(in.mode_count(), n, std::move(entries));
}

PostselectionResult postselect(const OutputDistribution& d, std::span<const std::size_t> kept) {
  if (kept.empty()) throw std::invalid_argument("postselect: kept mode list is empty");
  std::vector<bool> is_kept(d.mode_count(), false);
  for (auto m : kept) {
    if (m >= d.mode_count()) throw std::invalid_argument("postselect: kept mode out of range");
    is_kept[m] = true;
  }
  double success = 0.0;
  std::vector<std::pair<FockState, double>> restricted;
  for (const auto& [s, p] : d.entries()) {
    bool vacuum_elsewhere = true;
    for (std::size_t m = 0; m < d.mode_count() && vacuum_elsewhere; ++m)
      if (!is_kept[m] && s[m] != 0) vacuum_elsewhere = false;
    if (!vacuum_elsewhere) continue;
    success += p;
    restricted.emplace_back(s.restrict_to(kept), p);
  }
  PostselectionResult result{success, std::nullopt};
  if (success > 0.0) {
    for (auto& e : restricted) e.second /= success;
    std::sort(restricted.begin(), restricted.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    result.conditional.emplace(kept.size(), d.total_photons(), std::move(restricted));
  }
  return result;
}

double mode_expectation(const OutputDistribution& d, std::size_t mode) {
  if (mode >= d.mode_count()) throw std::invalid_argument("mode_expectation: mode out of range");
  double e = 0.0;
  for (const auto& [s, p] : d.entries()) e += s[mode] * p;
  return e;
}

double mode_correlation(const OutputDistribution& d, std::size_t a, std::size_t b) {
  if (a >= d.mode_count() || b >= d.mode_count())
    throw std::invalid_argument("mode_correlation: mode out of range");
  double e = 0.0;
  for (const auto& [s, p] : d.entries()) e += static_cast<double>(s[a]) * s[b] * p;
  return e;
}

double ProjectedState::norm_squared() const {
  double t = 0.0;
  for (const auto& a : amplitudes) t += std::norm(a);
  return t;
}

std::vector<std::size_t> occupied_modes(const FockState& in) {
  std::vector<std::size_t> out;
  for (std::size_t m = 0; m < in.mode_count(); ++m)
    if (in[m] > 0) out.push_back(m);
  return out;
}

Projector::Projector(const FockState& in, std::span<const std::size_t> column_modes,
                     std::span<const std::size_t> kept, unsigned cap)
    : column_count_(column_modes.size()) {
  const unsigned n = in.photons();
  check_cap(n, cap);
  for (std::size_t m = 0; m < in.mode_count(); ++m) {
    if (in[m] == 0) continue;
    auto it = std::find(column_modes.begin(), column_modes.end(), m);
    if (it == column_modes.end()) throw std::invalid_argument("Projector: input mode not compiled");
    for (unsigned k = 0; k < in[m]; ++k) cols_.push_back(static_cast<std::size_t>(it - column_modes.begin()));
  }
  const double in_norm = occupation_norm(in);
  outcomes_ = enumerate_states(kept.size(), n);
  for (const auto& s : outcomes_) {
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < kept.size(); ++i)
      for (unsigned k = 0; k < s[i]; ++k) rows.push_back(kept[i]);
    rows_.push_back(std::move(rows));
    norms_.push_back(1.0 / std::sqrt(in_norm * occupation_norm(s)));
  }
}

void Projector::amplitudes(const NetworkMatrix& columns, std::vector<Complex>& out) const {
  if (static_cast<std::size_t>(columns.cols()) != column_count_)
    throw std::invalid_argument("Projector: column count mismatch");
  out.resize(outcomes_.size());
  for (std::size_t i = 0; i < outcomes_.size(); ++i)
    out[i] = permanent_of_selection(columns, rows_[i], cols_) * norms_[i];
}

ProjectedState project_output(const NetworkMatrix& columns, std::span<const std::size_t> column_modes,
                              const FockState& in, std::span<const std::size_t> kept, unsigned cap) {
  const Projector projector(in, column_modes, kept, cap);
  ProjectedState out;
  out.outcomes = projector.outcomes();
  projector.amplitudes(columns, out.amplitudes);
  return out;
}

}  // namespace erravg
