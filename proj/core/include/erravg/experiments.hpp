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
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "erravg/encoding.hpp"
#include "erravg/fock.hpp"
#include "erravg/phase_stats.hpp"

namespace erravg {

inline constexpr std::uint64_t kDefaultSeed = 42;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Overrides for one experiment run. Unset optionals take the experiment's
/// own defaults.
struct ExperimentParams {
  std::optional<double> v;
  std::optional<std::size_t> n;
  std::optional<std::size_t> m;
  std::optional<std::uint64_t> trials;
  std::uint64_t seed = kDefaultSeed;
  std::filesystem::path out_dir = ".";
  bool plot_script = false;
  Encoder encoder = Encoder::tree;
  Strategy strategy = Strategy::whole;
  /// 0 = hardware concurrency. Never changes results.
  unsigned workers = 0;
};

struct ExperimentOutput {
  std::vector<std::filesystem::path> files;
  std::vector<std::string> summary;
  bool ok = true;  // false only when `validate` finds a failing criterion
};

const std::vector<std::string>& experiment_names();

/// Runs one named experiment and writes <name>.csv, <name>.manifest.json and
/// any extra tables into params.out_dir. Unknown names throw UsageError;
/// unwritable output throws IoError.
ExperimentOutput run_experiment(std::string_view name, const ExperimentParams& params);

/// Phase-chain variance of the total applied phase for the three schemes.
/// Run r draws an M x N matrix of standard normals from stream (seed, r)
/// and scales it by sqrt(v), so sweeps over v share their draws.
struct PhaseVariances {
  double noavg = 0.0;
  double whole = 0.0;
  double each = 0.0;
  std::uint64_t undefined = 0;  // runs with a zero averaged amplitude
};
PhaseVariances phase_chain_variances(double v, std::size_t m, std::size_t n, std::uint64_t runs,
                                     std::uint64_t seed);

/// Total phase of run r for every scheme, in the order noavg, whole, each.
/// Missing values (zero amplitude) are reported as std::nullopt.
std::vector<std::optional<PhaseSample>> phase_chain_run(double v, std::size_t m, std::size_t n,
                                                        std::uint64_t seed, std::uint64_t run);

/// First-order coefficient of one four-mode output probability.
struct TableSlopeRow {
  FockState input;
  Strategy strategy = Strategy::whole;
  std::size_t n = 1;
  FockState output;
  bool postselected = false;
  double constant = 0.0;  // exact noiseless value
  double slope = 0.0;
  double slope_se = 0.0;
};

struct TableSlopeOptions {
  std::vector<std::size_t> redundancies{1, 2, 4};
  std::vector<Strategy> strategies{Strategy::each, Strategy::whole};
  std::vector<FockState> inputs;  // empty = the three tabulated inputs
  double v1 = 0.004;
  double v2 = 0.008;
  std::uint64_t trials = 200000;
  std::uint64_t seed = kDefaultSeed;
  Encoder encoder = Encoder::tree;
  unsigned workers = 0;
};

std::vector<TableSlopeRow> estimate_table_slopes(const TableSlopeOptions& options);

}  // namespace erravg
