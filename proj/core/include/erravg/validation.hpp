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
#include <string>
#include <vector>

#include "erravg/analytics.hpp"
#include "erravg/experiments.hpp"
#include "erravg/rational.hpp"

namespace erravg {

enum class Status { pass, fail, underpowered };
std::string_view to_string(Status s);

struct CriterionResult {
  int id = 0;
  std::string title;
  Status status = Status::fail;
  std::string measured;
  std::string expected;
  std::vector<std::string> details;  // one line per failing or notable check
};

/// Closed-form predictions used as references. Tests swap entries to check
/// that a corrupted formula is caught.
struct Formulas {
  double (*sp_success_exact)(double, std::size_t) = analytics::sp_success_exact;
  double (*sp_correct_post)(double, std::size_t) = analytics::sp_correct_post;
  double (*tp_coincidence_post)(double, std::size_t) = analytics::tp_coincidence_post;
  double (*variance_predicted)(double, std::size_t, std::size_t) = analytics::variance_predicted;
  double (*variance_max)() = analytics::variance_max;
  double (*chain_success_avg_whole)(const analytics::ChainParams&) = analytics::chain_success_avg_whole;
  double (*chain_success_avg_each)(const analytics::ChainParams&) = analytics::chain_success_avg_each;
  LinearInV (*recurrence_correct_post)(const analytics::RecurrenceParams&, int) =
      analytics::recurrence_correct_post_coefficients;
};

struct ValidationOptions {
  std::uint64_t seed = kDefaultSeed;
  /// Overrides every trial / seed / sample count. Below a criterion's
  /// required count its statistical checks report `underpowered`.
  std::optional<std::uint64_t> trials;
  unsigned workers = 0;
  Formulas formulas;
  /// Scratch directory for the determinism check; empty = system temp.
  std::filesystem::path scratch;
};

inline constexpr int kCriterionCount = 12;

/// Runs one criterion (1..kCriterionCount); other ids throw
/// std::out_of_range.
CriterionResult run_criterion(int id, const ValidationOptions& options);

std::vector<CriterionResult> validate_all(const ValidationOptions& options);

/// "[PASS] 3 two-photon interference: measured ...; expected ..."
std::string format(const CriterionResult& r);

}  // namespace erravg
