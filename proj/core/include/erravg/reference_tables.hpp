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
#include <optional>
#include <vector>

#include "erravg/encoding.hpp"
#include "erravg/fock.hpp"
#include "erravg/rational.hpp"

namespace erravg {

/// One published first-order entry for the four-mode identity network:
/// P(output) = constant + slope * v, or the post-selected probability of the
/// correct output when `postselected` is set.
struct TableEntry {
  FockState input;
  Strategy strategy = Strategy::whole;
  std::size_t n = 1;
  FockState output;
  bool postselected = false;
  LinearInV value;
};

/// Every printed entry, verbatim. Inputs |1,0,0,0>, |2,0,0,0> and |1,1,0,0>;
/// columns N = 1, 2, 4 except per-element averaging of |2,0,0,0>, which
/// only lists N = 1, 2.
const std::vector<TableEntry>& reference_table();

/// Printed value for the given cell. When the strategy has no column for
/// `n`, falls back to the other strategy (the two are listed as equal).
std::optional<LinearInV> reference_value(const FockState& input, Strategy strategy, std::size_t n,
                                         const FockState& output, bool postselected);

/// The three inputs covered by the table, in print order.
std::vector<FockState> reference_inputs();

}  // namespace erravg
