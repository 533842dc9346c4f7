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

#include "erravg/circuit.hpp"

namespace erravg {

/// Two-mode Mach-Zehnder with a single noisy phase shifter in mode 0. At
/// theta = 0 the noiseless network is the identity.
Circuit mz_circuit(double v, double theta = 0.0);

/// Mach-Zehnder with `m` noisy phase shifters in series in mode 0.
Circuit phase_chain_circuit(std::size_t m, double v);

/// Four MZ tunable beam splitters, all at theta = 0, so the noiseless
/// network is the identity. Column 1 couples (0,1) and (2,3); column 2
/// couples (1,2) and (0,3).
Circuit four_mode_circuit(double v);

// One mode carrying m phase shifters and nothing else.
Circuit phase_line_circuit(std::size_t m, double v);

}  // namespace erravg
