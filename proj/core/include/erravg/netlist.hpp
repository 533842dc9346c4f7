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

#include <nlohmann/json.hpp>

#include "erravg/circuit.hpp"
#include "erravg/encoding.hpp"

namespace erravg {

// JSON netlist:
//   {"mode_count": m,
//    "elements": [{"kind": "phase", "modes": [i], "theta": t, "variance": v},
//                 {"kind": "bs", "modes": [i, j]},
//                 {"kind": "unitary", "modes": [...], "re": [[...]], "im": [[...]]}],
//    "kept_modes": [...]}        // encoded circuits only

nlohmann::json to_json(const Circuit& c);
nlohmann::json to_json(const EncodedCircuit& c);

/// Throws std::invalid_argument on schema errors.
Circuit circuit_from_json(const nlohmann::json& j);
/// Netlists without "kept_modes" load as unencoded circuits.
EncodedCircuit encoded_from_json(const nlohmann::json& j);

}  // namespace erravg
