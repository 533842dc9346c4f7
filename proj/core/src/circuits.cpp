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

#include "erravg/circuits.hpp"

#include <stdexcept>

namespace erravg {

namespace {

void require_v(double v) {
  if (!(v >= 0.0)) throw std::invalid_argument("variance must be >= 0");
}

}  // namespace

Circuit mz_circuit(double v, double theta) {
  require_v(v);
  Circuit c(2);
  c.append(mz_tunable_bs(0, 1, theta, v));
  return c;
}

Circuit phase_chain_circuit(std::size_t m, double v) {
  require_v(v);
  if (m == 0) throw std::invalid_argument("phase_chain_circuit: need at least one phase shifter");
  Circuit c(2);
  c.add(BeamSplitter{0, 1});
  for (std::size_t k = 0; k < m; ++k) c.add(PhaseShifter{0, 0.0, v});
  c.add(BeamSplitter{0, 1});
  return c;
}

Circuit phase_line_circuit(std::size_t m, double v) {
  require_v(v);
  if (m == 0) throw std::invalid_argument("phase_line_circuit: need at least one phase shifter");
  Circuit c(1);
  for (std::size_t k = 0; k < m; ++k) c.add(PhaseShifter{0, 0.0, v});
  return c;
}

Circuit four_mode_circuit(double v) {
  require_v(v);
  Circuit c(4);
  c.append(mz_tunable_bs(0, 1, 0.0, v));
  c.append(mz_tunable_bs(2, 3, 0.0, v));
  c.append(mz_tunable_bs(1, 2, 0.0, v));
  c.append(mz_tunable_bs(0, 3, 0.0, v));
  return c;
}

}  // namespace erravg
