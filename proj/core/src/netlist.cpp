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

#include "erravg/netlist.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace erravg {

using nlohmann::json;

json to_json(const Circuit& c) {
  json elements = json::array();
  for (const auto& e : c.elements()) {
    if (const auto* ps = std::get_if<PhaseShifter>(&e)) {
      elements.push_back({{"kind", "phase"},
                          {"modes", {ps->mode}},
                          {"theta", ps->theta},
                          {"variance", ps->variance}});
    } else if (const auto* bs = std::get_if<BeamSplitter>(&e)) {
      elements.push_back({{"kind", "bs"}, {"modes", {bs->first, bs->second}}});
    } else {
      const auto& fu = std::get<FixedUnitary>(e);
      json re = json::array();
      json im = json::array();
      for (Eigen::Index r = 0; r < fu.matrix.rows(); ++r) {
        json rr = json::array();
        json ii = json::array();
        for (Eigen::Index k = 0; k < fu.matrix.cols(); ++k) {
          rr.push_back(fu.matrix(r, k).real());
          ii.push_back(fu.matrix(r, k).imag());
        }
        re.push_back(std::move(rr));
        im.push_back(std::move(ii));
      }
      elements.push_back({{"kind", "unitary"}, {"modes", fu.modes}, {"re", re}, {"im", im}});
    }
  }
  return {{"mode_count", c.mode_count()}, {"elements", std::move(elements)}};
}

json to_json(const EncodedCircuit& c) {
  json j = to_json(c.circuit);
  j["kept_modes"] = c.kept_modes;
  j["redundancy"] = c.redundancy;
  return j;
}

Circuit circuit_from_json(const json& j) {
  try {
    Circuit c(j.at("mode_count").get<std::size_t>());
    for (const auto& e : j.at("elements")) {
      const auto kind = e.at("kind").get<std::string>();
      const auto modes = e.at("modes").get<std::vector<std::size_t>>();
      if (kind == "phase") {
        if (modes.size() != 1) throw std::invalid_argument("phase element needs one mode");
        c.add(PhaseShifter{modes[0], e.value("theta", 0.0), e.value("variance", 0.0)});
      } else if (kind == "bs") {
        if (modes.size() != 2) throw std::invalid_argument("bs element needs two modes");
        c.add(BeamSplitter{modes[0], modes[1]});
      } else if (kind == "unitary") {
        const auto re = e.at("re").get<std::vector<std::vector<double>>>();
        const auto im = e.at("im").get<std::vector<std::vector<double>>>();
        const auto n = static_cast<Eigen::Index>(modes.size());
        if (static_cast<Eigen::Index>(re.size()) != n || static_cast<Eigen::Index>(im.size()) != n)
          throw std::invalid_argument("unitary element: matrix rows must match modes");
        NetworkMatrix m(n, n);
        for (Eigen::Index r = 0; r < n; ++r) {
          if (static_cast<Eigen::Index>(re[r].size()) != n || static_cast<Eigen::Index>(im[r].size()) != n)
            throw std::invalid_argument("unitary element: matrix must be square");
          for (Eigen::Index k = 0; k < n; ++k) m(r, k) = Complex(re[r][k], im[r][k]);
        }
        c.add(FixedUnitary{modes, std::move(m)});
      } else {
        throw std::invalid_argument("unknown element kind '" + kind + "'");
      }
    }
    return c;
  } catch (const json::exception& ex) {
    throw std::invalid_argument(std::string("netlist: ") + ex.what());
  }
}

EncodedCircuit encoded_from_json(const json& j) {
  Circuit c = circuit_from_json(j);
  if (!j.contains("kept_modes")) return unencoded(c);
  EncodedCircuit enc{c, j.at("kept_modes").get<std::vector<std::size_t>>(), {},
                     j.value("redundancy", std::size_t{1})};
  std::vector<bool> kept(c.mode_count(), false);
  for (auto m : enc.kept_modes) {
    if (m >= c.mode_count() || kept[m]) throw std::invalid_argument("netlist: bad kept_modes");
    kept[m] = true;
  }
  for (std::size_t i = 0; i < c.mode_count(); ++i)
    if (!kept[i]) enc.error_modes.push_back(i);
  return enc;
}

}  // namespace erravg
