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

#include "erravg/reference_tables.hpp"

#include <array>

namespace erravg {

namespace {

struct Row {
  FockState output;
  bool postselected;
  std::vector<LinearInV> columns;  // N = 1, 2, 4, ...
};

constexpr LinearInV lin(std::int64_t c, std::int64_t num, std::int64_t den) {
  return LinearInV{Rational(c), Rational(num, den)};
}

constexpr LinearInV zero = lin(0, 0, 1);

void add_block(std::vector<TableEntry>& out, const FockState& input, Strategy strategy,
               const std::vector<Row>& rows) {
  static constexpr std::array<std::size_t, 3> kN{1, 2, 4};
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.columns.size(); ++c)
      out.push_back({input, strategy, kN[c], row.output, row.postselected, row.columns[c]});
}

std::vector<TableEntry> build() {
  std::vector<TableEntry> t;

  const FockState s1000{1, 0, 0, 0};
  const std::vector<Row> one_photon{
      {{1, 0, 0, 0}, false, {lin(1, -1, 2), lin(1, -3, 4), lin(1, -7, 8)}},
      {{0, 1, 0, 0}, false, {lin(0, 1, 4), lin(0, 1, 8), lin(0, 1, 16)}},
      {{0, 0, 1, 0}, false, {zero, zero, zero}},
      {{0, 0, 0, 1}, false, {lin(0, 1, 4), lin(0, 1, 8), lin(0, 1, 16)}},
      {{1, 0, 0, 0}, true, {lin(1, -1, 2), lin(1, -1, 4), lin(1, -1, 8)}},
  };
  add_block(t, s1000, Strategy::each, one_photon);
  add_block(t, s1000, Strategy::whole, one_photon);

  const FockState s2000{2, 0, 0, 0};
  std::vector<Row> bunched{
      {{2, 0, 0, 0}, false, {lin(1, -1, 1), lin(1, -3, 2), lin(1, -7, 4)}},
      {{0, 2, 0, 0}, false, {zero, zero, zero}},
      {{0, 0, 2, 0}, false, {zero, zero, zero}},
      {{0, 0, 0, 2}, false, {zero, zero, zero}},
      {{1, 1, 0, 0}, false, {lin(0, 1, 2), lin(0, 1, 4), lin(0, 1, 8)}},
      {{1, 0, 1, 0}, false, {zero, zero, zero}},
      {{1, 0, 0, 1}, false, {lin(0, 1, 2), lin(0, 1, 4), lin(0, 1, 8)}},
      {{0, 1, 1, 0}, false, {zero, zero, zero}},
      {{0, 1, 0, 1}, false, {zero, zero, zero}},
      {{0, 0, 1, 1}, false, {zero, zero, zero}},
      {{2, 0, 0, 0}, true, {lin(1, -1, 1), lin(1, -1, 2), lin(1, -1, 4)}},
  };
  add_block(t, s2000, Strategy::whole, bunched);
  for (auto& row : bunched) row.columns.pop_back();
  add_block(t, s2000, Strategy::each, bunched);

  // The N = 1 entries for |1,0,1,0> and |0,1,0,1> are kept as printed.
  const FockState s1100{1, 1, 0, 0};
  const std::vector<Row> split{
      {{2, 0, 0, 0}, false, {lin(0, 1, 2), lin(0, 1, 4), lin(0, 1, 8)}},
      {{0, 2, 0, 0}, false, {lin(0, 1, 2), lin(0, 1, 4), lin(0, 1, 8)}},
      {{0, 0, 2, 0}, false, {zero, zero, zero}},
      {{0, 0, 0, 2}, false, {zero, zero, zero}},
      {{1, 1, 0, 0}, false, {lin(1, -3, 2), lin(1, -7, 4), lin(1, -15, 8)}},
      {{1, 0, 1, 0}, false, {lin(0, 1, 2), lin(0, 1, 8), lin(0, 1, 16)}},
      {{1, 0, 0, 1}, false, {zero, zero, zero}},
      {{0, 1, 1, 0}, false, {zero, zero, zero}},
      {{0, 1, 0, 1}, false, {lin(0, 1, 2), lin(0, 1, 8), lin(0, 1, 16)}},
      {{0, 0, 1, 1}, false, {zero, zero, zero}},
      {{1, 1, 0, 0}, true, {lin(1, -3, 2), lin(1, -3, 4), lin(1, -3, 8)}},
  };
  add_block(t, s1100, Strategy::each, split);
  add_block(t, s1100, Strategy::whole, split);
  return t;
}

std::optional<LinearInV> lookup(const FockState& input, Strategy strategy, std::size_t n,
                                 const FockState& output, bool postselected) {
  for (const auto& e : reference_table())
    if (e.input == input && e.strategy == strategy && e.n == n && e.output == output &&
        e.postselected == postselected)
      return e.value;
  return std::nullopt;
}

}  // namespace

const std::vector<TableEntry>& reference_table() {
  static const std::vector<TableEntry> table = build();
  return table;
}

std::optional<LinearInV> reference_value(const FockState& input, Strategy strategy, std::size_t n,
                                         const FockState& output, bool postselected) {
  if (auto v = lookup(input, strategy, n, output, postselected)) return v;
  const Strategy other = strategy == Strategy::whole ? Strategy::each : Strategy::whole;
  return lookup(input, other, n, output, postselected);
}

std::vector<FockState> reference_inputs() { return {{1, 0, 0, 0}, {2, 0, 0, 0}, {1, 1, 0, 0}}; }

}  // namespace erravg
