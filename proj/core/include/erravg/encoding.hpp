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
#include <span>
#include <string_view>
#include <vector>

#include "erravg/circuit.hpp"
#include "erravg/linalg.hpp"

namespace erravg {

enum class Encoder { dft, tree };

/// whole: one encoding around the full circuit. each: one encoding around
/// every phase shifter.
enum class Strategy { whole, each };

std::string_view to_string(Encoder e);
std::string_view to_string(Strategy s);
Encoder parse_encoder(std::string_view s);
Strategy parse_strategy(std::string_view s);

struct EncodingScheme {
  std::size_t redundancy = 1;
  Encoder encoder = Encoder::tree;
  Strategy strategy = Strategy::whole;

  /// Throws std::invalid_argument if N = 0 or a tree is asked for a
  /// non-power-of-two N.
  void validate() const;
};

/// Encoded network plus which outputs are post-selected on vacuum.
struct EncodedCircuit {
  Circuit circuit;
  std::vector<std::size_t> kept_modes;
  std::vector<std::size_t> error_modes;
  std::size_t redundancy = 1;
};

/// Wraps an unencoded circuit: all modes kept, no error modes.
EncodedCircuit unencoded(const Circuit& c);

bool is_power_of_two(std::size_t n);

/// Encoder gates spreading modes[0] over all of `modes`. Tree: butterfly
/// of H at strides 1, 2, 4, ..., N/2.
std::vector<Element> encoder_elements(std::span<const std::size_t> modes, Encoder encoder);
/// Inverse of encoder_elements.
std::vector<Element> decoder_elements(std::span<const std::size_t> modes, Encoder encoder);

/// Matrix of the tree encoder on N = 2^k modes; |entry(k, 0)| = 1/sqrt(N).
NetworkMatrix fanout_tree(std::size_t n);

/// Encoder matrix F for one original mode (tree or DFT).
NetworkMatrix encoder_matrix(std::size_t n, Encoder encoder);

/// (1/N) sum_k U_k.
NetworkMatrix effective_matrix(std::span<const NetworkMatrix> copies);

/// E^dagger diag(U_1..U_N) E with layout (mode j, copy k) -> j*N + k. The
/// kept block {j*N} equals effective_matrix(copies).
NetworkMatrix encode_matrix(std::span<const NetworkMatrix> copies, Encoder encoder);

/// Kept modes {j*N} of an N-fold encoding of m modes.
std::vector<std::size_t> kept_modes_for(std::size_t m, std::size_t n);

EncodedCircuit encode_average_whole(const Circuit& c, const EncodingScheme& scheme);
EncodedCircuit encode_average_each(const Circuit& c, const EncodingScheme& scheme);
/// Dispatches on scheme.strategy.
EncodedCircuit encode(const Circuit& c, const EncodingScheme& scheme);

/// Block of `u` on kept rows and columns.
NetworkMatrix kept_block(const NetworkMatrix& u, std::span<const std::size_t> kept);

}  // namespace erravg
