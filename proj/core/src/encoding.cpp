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

#include "erravg/encoding.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace erravg {

std::string_view to_string(Encoder e) { return e == Encoder::dft ? "dft" : "tree"; }
std::string_view to_string(Strategy s) { return s == Strategy::whole ? "whole" : "each"; }

Encoder parse_encoder(std::string_view s) {
  if (s == "dft") return Encoder::dft;
  if (s == "tree") return Encoder::tree;
  throw std::invalid_argument("unknown encoder '" + std::string(s) + "'");
}

Strategy parse_strategy(std::string_view s) {
  if (s == "whole") return Strategy::whole;
  if (s == "each") return Strategy::each;
  throw std::invalid_argument("unknown strategy '" + std::string(s) + "'");
}

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

void EncodingScheme::validate() const {
  if (redundancy == 0) throw std::invalid_argument("EncodingScheme: N must be >= 1");
  if (encoder == Encoder::tree && !is_power_of_two(redundancy))
    throw std::invalid_argument("EncodingScheme: tree encoder needs N = 2^k, got " +
                                std::to_string(redundancy));
}

EncodedCircuit unencoded(const Circuit& c) {
  std::vector<std::size_t> kept(c.mode_count());
  std::iota(kept.begin(), kept.end(), std::size_t{0});
  return EncodedCircuit{c, std::move(kept), {}, 1};
}

std::vector<Element> encoder_elements(std::span<const std::size_t> modes, Encoder encoder) {
  const std::size_t n = modes.size();
  if (n == 0) throw std::invalid_argument("encoder_elements: no modes");
  std::vector<Element> out;
  if (n == 1) return out;
  if (encoder == Encoder::dft) {
    out.emplace_back(FixedUnitary{{modes.begin(), modes.end()}, dft_matrix(n)});
    return out;
  }
  if (!is_power_of_two(n))
    throw std::invalid_argument("encoder_elements: tree needs a power-of-two mode count");
  for (std::size_t stride = 1; stride < n; stride *= 2)
    for (std::size_t c = 0; c < stride; ++c) out.emplace_back(BeamSplitter{modes[c], modes[c + stride]});
  return out;
}

std::vector<Element> decoder_elements(std::span<const std::size_t> modes, Encoder encoder) {
  std::vector<Element> out = encoder_elements(modes, encoder);
  if (encoder == Encoder::dft) {
    for (auto& e : out) {
      auto& fu = std::get<FixedUnitary>(e);
      fu.matrix = fu.matrix.adjoint().eval();
    }
    return out;
  }
  // H is real symmetric and self-inverse, so the inverse is the reversed gate list.
  return {out.rbegin(), out.rend()};
}

NetworkMatrix fanout_tree(std::size_t n) {
  if (!is_power_of_two(n))
    throw std::invalid_argument("fanout_tree: N must be a power of two, got " + std::to_string(n));
  std::vector<std::size_t> modes(n);
  std::iota(modes.begin(), modes.end(), std::size_t{0});
  Circuit c(n);
  const auto gates = encoder_elements(modes, Encoder::tree);
  c.append(gates);
  return compile(c, zero_realization(c));
}

NetworkMatrix encoder_matrix(std::size_t n, Encoder encoder) {
  return encoder == Encoder::dft ? dft_matrix(n) : fanout_tree(n);
}

NetworkMatrix effective_matrix(std::span<const NetworkMatrix> copies) {
  if (copies.empty()) throw std::invalid_argument("effective_matrix: no copies");
  NetworkMatrix sum = copies.front();
  for (std::size_t k = 1; k < copies.size(); ++k) {
    if (copies[k].rows() != sum.rows() || copies[k].cols() != sum.cols())
      throw std::invalid_argument("effective_matrix: dimension mismatch");
    sum += copies[k];
  }
  return sum / static_cast<double>(copies.size());
}

std::vector<std::size_t> kept_modes_for(std::size_t m, std::size_t n) {
  std::vector<std::size_t> kept(m);
  for (std::size_t j = 0; j < m; ++j) kept[j] = j * n;
  return kept;
}

NetworkMatrix encode_matrix(std::span<const NetworkMatrix> copies, Encoder encoder) {
  if (copies.empty()) throw std::invalid_argument("encode_matrix: no copies");
  const std::size_t n = copies.size();
  EncodingScheme{n, encoder, Strategy::whole}.validate();
  const Eigen::Index m = copies.front().rows();
  for (const auto& u : copies)
    if (u.rows() != m || u.cols() != m) throw std::invalid_argument("encode_matrix: dimension mismatch");

  const auto ni = static_cast<Eigen::Index>(n);
  const Eigen::Index dim = m * ni;
  NetworkMatrix block = NetworkMatrix::Zero(dim, dim);
  for (Eigen::Index k = 0; k < ni; ++k)
    for (Eigen::Index l = 0; l < m; ++l)
      for (Eigen::Index j = 0; j < m; ++j) block(l * ni + k, j * ni + k) = copies[k](l, j);

  const NetworkMatrix f = encoder_matrix(n, encoder);
  NetworkMatrix e = NetworkMatrix::Zero(dim, dim);
  for (Eigen::Index j = 0; j < m; ++j) e.block(j * ni, j * ni, ni, ni) = f;
  return e.adjoint() * block * e;
}

EncodedCircuit encode_average_whole(const Circuit& c, const EncodingScheme& scheme) {
  scheme.validate();
  const std::size_t m = c.mode_count();
  const std::size_t n = scheme.redundancy;
  Circuit out(m * n);

  std::vector<std::vector<std::size_t>> groups(m);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t k = 0; k < n; ++k) groups[j].push_back(j * n + k);

  for (const auto& g : groups) out.append(encoder_elements(g, scheme.encoder));

  // Clone-major: clone k owns phase shifters [k*P, (k+1)*P) of a realization.
  for (std::size_t k = 0; k < n; ++k) {
    auto at = [&](std::size_t mode) { return mode * n + k; };
    for (const auto& e : c.elements()) {
      if (const auto* ps = std::get_if<PhaseShifter>(&e)) {
        out.add(PhaseShifter{at(ps->mode), ps->theta, ps->variance});
      } else if (const auto* bs = std::get_if<BeamSplitter>(&e)) {
        out.add(BeamSplitter{at(bs->first), at(bs->second)});
      } else {
        const auto& fu = std::get<FixedUnitary>(e);
        FixedUnitary mapped{{}, fu.matrix};
        for (auto mode : fu.modes) mapped.modes.push_back(at(mode));
        out.add(std::move(mapped));
      }
    }
  }

  for (const auto& g : groups) out.append(decoder_elements(g, scheme.encoder));

  EncodedCircuit enc{std::move(out), kept_modes_for(m, n), {}, n};
  for (std::size_t i = 0; i < m * n; ++i)
    if (i % n != 0) enc.error_modes.push_back(i);
  return enc;
}

EncodedCircuit encode_average_each(const Circuit& c, const EncodingScheme& scheme) {
  scheme.validate();
  const std::size_t m = c.mode_count();
  const std::size_t n = scheme.redundancy;
  const std::size_t total = m + c.phase_shifter_count() * (n - 1);
  Circuit out(total);
  std::vector<std::size_t> error_modes;
  std::size_t next_ancilla = m;

  for (const auto& e : c.elements()) {
    const auto* ps = std::get_if<PhaseShifter>(&e);
    if (ps == nullptr) {
      out.add(e);
      continue;
    }
    // Fresh ancillas per gadget: a photon that leaks out is never re-mixed.
    std::vector<std::size_t> gadget{ps->mode};
    for (std::size_t k = 1; k < n; ++k) {
      gadget.push_back(next_ancilla);
      error_modes.push_back(next_ancilla);
      ++next_ancilla;
    }
    out.append(encoder_elements(gadget, scheme.encoder));
    for (auto mode : gadget) out.add(PhaseShifter{mode, ps->theta, ps->variance});
    out.append(decoder_elements(gadget, scheme.encoder));
  }

  std::vector<std::size_t> kept(m);
  std::iota(kept.begin(), kept.end(), std::size_t{0});
  return EncodedCircuit{std::move(out), std::move(kept), std::move(error_modes), n};
}

EncodedCircuit encode(const Circuit& c, const EncodingScheme& scheme) {
  return scheme.strategy == Strategy::whole ? encode_average_whole(c, scheme)
                                            : encode_average_each(c, scheme);
}

NetworkMatrix kept_block(const NetworkMatrix& u, std::span<const std::size_t> kept) {
  return select(u, kept, kept);
}

}  // namespace erravg
