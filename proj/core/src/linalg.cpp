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

#include "erravg/linalg.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>

namespace erravg {

NetworkMatrix identity(std::size_t dim) {
  return NetworkMatrix::Identity(static_cast<Eigen::Index>(dim),
                                 static_cast<Eigen::Index>(dim));
}

NetworkMatrix dft_matrix(std::size_t n) {
  if (n == 0) throw std::invalid_argument("dft_matrix: N must be >= 1");
  const auto dim = static_cast<Eigen::Index>(n);
  NetworkMatrix f(dim, dim);
  const double norm = 1.0 / std::sqrt(static_cast<double>(n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      // Reduce the exponent mod n first so large r*k keeps full precision.
      const auto e = static_cast<double>((r * k) % n);
      const double angle = -2.0 * std::numbers::pi * e / static_cast<double>(n);
      f(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(k)) =
          std::polar(norm, angle);
    }
  }
  return f;
}

double unitarity_defect(const NetworkMatrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0)
    return std::numeric_limits<double>::infinity();
  const NetworkMatrix g = m.adjoint() * m - NetworkMatrix::Identity(m.rows(), m.cols());
  return g.cwiseAbs().maxCoeff();
}

bool is_unitary(const NetworkMatrix& m, double tol) {
  return unitarity_defect(m) <= tol;
}

namespace {

// Ryser/Gray on an n x n view given by an element accessor.
template <class At>
Complex ryser(std::size_t n, At&& at) {
  if (n == 0) return {1.0, 0.0};
  if (n == 1) return at(0, 0);
  if (n == 2) return at(0, 0) * at(1, 1) + at(0, 1) * at(1, 0);

  std::array<Complex, kPermanentCap> row_sums{};
  Complex total{0.0, 0.0};
  std::uint32_t gray = 0;
  const std::uint32_t subsets = 1u << n;
  for (std::uint32_t k = 1; k < subsets; ++k) {
    const auto col = static_cast<std::size_t>(std::countr_zero(k));
    const std::uint32_t bit = 1u << col;
    gray ^= bit;
    if (gray & bit) {
      for (std::size_t i = 0; i < n; ++i) row_sums[i] += at(i, col);
    } else {
      for (std::size_t i = 0; i < n; ++i) row_sums[i] -= at(i, col);
    }
    Complex prod = row_sums[0];
    for (std::size_t i = 1; i < n; ++i) prod *= row_sums[i];
    // (-1)^(n - |S|)
    const bool odd = ((n - static_cast<std::size_t>(std::popcount(gray))) & 1u) != 0;
    total += odd ? -prod : prod;
  }
  return total;
}

void check_cap(std::size_t n, std::size_t cap) {
  if (n > cap || n > kPermanentCap)
    throw ResourceLimitError("permanent: order " + std::to_string(n) +
                             " exceeds cap " + std::to_string(std::min(cap, kPermanentCap)));
}

}  // namespace

Complex permanent(const NetworkMatrix& m, std::size_t cap) {
  if (m.rows() != m.cols()) throw std::invalid_argument("permanent: matrix must be square");
  const auto n = static_cast<std::size_t>(m.rows());
  check_cap(n, cap);
  return ryser(n, [&](std::size_t i, std::size_t j) {
    return m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  });
}

Complex permanent_of_selection(const NetworkMatrix& u, std::span<const std::size_t> rows,
                               std::span<const std::size_t> cols, std::size_t cap) {
  if (rows.size() != cols.size())
    throw std::invalid_argument("permanent_of_selection: row/column count mismatch");
  check_cap(rows.size(), cap);
  return ryser(rows.size(), [&](std::size_t i, std::size_t j) {
    return u(static_cast<Eigen::Index>(rows[i]), static_cast<Eigen::Index>(cols[j]));
  });
}

NetworkMatrix direct_sum(std::span<const NetworkMatrix> blocks) {
  if (blocks.empty()) throw std::invalid_argument("direct_sum: empty block list");
  Eigen::Index dim = 0;
  for (const auto& b : blocks) {
    if (b.rows() != b.cols()) throw std::invalid_argument("direct_sum: blocks must be square");
    dim += b.rows();
  }
  NetworkMatrix out = NetworkMatrix::Zero(dim, dim);
  Eigen::Index offset = 0;
  for (const auto& b : blocks) {
    out.block(offset, offset, b.rows(), b.cols()) = b;
    offset += b.rows();
  }
  return out;
}

NetworkMatrix select(const NetworkMatrix& m, std::span<const std::size_t> rows,
                     std::span<const std::size_t> cols) {
  NetworkMatrix out(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          m(static_cast<Eigen::Index>(rows[i]), static_cast<Eigen::Index>(cols[j]));
  return out;
}

double max_abs_difference(const NetworkMatrix& a, const NetworkMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("max_abs_difference: shape mismatch");
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace erravg
