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

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace erravg {

using Complex = std::complex<double>;

/// Dense complex mode transformation. Row index is the output mode, column
/// index the input mode: a_out = U * a_in.
using NetworkMatrix = Eigen::MatrixXcd;

/// Tolerance used wherever a caller does not supply one.
inline constexpr double kDefaultTolerance = 1e-10;

/// Largest matrix the permanent evaluator accepts by default.
inline constexpr std::size_t kPermanentCap = 16;

/// Raised when a request exceeds a configured size cap (permanent order,
/// photon number).
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

NetworkMatrix identity(std::size_t dim);

/// Unitary DFT on n modes, entry (r, k) = w^{rk} / sqrt(n) with w = exp(-2 pi i / n).
NetworkMatrix dft_matrix(std::size_t n);

/// max |(U^dagger U - I)_{ij}|, or +inf for non-square input.
double unitarity_defect(const NetworkMatrix& m);

bool is_unitary(const NetworkMatrix& m, double tol = kDefaultTolerance);

/// Ryser's formula with Gray-code ordering of column subsets, O(2^n n).
Complex permanent(const NetworkMatrix& m, std::size_t cap = kPermanentCap);

/// Permanent of the n x n matrix A(i, j) = u(rows[i], cols[j]) without
/// materialising the submatrix. rows and cols may contain repeats.
Complex permanent_of_selection(const NetworkMatrix& u,
                               std::span<const std::size_t> rows,
                               std::span<const std::size_t> cols,
                               std::size_t cap = kPermanentCap);

/// Block-diagonal matrix diag(blocks[0], blocks[1], ...).
NetworkMatrix direct_sum(std::span<const NetworkMatrix> blocks);

/// Submatrix on the given rows and columns.
NetworkMatrix select(const NetworkMatrix& m, std::span<const std::size_t> rows,
                     std::span<const std::size_t> cols);

double max_abs_difference(const NetworkMatrix& a, const NetworkMatrix& b);

}  // namespace erravg
