// Copyright 2026 The uwstbc Authors
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

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "stbc/exact_matrix.hpp"

namespace stbc {

/**
 * Single-thread matrix with entries in {1, j, -1, -j}: row r holds
 * j^phase[r] in column col[r]. The product of two such matrices is again
 * one, so the search runs on this representation and only converts to
 * ExactMatrix for re-validation and output.
 */
struct MonomialMatrix {
  static constexpr std::size_t kMaxDim = 8;

  std::uint8_t n = 0;
  std::array<std::uint8_t, kMaxDim> col{};
  std::array<std::uint8_t, kMaxDim> phase{};

  static MonomialMatrix identity(std::size_t dim) {
    MonomialMatrix m;
    m.n = static_cast<std::uint8_t>(dim);
    for (std::size_t r = 0; r < dim; ++r) m.col[r] = static_cast<std::uint8_t>(r);
    return m;
  }

  /// Converts when m is single-thread with unit entries.
  static std::optional<MonomialMatrix> from_exact(const ExactMatrix& m) {
    if (!m.is_square() || m.rows() > kMaxDim) return std::nullopt;
    MonomialMatrix out;
    out.n = static_cast<std::uint8_t>(m.rows());
    std::uint32_t used = 0;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      int found = -1;
      for (std::size_t c = 0; c < m.cols(); ++c) {
        const auto& z = m(r, c);
        if (z.is_zero()) continue;
        if (found >= 0 || !z.is_unit_phase()) return std::nullopt;
        found = static_cast<int>(c);
        out.phase[r] = z.re() == 1 ? 0 : z.im() == 1 ? 1 : z.re() == -1 ? 2 : 3;
      }
      if (found < 0 || (used >> found) & 1u) return std::nullopt;
      used |= 1u << found;
      out.col[r] = static_cast<std::uint8_t>(found);
    }
    return out;
  }

  ExactMatrix to_exact() const {
    ExactMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) m(r, col[r]) = GaussianRational::i_pow(phase[r]);
    return m;
  }

  MonomialMatrix operator*(const MonomialMatrix& b) const {
    MonomialMatrix out;
    out.n = n;
    for (std::size_t r = 0; r < n; ++r) {
      out.col[r] = b.col[col[r]];
      out.phase[r] = static_cast<std::uint8_t>((phase[r] + b.phase[col[r]]) & 3u);
    }
    return out;
  }

  MonomialMatrix operator-() const { return scaled(2); }

  /// Multiplies every entry by j^power.
  MonomialMatrix scaled(int power) const {
    MonomialMatrix out = *this;
    for (std::size_t r = 0; r < n; ++r) out.phase[r] = static_cast<std::uint8_t>((phase[r] + power) & 3);
    return out;
  }

  MonomialMatrix conj_transpose() const {
    MonomialMatrix out;
    out.n = n;
    for (std::size_t r = 0; r < n; ++r) {
      out.col[col[r]] = static_cast<std::uint8_t>(r);
      out.phase[col[r]] = static_cast<std::uint8_t>((4 - phase[r]) & 3);
    }
    return out;
  }

  /// True iff this equals j^power * I.
  bool is_scaled_identity(int power) const {
    const auto p = static_cast<std::uint8_t>(power & 3);
    for (std::size_t r = 0; r < n; ++r)
      if (col[r] != r || phase[r] != p) return false;
    return true;
  }

  bool squares_to_neg_identity() const {
    for (std::size_t r = 0; r < n; ++r) {
      std::size_t c = col[r];
      if (col[c] != r || ((phase[r] + phase[c]) & 3) != 2) return false;
    }
    return true;
  }

  bool anticommutes_with(const MonomialMatrix& b) const { return (*this * b) == -(b * *this); }

  /// Integral real flattening (real parts then imaginary parts, row-major).
  void flatten_real(std::vector<std::int64_t>& out) const {
    const std::size_t nn = static_cast<std::size_t>(n) * n;
    out.assign(2 * nn, 0);
    for (std::size_t r = 0; r < n; ++r) {
      std::size_t idx = r * n + col[r];
      switch (phase[r]) {
        case 0: out[idx] = 1; break;
        case 1: out[nn + idx] = 1; break;
        case 2: out[idx] = -1; break;
        default: out[nn + idx] = -1; break;
      }
    }
  }

  friend bool operator==(const MonomialMatrix& a, const MonomialMatrix& b) {
    if (a.n != b.n) return false;
    const std::size_t n = std::min<std::size_t>(a.n, kMaxDim);
    for (std::size_t r = 0; r < n; ++r)
      if (a.col[r] != b.col[r] || a.phase[r] != b.phase[r]) return false;
    return true;
  }
};

}  // namespace stbc
