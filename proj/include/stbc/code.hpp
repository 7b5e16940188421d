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

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "stbc/errors.hpp"
#include "stbc/exact_matrix.hpp"

namespace stbc {

/// Group sizes (n_1, ..., n_g) of a multi-group code.
struct GroupSignature {
  std::vector<int> sizes;

  int groups() const noexcept { return static_cast<int>(sizes.size()); }
  int total() const { return std::accumulate(sizes.begin(), sizes.end(), 0); }
  bool symmetric() const {
    return !sizes.empty() && std::all_of(sizes.begin(), sizes.end(), [&](int s) { return s == sizes.front(); });
  }
  /// Complex symbols per channel use for signalling period T.
  Rational rate(std::int64_t period) const { return Rational(total(), 2 * period); }

  void validate() const {
    if (sizes.size() < 2) throw DomainError("a signature needs at least two groups");
    for (int s : sizes)
      if (s < 1) throw DomainError("group sizes must be positive");
  }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < sizes.size(); ++i) s += (i ? "," : "") + std::to_string(sizes[i]);
    return s + ")";
  }

  friend bool operator==(const GroupSignature&, const GroupSignature&) = default;
};

/// The generating set a code was reconstructed from, kept as plain matrices.
struct GammaMatrices {
  ExactMatrix lambda_11;
  std::vector<ExactMatrix> lambda_k1;  ///< k = 2..n_1
  std::vector<ExactMatrix> lambda_1l;  ///< l = 2..(n_2 + ... + n_g), subgroup by subgroup
  std::vector<int> sub_sizes;          ///< n_2..n_g; the first subgroup holds lambda_11
};

struct Provenance {
  GammaMatrices gamma;
  ExactMatrix a1;
};

/// Weight matrices of a linear code X = sum_k A_k x_k split into groups.
struct StbcCode {
  int a = 0;
  std::size_t period = 0;       ///< T = 2^a rows
  std::size_t antennas = 0;     ///< columns; 2^a unless columns were removed
  std::vector<std::vector<ExactMatrix>> groups;
  std::optional<Provenance> provenance;

  GroupSignature signature() const {
    GroupSignature s;
    for (const auto& g : groups) s.sizes.push_back(static_cast<int>(g.size()));
    return s;
  }
  Rational rate() const { return signature().rate(static_cast<std::int64_t>(period)); }

  std::vector<ExactMatrix> all_weights() const {
    std::vector<ExactMatrix> out;
    for (const auto& g : groups) out.insert(out.end(), g.begin(), g.end());
    return out;
  }

  /// Builds a code from groups, inferring a, T and the antenna count.
  static StbcCode from_groups(std::vector<std::vector<ExactMatrix>> groups) {
    StbcCode c;
    if (groups.empty() || groups.front().empty()) throw ShapeError("a code needs at least one weight matrix");
    const auto& first = groups.front().front();
    c.period = first.rows();
    c.antennas = first.cols();
    for (const auto& g : groups) {
      if (g.empty()) throw ShapeError("empty group");
      for (const auto& m : g)
        if (m.rows() != c.period || m.cols() != c.antennas) throw ShapeError("weight matrices differ in shape");
    }
    int a = 0;
    while ((std::size_t{1} << a) < c.period) ++a;
    if ((std::size_t{1} << a) != c.period) throw ShapeError("signalling period must be a power of two");
    c.a = a;
    c.groups = std::move(groups);
    return c;
  }
};

}  // namespace stbc
