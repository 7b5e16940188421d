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

/**
 * @file clifford.hpp
 * @brief Clifford generator representations and the anti-hermitian basis.
 *
 * For N = 2^a the 2a+1 generators R_1..R_{2a+1} are Kronecker products of
 * the 2x2 matrices
 *
 *     s1 = [0 1; -1 0],  s2 = [0 j; j 0],  s3 = [1 0; 0 -1]
 *
 * and pairwise anticommute while squaring to -I. The basis of the N x N
 * complex matrices is jI followed by the products j^d(m) R_k1...R_km over
 * subsets of {1..2a} (R_{2a+1} is not used), ordered by subset size and
 * then lexicographically. Every basis element is anti-hermitian, unitary
 * and single-thread, and occupies exactly one of the N thread
 * permutations T_1..T_N.
 *
 * Basis indices in this API are 1-based so they read like alpha_1..alpha_N^2.
 */
#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "stbc/errors.hpp"
#include "stbc/exact_matrix.hpp"
#include "stbc/monomial.hpp"

namespace stbc {

inline const ExactMatrix& sigma1() {
  static const ExactMatrix m = ExactMatrix::from_rows({{0, 1}, {-1, 0}});
  return m;
}
inline const ExactMatrix& sigma2() {
  static const ExactMatrix m = ExactMatrix::from_rows({{0, GaussianRational::i()}, {GaussianRational::i(), 0}});
  return m;
}
inline const ExactMatrix& sigma3() {
  static const ExactMatrix m = ExactMatrix::from_rows({{1, 0}, {0, -1}});
  return m;
}

struct GeneratorFamily {
  int a = 0;
  int sign_gamma1 = 1;
  std::vector<ExactMatrix> gens;  ///< R_1 .. R_{2a+1}, stored at [0 .. 2a]
};

namespace detail {
inline void require_antenna_exponent(int a, int max_a = 3) {
  if (a < 1 || a > max_a) throw DomainError("antenna exponent a must be in [1, " + std::to_string(max_a) + "]");
}

inline ExactMatrix kron_power(const ExactMatrix& m, int times) {
  ExactMatrix out = ExactMatrix::identity(1);
  for (int i = 0; i < times; ++i) out = kron(out, m);
  return out;
}
}  // namespace detail

inline GeneratorFamily generators(int a, int sign_gamma1 = 1) {
  detail::require_antenna_exponent(a);
  if (sign_gamma1 != 1 && sign_gamma1 != -1) throw DomainError("sign_gamma1 must be +1 or -1");
  GeneratorFamily fam;
  fam.a = a;
  fam.sign_gamma1 = sign_gamma1;
  fam.gens.push_back(GaussianRational(0, sign_gamma1) * detail::kron_power(sigma3(), a));
  for (int k = 1; k <= a; ++k) {
    ExactMatrix left = ExactMatrix::identity(std::size_t{1} << (a - k));
    ExactMatrix tail = detail::kron_power(sigma3(), k - 1);
    fam.gens.push_back(kron(kron(left, sigma1()), tail));
    fam.gens.push_back(kron(kron(left, sigma2()), tail));
  }
  return fam;
}

/// Phase exponent for an m-fold product: ((m mod 4) - 1)((m mod 4) - 2) / 2.
/// The modulo is applied before the arithmetic.
inline int delta(int m) {
  if (m < 1) throw DomainError("delta: m must be >= 1");
  int r = m % 4;
  return (r - 1) * (r - 2) / 2;
}

struct BasisElement {
  int index = 0;                 ///< 1-based position
  ExactMatrix matrix;
  std::vector<int> gen_subset;   ///< sorted generator indices from {1..2a}; empty for jI
  int phase_power = 0;           ///< power of j applied to the product
  MonomialMatrix mono;
};

struct ThreadDecomposition {
  int thread_index = 0;  ///< 1-based index of T_i
  ExactMatrix diagonal;
};

class CliffordBasis;
inline CliffordBasis basis(int a, int sign_gamma1 = 1);

class CliffordBasis {
 public:
  int a() const noexcept { return a_; }
  std::size_t dim() const noexcept { return std::size_t{1} << a_; }
  std::size_t size() const noexcept { return elements_.size(); }

  const std::vector<BasisElement>& elements() const noexcept { return elements_; }
  /// 1-based access.
  const BasisElement& operator[](int k) const { return elements_.at(static_cast<std::size_t>(k - 1)); }

  /// T_1..T_N as stored at [0..N-1]; T_1 = I.
  const std::vector<ExactMatrix>& threads() const noexcept { return threads_; }

  /// 1-based thread occupied by basis element k.
  int thread_of(int k) const { return thread_of_.at(static_cast<std::size_t>(k - 1)); }

  /// alpha_k * alpha_l = lambda * alpha_m for k != l; lambda is j^power.
  struct Product {
    int lambda_power = 0;
    int m = 0;
  };
  const Product& product(int k, int l) const {
    return products_.at(static_cast<std::size_t>(k - 1) * size() + static_cast<std::size_t>(l - 1));
  }

  /// Index of the element built on the given generator bitmask (bit i = R_{i+1}).
  int index_of_mask(std::uint32_t mask) const { return mask_to_index_.at(mask); }
  std::uint32_t mask_of(int k) const { return masks_.at(static_cast<std::size_t>(k - 1)); }

  friend CliffordBasis basis(int a, int sign_gamma1);

 private:
  int a_ = 0;
  std::vector<BasisElement> elements_;
  std::vector<std::uint32_t> masks_;
  std::map<std::uint32_t, int> mask_to_index_;
  std::vector<ExactMatrix> threads_;
  std::vector<int> thread_of_;
  std::vector<Product> products_;
};

/// The 2^{2a} anti-hermitian basis elements in their fixed order.
inline CliffordBasis basis(int a, int sign_gamma1) {
  GeneratorFamily fam = generators(a, sign_gamma1);
  const int ngen = 2 * a;
  const std::size_t n = std::size_t{1} << a;

  // subsets ordered by size, then lexicographically on the sorted index list
  std::vector<std::vector<int>> subsets{{}};
  for (int m = 1; m <= ngen; ++m) {
    std::vector<int> cur(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) cur[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
      subsets.push_back(cur);
      int i = m - 1;
      while (i >= 0 && cur[static_cast<std::size_t>(i)] == ngen - m + i + 1) --i;
      if (i < 0) break;
      ++cur[static_cast<std::size_t>(i)];
      for (int t = i + 1; t < m; ++t) cur[static_cast<std::size_t>(t)] = cur[static_cast<std::size_t>(t - 1)] + 1;
    }
  }

  CliffordBasis b;
  b.a_ = a;
  for (const auto& s : subsets) {
    BasisElement e;
    e.index = static_cast<int>(b.elements_.size()) + 1;
    e.gen_subset = s;
    std::uint32_t mask = 0;
    if (s.empty()) {
      e.phase_power = 1;
      e.matrix = GaussianRational::i() * ExactMatrix::identity(n);
    } else {
      e.phase_power = delta(static_cast<int>(s.size()));
      ExactMatrix prod = ExactMatrix::identity(n);
      for (int g : s) {
        prod = prod * fam.gens[static_cast<std::size_t>(g - 1)];
        mask |= 1u << (g - 1);
      }
      e.matrix = GaussianRational::i_pow(e.phase_power) * prod;
    }
    e.mono = *MonomialMatrix::from_exact(e.matrix);
    b.mask_to_index_[mask] = e.index;
    b.masks_.push_back(mask);
    b.elements_.push_back(std::move(e));
  }

  // Threads are the distinct supports, ordered by the column occupied in row 0.
  std::vector<int> thread_by_first_col(n, 0);
  std::vector<ExactMatrix> support(n);
  for (const auto& e : b.elements_) {
    std::size_t c0 = e.mono.col[0];
    if (thread_by_first_col[c0] == 0) {
      ExactMatrix t(n, n);
      for (std::size_t r = 0; r < n; ++r) t(r, e.mono.col[r]) = 1;
      support[c0] = std::move(t);
      thread_by_first_col[c0] = 1;
    }
  }
  b.threads_ = std::move(support);
  for (const auto& e : b.elements_) b.thread_of_.push_back(static_cast<int>(e.mono.col[0]) + 1);

  // Product table from the monomial form: alpha_k alpha_l lands on the
  // element whose generator set is the symmetric difference.
  const std::size_t count = b.elements_.size();
  b.products_.resize(count * count);
  for (std::size_t k = 0; k < count; ++k) {
    for (std::size_t l = 0; l < count; ++l) {
      if (k == l) continue;
      MonomialMatrix p = b.elements_[k].mono * b.elements_[l].mono;
      int m = b.mask_to_index_.at(b.masks_[k] ^ b.masks_[l]);
      const MonomialMatrix& target = b.elements_[static_cast<std::size_t>(m - 1)].mono;
      int power = (p.phase[0] - target.phase[0]) & 3;
      if (!(target.scaled(power) == p)) throw VerificationError("basis product", "product is not a basis multiple");
      b.products_[k * count + l] = {power, m};
    }
  }
  return b;
}

/// Shared, lazily built basis for the default generator sign.
inline std::shared_ptr<const CliffordBasis> shared_basis(int a) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const CliffordBasis>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[a];
  if (!slot) slot = std::make_shared<const CliffordBasis>(basis(a));
  return slot;
}

/// (lambda, m) with alpha_k alpha_l = lambda alpha_m; 1-based indices.
inline std::pair<GaussianRational, int> basis_product(const CliffordBasis& b, int k, int l) {
  if (k == l) throw DomainError("basis_product: k == l gives -I, not a basis multiple");
  if (k < 1 || l < 1 || static_cast<std::size_t>(k) > b.size() || static_cast<std::size_t>(l) > b.size())
    throw DomainError("basis_product: index out of range");
  const auto& p = b.product(k, l);
  return {GaussianRational::i_pow(p.lambda_power), p.m};
}

/// True iff alpha_k and alpha_l commute. Decided from the generator sets:
/// reordering P_S P_T into P_T P_S costs (-1)^(|S||T| - |S n T|).
inline bool commutes(const CliffordBasis& b, int k, int l) {
  std::uint32_t s = b.mask_of(k), t = b.mask_of(l);
  int swaps = std::popcount(s) * std::popcount(t) - std::popcount(s & t);
  return swaps % 2 == 0;
}

/// T_1..T_N for the given antenna exponent.
inline std::vector<ExactMatrix> thread_permutations(int a) { return shared_basis(a)->threads(); }

/// alpha_k = T_i * D with D diagonal.
inline ThreadDecomposition thread_decompose(const CliffordBasis& b, int k) {
  const BasisElement& e = b[k];
  ThreadDecomposition d;
  d.thread_index = b.thread_of(k);
  d.diagonal = ExactMatrix(b.dim(), b.dim());
  // (T D)(r, c) = T(r, c) D(c, c), so D(c, c) is the entry in row r with col[r] = c.
  for (std::size_t r = 0; r < b.dim(); ++r) d.diagonal(e.mono.col[r], e.mono.col[r]) = e.matrix(r, e.mono.col[r]);
  return d;
}

}  // namespace stbc
