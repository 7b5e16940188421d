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
 * @file lambda.hpp
 * @brief Admissible Lambda matrices.
 *
 * A Lambda matrix is a real combination sum_k a_k alpha_k of basis
 * elements that is unitary, squares to -I, and is single-thread with
 * entries in {1, -1, j, -j}. Unitarity forces sum a_k^2 = 1 and the entry
 * constraint forces every a_k into {(n - 2 kappa) / n}, n = 2^a, so the
 * candidates can be enumerated exhaustively over a finite coefficient
 * domain.
 *
 * For a <= 2 the enumeration walks coefficient space and filters each
 * combination by its matrix. For a = 3 coefficient space is far too large
 * (16-term supports over 64 elements), so the opt-in path builds every
 * anti-hermitian single-thread unit matrix thread by thread and recovers
 * its coefficients with the trace formula a_k = tr(alpha_k^H L) / n.
 */
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "stbc/clifford.hpp"
#include "stbc/errors.hpp"
#include "stbc/exact_matrix.hpp"
#include "stbc/monomial.hpp"

namespace stbc {

/// Values (n - 2 kappa) / n in [-1, 1], largest first.
inline std::vector<Rational> coefficient_domain(int a) {
  detail::require_antenna_exponent(a);
  const std::int64_t n = std::int64_t{1} << a;
  std::vector<Rational> out;
  for (std::int64_t kappa = 0; kappa <= n; ++kappa) out.emplace_back(n - 2 * kappa, n);
  return out;
}

/// sum_k coeffs[k] alpha_k (coeffs indexed 0-based, i.e. coeffs[0] is alpha_1).
inline ExactMatrix combine_basis(const CliffordBasis& b, std::span<const Rational> coeffs) {
  if (coeffs.size() != b.size()) throw ShapeError("coefficient vector length must be 4^a");
  ExactMatrix out(b.dim(), b.dim());
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    if (!coeffs[k].is_zero()) out += b.elements()[k].matrix * GaussianRational(coeffs[k]);
  return out;
}

/// a_k = tr(alpha_k^H M) / n for every k; exact for any square M of size n.
inline std::vector<GaussianRational> recover_coefficients(const CliffordBasis& b, const ExactMatrix& m) {
  if (m.rows() != b.dim() || m.cols() != b.dim()) throw ShapeError("matrix size must be 2^a");
  std::vector<GaussianRational> out;
  out.reserve(b.size());
  const GaussianRational n(static_cast<std::int64_t>(b.dim()));
  for (const auto& e : b.elements()) {
    GaussianRational t;
    for (std::size_t r = 0; r < b.dim(); ++r) t += e.matrix(r, e.mono.col[r]).conj() * m(r, e.mono.col[r]);
    out.push_back(t / n);
  }
  return out;
}

/**
 * Tests the coefficient-level admissibility conditions: sum a_k^2 = 1 and
 * the products of commuting pairs, sum_{k<l commuting} a_k a_l alpha_k alpha_l,
 * cancel to the zero matrix. Products are resolved through the basis
 * product table, so the sum is accumulated in coefficient space.
 */
inline bool check_prop5(const CliffordBasis& b, std::span<const Rational> coeffs) {
  if (coeffs.size() != b.size()) throw ShapeError("check_prop5: coefficient vector length must be 4^a");
  Rational norm;
  std::vector<int> support;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    norm += coeffs[k] * coeffs[k];
    support.push_back(static_cast<int>(k) + 1);
  }
  if (norm != 1) return false;
  std::vector<GaussianRational> acc(b.size());
  for (std::size_t x = 0; x < support.size(); ++x) {
    for (std::size_t y = x + 1; y < support.size(); ++y) {
      int k = support[x], l = support[y];
      if (!commutes(b, k, l)) continue;
      auto [lambda, m] = basis_product(b, k, l);
      acc[static_cast<std::size_t>(m - 1)] += lambda * GaussianRational(coeffs[static_cast<std::size_t>(k - 1)] *
                                                                        coeffs[static_cast<std::size_t>(l - 1)]);
    }
  }
  return std::all_of(acc.begin(), acc.end(), [](const GaussianRational& z) { return z.is_zero(); });
}

/// Support of a single-thread unit-entry matrix in terms of thread permutations.
struct SingleThreadInfo {
  std::vector<int> threads;  ///< sorted 1-based indices of the T_i touched
  MonomialMatrix mono;
};

/**
 * Present iff m has exactly one nonzero per row and per column and every
 * nonzero is one of 1, -1, j, -j. The threads touched by the support are
 * reported; a basis element touches one, a half-coefficient combination
 * may touch two.
 */
inline std::optional<SingleThreadInfo> is_single_thread_unit(const ExactMatrix& m,
                                                             std::span<const ExactMatrix> threads) {
  auto mono = MonomialMatrix::from_exact(m);
  if (!mono) return std::nullopt;
  SingleThreadInfo info;
  info.mono = *mono;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    int found = 0;
    for (std::size_t t = 0; t < threads.size(); ++t) {
      if (threads[t].rows() != m.rows()) throw ShapeError("thread size mismatch");
      if (!threads[t](r, mono->col[r]).is_zero()) {
        found = static_cast<int>(t) + 1;
        break;
      }
    }
    if (found == 0) return std::nullopt;
    if (std::find(info.threads.begin(), info.threads.end(), found) == info.threads.end()) info.threads.push_back(found);
  }
  std::sort(info.threads.begin(), info.threads.end());
  return info;
}

class LambdaCandidate {
 public:
  LambdaCandidate(std::vector<int> support, std::vector<Rational> values, MonomialMatrix mono, std::vector<int> threads)
      : support_(std::move(support)), values_(std::move(values)), mono_(mono), threads_(std::move(threads)) {}

  /// 1-based basis indices with nonzero coefficient, ascending.
  const std::vector<int>& support() const noexcept { return support_; }
  /// Coefficients on support(), same order.
  const std::vector<Rational>& values() const noexcept { return values_; }
  const MonomialMatrix& mono() const noexcept { return mono_; }
  const std::vector<int>& threads() const noexcept { return threads_; }

  std::vector<Rational> coeffs(std::size_t basis_size) const {
    std::vector<Rational> c(basis_size);
    for (std::size_t i = 0; i < support_.size(); ++i) c[static_cast<std::size_t>(support_[i] - 1)] = values_[i];
    return c;
  }
  ExactMatrix matrix() const { return mono_.to_exact(); }

  /// Canonical order: support size, then support, then coefficients with
  /// larger values first (so +1/2 precedes -1/2).
  friend bool operator<(const LambdaCandidate& x, const LambdaCandidate& y) {
    if (x.support_.size() != y.support_.size()) return x.support_.size() < y.support_.size();
    if (x.support_ != y.support_) return x.support_ < y.support_;
    for (std::size_t i = 0; i < x.values_.size(); ++i)
      if (x.values_[i] != y.values_[i]) return x.values_[i] > y.values_[i];
    return false;
  }

 private:
  std::vector<int> support_;
  std::vector<Rational> values_;
  MonomialMatrix mono_;
  std::vector<int> threads_;
};

/// Canonically ordered admissible Lambda matrices for one antenna exponent.
struct LambdaTable {
  int a = 0;
  std::shared_ptr<const CliffordBasis> basis;
  std::vector<LambdaCandidate> items;
  std::vector<std::uint32_t> negation;  ///< negation[i] = index of -items[i]

  std::size_t size() const noexcept { return items.size(); }
  /// Sign-class representative: the first coefficient is positive.
  bool is_representative(std::size_t i) const { return items[i].values().front().sign() > 0; }
};

struct EnumerateOptions {
  /// a = 3 produces ~2e5 candidates and is only run when requested.
  bool allow_large = false;
};

namespace detail {

// Builds sum a_k alpha_k with every coefficient scaled by n so the entries are
// Gaussian integers, and converts it when it is single-thread with unit entries.
inline std::optional<MonomialMatrix> scaled_combination(const CliffordBasis& b, std::span<const int> support,
                                                        std::span<const Rational> values) {
  const std::size_t n = b.dim();
  std::array<std::int64_t, 64> re{}, im{};
  for (std::size_t i = 0; i < support.size(); ++i) {
    const auto& e = b[support[i]].mono;
    const std::int64_t v = (values[i] * static_cast<std::int64_t>(n)).num();
    for (std::size_t r = 0; r < n; ++r) {
      std::size_t idx = r * n + e.col[r];
      switch (e.phase[r]) {
        case 0: re[idx] += v; break;
        case 1: im[idx] += v; break;
        case 2: re[idx] -= v; break;
        default: im[idx] -= v; break;
      }
    }
  }
  const auto sn = static_cast<std::int64_t>(n);
  MonomialMatrix m;
  m.n = static_cast<std::uint8_t>(n);
  std::uint32_t used = 0;
  for (std::size_t r = 0; r < n; ++r) {
    int found = -1;
    for (std::size_t c = 0; c < n; ++c) {
      std::int64_t x = re[r * n + c], y = im[r * n + c];
      if (x == 0 && y == 0) continue;
      if (found >= 0) return std::nullopt;
      if (y == 0 && (x == sn || x == -sn)) m.phase[r] = x > 0 ? 0 : 2;
      else if (x == 0 && (y == sn || y == -sn)) m.phase[r] = y > 0 ? 1 : 3;
      else return std::nullopt;
      found = static_cast<int>(c);
    }
    if (found < 0 || (used >> found) & 1u) return std::nullopt;
    used |= 1u << found;
    m.col[r] = static_cast<std::uint8_t>(found);
  }
  return m;
}

inline bool is_admissible_mono(const MonomialMatrix& m) {
  // Unit entries on a permutation are unitary; anti-hermitian then gives L^2 = -I.
  return m == -m.conj_transpose() && m.squares_to_neg_identity();
}

inline std::vector<int> threads_of(const CliffordBasis& b, const MonomialMatrix& m) {
  std::vector<int> out;
  for (std::size_t r = 0; r < m.n; ++r) {
    int t = 0;
    for (std::size_t i = 0; i < b.threads().size(); ++i)
      if (!b.threads()[i](r, m.col[r]).is_zero()) t = static_cast<int>(i) + 1;
    if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline void enumerate_coefficient_space(const CliffordBasis& b, std::vector<LambdaCandidate>& out) {
  std::vector<Rational> domain = coefficient_domain(b.a());
  std::vector<Rational> nonzero;
  for (const auto& v : domain)
    if (!v.is_zero()) nonzero.push_back(v);

  std::vector<int> support;
  std::vector<Rational> values;
  const int count = static_cast<int>(b.size());
  std::function<void(int, Rational)> walk = [&](int next, Rational remaining) {
    if (remaining.is_zero()) {
      if (auto m = scaled_combination(b, support, values); m && is_admissible_mono(*m))
        out.emplace_back(support, values, *m, threads_of(b, *m));
      return;
    }
    for (int k = next; k <= count; ++k) {
      for (const auto& v : nonzero) {
        Rational sq = v * v;
        if (sq > remaining) continue;
        support.push_back(k);
        values.push_back(v);
        walk(k + 1, remaining - sq);
        support.pop_back();
        values.pop_back();
      }
    }
  };
  walk(1, Rational(1));
}

inline void enumerate_structure_space(const CliffordBasis& b, std::vector<LambdaCandidate>& out) {
  const std::size_t n = b.dim();
  const auto& threads = b.threads();
  std::vector<MonomialMatrix> thread_mono;
  for (const auto& t : threads) thread_mono.push_back(*MonomialMatrix::from_exact(t));

  MonomialMatrix cur;
  cur.n = static_cast<std::uint8_t>(n);
  std::vector<bool> assigned(n, false);

  auto emit = [&]() {
    std::vector<int> support;
    std::vector<Rational> values;
    for (const auto& e : b.elements()) {
      // tr(alpha^H L) over the positions where both are nonzero.
      std::int64_t re = 0, im = 0;
      for (std::size_t r = 0; r < n; ++r) {
        if (e.mono.col[r] != cur.col[r]) continue;
        switch ((cur.phase[r] - e.mono.phase[r]) & 3) {
          case 0: ++re; break;
          case 1: ++im; break;
          case 2: --re; break;
          default: --im; break;
        }
      }
      if (im != 0) throw VerificationError("coefficient recovery", "non-real coefficient for an anti-hermitian matrix");
      if (re != 0) {
        support.push_back(e.index);
        values.emplace_back(re, static_cast<std::int64_t>(n));
      }
    }
    out.emplace_back(std::move(support), std::move(values), cur, threads_of(b, cur));
  };

  std::function<void()> place = [&]() {
    std::size_t r = 0;
    while (r < n && assigned[r]) ++r;
    if (r == n) {
      emit();
      return;
    }
    for (const auto& t : thread_mono) {
      std::size_t c = t.col[r];
      if (assigned[c]) continue;
      assigned[r] = assigned[c] = true;
      cur.col[r] = static_cast<std::uint8_t>(c);
      cur.col[c] = static_cast<std::uint8_t>(r);
      if (c == r) {
        for (std::uint8_t p : {1, 3}) {
          cur.phase[r] = p;
          place();
        }
      } else {
        for (std::uint8_t p = 0; p < 4; ++p) {
          // L(c, r) = -conj(L(r, c)): j^q with q = 2 - p
          cur.phase[r] = p;
          cur.phase[c] = static_cast<std::uint8_t>((6 - p) & 3);
          place();
        }
      }
      assigned[r] = assigned[c] = false;
    }
  };
  place();
}

}  // namespace detail

/// Every admissible Lambda for the antenna exponent, canonically ordered.
inline LambdaTable enumerate_lambdas(int a, const EnumerateOptions& opts = {}) {
  if (a < 1 || a > 3) throw DomainError("enumerate_lambdas: a must be 1, 2 or 3");
  if (a == 3 && !opts.allow_large) throw DomainError("enumerate_lambdas: a = 3 requires the explicit opt-in");
  LambdaTable table;
  table.a = a;
  table.basis = shared_basis(a);
  if (a <= 2) detail::enumerate_coefficient_space(*table.basis, table.items);
  else detail::enumerate_structure_space(*table.basis, table.items);
  std::sort(table.items.begin(), table.items.end());

  for (std::size_t i = 1; i < table.items.size(); ++i) {
    if (table.items[i - 1].mono() == table.items[i].mono())
      throw VerificationError("lambda enumeration", "duplicate matrix in candidate list");
  }

  // -L has the same support with every coefficient negated.
  table.negation.resize(table.items.size());
  for (std::size_t i = 0; i < table.items.size(); ++i) {
    const auto& c = table.items[i];
    std::vector<Rational> neg;
    for (const auto& v : c.values()) neg.push_back(-v);
    LambdaCandidate probe(c.support(), neg, -c.mono(), c.threads());
    auto it = std::lower_bound(table.items.begin(), table.items.end(), probe);
    if (it == table.items.end() || !(it->mono() == probe.mono()))
      throw VerificationError("lambda enumeration", "candidate list is not closed under negation");
    table.negation[i] = static_cast<std::uint32_t>(it - table.items.begin());
  }
  return table;
}

}  // namespace stbc
