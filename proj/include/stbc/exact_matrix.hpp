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
 * @file exact_matrix.hpp
 * @brief Dense matrices over the Gaussian rationals.
 *
 * Every algebraic predicate in the library (unitarity, anti-hermiticity,
 * squaring to -I, real-linear independence) is decided here with exact
 * arithmetic. Matrices are small (at most 16x16) so the storage is a plain
 * row-major vector.
 *
 * @code{.cpp}
 * auto s1 = ExactMatrix::from_rows({{0, 1}, {-1, 0}});
 * bool ok = is_unitary(s1) && squares_to_neg_identity(s1);
 * auto big = kron(ExactMatrix::identity(2), s1);
 * @endcode
 */
#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "stbc/errors.hpp"
#include "stbc/rational.hpp"

namespace stbc {

class ExactMatrix {
 public:
  using value_type = GaussianRational;

  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  ExactMatrix(std::size_t rows, std::size_t cols, std::vector<GaussianRational> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) throw ShapeError("entry count does not match rows*cols");
  }

  static ExactMatrix from_rows(std::initializer_list<std::initializer_list<GaussianRational>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows.begin()->size();
    std::vector<GaussianRational> data;
    data.reserve(r * c);
    for (const auto& row : rows) {
      if (row.size() != c) throw ShapeError("ragged row list");
      data.insert(data.end(), row.begin(), row.end());
    }
    return {r, c, std::move(data)};
  }

  static ExactMatrix identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static ExactMatrix diagonal(std::span<const GaussianRational> d) {
    ExactMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  const std::vector<GaussianRational>& entries() const noexcept { return data_; }

  GaussianRational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const GaussianRational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const GaussianRational& z) { return z.is_zero(); });
  }

  ExactMatrix operator-() const {
    ExactMatrix m(*this);
    for (auto& z : m.data_) z = -z;
    return m;
  }

  ExactMatrix& operator+=(const ExactMatrix& o) {
    require_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  ExactMatrix& operator-=(const ExactMatrix& o) {
    require_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  ExactMatrix& operator*=(const GaussianRational& s) {
    for (auto& z : data_) z *= s;
    return *this;
  }

  friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
  friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
  friend ExactMatrix operator*(ExactMatrix a, const GaussianRational& s) { return a *= s; }
  friend ExactMatrix operator*(const GaussianRational& s, ExactMatrix a) { return a *= s; }

  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

 private:
  void require_same_shape(const ExactMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix shapes differ");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GaussianRational> data_;
};

inline ExactMatrix mat_mul(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols() != b.rows()) throw ShapeError("mat_mul: inner dimensions differ");
  ExactMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const GaussianRational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

inline ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) { return mat_mul(a, b); }

inline ExactMatrix conj_transpose(const ExactMatrix& a) {
  ExactMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j).conj();
  return out;
}

inline ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b) {
  ExactMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

/// Restriction to the listed columns, in the listed order.
inline ExactMatrix select_columns(const ExactMatrix& a, std::span<const std::size_t> keep) {
  ExactMatrix out(a.rows(), keep.size());
  for (std::size_t c = 0; c < keep.size(); ++c) {
    if (keep[c] >= a.cols()) throw ShapeError("column index out of range");
    for (std::size_t r = 0; r < a.rows(); ++r) out(r, c) = a(r, keep[c]);
  }
  return out;
}

namespace detail {
inline void require_square(const ExactMatrix& a, const char* what) {
  if (!a.is_square()) throw ShapeError(std::string(what) + ": matrix is not square");
}
}  // namespace detail

inline bool is_identity(const ExactMatrix& a, const GaussianRational& scale = 1) {
  if (!a.is_square()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != (i == j ? scale : GaussianRational{})) return false;
  return true;
}

inline bool is_unitary(const ExactMatrix& a) {
  detail::require_square(a, "is_unitary");
  return is_identity(conj_transpose(a) * a);
}

inline bool is_anti_hermitian(const ExactMatrix& a) {
  detail::require_square(a, "is_anti_hermitian");
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i; j < a.cols(); ++j)
      if (a(i, j) != -a(j, i).conj()) return false;
  return true;
}

inline bool squares_to_neg_identity(const ExactMatrix& a) {
  detail::require_square(a, "squares_to_neg_identity");
  return is_identity(a * a, -1);
}

inline GaussianRational trace(const ExactMatrix& a) {
  detail::require_square(a, "trace");
  GaussianRational t;
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

/// Determinant by exact Gaussian elimination.
inline GaussianRational determinant(ExactMatrix a) {
  detail::require_square(a, "determinant");
  const std::size_t n = a.rows();
  GaussianRational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) return GaussianRational{};
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    const GaussianRational pivot = a(c, c);
    det *= pivot;
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a(r, c).is_zero()) continue;
      GaussianRational f = a(r, c) / pivot;
      for (std::size_t j = c; j < n; ++j) a(r, j) -= f * a(c, j);
    }
  }
  return det;
}

/**
 * Incremental rank over the rationals of integer vectors.
 *
 * Rows are kept in echelon form; push() reduces a candidate against the
 * stored rows with fraction-free updates (row <- p*row - v*pivot_row,
 * then divide by the gcd) and appends it if anything is left. pop()
 * removes the most recently appended row, which lets a depth-first search
 * backtrack without copying.
 */
class IntRankAccumulator {
 public:
  explicit IntRankAccumulator(std::size_t dim = 0) : dim_(dim) {}

  std::size_t dim() const noexcept { return dim_; }
  std::size_t rank() const noexcept { return pivots_.size(); }

  /// Returns true (and keeps the vector) iff v is independent of the rows.
  bool push(std::span<const std::int64_t> v) {
    if (v.size() != dim_) throw ShapeError("rank accumulator: vector length mismatch");
    scratch_.assign(v.begin(), v.end());
    for (std::size_t r = 0; r < pivots_.size(); ++r) {
      std::size_t pc = pivots_[r];
      std::int64_t x = scratch_[pc];
      if (x == 0) continue;
      const std::int64_t* row = &rows_[r * dim_];
      std::int64_t p = row[pc];
      std::int64_t g = std::gcd(p, x);
      std::int64_t mp = p / g, mx = x / g;
      for (std::size_t j = 0; j < dim_; ++j) scratch_[j] = checked_sub(checked_mul(scratch_[j], mp), checked_mul(row[j], mx));
      normalize(scratch_);
    }
    auto it = std::find_if(scratch_.begin(), scratch_.end(), [](std::int64_t e) { return e != 0; });
    if (it == scratch_.end()) return false;
    pivots_.push_back(static_cast<std::size_t>(it - scratch_.begin()));
    rows_.insert(rows_.end(), scratch_.begin(), scratch_.end());
    return true;
  }

  void pop() {
    if (pivots_.empty()) return;
    pivots_.pop_back();
    rows_.resize(pivots_.size() * dim_);
  }

  void clear() {
    pivots_.clear();
    rows_.clear();
  }

 private:
  static std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("rank elimination overflow");
    return r;
  }
  static std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("rank elimination overflow");
    return r;
  }
  static void normalize(std::vector<std::int64_t>& v) {
    std::int64_t g = 0;
    for (std::int64_t e : v) g = std::gcd(g, e);
    if (g > 1)
      for (auto& e : v) e /= g;
  }

  std::size_t dim_;
  std::vector<std::size_t> pivots_;
  std::vector<std::int64_t> rows_;
  std::vector<std::int64_t> scratch_;
};

/// Real flattening used for independence over R: row-major real parts
/// followed by row-major imaginary parts, scaled by the lcm of all
/// denominators so the vector is integral (scaling does not change rank).
inline std::vector<std::int64_t> flatten_real_integral(const ExactMatrix& m) {
  const auto& e = m.entries();
  std::int64_t l = 1;
  for (const auto& z : e) {
    l = std::lcm(l, z.re().den());
    l = std::lcm(l, z.im().den());
  }
  std::vector<std::int64_t> out(2 * e.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    out[i] = (e[i].re() * l).num();
    out[e.size() + i] = (e[i].im() * l).num();
  }
  return out;
}

/// Dimension of the real span of the matrices.
inline std::size_t rank_over_reals(std::span<const ExactMatrix> ms) {
  if (ms.empty()) return 0;
  const std::size_t r = ms.front().rows(), c = ms.front().cols();
  IntRankAccumulator acc(2 * r * c);
  for (const auto& m : ms) {
    if (m.rows() != r || m.cols() != c) throw ShapeError("rank_over_reals: mixed shapes");
    acc.push(flatten_real_integral(m));
  }
  return acc.rank();
}

inline std::string to_string(const ExactMatrix& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    s += i ? ", [" : "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) s += ", ";
      s += to_string(m(i, j));
    }
    s += "]";
  }
  return s + "]";
}

}  // namespace stbc
