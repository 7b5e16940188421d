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
 * @file rational.hpp
 * @brief Exact rational and Gaussian-rational scalars.
 *
 * Rational keeps a 64-bit numerator and a positive 64-bit denominator in
 * lowest terms, so two values are equal iff their fields are equal.
 * Intermediate products are formed in 128 bits and reduced before being
 * narrowed; a result that still does not fit raises std::overflow_error
 * rather than wrapping.
 */
#pragma once

#include <cstdint>
#include <compare>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "stbc/errors.hpp"

namespace stbc {

namespace detail {

using i128 = __int128;

inline i128 abs128(i128 v) { return v < 0 ? -v : v; }

inline i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline std::int64_t narrow(i128 v) {
  if (v > INT64_MAX || v < -static_cast<i128>(INT64_MAX)) {
    throw std::overflow_error("rational arithmetic overflowed 64 bits");
  }
  return static_cast<std::int64_t>(v);
}

}  // namespace detail

class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t n, std::int64_t d) { assign(n, d); }

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_ == 0; }
  bool is_integer() const noexcept { return den_ == 1; }
  int sign() const noexcept { return (num_ > 0) - (num_ < 0); }

  Rational operator-() const {
    Rational r;
    r.num_ = detail::narrow(-static_cast<detail::i128>(num_));
    r.den_ = den_;
    return r;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (a.den_ == b.den_) return from_wide(static_cast<detail::i128>(a.num_) + b.num_, a.den_);
    detail::i128 n = static_cast<detail::i128>(a.num_) * b.den_ + static_cast<detail::i128>(b.num_) * a.den_;
    detail::i128 d = static_cast<detail::i128>(a.den_) * b.den_;
    return from_wide(n, d);
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from_wide(static_cast<detail::i128>(a.num_) * b.num_, static_cast<detail::i128>(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw DomainError("division by zero");
    return from_wide(static_cast<detail::i128>(a.num_) * b.den_, static_cast<detail::i128>(a.den_) * b.num_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    detail::i128 l = static_cast<detail::i128>(a.num_) * b.den_;
    detail::i128 r = static_cast<detail::i128>(b.num_) * a.den_;
    return l <=> r;
  }

  /// "p" or "p/q" with an optional leading minus.
  std::string str() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  static Rational from_wide(detail::i128 n, detail::i128 d) {
    if (d == 0) throw DomainError("zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    detail::i128 g = detail::gcd128(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    Rational r;
    r.num_ = detail::narrow(n);
    r.den_ = detail::narrow(d);
    return r;
  }

  void assign(std::int64_t n, std::int64_t d) { *this = from_wide(n, d); }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Complex number with exact rational real and imaginary parts.
class GaussianRational {
 public:
  constexpr GaussianRational() = default;
  constexpr GaussianRational(Rational re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  constexpr GaussianRational(std::int64_t re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  constexpr GaussianRational(Rational re, Rational im) : re_(re), im_(im) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  /// j^power for any integer power.
  static GaussianRational i_pow(int power) {
    switch (((power % 4) + 4) % 4) {
      case 0: return {1, 0};
      case 1: return {0, 1};
      case 2: return {-1, 0};
      default: return {0, -1};
    }
  }

  const Rational& re() const noexcept { return re_; }
  const Rational& im() const noexcept { return im_; }

  bool is_zero() const noexcept { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const noexcept { return im_.is_zero(); }

  /// True for the four units 1, -1, j, -j.
  bool is_unit_phase() const {
    return (re_.is_zero() && (im_ == 1 || im_ == -1)) || (im_.is_zero() && (re_ == 1 || re_ == -1));
  }

  GaussianRational conj() const { return {re_, -im_}; }
  Rational norm2() const { return re_ * re_ + im_ * im_; }

  GaussianRational operator-() const { return {-re_, -im_}; }
  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re_ + b.re_, a.im_ + b.im_};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re_ - b.re_, a.im_ - b.im_};
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    if (a.im_.is_zero() && b.im_.is_zero()) return {a.re_ * b.re_, Rational(0)};
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    Rational n = b.norm2();
    if (n.is_zero()) throw DomainError("division by zero");
    GaussianRational t = a * b.conj();
    return {t.re_ / n, t.im_ / n};
  }
  GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
  GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
  GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }

  friend bool operator==(const GaussianRational&, const GaussianRational&) = default;

 private:
  Rational re_;
  Rational im_;
};

/// Text form of a matrix entry: "1", "-1/2", "j", "-j", "1/2j",
/// "1/2-1/2j". A unit imaginary coefficient is written without digits.
inline std::string to_string(const GaussianRational& z) {
  const Rational& re = z.re();
  const Rational& im = z.im();
  if (im.is_zero()) return re.str();
  auto imag_part = [](const Rational& v) {
    if (v == 1) return std::string("j");
    if (v == -1) return std::string("-j");
    return v.str() + "j";
  };
  if (re.is_zero()) return imag_part(im);
  std::string s = re.str();
  std::string t = imag_part(im);
  if (t.front() != '-') s += '+';
  return s + t;
}

inline std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << to_string(z); }

namespace detail {

// Reads "[-|+]p[/q]" at text[pos]; an empty magnitude is allowed only when
// the caller is about to consume the imaginary unit.
inline bool read_rational(std::string_view text, std::size_t& pos, Rational& out, bool allow_bare_unit) {
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  auto read_digits = [&](std::int64_t& v) {
    std::size_t start = pos;
    v = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      if (v > (INT64_MAX - 9) / 10) throw ParseError("entry magnitude too large: " + std::string(text));
      v = v * 10 + (text[pos] - '0');
      ++pos;
    }
    return pos > start;
  };
  std::int64_t p = 0;
  if (!read_digits(p)) {
    if (allow_bare_unit && pos < text.size() && text[pos] == 'j') {
      out = negative ? Rational(-1) : Rational(1);
      return true;
    }
    return false;
  }
  std::int64_t q = 1;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    if (!read_digits(q) || q == 0) throw ParseError("bad denominator in entry: " + std::string(text));
  }
  out = Rational(negative ? -p : p, q);
  return true;
}

}  // namespace detail

/// Inverse of to_string. Accepts "[-]p[/q]", "[-]p[/q]j", "[-]p[/q][+|-]r[/s]j"
/// with the digits of a unit imaginary coefficient optionally omitted.
inline GaussianRational parse_entry(std::string_view text) {
  auto fail = [&]() -> GaussianRational { throw ParseError("malformed matrix entry: \"" + std::string(text) + "\""); };
  if (text.empty()) return fail();
  std::size_t pos = 0;
  Rational first;
  if (!detail::read_rational(text, pos, first, true)) return fail();
  if (pos == text.size()) return {first, Rational(0)};
  if (text[pos] == 'j') {
    if (pos + 1 != text.size()) return fail();
    return {Rational(0), first};
  }
  if (text[pos] != '+' && text[pos] != '-') return fail();
  Rational second;
  if (!detail::read_rational(text, pos, second, true)) return fail();
  if (pos + 1 != text.size() || text[pos] != 'j') return fail();
  return {first, second};
}

}  // namespace stbc
