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
 * @file codecheck.hpp
 * @brief Standalone verification of multi-group decodable codes.
 *
 * A code with weight matrices split into groups G_1..G_g is g-group
 * decodable iff A^H B + B^H A = 0 for every A, B in different groups. The
 * checks here decide that and the other structural properties exactly,
 * compute minimum-determinant coding gains by brute force over the
 * difference codebook, and give the decoding complexity order of a group
 * signature.
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stbc/code.hpp"
#include "stbc/errors.hpp"
#include "stbc/exact_matrix.hpp"
#include "stbc/monomial.hpp"

namespace stbc {

struct GGroupViolation {
  int group_i = 0, group_j = 0;  ///< 1-based groups
  int index_k = 0, index_l = 0;  ///< 1-based positions inside those groups
  ExactMatrix residual;          ///< A_k^H A_l + A_l^H A_k
};

struct GGroupCheck {
  bool pass = true;
  std::optional<GGroupViolation> violation;  ///< first failing pair in scan order
};

inline ExactMatrix cross_residual(const ExactMatrix& x, const ExactMatrix& y) {
  return conj_transpose(x) * y + conj_transpose(y) * x;
}

inline GGroupCheck check_g_group(const StbcCode& code) {
  GGroupCheck out;
  for (std::size_t i = 0; i < code.groups.size(); ++i)
    for (std::size_t j = i + 1; j < code.groups.size(); ++j)
      for (std::size_t k = 0; k < code.groups[i].size(); ++k)
        for (std::size_t l = 0; l < code.groups[j].size(); ++l) {
          ExactMatrix r = cross_residual(code.groups[i][k], code.groups[j][l]);
          if (!r.is_zero()) {
            out.pass = false;
            out.violation = GGroupViolation{static_cast<int>(i) + 1, static_cast<int>(j) + 1,
                                            static_cast<int>(k) + 1, static_cast<int>(l) + 1, std::move(r)};
            return out;
          }
        }
  return out;
}

inline std::size_t weight_rank(const StbcCode& code) {
  auto all = code.all_weights();
  return rank_over_reals(all);
}

inline bool check_independence(const StbcCode& code) {
  return weight_rank(code) == static_cast<std::size_t>(code.signature().total());
}

/// Every weight matrix is single-thread with entries in {1, -1, j, -j}.
/// Absent when columns were removed (the property is about square codes).
inline std::optional<bool> check_single_thread_diversity(const StbcCode& code) {
  if (code.antennas != code.period) return std::nullopt;
  for (const auto& g : code.groups)
    for (const auto& m : g)
      if (!MonomialMatrix::from_exact(m)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Decoding complexity

enum class ConstellationKind { SquareQam, NonRectangular };

inline std::string to_string(ConstellationKind k) { return k == ConstellationKind::SquareQam ? "square" : "nonrect"; }

/// Sum of c * M^(h/2) terms, keyed by the half-exponent h.
struct ComplexityOrder {
  std::map<int, std::int64_t> terms;

  std::string expression() const {
    if (terms.empty()) return "0";
    std::string s;
    for (const auto& [h, c] : terms) {
      if (!s.empty()) s += " + ";
      std::string power;
      if (h == 1) power = "sqrt(M)";
      else if (h == 2) power = "M";
      else if (h > 0 && h % 2 == 0) power = "M^" + std::to_string(h / 2);
      else if (h > 0) power = "M^" + std::to_string(h / 2) + ".5";
      if (power.empty()) s += std::to_string(c);
      else s += (c == 1 ? "" : std::to_string(c)) + power;
    }
    return s;
  }

  double evaluate(std::int64_t m) const {
    double v = 0;
    for (const auto& [h, c] : terms) v += static_cast<double>(c) * std::pow(static_cast<double>(m), h / 2.0);
    return v;
  }

  friend bool operator==(const ComplexityOrder&, const ComplexityOrder&) = default;
};

struct DecodingComplexity {
  ComplexityOrder order;
  /// False when real and imaginary parts of a complex symbol straddle groups,
  /// which a non-rectangular constellation cannot decouple.
  bool structure_preserved = true;
  double value = 0;
};

/**
 * Worst-case ML decoding complexity order.
 *
 * Square QAM: sum_i sqrt(M)^(n_i - 1) (conditional detection with hard
 * slicers on each group).
 *
 * Non-rectangular: when every n_i is even the groups hold whole complex
 * symbols and the order is sum_i M^(n_i / 2). Otherwise the odd groups
 * are paired, the s straddling complex symbols are searched exhaustively
 * (M^s) and the remaining whole symbols of each group are decoded per
 * group: M^s * sum_i M^floor(n_i / 2). For (5,5) this is 2M^3.
 */
inline DecodingComplexity decoding_complexity(const GroupSignature& sig, std::int64_t m, ConstellationKind kind) {
  if (sig.sizes.empty()) throw DomainError("empty signature");
  for (int s : sig.sizes)
    if (s < 1) throw DomainError("group sizes must be positive");
  if (kind == ConstellationKind::SquareQam) {
    bool ok = m >= 4 && (m & (m - 1)) == 0;
    int bits = 0;
    for (std::int64_t v = m; v > 1; v >>= 1) ++bits;
    if (!ok || bits % 2 != 0) throw DomainError("square QAM size must be an even power of two (4, 16, 64, ...)");
  } else if (m < 2) {
    throw DomainError("constellation size must be at least 2");
  }

  DecodingComplexity out;
  if (kind == ConstellationKind::SquareQam) {
    for (int n : sig.sizes) out.order.terms[n - 1] += 1;
  } else {
    int odd = 0;
    for (int n : sig.sizes) odd += n % 2;
    out.structure_preserved = odd == 0;
    const int straddling = odd / 2;
    for (int n : sig.sizes) out.order.terms[2 * straddling + 2 * (n / 2)] += 1;
  }
  out.value = out.order.evaluate(m);
  return out;
}

/// Summary rows for 4 transmit antennas; rows not produced by this search
/// are marked external.
struct ComplexityReferenceRow {
  std::string groups;
  std::string max_rate;
  std::string square;
  std::string nonrect;
  bool external = false;
  std::optional<GroupSignature> signature;  ///< present when the row is computable
};

inline std::vector<ComplexityReferenceRow> complexity_reference_table() {
  return {
      {"2 (sym)", "5/4", "2M^2", "2M^3", false, GroupSignature{{5, 5}}},
      {"2 (non-sym)", "17/8", "M^5.5", "6M^6.5", true, std::nullopt},
      {"3 (sym)", "3/4", "3sqrt(M)", "3M", true, GroupSignature{{2, 2, 2}}},
      {"3 (non-sym)", "1", "2sqrt(M) + M^1.5", "2M + M^2", false, GroupSignature{{2, 2, 4}}},
  };
}

// ---------------------------------------------------------------------------
// Coding gain

struct ConstellationSpec {
  ConstellationKind kind = ConstellationKind::SquareQam;
  std::int64_t m = 4;
  std::vector<Rational> real_axis_values;  ///< values a single real symbol takes

  /// PAM components {+-1, +-3, ..., +-(sqrt(M) - 1)} of square M-QAM.
  static ConstellationSpec square_qam(std::int64_t m) {
    decoding_complexity(GroupSignature{{1}}, m, ConstellationKind::SquareQam);  // validates m
    std::int64_t side = 1;
    while (side * side < m) ++side;
    ConstellationSpec cs;
    cs.kind = ConstellationKind::SquareQam;
    cs.m = m;
    for (std::int64_t v = -(side - 1); v <= side - 1; v += 2) cs.real_axis_values.emplace_back(v);
    return cs;
  }
};

enum class GainMode { PerGroup, Composite };

struct CodingGainReport {
  std::vector<Rational> per_group;   ///< empty in composite mode
  Rational overall;
  std::vector<Rational> attained_at;  ///< symbol differences of a minimizing codeword difference
};

inline constexpr std::uint64_t kDefaultGainBudget = std::uint64_t{1} << 20;

namespace detail {

inline std::vector<Rational> difference_set(const std::vector<Rational>& values) {
  std::vector<Rational> d;
  for (const auto& x : values)
    for (const auto& y : values) {
      Rational v = x - y;
      if (std::find(d.begin(), d.end(), v) == d.end()) d.push_back(v);
    }
  std::sort(d.begin(), d.end());
  return d;
}

inline std::uint64_t checked_power(std::size_t base, std::size_t exp, std::uint64_t cap) {
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (v > cap / std::max<std::size_t>(base, 1)) return cap + 1;
    v *= base;
  }
  return v;
}

// min over nonzero d in D^k of det(dX^H dX), dX = sum d_i W_i.
inline std::pair<Rational, std::vector<Rational>> min_det(const std::vector<ExactMatrix>& weights,
                                                          const std::vector<Rational>& diffs) {
  const std::size_t k = weights.size();
  std::vector<std::size_t> digit(k, 0);
  std::size_t zero = static_cast<std::size_t>(std::find(diffs.begin(), diffs.end(), Rational(0)) - diffs.begin());
  std::optional<Rational> best;
  std::vector<Rational> arg;
  while (true) {
    bool nonzero = false;
    for (std::size_t i = 0; i < k; ++i) nonzero |= digit[i] != zero;
    if (nonzero) {
      ExactMatrix dx(weights.front().rows(), weights.front().cols());
      for (std::size_t i = 0; i < k; ++i)
        if (digit[i] != zero) dx += weights[i] * GaussianRational(diffs[digit[i]]);
      GaussianRational det = determinant(conj_transpose(dx) * dx);
      if (!det.is_real()) throw VerificationError("coding gain", "determinant of a Gram matrix is not real");
      if (!best || det.re() < *best) {
        best = det.re();
        arg.clear();
        for (std::size_t i = 0; i < k; ++i) arg.push_back(diffs[digit[i]]);
        if (best->is_zero()) break;
      }
    }
    std::size_t i = 0;
    while (i < k && ++digit[i] == diffs.size()) digit[i++] = 0;
    if (i == k) break;
  }
  return {best.value_or(Rational(0)), arg};
}

}  // namespace detail

/**
 * Minimum of det(dX^H dX) over nonzero codeword differences, where each
 * real symbol's difference ranges over pairwise differences of
 * cs.real_axis_values. PerGroup evaluates each group on its own and takes
 * the minimum; Composite enumerates differences over all symbols at once.
 */
inline CodingGainReport coding_gain(const StbcCode& code, const ConstellationSpec& cs, GainMode mode,
                                    std::uint64_t budget = kDefaultGainBudget) {
  if (cs.real_axis_values.size() < 2) throw DomainError("constellation needs at least two real-axis values");
  const auto diffs = detail::difference_set(cs.real_axis_values);
  CodingGainReport rep;
  if (mode == GainMode::Composite) {
    auto all = code.all_weights();
    if (detail::checked_power(diffs.size(), all.size(), budget) > budget)
      throw ResourceError("composite difference enumeration exceeds the budget of " + std::to_string(budget));
    auto [v, arg] = detail::min_det(all, diffs);
    rep.overall = v;
    rep.attained_at = std::move(arg);
    return rep;
  }
  std::size_t offset = 0, total = code.all_weights().size();
  std::optional<Rational> best;
  for (std::size_t g = 0; g < code.groups.size(); ++g) {
    if (detail::checked_power(diffs.size(), code.groups[g].size(), budget) > budget)
      throw ResourceError("group " + std::to_string(g + 1) + " difference enumeration exceeds the budget of " +
                          std::to_string(budget));
    auto [v, arg] = detail::min_det(code.groups[g], diffs);
    rep.per_group.push_back(v);
    if (!best || v < *best) {
      best = v;
      rep.attained_at.assign(total, Rational(0));
      std::copy(arg.begin(), arg.end(), rep.attained_at.begin() + static_cast<std::ptrdiff_t>(offset));
    }
    offset += code.groups[g].size();
  }
  rep.overall = best.value_or(Rational(0));
  return rep;
}

// ---------------------------------------------------------------------------
// Aggregate report

struct VerifyReport {
  GroupSignature signature;
  Rational rate;
  GGroupCheck g_group;
  std::size_t rank = 0;
  bool independent = false;
  std::optional<bool> single_thread;
  std::optional<DecodingComplexity> square;
  std::optional<DecodingComplexity> nonrect;
  std::int64_t m = 4;
  std::optional<CodingGainReport> coding_gain;

  bool pass() const { return g_group.pass && independent && single_thread.value_or(true); }
};

inline VerifyReport verify_report(const StbcCode& code, const std::optional<ConstellationSpec>& cs = std::nullopt,
                                  bool with_coding_gain = false, std::uint64_t budget = kDefaultGainBudget) {
  VerifyReport r;
  r.signature = code.signature();
  r.rate = code.rate();
  r.g_group = check_g_group(code);
  r.rank = weight_rank(code);
  r.independent = r.rank == static_cast<std::size_t>(r.signature.total());
  r.single_thread = check_single_thread_diversity(code);
  r.m = cs ? cs->m : 4;
  try {
    r.square = decoding_complexity(r.signature, r.m, ConstellationKind::SquareQam);
  } catch (const DomainError&) {
    r.square.reset();  // M is not a square QAM size
  }
  r.nonrect = decoding_complexity(r.signature, r.m, ConstellationKind::NonRectangular);
  if (with_coding_gain) r.coding_gain = coding_gain(code, cs.value_or(ConstellationSpec::square_qam(4)), GainMode::PerGroup, budget);
  return r;
}

}  // namespace stbc
