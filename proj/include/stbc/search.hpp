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
 * @file search.hpp
 * @brief Exhaustive search for generating sets of multi-group codes.
 *
 * With A_1 fixed, a g-group code with unitary weights is determined by
 * Lambda_kl = A_k B_l^H through
 *
 *     B_l = Lambda_1l^H A_1,   A_k = Lambda_k1 B_1,
 *
 * where group 1 holds the A_k and groups 2..g split the B_l. A set
 * {Lambda_11, Lambda_k1, Lambda_1l} yields a valid code iff
 *
 *   1. every member is an admissible Lambda (unitary, squares to -I);
 *   2. (Lambda_k1 Lambda_11 Lambda_1l)^2 = -I for k, l >= 2;
 *   3. {Lambda_11, Lambda_k1, -I, Lambda_1l Lambda_11} has full real rank;
 *   4. Lambda_1l and Lambda_1l' anticommute when l and l' lie in
 *      different groups (Lambda_11 counts as l = 1 of group 2).
 *
 * The search is a depth-first walk: pick Lambda_11, fill the Lambda_1l
 * groups, then the Lambda_k1 list. Every condition is checked as soon as
 * its members are placed. Negating a member keeps a set valid and the
 * members of one list are interchangeable, so by default only sign-class
 * representatives are used, each list is increasing, and equal-size
 * groups after group 2 are ordered by their first member.
 */
#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "stbc/clifford.hpp"
#include "stbc/code.hpp"
#include "stbc/codecheck.hpp"
#include "stbc/errors.hpp"
#include "stbc/exact_matrix.hpp"
#include "stbc/lambda.hpp"
#include "stbc/monomial.hpp"

namespace stbc {

/// A generating set as indices into a candidate table.
struct GammaSet {
  std::shared_ptr<const LambdaTable> table;
  GroupSignature signature;
  std::uint32_t lambda_11 = 0;
  std::vector<std::uint32_t> lambda_k1;  ///< k = 2..n_1
  std::vector<std::uint32_t> lambda_1l;  ///< l = 2.., group 2 first
  std::vector<int> sub_sizes;            ///< n_2..n_g

  GammaMatrices materialize() const {
    GammaMatrices g;
    g.lambda_11 = table->items.at(lambda_11).matrix();
    for (auto i : lambda_k1) g.lambda_k1.push_back(table->items.at(i).matrix());
    for (auto i : lambda_1l) g.lambda_1l.push_back(table->items.at(i).matrix());
    g.sub_sizes = sub_sizes;
    return g;
  }

  friend bool operator==(const GammaSet& x, const GammaSet& y) {
    return x.signature == y.signature && x.lambda_11 == y.lambda_11 && x.lambda_k1 == y.lambda_k1 &&
           x.lambda_1l == y.lambda_1l && x.sub_sizes == y.sub_sizes;
  }
};

struct SearchOptions {
  std::optional<std::size_t> limit;  ///< stop after this many sets (in canonical order)
  unsigned workers = 1;
  bool canonical = true;  ///< false walks every ordering and sign (for cross-checks)
};

/// Name of the first violated condition, or nullopt when the set is valid.
/// Works on plain matrices, independently of the search bookkeeping.
inline std::optional<std::string> gamma_violation(const GammaMatrices& g) {
  int total_l = 0;
  for (int s : g.sub_sizes) {
    if (s < 1) return "signature";
    total_l += s;
  }
  if (g.sub_sizes.empty() || static_cast<std::size_t>(total_l) != g.lambda_1l.size() + 1) return "signature";

  std::vector<const ExactMatrix*> members{&g.lambda_11};
  for (const auto& m : g.lambda_k1) members.push_back(&m);
  for (const auto& m : g.lambda_1l) members.push_back(&m);
  for (const auto* m : members) {
    if (!m->is_square() || m->rows() != g.lambda_11.rows()) return "shape";
    if (!is_unitary(*m)) return "unitary";
    if (!squares_to_neg_identity(*m)) return "square";
  }

  for (const auto& k : g.lambda_k1)
    for (const auto& l : g.lambda_1l)
      if (!squares_to_neg_identity(k * g.lambda_11 * l)) return "triple_product";

  std::vector<ExactMatrix> span{g.lambda_11};
  span.insert(span.end(), g.lambda_k1.begin(), g.lambda_k1.end());
  span.push_back(-ExactMatrix::identity(g.lambda_11.rows()));
  for (const auto& l : g.lambda_1l) span.push_back(l * g.lambda_11);
  if (rank_over_reals(span) != span.size()) return "independence";

  // group label per position of (Lambda_11, Lambda_12, ...)
  std::vector<std::size_t> label;
  for (std::size_t s = 0; s < g.sub_sizes.size(); ++s)
    for (int i = 0; i < g.sub_sizes[s]; ++i) label.push_back(s);
  std::vector<const ExactMatrix*> ls{&g.lambda_11};
  for (const auto& m : g.lambda_1l) ls.push_back(&m);
  for (std::size_t x = 0; x < ls.size(); ++x)
    for (std::size_t y = x + 1; y < ls.size(); ++y)
      if (label[x] != label[y] && !((*ls[x]) * (*ls[y]) + (*ls[y]) * (*ls[x])).is_zero()) return "anticommutation";
  return std::nullopt;
}

namespace detail {

using Bits = boost::dynamic_bitset<std::uint64_t>;

inline bool is_neg_identity_square(const MonomialMatrix& m) { return m.squares_to_neg_identity(); }

class GammaSearch {
 public:
  GammaSearch(std::shared_ptr<const LambdaTable> table, GroupSignature sig, SearchOptions opts)
      : table_(std::move(table)), sig_(std::move(sig)), opts_(opts) {
    sig_.validate();
    const auto& items = table_->items;
    for (std::size_t i = 0; i < items.size(); ++i)
      if (!opts_.canonical || table_->is_representative(i)) pool_.push_back(static_cast<std::uint32_t>(i));
    const std::size_t p = pool_.size();
    mono_.reserve(p);
    for (auto i : pool_) mono_.push_back(items[i].mono());
    dim_ = 2 * static_cast<std::size_t>(table_->basis->dim()) * table_->basis->dim();
    flat_.resize(p);
    for (std::size_t x = 0; x < p; ++x) mono_[x].flatten_real(flat_[x]);
    n1_ = sig_.sizes.front();
    subs_.assign(sig_.sizes.begin() + 1, sig_.sizes.end());
    anti_.resize(p);
  }

  std::vector<GammaSet> run() {
    const std::size_t roots = pool_.size();
    std::vector<std::vector<GammaSet>> per_root(roots);
    std::vector<char> done(roots, 0);
    std::atomic<std::size_t> next{0};
    std::mutex mu;
    std::size_t prefix = 0, prefix_found = 0;
    bool stop = false;

    auto worker = [&]() {
      while (true) {
        {
          std::lock_guard<std::mutex> lock(mu);
          if (stop) return;
        }
        std::size_t r = next.fetch_add(1);
        if (r >= roots) return;
        std::vector<GammaSet> found = search_root(r);
        std::lock_guard<std::mutex> lock(mu);
        per_root[r] = std::move(found);
        done[r] = 1;
        while (prefix < roots && done[prefix]) prefix_found += per_root[prefix++].size();
        if (opts_.limit && prefix_found >= *opts_.limit) stop = true;
      }
    };

    const unsigned workers = std::max(1u, opts_.workers);
    if (workers == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
      for (auto& t : pool) t.join();
    }

    std::vector<GammaSet> out;
    for (std::size_t r = 0; r < roots && done[r]; ++r)
      for (auto& gs : per_root[r]) {
        if (opts_.limit && out.size() >= *opts_.limit) return out;
        out.push_back(std::move(gs));
      }
    return out;
  }

 private:
  struct RootState {
    std::size_t root = 0;
    MonomialMatrix l11;
    std::vector<std::optional<Bits>> compat;  // compat[y]: k-candidates x with (x l11 y)^2 = -I
    std::vector<std::optional<std::vector<std::int64_t>>> flat_l;  // flatten(y l11)
    IntRankAccumulator acc;
    std::vector<std::vector<std::uint32_t>> members;  // per l-group, excluding l11
    std::vector<std::uint32_t> ks;
    std::vector<GammaSet> found;
    bool full = false;
  };

  const Bits& anti(std::size_t y) {
    std::lock_guard<std::mutex> lock(anti_mu_);
    auto& slot = anti_[y];
    if (!slot) {
      Bits b(pool_.size());
      for (std::size_t x = 0; x < pool_.size(); ++x)
        if (mono_[y].anticommutes_with(mono_[x])) b.set(x);
      slot = std::move(b);
    }
    return *slot;
  }

  const Bits& compat(RootState& st, std::size_t y) {
    auto& slot = st.compat[y];
    if (!slot) {
      Bits b(pool_.size());
      const MonomialMatrix right = st.l11 * mono_[y];
      for (std::size_t x = 0; x < pool_.size(); ++x)
        if (is_neg_identity_square(mono_[x] * right)) b.set(x);
      slot = std::move(b);
    }
    return *slot;
  }

  const std::vector<std::int64_t>& flat_l(RootState& st, std::size_t y) {
    auto& slot = st.flat_l[y];
    if (!slot) {
      std::vector<std::int64_t> v;
      (mono_[y] * st.l11).flatten_real(v);
      slot = std::move(v);
    }
    return *slot;
  }

  bool limit_reached(const RootState& st) const { return opts_.limit && st.found.size() >= *opts_.limit; }

  // Upper bound on how many members of `mask` can still join the span.
  std::size_t matroid_room(const RootState& st, const Bits& mask, std::size_t need) const {
    IntRankAccumulator acc = st.acc;
    std::size_t got = 0;
    for (auto x = mask.find_first(); x != Bits::npos && got < need; x = mask.find_next(x))
      if (acc.push(flat_[x])) ++got;
    return got;
  }

  std::vector<GammaSet> search_root(std::size_t r) {
    RootState st;
    st.root = r;
    st.l11 = mono_[r];
    st.compat.resize(pool_.size());
    st.flat_l.resize(pool_.size());
    st.acc = IntRankAccumulator(dim_);
    st.acc.push(flat_[r]);
    st.acc.push(flatten_neg_identity());
    st.members.assign(subs_.size(), {});

    std::vector<Bits> allowed(subs_.size(), Bits(pool_.size()));
    allowed[0].set();
    for (std::size_t s = 1; s < subs_.size(); ++s) allowed[s] = anti(r);
    Bits kmask(pool_.size());
    kmask.set();
    place_l(st, 0, allowed, kmask);
    return std::move(st.found);
  }

  std::vector<std::int64_t> flatten_neg_identity() const {
    std::vector<std::int64_t> v;
    (-MonomialMatrix::identity(table_->basis->dim())).flatten_real(v);
    return v;
  }

  std::size_t needed(std::size_t s) const {
    return static_cast<std::size_t>(subs_[s]) - (s == 0 ? 1 : 0);
  }

  void place_l(RootState& st, std::size_t s, const std::vector<Bits>& allowed, const Bits& kmask) {
    if (limit_reached(st)) return;
    while (s < subs_.size() && st.members[s].size() == needed(s)) ++s;
    const std::size_t kneed = static_cast<std::size_t>(n1_ - 1);
    if (s == subs_.size()) {
      if (matroid_room(st, kmask, kneed) < kneed) return;
      place_k(st, kmask, 0);
      return;
    }
    const auto& cur = st.members[s];
    std::size_t start = 0;
    if (opts_.canonical) {
      if (!cur.empty()) {
        start = cur.back() + 1;
      } else if (s >= 2 && subs_[s] == subs_[s - 1]) {
        start = st.members[s - 1].front() + 1;
      }
    }
    const Bits& cand = allowed[s];
    for (auto y = start == 0 ? cand.find_first() : cand.find_next(start - 1); y != Bits::npos; y = cand.find_next(y)) {
      if (!st.acc.push(flat_l(st, y))) continue;
      const Bits& a = anti(y);
      std::vector<Bits> next = allowed;
      bool ok = true;
      for (std::size_t t = 0; t < subs_.size() && ok; ++t) {
        if (t == s) continue;
        next[t] &= a;
        if (t > s && next[t].count() < needed(t) - st.members[t].size()) ok = false;
      }
      Bits nk = kmask & compat(st, y);
      if (ok && nk.count() < kneed) ok = false;
      if (ok) {
        st.members[s].push_back(static_cast<std::uint32_t>(y));
        if (matroid_room(st, nk, kneed) >= kneed) place_l(st, s, next, nk);
        st.members[s].pop_back();
      }
      st.acc.pop();
      if (limit_reached(st)) return;
    }
  }

  void place_k(RootState& st, const Bits& kmask, std::size_t start) {
    if (limit_reached(st)) return;
    if (st.ks.size() == static_cast<std::size_t>(n1_ - 1)) {
      emit(st);
      return;
    }
    const std::size_t from = opts_.canonical ? start : 0;
    for (auto x = from == 0 ? kmask.find_first() : kmask.find_next(from - 1); x != Bits::npos; x = kmask.find_next(x)) {
      if (!st.acc.push(flat_[x])) continue;
      st.ks.push_back(static_cast<std::uint32_t>(x));
      place_k(st, kmask, x + 1);
      st.ks.pop_back();
      st.acc.pop();
      if (limit_reached(st)) return;
    }
  }

  void emit(RootState& st) {
    GammaSet gs;
    gs.table = table_;
    gs.signature = sig_;
    gs.lambda_11 = pool_[st.root];
    for (auto x : st.ks) gs.lambda_k1.push_back(pool_[x]);
    for (const auto& grp : st.members)
      for (auto y : grp) gs.lambda_1l.push_back(pool_[y]);
    gs.sub_sizes = subs_;
    st.found.push_back(std::move(gs));
  }

  std::shared_ptr<const LambdaTable> table_;
  GroupSignature sig_;
  SearchOptions opts_;
  std::vector<std::uint32_t> pool_;
  std::vector<MonomialMatrix> mono_;
  std::vector<std::vector<std::int64_t>> flat_;
  std::size_t dim_ = 0;
  int n1_ = 0;
  std::vector<int> subs_;
  std::vector<std::optional<Bits>> anti_;
  std::mutex anti_mu_;
};

}  // namespace detail

/// Every generating set for the signature (up to the canonical reduction
/// unless opts.canonical is false), in deterministic order.
inline std::vector<GammaSet> find_gamma_sets(std::shared_ptr<const LambdaTable> table, const GroupSignature& sig,
                                             const SearchOptions& opts = {}) {
  if (!table) throw DomainError("find_gamma_sets: no candidate table");
  if (opts.limit && *opts.limit == 0) return {};
  return detail::GammaSearch(std::move(table), sig, opts).run();
}

/**
 * Refines a two-group set into groups 2..g of the given sizes
 * (sub_sizes[0] includes Lambda_11). Only the anticommutation condition
 * depends on the split; the others carry over unchanged.
 */
inline std::vector<GammaSet> split_second_group(const GammaSet& gs, const std::vector<int>& sub_sizes) {
  if (gs.sub_sizes.size() != 1) throw DomainError("split_second_group: expects a two-group set");
  int total = 0;
  for (int s : sub_sizes) {
    if (s < 1) throw DomainError("split_second_group: sizes must be positive");
    total += s;
  }
  if (total != gs.sub_sizes.front()) throw DomainError("split_second_group: sizes must add up to the second group");

  const auto& items = gs.table->items;
  std::vector<std::uint32_t> ls{gs.lambda_11};
  ls.insert(ls.end(), gs.lambda_1l.begin(), gs.lambda_1l.end());
  const std::size_t m = ls.size();
  std::vector<std::vector<char>> anti(m, std::vector<char>(m, 0));
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y)
      anti[x][y] = items[ls[x]].mono().anticommutes_with(items[ls[y]].mono());

  const std::size_t g = sub_sizes.size();
  std::vector<std::size_t> label(m, 0), fill(g, 0), first(g, m);
  label[0] = 0;
  fill[0] = 1;
  first[0] = 0;
  std::vector<GammaSet> out;

  std::function<void(std::size_t)> assign = [&](std::size_t i) {
    if (i == m) {
      GammaSet r = gs;
      r.signature.sizes.resize(1);
      r.signature.sizes.insert(r.signature.sizes.end(), sub_sizes.begin(), sub_sizes.end());
      r.sub_sizes = sub_sizes;
      r.lambda_1l.clear();
      for (std::size_t s = 0; s < g; ++s)
        for (std::size_t x = 1; x < m; ++x)
          if (label[x] == s) r.lambda_1l.push_back(ls[x]);
      out.push_back(std::move(r));
      return;
    }
    for (std::size_t s = 0; s < g; ++s) {
      if (fill[s] == static_cast<std::size_t>(sub_sizes[s])) continue;
      // equal-size groups after the first are ordered by their first member
      if (fill[s] == 0 && s >= 2 && sub_sizes[s] == sub_sizes[s - 1] && fill[s - 1] == 0) continue;
      bool ok = true;
      for (std::size_t x = 0; x < i && ok; ++x)
        if (label[x] != s && !anti[x][i]) ok = false;
      if (!ok) continue;
      label[i] = s;
      ++fill[s];
      assign(i + 1);
      --fill[s];
    }
  };
  assign(1);
  return out;
}

namespace detail {

inline void require_a1(const ExactMatrix& a1, std::size_t n) {
  if (a1.rows() != n || a1.cols() != n) throw ShapeError("A_1 must be 2^a x 2^a");
  if (!is_unitary(a1)) throw DomainError("A_1 must be unitary");
}

inline void verify_code(const StbcCode& code) {
  for (const auto& g : code.groups)
    for (const auto& m : g)
      if (!is_unitary(m)) throw VerificationError("unitary", "a weight matrix is not unitary");
  auto gg = check_g_group(code);
  if (!gg.pass) {
    const auto& v = *gg.violation;
    throw VerificationError("g_group", "groups " + std::to_string(v.group_i) + "," + std::to_string(v.group_j) +
                                           " members " + std::to_string(v.index_k) + "," +
                                           std::to_string(v.index_l));
  }
  if (!check_independence(code)) throw VerificationError("independence", "weight matrices are dependent over R");
  if (check_single_thread_diversity(code) == false)
    throw VerificationError("single_thread", "a weight matrix is not single-thread with unit entries");
}

}  // namespace detail

/// Weight matrices from a generating set; the result is re-verified.
inline StbcCode reconstruct_weights(const GammaMatrices& g, const ExactMatrix& a1) {
  const std::size_t n = g.lambda_11.rows();
  detail::require_a1(a1, n);
  if (auto bad = gamma_violation(g)) throw VerificationError(*bad, "generating set is invalid");
  std::vector<std::vector<ExactMatrix>> groups(g.sub_sizes.size() + 1);
  const ExactMatrix b1 = conj_transpose(g.lambda_11) * a1;
  groups[0].push_back(a1);
  for (const auto& k : g.lambda_k1) groups[0].push_back(k * b1);
  groups[1].push_back(b1);
  std::size_t pos = 0;
  for (std::size_t s = 0; s < g.sub_sizes.size(); ++s)
    for (int i = (s == 0 ? 1 : 0); i < g.sub_sizes[s]; ++i)
      groups[s + 1].push_back(conj_transpose(g.lambda_1l.at(pos++)) * a1);
  StbcCode code = StbcCode::from_groups(std::move(groups));
  code.provenance = Provenance{g, a1};
  detail::verify_code(code);
  return code;
}

inline StbcCode reconstruct_weights(const GammaSet& gs, const ExactMatrix& a1) {
  return reconstruct_weights(gs.materialize(), a1);
}

inline StbcCode reconstruct_weights(const GammaSet& gs) {
  return reconstruct_weights(gs, ExactMatrix::identity(gs.table->basis->dim()));
}

/**
 * Keeps the given columns (0-based) of every weight matrix. The cross-group
 * condition survives column removal; independence may not and is checked.
 */
inline StbcCode remove_columns(const StbcCode& code, const std::vector<std::size_t>& keep) {
  if (keep.empty()) throw DomainError("remove_columns: keep at least one column");
  std::vector<std::size_t> seen = keep;
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) throw DomainError("remove_columns: repeated column");
  if (seen.back() >= code.antennas) throw DomainError("remove_columns: column index out of range");
  StbcCode out = code;
  for (auto& g : out.groups)
    for (auto& m : g) m = select_columns(m, keep);
  out.antennas = keep.size();
  auto gg = check_g_group(out);
  if (!gg.pass) throw VerificationError("g_group", "column removal broke the cross-group condition");
  if (!check_independence(out)) throw VerificationError("independence", "kept columns leave dependent weight matrices");
  return out;
}

// ---------------------------------------------------------------------------
// Maximum-rate search

/// Signatures with g parts (each at least min_size) summing to total, each
/// listed largest part first, in lexicographically decreasing order.
inline std::vector<GroupSignature> signatures_with_total(int total, int g, bool symmetric, int min_size = 1) {
  std::vector<GroupSignature> out;
  min_size = std::max(min_size, 1);
  if (g < 2 || total < g * min_size) return out;
  if (symmetric) {
    if (total % g == 0) out.push_back(GroupSignature{std::vector<int>(static_cast<std::size_t>(g), total / g)});
    return out;
  }
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int cap) {
    const int slots = g - static_cast<int>(cur.size());
    if (slots == 0) {
      if (left == 0) out.push_back(GroupSignature{cur});
      return;
    }
    for (int v = std::min(cap, left - (slots - 1) * min_size); v >= min_size; --v) {
      if (v * slots < left) break;
      cur.push_back(v);
      rec(left - v, v);
      cur.pop_back();
    }
  };
  rec(total, total);
  return out;
}

struct MaxRateOptions {
  unsigned workers = 1;
  bool allow_large = false;  ///< permits a = 3
  int min_group_size = 1;    ///< smallest n_i considered
};

struct TriedSignature {
  GroupSignature signature;
  bool found = false;
  double seconds = 0;
};

struct MaxRateResult {
  int a = 0;
  int groups = 0;
  bool symmetric = false;
  int min_group_size = 1;
  int max_total = 0;
  Rational max_rate;
  std::vector<StbcCode> witnesses;  ///< one per signature reaching max_total
  std::vector<TriedSignature> log;
};

/**
 * Largest total sum n_i for which some g-group signature admits a
 * generating set. Totals are tried in increasing order; removing one
 * weight matrix from a group larger than the minimum leaves a valid code,
 * so once every signature of a total is empty no larger total can succeed.
 */
inline MaxRateResult max_rate_search(int a, int g, bool symmetric, const MaxRateOptions& opts = {}) {
  if (g < 2) throw DomainError("max_rate_search: at least two groups");
  auto table = std::make_shared<const LambdaTable>(enumerate_lambdas(a, EnumerateOptions{opts.allow_large}));
  MaxRateResult res;
  res.a = a;
  res.groups = g;
  res.symmetric = symmetric;
  res.min_group_size = std::max(opts.min_group_size, 1);
  const int dim_cap = 2 * static_cast<int>(table->basis->dim() * table->basis->dim());
  std::vector<GammaSet> best;
  for (int total = g * res.min_group_size; total <= dim_cap; total += symmetric ? g : 1) {
    std::vector<GammaSet> hits;
    for (const auto& sig : signatures_with_total(total, g, symmetric, res.min_group_size)) {
      auto t0 = std::chrono::steady_clock::now();
      SearchOptions so;
      so.limit = 1;
      so.workers = opts.workers;
      auto sets = find_gamma_sets(table, sig, so);
      double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      res.log.push_back({sig, !sets.empty(), secs});
      if (!sets.empty()) hits.push_back(sets.front());
    }
    if (hits.empty()) break;
    res.max_total = total;
    best = std::move(hits);
  }
  res.max_rate = Rational(res.max_total, 2 * static_cast<std::int64_t>(table->basis->dim()));
  for (const auto& gs : best) res.witnesses.push_back(reconstruct_weights(gs));
  return res;
}

}  // namespace stbc
