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

// End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
// exits nonzero when any line fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include "stbc/cli.hpp"

using namespace stbc;

namespace {

const std::string kFixtures = UWSTBC_FIXTURES_DIR;
const GaussianRational J = GaussianRational::i();

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  std::string id;
  std::string title;
  double limit_seconds;
  std::function<Outcome()> body;
};

std::string str(const std::vector<int>& v) { return GroupSignature{v}.str(); }

// Generators for four antennas as printed with the basis table.
ExactMatrix r4(int i) {
  switch (i) {
    case 1: return ExactMatrix::from_rows({{J, 0, 0, 0}, {0, -J, 0, 0}, {0, 0, -J, 0}, {0, 0, 0, J}});
    case 2: return ExactMatrix::from_rows({{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}});
    case 3: return ExactMatrix::from_rows({{0, J, 0, 0}, {J, 0, 0, 0}, {0, 0, 0, J}, {0, 0, J, 0}});
    case 4: return ExactMatrix::from_rows({{0, 0, 1, 0}, {0, 0, 0, -1}, {-1, 0, 0, 0}, {0, 1, 0, 0}});
    default: return ExactMatrix::from_rows({{0, 0, J, 0}, {0, 0, 0, -J}, {J, 0, 0, 0}, {0, -J, 0, 0}});
  }
}

ExactMatrix prod(std::initializer_list<int> gens, GaussianRational phase = 1) {
  ExactMatrix m = ExactMatrix::identity(4);
  for (int g : gens) m = m * r4(g);
  return phase * m;
}

std::vector<ExactMatrix> basis_table_4x4() {
  return {J * ExactMatrix::identity(4), prod({1}),          prod({2}),          prod({3}),
          prod({4}),                    prod({1, 2}),       prod({1, 3}),       prod({1, 4}),
          prod({2, 3}),                 prod({2, 4}),       prod({3, 4}),       prod({1, 2, 3}, J),
          prod({1, 2, 4}, J),           prod({1, 3, 4}, J), prod({2, 3, 4}, J), prod({1, 2, 3, 4}, J)};
}

int run_cli(const std::vector<std::string>& args, std::string& out, std::string& err) {
  std::ostringstream o, e;
  int code = cli::run(args, o, e);
  out = o.str();
  err = e.str();
  return code;
}

std::shared_ptr<const LambdaTable> table_a2() {
  static auto t = std::make_shared<const LambdaTable>(enumerate_lambdas(2));
  return t;
}

// ---------------------------------------------------------------------------

Outcome basis_reproduction() {
  std::string out, err;
  int code = run_cli({"generate-basis", "--a", "2"}, out, err);
  if (code != cli::kOk) return {false, "generate-basis exited " + std::to_string(code) + ": " + err};
  auto j = json::parse(out);
  auto want = basis_table_4x4();
  if (j["elements"].size() != want.size()) return {false, "expected 16 elements"};
  for (std::size_t k = 0; k < want.size(); ++k) {
    if (j["elements"][k]["index"] != k + 1) return {false, "element order differs at " + std::to_string(k + 1)};
    if (matrix_from_json(j["elements"][k]["matrix"]) != want[k])
      return {false, "alpha_" + std::to_string(k + 1) + " differs"};
  }
  return {true, "16 matrices equal entry for entry"};
}

Outcome generator_properties() {
  int pairs = 0;
  for (int a = 1; a <= 3; ++a) {
    auto gens = generators(a).gens;
    if (gens.size() != static_cast<std::size_t>(2 * a + 1)) return {false, "wrong generator count for a=" + std::to_string(a)};
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (!is_identity(gens[i] * gens[i], -1)) return {false, "R_i^2 != -I"};
      for (std::size_t k = i + 1; k < gens.size(); ++k, ++pairs)
        if (!(gens[i] * gens[k] + gens[k] * gens[i]).is_zero()) return {false, "R_i R_k + R_k R_i != 0"};
    }
  }
  return {true, std::to_string(pairs) + " anticommuting pairs for a in {1,2,3}"};
}

Outcome lambda_admissibility() {
  auto b = basis(2);
  auto lam = GaussianRational(Rational(1, 2)) * (r4(1) - r4(3) + r4(1) * r4(2) + r4(2) * r4(3));
  auto rec = recover_coefficients(b, lam);
  std::vector<Rational> coeffs;
  for (const auto& z : rec) {
    if (!z.is_real()) return {false, "non-real coefficient"};
    coeffs.push_back(z.re());
  }
  if (combine_basis(b, coeffs) != lam) return {false, "coefficients do not reassemble"};
  bool ok = check_prop5(b, coeffs) && is_unitary(lam) && squares_to_neg_identity(lam) &&
            is_single_thread_unit(lam, b.threads()).has_value();
  return {ok, "coefficients 1/2 on alpha_2, alpha_6, alpha_9 and -1/2 on alpha_4"};
}

Outcome lambda_enumeration() {
  constexpr std::size_t kPinned = 160;
  auto b = basis(2);
  std::set<std::string> oracle;
  std::size_t patterns = 0;
  auto consider = [&](const ExactMatrix& m) {
    ++patterns;
    if (is_unitary(m) && squares_to_neg_identity(m) && MonomialMatrix::from_exact(m)) oracle.insert(to_string(m));
  };
  for (int k = 1; k <= 16; ++k) {
    consider(b[k].matrix);
    consider(-b[k].matrix);
  }
  const GaussianRational h(Rational(1, 2));
  for (int p = 1; p <= 16; ++p)
    for (int q = p + 1; q <= 16; ++q)
      for (int r = q + 1; r <= 16; ++r)
        for (int s = r + 1; s <= 16; ++s)
          for (int signs = 0; signs < 16; ++signs) {
            ExactMatrix m(4, 4);
            const int idx[4] = {p, q, r, s};
            for (int t = 0; t < 4; ++t) m += b[idx[t]].matrix * ((signs >> t) & 1 ? -h : h);
            consider(m);
          }
  std::set<std::string> got;
  for (const auto& c : table_a2()->items) got.insert(to_string(c.matrix()));
  std::ostringstream d;
  d << patterns << " patterns, oracle " << oracle.size() << ", enumeration " << got.size() << ", pinned " << kPinned;
  return {patterns == 29152 && got == oracle && oracle.size() == kPinned && table_a2()->size() == kPinned, d.str()};
}

Outcome fixture_check(const std::string& file, const std::vector<int>& sizes, const Rational& rate,
                      std::size_t rank) {
  auto codes = read_codes(kFixtures + "/" + file);
  if (codes.size() != 1) return {false, "expected one code"};
  const auto& c = codes[0];
  auto r = verify_report(c);
  std::ostringstream d;
  d << "signature " << r.signature.str() << ", rank " << r.rank << ", rate " << r.rate.str()
    << ", g-group " << (r.g_group.pass ? "ok" : "violated") << ", single-thread "
    << (r.single_thread.value_or(false) ? "ok" : "no");
  bool ok = r.pass() && r.signature.sizes == sizes && r.rate == rate && r.rank == rank &&
            r.single_thread.value_or(false);
  return {ok, d.str()};
}

Outcome max_rate_two_group() {
  std::string out, err;
  int code = run_cli({"search", "--a", "2", "--groups", "2", "--symmetric", "--max-rate", "--format", "json"}, out, err);
  if (code != cli::kOk) return {false, "search exited " + std::to_string(code) + ": " + err};
  auto j = json::parse(out);
  auto witnesses = codes_from_json(j["witnesses"]);
  bool witness_ok = witnesses.size() == 1 && verify_report(witnesses[0]).pass() &&
                    witnesses[0].signature().sizes == std::vector<int>{5, 5};

  bool six_empty = find_gamma_sets(table_a2(), GroupSignature{{6, 6}}).empty();
  auto pruned = find_gamma_sets(table_a2(), GroupSignature{{2, 2}});
  SearchOptions all;
  all.canonical = false;
  auto full = find_gamma_sets(table_a2(), GroupSignature{{2, 2}}, all);
  std::ostringstream d;
  d << "max rate " << j["max_rate"].get<std::string>() << ", witness " << (witness_ok ? "(5,5) verified" : "missing")
    << ", (6,6) " << (six_empty ? "empty" : "NOT empty") << ", (2,2) pruned " << pruned.size() << " x 8 = unpruned "
    << full.size();
  return {j["max_rate"] == "5/4" && witness_ok && six_empty && full.size() == 8 * pruned.size(), d.str()};
}

std::string found_list(const MaxRateResult& r, int total) {
  std::string s;
  for (const auto& t : r.log)
    if (t.signature.total() == total && t.found) s += (s.empty() ? "" : " ") + t.signature.str();
  return s.empty() ? "none" : s;
}

bool all_empty(const MaxRateResult& r, int total) {
  bool seen = false;
  for (const auto& t : r.log)
    if (t.signature.total() == total) {
      seen = true;
      if (t.found) return false;
    }
  return seen;
}

bool has_224_witness(const MaxRateResult& r) {
  for (const auto& w : r.witnesses) {
    auto s = w.signature().sizes;
    std::sort(s.begin(), s.end());
    if (s == std::vector<int>{2, 2, 4} && verify_report(w).pass()) return true;
  }
  return false;
}

Outcome max_rate_three_group_literal() {
  auto r = max_rate_search(2, 3, false);
  std::ostringstream d;
  d << "max rate " << r.max_rate.str() << "; total-10 signatures with a generating set: " << found_list(r, 10);
  if (!r.witnesses.empty()) {
    const auto& w = r.witnesses.front();
    d << "; witness " << w.signature().str() << " g-group " << (check_g_group(w).pass ? "ok" : "violated")
      << " rank " << weight_rank(w);
  }
  return {r.max_rate == Rational(1) && has_224_witness(r) && all_empty(r, 10), d.str()};
}

Outcome max_rate_three_group_min2() {
  MaxRateOptions o;
  o.min_group_size = 2;
  auto r = max_rate_search(2, 3, false, o);
  std::ostringstream d;
  bool ten_empty = true;
  for (const auto& sig : signatures_with_total(10, 3, false, 2)) {
    SearchOptions so;
    so.limit = 1;
    ten_empty = ten_empty && find_gamma_sets(table_a2(), sig, so).empty();
  }
  d << "max rate " << r.max_rate.str() << ", witness " << (has_224_witness(r) ? "(2,2,4) verified" : "missing")
    << ", total 9 " << (all_empty(r, 9) ? "empty" : "NOT empty") << ", total 10 " << (ten_empty ? "empty" : "NOT empty");
  return {r.max_rate == Rational(1) && has_224_witness(r) && all_empty(r, 9) && ten_empty, d.str()};
}

Outcome complexity_table() {
  struct Row {
    std::vector<int> sizes;
    ConstellationKind kind;
    std::string want;
  };
  const std::vector<Row> rows{{{5, 5}, ConstellationKind::SquareQam, "2M^2"},
                              {{5, 5}, ConstellationKind::NonRectangular, "2M^3"},
                              {{2, 2, 4}, ConstellationKind::SquareQam, "2sqrt(M) + M^1.5"},
                              {{2, 2, 4}, ConstellationKind::NonRectangular, "2M + M^2"}};
  std::string detail;
  bool ok = true;
  for (const auto& r : rows) {
    auto got = decoding_complexity(GroupSignature{r.sizes}, 16, r.kind).order.expression();
    ok = ok && got == r.want;
    detail += (detail.empty() ? "" : ", ") + str(r.sizes) + " " + to_string(r.kind) + " " + got;
  }
  int referenced = 0;
  for (const auto& row : complexity_reference_table()) {
    if (!row.external) continue;
    ++referenced;
    ok = ok && (row.max_rate == "3/4" || row.max_rate == "17/8");
  }
  ok = ok && referenced == 2;
  return {ok, detail + "; 3/4 and 17/8 rows reported as referenced"};
}

Outcome coding_gain_check() {
  auto c = read_codes(kFixtures + "/rate5_4_two_group.json").at(0);
  auto qpsk = ConstellationSpec::square_qam(4);  // real-axis differences {0, +-2}
  auto per = coding_gain(c, qpsk, GainMode::PerGroup);
  auto toy = StbcCode::from_groups({{ExactMatrix::identity(4)}, {r4(1)}});
  auto tp = coding_gain(toy, qpsk, GainMode::PerGroup);
  auto tc = coding_gain(toy, qpsk, GainMode::Composite);
  Rational min_per = *std::min_element(tp.per_group.begin(), tp.per_group.end());
  std::ostringstream d;
  d << "rate-5/4 code delta " << per.overall.str() << "; (1,1) toy composite " << tc.overall.str()
    << " vs min per-group " << min_per.str();
  return {per.overall.is_zero() && tc.overall == min_per && check_g_group(toy).pass, d.str()};
}

Outcome property_suites() {
  std::size_t checked = 0;
  for (int a = 1; a <= 2; ++a) {
    auto b = basis(a);
    const GaussianRational n(static_cast<std::int64_t>(b.dim()));
    for (int m = 1; m <= static_cast<int>(b.size()); ++m)
      for (int k = 1; k <= static_cast<int>(b.size()); ++k, ++checked)
        if (trace(conj_transpose(b[m].matrix) * b[k].matrix) != (m == k ? n : GaussianRational(0)))
          return {false, "trace orthogonality fails"};
  }
  std::size_t lambdas = 0;
  for (int a = 1; a <= 2; ++a) {
    auto t = enumerate_lambdas(a);
    for (const auto& c : t.items) {
      auto rec = recover_coefficients(*t.basis, c.matrix());
      auto want = c.coeffs(t.basis->size());
      for (std::size_t k = 0; k < rec.size(); ++k)
        if (rec[k] != GaussianRational(want[k])) return {false, "coefficient recovery fails"};
      ++lambdas;
    }
  }
  std::size_t codes = 0, cuts = 0;
  for (const auto& sizes : std::vector<std::vector<int>>{{1, 1}, {2, 2}, {3, 2, 2}, {4, 2, 2}, {5, 5}, {2, 2, 2}}) {
    SearchOptions so;
    so.limit = 60;
    for (const auto& gs : find_gamma_sets(table_a2(), GroupSignature{sizes}, so)) {
      if (gamma_violation(gs.materialize())) return {false, "searched set fails the matrix check"};
      auto code = reconstruct_weights(gs);
      if (!verify_report(code).pass()) return {false, "searched code fails verification"};
      ++codes;
      for (std::size_t drop = 0; drop < 4; ++drop) {
        std::vector<std::size_t> keep;
        for (std::size_t col = 0; col < 4; ++col)
          if (col != drop) keep.push_back(col);
        StbcCode cut = code;
        for (auto& g : cut.groups)
          for (auto& m : g) m = select_columns(m, keep);
        cut.antennas = keep.size();
        if (!check_g_group(cut).pass) return {false, "column removal broke the cross-group condition"};
        ++cuts;
      }
    }
  }
  std::ostringstream d;
  d << checked << " trace pairs, " << lambdas << " lambdas recovered, " << codes << " codes re-verified, " << cuts
    << " column cuts";
  return {true, d.str()};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"1", "basis reproduction", 1, basis_reproduction},
      {"2", "generator relations", 1, generator_properties},
      {"3", "lambda admissibility", 1, lambda_admissibility},
      {"4", "lambda enumeration cross-validation", 60, lambda_enumeration},
      {"5", "rate-5/4 two-group code", 1,
       [] { return fixture_check("rate5_4_two_group.json", {5, 5}, Rational(5, 4), 10); }},
      {"6", "rate-1 three-group code", 1,
       [] { return fixture_check("rate1_three_group.json", {2, 2, 4}, Rational(1), 8); }},
      {"7", "max rate, two groups, symmetric", 3600, max_rate_two_group},
      {"8a", "max rate, three groups, non-symmetric", 3600, max_rate_three_group_literal},
      {"8b", "max rate, three groups, every group of size >= 2", 3600, max_rate_three_group_min2},
      {"9", "complexity table", 1, complexity_table},
      {"10", "coding gain", 60, coding_gain_check},
      {"11", "property suites", 60, property_suites},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.limit_seconds) {
      o.pass = false;
      o.detail += "; exceeded " + std::to_string(static_cast<int>(c.limit_seconds)) + " s";
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.title << " (" << std::fixed
              << std::setprecision(3) << secs << " s): " << o.detail << std::endl;
  }
  std::cout << (failed ? "FAILED " : "ALL PASSED ") << criteria.size() - static_cast<std::size_t>(failed) << "/"
            << criteria.size() << std::endl;
  return failed ? 1 : 0;
}
