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
 * @file cli.hpp
 * @brief The `stbc` command line: subcommands, manifests and exit codes.
 *
 * Needs OpenSSL's libcrypto for the SHA-256 digests in manifests.
 */
#pragma once

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <openssl/evp.h>

#include "stbc/clifford.hpp"
#include "stbc/codecheck.hpp"
#include "stbc/io.hpp"
#include "stbc/lambda.hpp"
#include "stbc/search.hpp"

#ifndef UWSTBC_VERSION
#define UWSTBC_VERSION "0.0.0"
#endif
#ifndef UWSTBC_FIXTURES_DIR
#define UWSTBC_FIXTURES_DIR "fixtures"
#endif

namespace stbc::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,  ///< a verification or reproduction check did not pass
  kUsage = 2,
  kParse = 3,
  kDomain = 4,
  kResource = 5,
  kVerification = 6,
  kShape = 7,
  kIo = 8,
  kInternal = 70,
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string sha256_hex(std::string_view data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 failed");
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return os.str();
}

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << text;
  if (!out) throw IoError("write failed: " + path);
}

/// Serialized form of every JSON artifact: two-space indent plus newline.
inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

/// Provenance record written next to artifacts.
struct ReproManifest {
  std::string command_line;
  json config;  ///< semantic flags only; no paths, no worker count
  double seconds = 0;
  json digests = json::object();

  std::string config_hash() const { return sha256_hex(config.dump()); }

  json to_json() const {
    json j;
    j["tool"] = "stbc";
    j["version"] = UWSTBC_VERSION;
    j["command_line"] = command_line;
    j["config"] = config;
    j["config_hash"] = config_hash();
    j["seconds"] = seconds;
    j["digests"] = digests;
    return j;
  }
};

// ---------------------------------------------------------------------------
// Human-readable output

inline std::string matrix_table(const ExactMatrix& m, const std::string& indent = "  ") {
  std::vector<std::string> cells;
  std::size_t width = 1;
  for (const auto& z : m.entries()) {
    cells.push_back(to_string(z));
    width = std::max(width, cells.back().size());
  }
  std::ostringstream os;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << indent << "[";
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << std::setw(static_cast<int>(width)) << cells[r * m.cols() + c];
    os << " ]\n";
  }
  return os.str();
}

inline std::string basis_table(const CliffordBasis& b) {
  std::ostringstream os;
  for (const auto& e : b.elements()) {
    os << "alpha_" << e.index << " = ";
    if (e.phase_power == 1) os << "j ";
    if (e.phase_power == 2) os << "-";
    if (e.phase_power == 3) os << "-j ";
    if (e.gen_subset.empty()) os << "I";
    for (std::size_t i = 0; i < e.gen_subset.size(); ++i) os << (i ? " " : "") << "R" << e.gen_subset[i];
    os << "   (thread T_" << b.thread_of(e.index) << ")\n" << matrix_table(e.matrix);
  }
  return os.str();
}

inline std::string code_table(const StbcCode& c) {
  std::ostringstream os;
  os << "code " << c.signature().str() << "  rate " << c.rate().str() << " cspcu  T=" << c.period
     << "  n_t=" << c.antennas << "\n";
  for (std::size_t g = 0; g < c.groups.size(); ++g)
    for (std::size_t k = 0; k < c.groups[g].size(); ++k)
      os << " group " << g + 1 << " #" << k + 1 << "\n" << matrix_table(c.groups[g][k], "   ");
  return os.str();
}

// ---------------------------------------------------------------------------

namespace detail {

inline std::string join_args(const std::vector<std::string>& args) {
  std::string s = "stbc";
  for (const auto& a : args) s += " " + a;
  return s;
}

inline ConstellationSpec parse_constellation(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw DomainError("constellation must be square:M or custom:<file>");
  std::string kind = text.substr(0, colon), rest = text.substr(colon + 1);
  if (kind == "square") {
    std::int64_t m = 0;
    try {
      std::size_t used = 0;
      m = std::stoll(rest, &used);
      if (used != rest.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw DomainError("square:M needs an integer M");
    }
    return ConstellationSpec::square_qam(m);
  }
  if (kind == "custom") {
    json j = read_json_file(rest);
    ConstellationSpec cs;
    try {
      std::string k = j.at("kind").get<std::string>();
      if (k == "square") cs.kind = ConstellationKind::SquareQam;
      else if (k == "nonrect") cs.kind = ConstellationKind::NonRectangular;
      else throw ParseError("constellation kind must be square or nonrect");
      cs.m = j.at("M").get<std::int64_t>();
      for (const auto& v : j.at("real_axis_values")) {
        GaussianRational z = parse_entry(v.is_string() ? v.get<std::string>() : v.dump());
        if (!z.is_real()) throw ParseError("real_axis_values must be real");
        cs.real_axis_values.push_back(z.re());
      }
    } catch (const json::exception& e) {
      throw ParseError(std::string("constellation file: ") + e.what());
    }
    if (cs.kind == ConstellationKind::SquareQam) {
      decoding_complexity(GroupSignature{{1}}, cs.m, cs.kind);
      std::int64_t side = 1;
      while (side * side < cs.m) ++side;
      if (static_cast<std::int64_t>(cs.real_axis_values.size()) != side)
        throw DomainError("square QAM needs sqrt(M) real-axis values");
    }
    return cs;
  }
  throw DomainError("constellation must be square:M or custom:<file>");
}

inline ConstellationKind parse_kind(const std::string& s) {
  if (s == "square") return ConstellationKind::SquareQam;
  if (s == "nonrect") return ConstellationKind::NonRectangular;
  throw DomainError("kind must be square or nonrect");
}

inline json error_json(const std::string& kind, const std::string& message, int code) {
  json j;
  j["error"] = {{"kind", kind}, {"message", message}, {"exit_code", code}};
  return j;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Reproduction of the published tables

/// Digests of the canonical reproduction artifacts (see `repro`).
struct ExpectedDigest {
  const char* name;
  const char* sha256;
};

inline const std::vector<ExpectedDigest>& expected_repro_digests() {
  static const std::vector<ExpectedDigest> d = {
      {"basis_a2",
       "b829518c942408005ef63403adf6c0f84ee937e38228ba776807f3657c11514c"},
      {"verify_rate5_4",
       "73626178ec7d59a2f78a79bdf9003e7c0972a03486842dce8099b75e44b6df1d"},
      {"verify_rate1",
       "d470b566f83fc128c8ca2da1c89ee417e54fcc256dd18ea23f90012ec4674696"},
      {"max_rate_g2_sym",
       "c4c0c60c27382770ac78edeb98319d044ce59ab3c4a7d90a913cd1922b84017b"},
      {"max_rate_g3_nonsym",
       "1701d799219c1a38e5a4078e23f846b50de8628f79689780758a1c9ea9747c2b"},
      {"max_rate_g3_sym",
       "4fccb2c317a561f48091cecef4f10cf344fb959056cf24e1e7781080c5e417e8"},
  };
  return d;
}

inline json max_rate_to_json(const MaxRateResult& r, bool with_timing) {
  json j;
  j["a"] = r.a;
  j["groups"] = r.groups;
  j["symmetric"] = r.symmetric;
  j["min_group_size"] = r.min_group_size;
  j["max_total"] = r.max_total;
  j["max_rate"] = r.max_rate.str();
  json tried = json::array();
  for (const auto& t : r.log) {
    json x = {{"signature", t.signature.sizes}, {"found", t.found}};
    if (with_timing) x["seconds"] = t.seconds;
    tried.push_back(std::move(x));
  }
  j["tried"] = std::move(tried);
  j["witnesses"] = codes_to_json(r.witnesses);
  return j;
}

struct ReproStep {
  std::string name;
  bool pass = false;
  std::string detail;
};

/**
 * Regenerates the basis for a = 2, re-verifies the bundled codes and runs
 * the maximum-rate searches. Each artifact's digest is compared with the
 * recorded one.
 */
inline std::vector<ReproStep> run_repro(const std::string& fixtures, unsigned workers, json& digests) {
  std::vector<ReproStep> steps;
  auto record = [&](const std::string& name, const json& artifact, bool ok, std::string detail) {
    std::string d = sha256_hex(dump(artifact));
    digests[name] = d;
    std::string want;
    for (const auto& e : expected_repro_digests())
      if (name == e.name) want = e.sha256;
    bool same = want == d;
    if (!same) detail += (detail.empty() ? "" : "; ") + std::string("digest ") + d.substr(0, 12) + " differs from recorded";
    steps.push_back({name, ok && same, detail});
  };

  // Basis: element k is j^delta(|S|) times the product of its generators.
  {
    auto b = basis(2);
    auto fam = generators(2);
    bool ok = b.size() == 16;
    for (const auto& e : b.elements()) {
      ExactMatrix want = ExactMatrix::identity(4);
      for (int g : e.gen_subset) want = want * fam.gens[static_cast<std::size_t>(g - 1)];
      want = GaussianRational::i_pow(e.gen_subset.empty() ? 1 : delta(static_cast<int>(e.gen_subset.size()))) * want;
      ok = ok && want == e.matrix;
    }
    record("basis_a2", basis_to_json(b), ok, "16 elements");
  }
  for (const auto& [name, file, rate] : {std::tuple{"verify_rate5_4", "rate5_4_two_group.json", "5/4"},
                                         std::tuple{"verify_rate1", "rate1_three_group.json", "1"}}) {
    auto codes = read_codes(fixtures + "/" + file);
    json arr = json::array();
    bool ok = codes.size() == 1;
    for (const auto& c : codes) {
      auto r = verify_report(c, ConstellationSpec::square_qam(4), true);
      ok = ok && r.pass() && r.rate.str() == rate;
      arr.push_back(report_to_json(r));
    }
    record(name, arr, ok, std::string("rate ") + rate);
  }
  MaxRateOptions mo;
  mo.workers = workers;
  {
    auto r = max_rate_search(2, 2, true, mo);
    record("max_rate_g2_sym", max_rate_to_json(r, false), r.max_rate == Rational(5, 4), "max rate " + r.max_rate.str());
  }
  {
    // Unrestricted, a rate-5/4 code with a singleton group exists; with every
    // group holding at least two symbols the maximum is 1.
    auto r = max_rate_search(2, 3, false, mo);
    MaxRateOptions m2 = mo;
    m2.min_group_size = 2;
    auto r2 = max_rate_search(2, 3, false, m2);
    bool witness = false;
    for (const auto& w : r2.witnesses) {
      auto s = w.signature().sizes;
      std::sort(s.begin(), s.end());
      witness |= s == std::vector<int>{2, 2, 4};
    }
    bool ok = r.max_rate == Rational(5, 4) && r2.max_rate == Rational(1) && witness;
    json both = json::array({max_rate_to_json(r, false), max_rate_to_json(r2, false)});
    record("max_rate_g3_nonsym", both, ok,
           "max rate " + r.max_rate.str() + "; groups >= 2: " + r2.max_rate.str());
  }
  {
    auto r = max_rate_search(2, 3, true, mo);
    record("max_rate_g3_sym", max_rate_to_json(r, false), r.max_rate <= Rational(3, 4),
           "max rate " + r.max_rate.str() + " (bound 3/4)");
  }
  return steps;
}

// ---------------------------------------------------------------------------

/// Runs one command; args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Construction and verification of multi-group decodable space-time block codes", "stbc"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(UWSTBC_VERSION));
  std::string manifest_path;

  // generate-basis
  auto* gb = app.add_subcommand("generate-basis", "Emit the anti-hermitian basis for 2^a antennas");
  int gb_a = 2, gb_sign = 1;
  std::string gb_format = "json", gb_out;
  gb->add_option("--a", gb_a, "antenna exponent (1..3)")->required();
  gb->add_option("--sign-gamma1", gb_sign, "sign of R_1 (1 or -1)")->check(CLI::IsMember({1, -1}));
  gb->add_option("--format", gb_format)->check(CLI::IsMember({"json", "table"}));
  gb->add_option("--out", gb_out, "write to file instead of stdout");
  gb->add_option("--manifest", manifest_path);

  // enumerate-lambdas
  auto* el = app.add_subcommand("enumerate-lambdas", "List admissible Lambda matrices");
  int el_a = 2;
  std::string el_emit = "json", el_out;
  bool el_large = false;
  el->add_option("--a", el_a)->required();
  el->add_option("--emit", el_emit)->check(CLI::IsMember({"json", "count"}));
  el->add_flag("--allow-a3", el_large, "permit the large a = 3 enumeration");
  el->add_option("--out", el_out);
  el->add_option("--manifest", manifest_path);

  // search
  auto* se = app.add_subcommand("search", "Search generating sets and reconstruct codes");
  int se_a = 2, se_groups = 0;
  std::vector<int> se_sizes;
  bool se_sym = false, se_max = false, se_all = false, se_large = false;
  int se_min_size = 1;
  std::optional<std::size_t> se_limit;
  std::string se_a1 = "identity", se_out, se_format = "json";
  unsigned se_workers = 1;
  std::vector<std::size_t> se_keep;
  se->add_option("--a", se_a)->required();
  se->add_option("--groups", se_groups, "number of groups g");
  se->add_option("--sizes", se_sizes, "group sizes n1,n2,...")->delimiter(',');
  se->add_flag("--symmetric", se_sym);
  se->add_flag("--max-rate", se_max, "find the maximum total over all signatures");
  se->add_option("--limit", se_limit, "stop after N generating sets");
  se->add_option("--min-group-size", se_min_size, "smallest group size tried by --max-rate")
      ->check(CLI::PositiveNumber);
  se->add_option("--a1", se_a1, "identity or a JSON matrix file");
  se->add_option("--out", se_out);
  se->add_option("--workers", se_workers)->check(CLI::PositiveNumber);
  se->add_option("--keep-columns", se_keep, "1-based columns to keep")->delimiter(',');
  se->add_option("--format", se_format)->check(CLI::IsMember({"json", "table"}));
  se->add_flag("--all-orderings", se_all, "disable sign and ordering reduction");
  se->add_flag("--allow-a3", se_large);
  se->add_option("--manifest", manifest_path);

  // verify
  auto* ve = app.add_subcommand("verify", "Check codes read from JSON");
  std::string ve_code, ve_const, ve_report, ve_mode = "per-group";
  bool ve_gain = false;
  std::uint64_t ve_budget = kDefaultGainBudget;
  ve->add_option("--code", ve_code)->required();
  ve->add_option("--constellation", ve_const, "square:M or custom:<file>");
  ve->add_flag("--coding-gain", ve_gain);
  ve->add_option("--gain-mode", ve_mode)->check(CLI::IsMember({"per-group", "composite"}));
  ve->add_option("--gain-budget", ve_budget)->check(CLI::PositiveNumber);
  ve->add_option("--report", ve_report);
  ve->add_option("--manifest", manifest_path);

  // complexity
  auto* cx = app.add_subcommand("complexity", "Decoding complexity order of a signature");
  std::vector<int> cx_sizes;
  std::int64_t cx_m = 16;
  std::string cx_kind = "square", cx_format = "text";
  cx->add_option("--sizes", cx_sizes)->delimiter(',')->required();
  cx->add_option("--M", cx_m)->required();
  cx->add_option("--kind", cx_kind)->check(CLI::IsMember({"square", "nonrect"}));
  cx->add_option("--format", cx_format)->check(CLI::IsMember({"text", "json"}));

  // repro
  auto* rp = app.add_subcommand("repro", "Reproduce the published tables and compare digests");
  bool rp_tables = false;
  std::string rp_fixtures = UWSTBC_FIXTURES_DIR;
  unsigned rp_workers = 1;
  rp->add_flag("--paper-tables", rp_tables, "run the table reproduction")->required();
  rp->add_option("--fixtures", rp_fixtures);
  rp->add_option("--workers", rp_workers)->check(CLI::PositiveNumber);
  rp->add_option("--manifest", manifest_path);

  std::vector<const char*> argv{"stbc"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << UWSTBC_VERSION << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << detail::error_json("usage", e.what(), kUsage).dump() << "\n";
    return kUsage;
  }

  ReproManifest manifest;
  manifest.command_line = detail::join_args(args);
  const auto t0 = std::chrono::steady_clock::now();
  auto emit = [&](const std::string& name, const std::string& path, const std::string& text) {
    manifest.digests[name] = sha256_hex(text);
    if (path.empty()) out << text;
    else write_text(path, text);
  };
  auto finish = [&](const std::string& artifact_path) {
    manifest.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::string path = manifest_path;
    if (path.empty() && !artifact_path.empty()) path = artifact_path + ".manifest.json";
    if (!path.empty()) write_text(path, dump(manifest.to_json()));
  };

  try {
    if (gb->parsed()) {
      manifest.config = {{"command", "generate-basis"}, {"a", gb_a}, {"sign_gamma1", gb_sign}, {"format", gb_format}};
      auto b = basis(gb_a, gb_sign);
      emit("basis", gb_out, gb_format == "json" ? dump(basis_to_json(b)) : basis_table(b));
      finish(gb_out);
      return kOk;
    }

    if (el->parsed()) {
      manifest.config = {{"command", "enumerate-lambdas"}, {"a", el_a}, {"emit", el_emit}};
      auto t = enumerate_lambdas(el_a, EnumerateOptions{el_large});
      std::size_t reps = 0;
      for (std::size_t i = 0; i < t.size(); ++i) reps += t.is_representative(i);
      if (el_emit == "count") {
        emit("lambdas", el_out, dump(json{{"a", el_a}, {"count", t.size()}, {"sign_classes", reps}}));
      } else {
        emit("lambdas", el_out, dump(lambdas_to_json(t)));
      }
      finish(el_out);
      return kOk;
    }

    if (se->parsed()) {
      // flag combinations are checked before any work starts
      if (se_max && !se_sizes.empty()) throw DomainError("--max-rate and --sizes are exclusive");
      if (se_max && se_groups < 2) throw DomainError("--max-rate needs --groups >= 2");
      if (se_max && se_limit) throw DomainError("--limit does not apply to --max-rate");
      if (!se_max && se_min_size != 1) throw DomainError("--min-group-size applies to --max-rate only");
      if (!se_max && se_sizes.empty()) throw DomainError("give --sizes or --max-rate");
      if (!se_sizes.empty() && se_groups != 0 && se_groups != static_cast<int>(se_sizes.size()))
        throw DomainError("--groups does not match the number of --sizes");
      GroupSignature sig{se_sizes};
      if (!se_max) {
        sig.validate();
        if (se_sym && !sig.symmetric()) throw DomainError("--symmetric given but sizes differ");
      }
      if (se_a == 3 && !se_large) throw DomainError("a = 3 requires --allow-a3");

      ExactMatrix a1 = ExactMatrix::identity(std::size_t{1} << std::clamp(se_a, 0, 3));
      std::string a1_digest = "identity";
      if (se_a1 != "identity") {
        std::string text = read_text(se_a1);
        a1_digest = sha256_hex(text);
        json j;
        try {
          j = json::parse(text);
        } catch (const json::parse_error& e) {
          throw ParseError(se_a1 + ": " + e.what());
        }
        a1 = matrix_from_json(j.is_object() && j.contains("a1") ? j["a1"] : j);
      }
      std::vector<std::size_t> keep0;
      for (auto c : se_keep) {
        if (c < 1) throw DomainError("--keep-columns is 1-based");
        keep0.push_back(c - 1);
      }

      manifest.config = {{"command", "search"},     {"a", se_a},
                         {"groups", se_groups},     {"sizes", se_sizes},
                         {"symmetric", se_sym},     {"max_rate", se_max},
                         {"limit", se_limit ? json(*se_limit) : json(nullptr)},
                         {"a1", a1_digest},         {"keep_columns", se_keep},
                         {"all_orderings", se_all}, {"format", se_format},
                         {"min_group_size", se_min_size}};

      auto finalize = [&](StbcCode c) {
        if (!keep0.empty()) c = remove_columns(c, keep0);
        return c;
      };
      auto render = [&](const std::vector<StbcCode>& codes) {
        std::string s;
        for (const auto& c : codes) s += code_table(c);
        return s;
      };

      if (se_max) {
        MaxRateOptions mo;
        mo.workers = se_workers;
        mo.allow_large = se_large;
        mo.min_group_size = se_min_size;
        auto r = max_rate_search(se_a, se_groups, se_sym, mo);
        if (se_a1 != "identity" || !keep0.empty()) {
          std::vector<StbcCode> redone;
          for (const auto& w : r.witnesses) redone.push_back(finalize(reconstruct_weights(w.provenance->gamma, a1)));
          r.witnesses = std::move(redone);
        }
        if (se_format == "json") {
          emit("codes", se_out, dump(max_rate_to_json(r, false)));
        } else {
          std::ostringstream os;
          os << "max rate " << r.max_rate.str() << " cspcu (total " << r.max_total << ")\n";
          for (const auto& t : r.log)
            os << "  " << t.signature.str() << (t.found ? "  found" : "  empty") << "  " << std::fixed
               << std::setprecision(3) << t.seconds << " s\n";
          emit("codes", se_out, os.str() + render(r.witnesses));
        }
        finish(se_out);
        return kOk;
      }

      auto table = std::make_shared<const LambdaTable>(enumerate_lambdas(se_a, EnumerateOptions{se_large}));
      SearchOptions so;
      so.limit = se_limit;
      so.workers = se_workers;
      so.canonical = !se_all;
      auto sets = find_gamma_sets(table, sig, so);
      std::vector<StbcCode> codes;
      for (const auto& gs : sets) codes.push_back(finalize(reconstruct_weights(gs, a1)));
      emit("codes", se_out, se_format == "json" ? dump(codes_to_json(codes)) : render(codes));
      finish(se_out);
      return kOk;
    }

    if (ve->parsed()) {
      std::optional<ConstellationSpec> cs;
      if (!ve_const.empty()) cs = detail::parse_constellation(ve_const);
      manifest.config = {{"command", "verify"},
                         {"code", sha256_hex(read_text(ve_code))},
                         {"constellation", ve_const},
                         {"coding_gain", ve_gain},
                         {"gain_mode", ve_mode},
                         {"gain_budget", ve_budget}};
      auto codes = read_codes(ve_code);
      json reports = json::array();
      bool all = true;
      for (const auto& c : codes) {
        VerifyReport r = verify_report(c, cs, false);
        if (ve_gain) {
          ConstellationSpec g = cs.value_or(ConstellationSpec::square_qam(4));
          r.coding_gain = coding_gain(c, g, ve_mode == "composite" ? GainMode::Composite : GainMode::PerGroup, ve_budget);
        }
        all = all && r.pass();
        reports.push_back(report_to_json(r));
      }
      emit("report", ve_report, dump(reports));
      if (!ve_report.empty()) out << (all ? "PASS" : "FAIL") << " " << codes.size() << " code(s)\n";
      finish(ve_report);
      return all ? kOk : kCheckFailed;
    }

    if (cx->parsed()) {
      auto d = decoding_complexity(GroupSignature{cx_sizes}, cx_m, detail::parse_kind(cx_kind));
      if (cx_format == "json") {
        json j = complexity_to_json(d);
        j["sizes"] = cx_sizes;
        j["M"] = cx_m;
        j["kind"] = cx_kind;
        out << dump(j);
      } else {
        out << d.order.expression() << "  (M=" << cx_m << ": " << std::setprecision(17) << d.value << ")\n";
      }
      return kOk;
    }

    if (rp->parsed()) {
      manifest.config = {{"command", "repro"}, {"paper_tables", rp_tables}};
      json digests = json::object();
      auto steps = run_repro(rp_fixtures, rp_workers, digests);
      manifest.digests = digests;
      bool all = true;
      for (const auto& s : steps) {
        out << (s.pass ? "PASS " : "FAIL ") << s.name << "  " << s.detail << "\n";
        all = all && s.pass;
      }
      finish("");
      return all ? kOk : kCheckFailed;
    }
  } catch (const ParseError& e) {
    err << detail::error_json("parse", e.what(), kParse).dump() << "\n";
    return kParse;
  } catch (const DomainError& e) {
    err << detail::error_json("domain", e.what(), kDomain).dump() << "\n";
    return kDomain;
  } catch (const ResourceError& e) {
    err << detail::error_json("resource", e.what(), kResource).dump() << "\n";
    return kResource;
  } catch (const VerificationError& e) {
    json j = detail::error_json("verification", e.what(), kVerification);
    j["error"]["condition"] = e.condition();
    err << j.dump() << "\n";
    return kVerification;
  } catch (const ShapeError& e) {
    err << detail::error_json("shape", e.what(), kShape).dump() << "\n";
    return kShape;
  } catch (const IoError& e) {
    err << detail::error_json("io", e.what(), kIo).dump() << "\n";
    return kIo;
  } catch (const std::exception& e) {
    err << detail::error_json("internal", e.what(), kInternal).dump() << "\n";
    return kInternal;
  }
  return kUsage;
}

}  // namespace stbc::cli
