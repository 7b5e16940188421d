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
 * @file io.hpp
 * @brief JSON encoding of matrices, codes, candidates and reports.
 *
 * A matrix is an array of rows, each row an array of entry strings in the
 * exact grammar ("0", "-1/2", "j", "1/2-1/2j", ...). A code record is
 *
 *     {"a": 2, "T": 4, "n_t": 4, "signature": [5, 5], "rate": "5/4",
 *      "groups": [[M, ...], [M, ...]], "provenance": {...}}
 *
 * and a code file holds either one record or an array of them.
 */
#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "stbc/clifford.hpp"
#include "stbc/code.hpp"
#include "stbc/codecheck.hpp"
#include "stbc/errors.hpp"
#include "stbc/exact_matrix.hpp"
#include "stbc/lambda.hpp"

namespace stbc {

using json = nlohmann::ordered_json;

inline json matrix_to_json(const ExactMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline ExactMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("matrix must be a non-empty array of rows");
  const std::size_t rows = j.size();
  if (!j[0].is_array() || j[0].empty()) throw ParseError("matrix rows must be non-empty arrays");
  const std::size_t cols = j[0].size();
  ExactMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw ParseError("matrix rows differ in length");
    for (std::size_t c = 0; c < cols; ++c) {
      const auto& e = j[r][c];
      if (e.is_string()) m(r, c) = parse_entry(e.get<std::string>());
      else if (e.is_number_integer()) m(r, c) = GaussianRational(e.get<std::int64_t>());
      else throw ParseError("matrix entries must be strings in the exact grammar");
    }
  }
  return m;
}

inline json signature_to_json(const GroupSignature& s) { return s.sizes; }

inline json gamma_to_json(const GammaMatrices& g) {
  json j;
  j["lambda_11"] = matrix_to_json(g.lambda_11);
  j["lambda_k1"] = json::array();
  for (const auto& m : g.lambda_k1) j["lambda_k1"].push_back(matrix_to_json(m));
  j["lambda_1l"] = json::array();
  for (const auto& m : g.lambda_1l) j["lambda_1l"].push_back(matrix_to_json(m));
  j["sub_sizes"] = g.sub_sizes;
  return j;
}

inline GammaMatrices gamma_from_json(const json& j) {
  GammaMatrices g;
  try {
    g.lambda_11 = matrix_from_json(j.at("lambda_11"));
    for (const auto& m : j.at("lambda_k1")) g.lambda_k1.push_back(matrix_from_json(m));
    for (const auto& m : j.at("lambda_1l")) g.lambda_1l.push_back(matrix_from_json(m));
    g.sub_sizes = j.at("sub_sizes").get<std::vector<int>>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("provenance: ") + e.what());
  }
  return g;
}

inline json code_to_json(const StbcCode& c) {
  json j;
  j["a"] = c.a;
  j["T"] = c.period;
  j["n_t"] = c.antennas;
  j["signature"] = signature_to_json(c.signature());
  j["rate"] = c.rate().str();
  j["groups"] = json::array();
  for (const auto& g : c.groups) {
    json grp = json::array();
    for (const auto& m : g) grp.push_back(matrix_to_json(m));
    j["groups"].push_back(std::move(grp));
  }
  if (c.provenance) {
    j["provenance"]["gamma"] = gamma_to_json(c.provenance->gamma);
    j["provenance"]["a1"] = matrix_to_json(c.provenance->a1);
  }
  return j;
}

/// Parses one code record. Stored signature and rate, when present, must
/// agree with the matrices.
inline StbcCode code_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("code record must be an object");
  std::vector<std::vector<ExactMatrix>> groups;
  try {
    for (const auto& g : j.at("groups")) {
      if (!g.is_array()) throw ParseError("each group must be an array of matrices");
      std::vector<ExactMatrix> ms;
      for (const auto& m : g) ms.push_back(matrix_from_json(m));
      groups.push_back(std::move(ms));
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("code record: ") + e.what());
  }
  StbcCode c;
  try {
    c = StbcCode::from_groups(std::move(groups));
  } catch (const ShapeError& e) {
    throw ParseError(std::string("code record: ") + e.what());
  }
  if (j.contains("signature") && j["signature"].get<std::vector<int>>() != c.signature().sizes)
    throw ParseError("code record: signature does not match the groups");
  if (j.contains("rate") && j["rate"].get<std::string>() != c.rate().str())
    throw ParseError("code record: rate does not match the groups");
  if (j.contains("a") && j["a"].get<int>() != c.a) throw ParseError("code record: a does not match T");
  if (j.contains("provenance")) {
    const auto& p = j["provenance"];
    try {
      c.provenance = Provenance{gamma_from_json(p.at("gamma")), matrix_from_json(p.at("a1"))};
    } catch (const json::exception& e) {
      throw ParseError(std::string("provenance: ") + e.what());
    }
  }
  return c;
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

inline std::vector<StbcCode> codes_from_json(const json& j) {
  std::vector<StbcCode> out;
  if (j.is_array()) {
    for (const auto& c : j) out.push_back(code_from_json(c));
  } else {
    out.push_back(code_from_json(j));
  }
  return out;
}

inline std::vector<StbcCode> read_codes(const std::string& path) { return codes_from_json(read_json_file(path)); }

inline json codes_to_json(const std::vector<StbcCode>& codes) {
  json arr = json::array();
  for (const auto& c : codes) arr.push_back(code_to_json(c));
  return arr;
}

inline json basis_to_json(const CliffordBasis& b) {
  json j;
  j["a"] = b.a();
  j["dim"] = b.dim();
  j["elements"] = json::array();
  for (const auto& e : b.elements()) {
    json x;
    x["index"] = e.index;
    x["generators"] = e.gen_subset;
    x["phase_power"] = e.phase_power;
    x["thread"] = b.thread_of(e.index);
    x["matrix"] = matrix_to_json(e.matrix);
    j["elements"].push_back(std::move(x));
  }
  j["threads"] = json::array();
  for (const auto& t : b.threads()) j["threads"].push_back(matrix_to_json(t));
  return j;
}

inline json lambda_to_json(const LambdaCandidate& c) {
  json j;
  j["support"] = c.support();
  json vals = json::array();
  for (const auto& v : c.values()) vals.push_back(v.str());
  j["coefficients"] = std::move(vals);
  j["threads"] = c.threads();
  j["matrix"] = matrix_to_json(c.matrix());
  return j;
}

inline json lambdas_to_json(const LambdaTable& t) {
  json j;
  j["a"] = t.a;
  j["count"] = t.size();
  j["lambdas"] = json::array();
  for (const auto& c : t.items) j["lambdas"].push_back(lambda_to_json(c));
  return j;
}

inline json complexity_to_json(const DecodingComplexity& d) {
  json j;
  j["expression"] = d.order.expression();
  j["value"] = d.value;
  j["structure_preserved"] = d.structure_preserved;
  return j;
}

inline json coding_gain_to_json(const CodingGainReport& r) {
  json j;
  json per = json::array();
  for (const auto& v : r.per_group) per.push_back(v.str());
  j["per_group"] = std::move(per);
  j["overall"] = r.overall.str();
  json at = json::array();
  for (const auto& v : r.attained_at) at.push_back(v.str());
  j["attained_at"] = std::move(at);
  return j;
}

inline json report_to_json(const VerifyReport& r) {
  json j;
  j["signature"] = signature_to_json(r.signature);
  j["rate"] = r.rate.str();
  j["pass"] = r.pass();
  json checks;
  checks["g_group"]["pass"] = r.g_group.pass;
  if (r.g_group.violation) {
    const auto& v = *r.g_group.violation;
    checks["g_group"]["violation"] = {{"group_i", v.group_i}, {"group_j", v.group_j}, {"k", v.index_k},
                                      {"l", v.index_l}, {"residual", matrix_to_json(v.residual)}};
  }
  checks["independence"] = {{"pass", r.independent}, {"rank", r.rank}};
  if (r.single_thread) checks["single_thread"] = {{"pass", *r.single_thread}};
  else checks["single_thread"] = {{"pass", nullptr}, {"skipped", "columns removed"}};
  j["checks"] = std::move(checks);
  j["complexity"]["M"] = r.m;
  if (r.square) j["complexity"]["square"] = complexity_to_json(*r.square);
  if (r.nonrect) j["complexity"]["nonrect"] = complexity_to_json(*r.nonrect);
  if (r.coding_gain) j["coding_gain"] = coding_gain_to_json(*r.coding_gain);
  return j;
}

}  // namespace stbc
