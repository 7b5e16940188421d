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

#include <gtest/gtest.h>

#include <unistd.h>

#include <filesystem>
#include <sstream>

#include "stbc/cli.hpp"

using namespace stbc;
namespace fs = std::filesystem;

namespace {

const std::string kFixtures = UWSTBC_FIXTURES_DIR;

struct Result {
  int code = 0;
  std::string out, err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  Result r;
  r.code = cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("stbc_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

json error_of(const Result& r) { return json::parse(r.err).at("error"); }

}  // namespace

TEST_F(CliTest, GenerateBasisJson) {
  auto r = run({"generate-basis", "--a", "2"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  auto j = json::parse(r.out);
  ASSERT_EQ(j["elements"].size(), 16u);
  EXPECT_EQ(matrix_from_json(j["elements"][0]["matrix"]), GaussianRational::i() * ExactMatrix::identity(4));
  for (int k = 1; k <= 16; ++k)
    EXPECT_EQ(matrix_from_json(j["elements"][static_cast<std::size_t>(k - 1)]["matrix"]), basis(2)[k].matrix);
}

TEST_F(CliTest, GenerateBasisTableAndManifest) {
  auto out = path("basis.txt");
  auto r = run({"generate-basis", "--a", "1", "--format", "table", "--out", out});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_TRUE(r.out.empty());
  auto text = cli::read_text(out);
  EXPECT_NE(text.find("alpha_4"), std::string::npos);
  auto m = json::parse(cli::read_text(out + ".manifest.json"));
  EXPECT_EQ(m["digests"]["basis"], cli::sha256_hex(text));
  EXPECT_EQ(m["config"]["a"], 1);
}

TEST_F(CliTest, ManifestIsDeterministic) {
  auto a = path("a.json"), b = path("b.json");
  ASSERT_EQ(run({"search", "--a", "2", "--sizes", "2,2,1", "--limit", "5", "--out", a}).code, cli::kOk);
  ASSERT_EQ(run({"search", "--a", "2", "--sizes", "2,2,1", "--limit", "5", "--out", b, "--workers", "3"}).code,
            cli::kOk);
  auto ma = json::parse(cli::read_text(a + ".manifest.json"));
  auto mb = json::parse(cli::read_text(b + ".manifest.json"));
  EXPECT_EQ(ma["digests"], mb["digests"]);
  EXPECT_EQ(ma["config_hash"], mb["config_hash"]);
  EXPECT_EQ(cli::read_text(a), cli::read_text(b));
}

TEST_F(CliTest, EnumerateLambdas) {
  auto r = run({"enumerate-lambdas", "--a", "2", "--emit", "count"});
  ASSERT_EQ(r.code, cli::kOk);
  auto j = json::parse(r.out);
  EXPECT_EQ(j["count"], 160);
  EXPECT_EQ(j["sign_classes"], 80);
  auto full = json::parse(run({"enumerate-lambdas", "--a", "1"}).out);
  EXPECT_EQ(full["lambdas"].size(), 8u);
  auto big = run({"enumerate-lambdas", "--a", "3", "--emit", "count"});
  EXPECT_EQ(big.code, cli::kDomain);
  EXPECT_EQ(error_of(big)["kind"], "domain");
}

TEST_F(CliTest, SearchRoundTripsThroughVerify) {
  auto out = path("codes.json");
  auto r = run({"search", "--a", "2", "--sizes", "3,2,2", "--limit", "3", "--out", out});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  auto codes = read_codes(out);
  ASSERT_EQ(codes.size(), 3u);
  for (const auto& c : codes) {
    EXPECT_EQ(c.signature().sizes, (std::vector<int>{3, 2, 2}));
    ASSERT_TRUE(c.provenance);
    EXPECT_EQ(reconstruct_weights(c.provenance->gamma, c.provenance->a1).groups, c.groups);
  }
  auto v = run({"verify", "--code", out});
  EXPECT_EQ(v.code, cli::kOk) << v.err;
  auto reports = json::parse(v.out);
  ASSERT_EQ(reports.size(), 3u);
  for (const auto& rep : reports) EXPECT_TRUE(rep["pass"].get<bool>());
}

TEST_F(CliTest, SearchWithColumnsAndCustomA1) {
  auto a1 = path("a1.json");
  cli::write_text(a1, R"([["0","1","0","0"],["-1","0","0","0"],["0","0","0","j"],["0","0","j","0"]])");
  auto out = path("cut.json");
  auto r = run({"search", "--a", "2", "--sizes", "2,2", "--limit", "2", "--a1", a1, "--keep-columns", "1,2,3",
                "--out", out});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  auto j = json::parse(cli::read_text(out));
  EXPECT_EQ(j[0]["n_t"], 3);
  EXPECT_EQ(j[0]["groups"][0][0][0].size(), 3u);
  auto v = run({"verify", "--code", out});
  EXPECT_EQ(v.code, cli::kOk);
  EXPECT_TRUE(json::parse(v.out)[0]["checks"]["single_thread"]["pass"].is_null());
}

TEST_F(CliTest, MaxRateSymmetric) {
  auto r = run({"search", "--a", "2", "--groups", "2", "--symmetric", "--max-rate", "--format", "json"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  auto j = json::parse(r.out);
  EXPECT_EQ(j["max_rate"], "5/4");
  ASSERT_EQ(j["witnesses"].size(), 1u);
  EXPECT_EQ(j["tried"].back()["signature"], json::array({6, 6}));
  EXPECT_FALSE(j["tried"].back()["found"].get<bool>());
}

TEST_F(CliTest, VerifyFixturesAndFailures) {
  EXPECT_EQ(run({"verify", "--code", kFixtures + "/rate5_4_two_group.json"}).code, cli::kOk);
  auto report = path("r.json");
  auto r = run({"verify", "--code", kFixtures + "/rate1_three_group.json", "--constellation", "square:16",
                "--coding-gain", "--report", report});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_EQ(r.out, "PASS 1 code(s)\n");
  auto rep = json::parse(cli::read_text(report));
  EXPECT_EQ(rep[0]["complexity"]["square"]["expression"], "2sqrt(M) + M^1.5");
  EXPECT_TRUE(rep[0].contains("coding_gain"));

  auto bad = path("bad.json");
  json c = json::parse(cli::read_text(kFixtures + "/rate1_three_group.json"));
  c["groups"][1][0][0][1] = "1";
  cli::write_text(bad, c.dump());
  auto f = run({"verify", "--code", bad});
  EXPECT_EQ(f.code, cli::kCheckFailed);
  auto fj = json::parse(f.out);
  EXPECT_FALSE(fj[0]["pass"].get<bool>());
  EXPECT_FALSE(fj[0]["checks"]["g_group"]["pass"].get<bool>());
}

TEST_F(CliTest, VerifyCustomConstellation) {
  auto cs = path("cs.json");
  cli::write_text(cs, R"({"kind": "nonrect", "M": 8, "real_axis_values": ["-1", "0", "1"]})");
  auto r = run({"verify", "--code", kFixtures + "/rate5_4_two_group.json", "--constellation", "custom:" + cs,
                "--coding-gain"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  auto j = json::parse(r.out);
  EXPECT_EQ(j[0]["complexity"]["M"], 8);
  EXPECT_FALSE(j[0]["complexity"].contains("square"));
  EXPECT_EQ(j[0]["coding_gain"]["overall"], "0");
}

TEST_F(CliTest, ComplexityOutput) {
  auto r = run({"complexity", "--sizes", "5,5", "--M", "16", "--kind", "nonrect"});
  ASSERT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out.substr(0, 4), "2M^3");
  auto j = json::parse(run({"complexity", "--sizes", "2,2,4", "--M", "16", "--format", "json"}).out);
  EXPECT_EQ(j["expression"], "2sqrt(M) + M^1.5");
  EXPECT_EQ(j["value"], 72.0);
  EXPECT_EQ(run({"complexity", "--sizes", "2,2", "--M", "8"}).code, cli::kDomain);
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(run({}).code, cli::kUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kUsage);
  EXPECT_EQ(run({"generate-basis"}).code, cli::kUsage);
  EXPECT_EQ(run({"generate-basis", "--a", "2", "--sign-gamma1", "3"}).code, cli::kUsage);
  EXPECT_EQ(run({"generate-basis", "--a", "7"}).code, cli::kDomain);
  EXPECT_EQ(run({"search", "--a", "2", "--sizes", "2,2", "--max-rate", "--groups", "2"}).code, cli::kDomain);
  EXPECT_EQ(run({"search", "--a", "2", "--sizes", "2,3", "--symmetric"}).code, cli::kDomain);
  EXPECT_EQ(run({"search", "--a", "2", "--sizes", "2,2", "--keep-columns", "1,1"}).code, cli::kDomain);
  EXPECT_EQ(run({"search", "--a", "2", "--sizes", "2,2", "--limit", "1", "--a1", path("missing.json")}).code,
            cli::kIo);

  auto notjson = path("x.json");
  cli::write_text(notjson, "{not json");
  auto p = run({"verify", "--code", notjson});
  EXPECT_EQ(p.code, cli::kParse);
  EXPECT_EQ(error_of(p)["kind"], "parse");
  EXPECT_EQ(error_of(p)["exit_code"], cli::kParse);

  auto badgain = run({"verify", "--code", kFixtures + "/rate5_4_two_group.json", "--coding-gain", "--gain-mode",
                      "composite", "--gain-budget", "10"});
  EXPECT_EQ(badgain.code, cli::kResource);

  auto a1 = path("a1.json");
  cli::write_text(a1, R"([["1","1"],["0","1"]])");
  EXPECT_EQ(run({"search", "--a", "2", "--sizes", "2,2", "--limit", "1", "--a1", a1}).code, cli::kShape);
  cli::write_text(a1, R"([["2","0","0","0"],["0","1","0","0"],["0","0","1","0"],["0","0","0","1"]])");
  EXPECT_EQ(run({"search", "--a", "2", "--sizes", "2,2", "--limit", "1", "--a1", a1}).code, cli::kDomain);

  // dropping columns of a rate-5/4 code down to one column loses independence
  auto v = run({"search", "--a", "2", "--sizes", "5,5", "--limit", "1", "--keep-columns", "1"});
  EXPECT_EQ(v.code, cli::kVerification);
  EXPECT_EQ(error_of(v)["condition"], "independence");
}

TEST(Sha256, KnownVector) {
  EXPECT_EQ(cli::sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}
