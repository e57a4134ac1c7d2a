// Copyright 2026 The gbd Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace gbd::cli {
namespace {

using nlohmann::json;

std::string Fixture(const std::string& name) {
  return std::string(GBD_FIXTURES_DIR) + "/" + name;
}

struct Invocation {
  int code = -1;
  std::string out;
  std::string err;
  json doc;
};

Invocation Call(std::vector<std::string> args) {
  std::ostringstream out, err;
  Invocation inv;
  inv.code = Run(args, out, err);
  inv.out = out.str();
  inv.err = err.str();
  if (!inv.out.empty() && inv.out.front() == '{') inv.doc = json::parse(inv.out);
  return inv;
}

std::string Slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::path(::testing::TempDir()) /
           ("gbd_cli_" + std::string(::testing::UnitTest::GetInstance()
                                         ->current_test_info()
                                         ->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::string Tmp(const std::string& name) const { return (dir_ / name).string(); }

  std::filesystem::path dir_;
};

TEST_F(CliTest, SolveMiblpToy) {
  const auto inv = Call({"solve", "miblp", "--instance", Fixture("miblp_toy.json")});
  ASSERT_EQ(inv.code, kExitOk) << inv.err;
  EXPECT_EQ(inv.doc["status"], "optimal");
  EXPECT_NEAR(inv.doc["value"].get<double>(), -3.0, 1e-6);
  EXPECT_EQ(inv.doc["x"], json::array({1.0, 1.0}));
}

TEST_F(CliTest, SolveOtherKinds) {
  auto inv = Call({"solve", "2ssmilp", "--instance", Fixture("two_stage.json")});
  ASSERT_EQ(inv.code, kExitOk) << inv.err;
  EXPECT_NEAR(inv.doc["value"].get<double>(), -3.0, 1e-6);
  inv = Call({"solve", "lp-benders", "--seed", "3"});
  ASSERT_EQ(inv.code, kExitOk) << inv.err;
  EXPECT_NEAR(inv.doc["value"].get<double>(), 13.8333333333, 1e-6);
  inv = Call({"solve", "milp", "--instance", Fixture("ip.json"), "--beta", "5"});
  ASSERT_EQ(inv.code, kExitOk) << inv.err;
  EXPECT_NEAR(inv.doc["value"].get<double>(), 4.0, 1e-9);
}

TEST_F(CliTest, TraceCsvColumns) {
  ASSERT_EQ(Call({"solve", "miblp", "--instance", Fixture("miblp_toy.json"),
                  "--trace-out", Tmp("m.csv")}).code, kExitOk);
  const std::string m = Slurp(Tmp("m.csv"));
  EXPECT_EQ(m.substr(0, m.find('\n')), "iter,LB,UB,x,phi,rho,terms,cut_kind");
  EXPECT_NE(m.find("\n1,-inf,-2,3 2,4,1,1,optimality\n"), std::string::npos) << m;

  ASSERT_EQ(Call({"solve", "2ssmilp", "--instance", Fixture("two_stage.json"),
                  "--trace-out", Tmp("t.csv")}).code, kExitOk);
  const std::string t = Slurp(Tmp("t.csv"));
  EXPECT_EQ(t.substr(0, t.find('\n')), "iter,LB,UB,cut_type,x,sub_1,sub_2");

  ASSERT_EQ(Call({"solve", "lp-benders", "--seed", "3", "--trace-out",
                  Tmp("l.csv")}).code, kExitOk);
  const std::string l = Slurp(Tmp("l.csv"));
  EXPECT_EQ(l.substr(0, l.find('\n')), "iter,LB,UB,cut_type");
  EXPECT_NE(l.find("feasibility"), std::string::npos);
}

TEST_F(CliTest, TracesAreDeterministic) {
  for (int run = 0; run < 2; ++run) {
    ASSERT_EQ(Call({"solve", "miblp", "--seed", "4", "--trace-out",
                    Tmp("r" + std::to_string(run) + ".csv"), "--dump-cuts",
                    Tmp("c" + std::to_string(run) + ".json")}).code, kExitOk);
  }
  EXPECT_EQ(Slurp(Tmp("r0.csv")), Slurp(Tmp("r1.csv")));
  EXPECT_EQ(Slurp(Tmp("c0.json")), Slurp(Tmp("c1.json")));
  EXPECT_FALSE(Slurp(Tmp("r0.csv")).empty());
}

TEST_F(CliTest, CutDump) {
  ASSERT_EQ(Call({"solve", "miblp", "--instance", Fixture("miblp_toy.json"),
                  "--dump-cuts", Tmp("cuts.json")}).code, kExitOk);
  const json d = json::parse(Slurp(Tmp("cuts.json")));
  ASSERT_TRUE(d["cuts"].is_array());
  const json& first = d["cuts"][0];
  EXPECT_EQ(first["anchor_x"], json::array({3.0, 2.0}));
  EXPECT_NEAR(first["dual"]["terms"][0]["beta2"][0].get<double>(), 23.0 / 7.0, 1e-9);
  EXPECT_NEAR(first["primal"]["integer_cost"].get<double>(), 4.0, 1e-9);
}

TEST_F(CliTest, OutFileMatchesStdout) {
  const auto inv = Call({"solve", "2ssmilp", "--instance",
                         Fixture("two_stage.json"), "--out", Tmp("o.json")});
  ASSERT_EQ(inv.code, kExitOk);
  EXPECT_EQ(json::parse(Slurp(Tmp("o.json"))), inv.doc);
}

TEST_F(CliTest, SampleValueFunction) {
  const auto inv = Call({"sample", "vf", "--instance", Fixture("ip.json"),
                         "--grid", "0:10:0.5", "--out", Tmp("vf.csv")});
  ASSERT_EQ(inv.code, kExitOk) << inv.err;
  const std::string csv = Slurp(Tmp("vf.csv"));
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "beta,value");
  EXPECT_NE(csv.find("\n5,4\n"), std::string::npos);
  EXPECT_NE(csv.find("\n8,8\n"), std::string::npos);
  EXPECT_EQ(inv.out, csv);
}

TEST_F(CliTest, SampleNegativeGridAndDual) {
  auto inv = Call({"sample", "vf", "--instance", Fixture("ip.json"), "--grid",
                   "-2:0:1"});
  ASSERT_EQ(inv.code, kExitOk) << inv.err;
  EXPECT_EQ(inv.out, "beta,value\n-2,0\n-1,0\n0,0\n");
  inv = Call({"sample", "vf", "--instance", Fixture("ip.json"), "--grid",
              "8:8:1", "--dual-at", "8"});
  ASSERT_EQ(inv.code, kExitOk) << inv.err;
  EXPECT_EQ(inv.out, "beta,value\n8,8\n");
}

TEST_F(CliTest, SampleRho) {
  const auto inv = Call({"sample", "rho", "--instance", Fixture("toy_ref.json"),
                         "--grid", "0:10:1"});
  ASSERT_EQ(inv.code, kExitOk) << inv.err;
  EXPECT_EQ(inv.out,
            "beta,value\n0,0\n1,-1\n2,-1\n3,-2\n4,-2\n5,1\n6,-3\n7,0\n8,-4\n"
            "9,-1\n10,2\n");
}

TEST_F(CliTest, Oracles) {
  auto inv = Call({"oracle", "miblp-enum", "--instance", Fixture("miblp_toy.json")});
  ASSERT_EQ(inv.code, kExitOk) << inv.err;
  EXPECT_NEAR(inv.doc["value"].get<double>(), -3.0, 1e-9);
  inv = Call({"oracle", "2ssmilp-ef", "--instance", Fixture("two_stage.json")});
  ASSERT_EQ(inv.code, kExitOk) << inv.err;
  EXPECT_NEAR(inv.doc["value"].get<double>(), -3.0, 1e-9);
  inv = Call({"oracle", "vf-grid", "--instance", Fixture("ip.json"), "--grid", "0:2:1"});
  ASSERT_EQ(inv.code, kExitOk) << inv.err;
  EXPECT_EQ(inv.out, "beta,value\n0,0\n1,2\n2,2\n");
}

TEST_F(CliTest, ExitCodes) {
  // Seed 3 has no bilevel feasible point.
  EXPECT_EQ(Call({"solve", "miblp", "--seed", "3"}).code, kExitInfeasible);
  EXPECT_EQ(Call({"oracle", "miblp-enum", "--seed", "3"}).code, kExitInfeasible);
  EXPECT_EQ(Call({"solve", "lp-benders", "--seed", "5", "--max-iters", "1"}).code,
            kExitLimit);
  EXPECT_EQ(Call({"solve", "miblp", "--instance", Fixture("nope.json")}).code,
            kExitInput);
  EXPECT_EQ(Call({"solve", "qp", "--seed", "1"}).code, kExitInput);
  EXPECT_EQ(Call({"sample", "vf", "--instance", Fixture("ip.json"), "--grid",
                  "3:1:1"}).code,
            kExitInput);
  // Wrong kind for the subcommand.
  EXPECT_EQ(Call({"solve", "miblp", "--instance", Fixture("ip.json")}).code,
            kExitInput);
}

TEST_F(CliTest, UnboundedSecondStage) {
  std::ifstream in(Fixture("two_stage.json"));
  json d = json::parse(in);
  d["d2"] = json::array({2, 4, 3, -4});
  std::ofstream(Tmp("u.json")) << d.dump();
  EXPECT_EQ(Call({"solve", "2ssmilp", "--instance", Tmp("u.json")}).code,
            kExitUnbounded);
}

TEST_F(CliTest, ContinuousLinkingVariables) {
  std::ifstream in(Fixture("miblp_toy.json"));
  json d = json::parse(in);
  d["x_integer"] = json::array({true, false});
  std::ofstream(Tmp("c.json")) << d.dump();
  const auto inv = Call({"solve", "miblp", "--instance", Tmp("c.json")});
  EXPECT_EQ(inv.code, kExitInput);
  EXPECT_NE(inv.err.find("integer"), std::string::npos) << inv.err;
}

TEST_F(CliTest, SyntaxErrorMessage) {
  std::ofstream(Tmp("bad.json")) << "{\n \"kind\": \"miblp\",\n ]\n";
  const auto inv = Call({"solve", "miblp", "--instance", Tmp("bad.json")});
  EXPECT_EQ(inv.code, kExitInput);
  EXPECT_NE(inv.err.find("line 3"), std::string::npos) << inv.err;
}

// The real executable returns the same codes as the library entry point.
TEST_F(CliTest, BinaryExitStatus) {
  const std::string bin = GBD_BINARY;
  const std::string quiet = " > " + Tmp("stdout") + " 2> " + Tmp("stderr");
  auto status = [&](const std::string& args) {
    const int raw = std::system((bin + " " + args + quiet).c_str());
    return WEXITSTATUS(raw);
  };
  EXPECT_EQ(status("solve miblp --instance " + Fixture("miblp_toy.json")), kExitOk);
  EXPECT_EQ(status("solve miblp --seed 3"), kExitInfeasible);
  EXPECT_EQ(status("solve miblp --instance /nonexistent.json"), kExitInput);
  EXPECT_EQ(status("--help"), kExitOk);
}

}  // namespace
}  // namespace gbd::cli
