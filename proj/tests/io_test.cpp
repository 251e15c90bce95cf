// Copyright 2026 The iqp Authors
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


#include <gtest/gtest.h>

#include "iqp/generator.hpp"
#include "iqp/io.hpp"
#include "iqp/verify.hpp"
#include "test_util.hpp"

using namespace iqp;
using iqp::io::Json;
using iqp::testing::iv;

TEST(Io, RoundTripGenerated) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    GeneratorParams g = suite_params(4, seed);
    IqpInstance inst = generate_instance(g);
    const std::string text = io::dump(io::instance_to_json(inst));
    EXPECT_EQ(io::parse_instance(Json::parse(text)), inst);
    EXPECT_EQ(io::dump(io::instance_to_json(io::parse_instance(Json::parse(text)))), text);
  }
}

TEST(Io, RoundTripEqualitiesAndBigIntegers) {
  IqpInstance inst = IqpInstance::make(IntMatrix{{1, 0}, {0, -1}}, iv({0, 0}),
                                       IntMatrix{{1, 0}}, iv({0}));
  inst.b[0] = BigInt("123456789012345678901234567890");
  inst.c0 = IntMatrix{{1, 1}};
  inst.d0 = iv({-3});
  Json j = io::instance_to_json(inst);
  EXPECT_EQ(j["b"][0], "123456789012345678901234567890");
  EXPECT_EQ(io::parse_instance(Json::parse(io::dump(j))), inst);
}

TEST(Io, AcceptsPlainIntegers) {
  auto inst = io::parse_instance(Json::parse(
      R"({"n": 1, "Q": [[-1]], "c": [0], "A": [[1], [-1]], "b": [2, 3]})"));
  EXPECT_EQ(inst.b, iv({2, 3}));
}

TEST(Io, RejectsMalformed) {
  const char* bad[] = {
      R"([1, 2])",
      R"({"Q": [["1"]], "c": ["0"], "A": [], "b": []})",
      R"({"n": "1", "Q": [["x"]], "c": ["0"], "A": [], "b": []})",
      R"({"n": "1", "Q": [["1.5"]], "c": ["0"], "A": [], "b": []})",
      R"({"n": "2", "Q": [["0", "1"], ["2", "0"]], "c": ["0", "0"], "A": [], "b": []})",
      R"({"n": "1", "Q": [["1"]], "c": ["0", "1"], "A": [], "b": []})",
      R"({"n": "1", "Q": [["1"]], "c": ["0"], "A": [["1"]], "b": []})",
      R"({"n": "1", "Q": [["1"]], "c": ["0"], "A": [], "b": [], "C": [["1"]]})",
      R"({"n": "2", "Q": [["1", "0"], ["0", "1"]], "c": ["0", "0"], "A": [], "b": [],
          "C": [["1", "1"], ["2", "2"]], "d": ["0", "0"]})",
      R"({"n": "-1", "Q": [], "c": [], "A": [], "b": []})",
  };
  for (const char* text : bad) EXPECT_THROW(io::parse_instance(Json::parse(text)), ParseError) << text;
}

TEST(Io, Polytope) {
  Polytope p = io::parse_polytope(Json::parse(R"({"A": [["1", "0"], ["0", "-1"]], "b": ["3", "0"]})"));
  EXPECT_EQ(p.dim(), 2u);
  EXPECT_EQ(p.b, iv({3, 0}));
  EXPECT_THROW(io::parse_polytope(Json::parse(R"({"A": [], "b": []})")), ParseError);
  EXPECT_THROW(io::parse_polytope(Json::parse(R"({"A": [["1"]], "b": []})")), ParseError);
}

TEST(Io, ReportHasStableKeysAndNoMemoHits) {
  SolveResult r = SolveResult::optimum(BigInt(-4), iv({0, 2}));
  r.stats.memo_hits = 17;
  Json j = io::result_to_json(r);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"status", "value", "witness", "stats"}));
  EXPECT_FALSE(j["stats"].contains("memo_hits"));
  EXPECT_EQ(io::dump(j["witness"]), "[\"0\", \"2\"]\n");
}

TEST(Verify, AgreesOnGeneratedInstances) {
  for (std::size_t i = 0; i < 6; ++i) {
    VerifyReport rep = verify_instance(generate_instance(suite_params(21, i)));
    EXPECT_FALSE(rep.skipped);
    EXPECT_TRUE(rep.ok()) << i << ": " << (rep.mismatches.empty() ? "" : rep.mismatches[0]);
  }
}

TEST(Verify, DetectsInjectedFault) {
  VerifyOptions opt;
  opt.tamper = [](SolveResult& r) { *r.value -= 1; };
  VerifyReport rep = verify_instance(generate_instance(suite_params(21, 0)), opt);
  EXPECT_FALSE(rep.ok());
  ASSERT_FALSE(rep.mismatches.empty());
  EXPECT_NE(rep.mismatches[0].find("batch: value"), std::string::npos);

  opt.tamper = [](SolveResult& r) { (*r.witness)[0] += 100; };
  EXPECT_FALSE(verify_instance(generate_instance(suite_params(21, 1)), opt).ok());
}

TEST(Verify, SkipsBeyondOracleBudget) {
  GeneratorParams g;
  g.n = 4;
  g.box = 20;
  VerifyOptions opt;
  opt.oracle_budget = 1000;
  VerifyReport rep = verify_instance(generate_instance(g), opt);
  EXPECT_TRUE(rep.skipped);
  EXPECT_TRUE(rep.ok());
  EXPECT_NE(rep.skip_reason.find("budget"), std::string::npos);
}
