// Copyright 2026 The Kasteleyn Signs Authors.
//
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

#include <cmath>
#include <filesystem>

#include <gtest/gtest.h>

#include "kasteleyn/json_io.h"
#include "kasteleyn/random.h"
#include "kasteleyn/render.h"
#include "kasteleyn/verify.h"
#include "test_graphs.h"

namespace kasteleyn {
namespace {

std::string Data(const char* name) {
  return ReadFile(std::filesystem::path(KASTELEYN_TEST_DATA_DIR) / name);
}

ErrorCode ParseCode(const std::function<void()>& body) {
  try {
    body();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "accepted";
  return ErrorCode::kVerificationFailed;
}

TEST(JsonIoTest, GraphDefaultsToSymbolicWeights) {
  GraphFile file = ParseGraph(Data("k2_symbolic.json"));
  EXPECT_EQ(file.graph.num_vertices(), 2);
  EXPECT_EQ(file.weights.at(1), Polynomial::Variable(1));
}

TEST(JsonIoTest, GraphRoundTrip) {
  GraphFile file = ParseGraph(Data("k33_unit.json"));
  GraphFile again = ParseGraph(GraphToJson(file.graph, file.weights));
  EXPECT_EQ(again.graph.edges().size(), 9u);
  EXPECT_EQ(again.weights, file.weights);
  EXPECT_EQ(GraphToJson(again.graph, again.weights),
            GraphToJson(file.graph, file.weights));
}

TEST(JsonIoTest, GraphErrors) {
  EXPECT_EQ(ParseCode([] { ParseGraph("{"); }), ErrorCode::kParse);
  EXPECT_EQ(ParseCode([] { ParseGraph(R"({"n":2})"); }), ErrorCode::kParse);
  EXPECT_EQ(ParseCode([] { ParseGraph(Data("loop.json")); }), ErrorCode::kLoopEdge);
  EXPECT_EQ(ParseCode([] {
              ParseGraph(R"({"n":2,"edges":[{"id":1,"u":1,"v":2,"weight":"x1-x1"}]})");
            }),
            ErrorCode::kZeroWeight);
  EXPECT_EQ(ParseCode([] {
              ParseGraph(R"({"n":2,"edges":[{"id":1,"u":1,"v":2,"weight":"x"}]})");
            }),
            ErrorCode::kParse);
}

TEST(JsonIoTest, ProfileRoundTripAndAccumulation) {
  CrossingProfile p = ParseProfile(Data("k33_stembridge_profile.json"));
  Graph g = testing::K33();
  EXPECT_EQ(p, StembridgeProfile(g, VertexOrder::Identity(6)));
  EXPECT_EQ(ParseProfile(ProfileToJson(p)), p);
  CrossingProfile twice =
      ParseProfile(R"({"cross":[{"e1":1,"e2":2,"count":1},{"e1":2,"e2":1,"count":2}]})");
  EXPECT_EQ(twice.cross(1, 2), 3);
  EXPECT_EQ(ParseCode([] { ParseProfile(R"({"cross":[{"e1":1,"e2":2,"count":-1}]})"); }),
            ErrorCode::kNegativeCount);
}

TEST(JsonIoTest, ScriptFixtureIsTheK33Script) {
  std::vector<Move> script = ParseScript(Data("k33_script.json"));
  EXPECT_EQ(ScriptToJson(script), ScriptToJson(testing::K33Script()));
  EXPECT_TRUE(ParseScript(Data("empty_script.json")).empty());
  EXPECT_EQ(ParseCode([] { ParseScript(R"([{"type":"teleport"}])"); }),
            ErrorCode::kParse);
  EXPECT_EQ(ParseCode([] {
              ParseScript(
                  R"([{"type":"vertex_transition","e":1,"v":3,"deltas":[{"f":2,"d":1},{"f":2,"d":1}]}])");
            }),
            ErrorCode::kParse);
}

TEST(JsonIoTest, ModificationAndLedger) {
  SignModification mod({2, 7});
  EXPECT_EQ(ModificationToJson(mod), R"({"flips":[2,7]})");
  EXPECT_EQ(ParseModification(ModificationToJson(mod)), mod);
  Ledger ledger;
  ledger.Flip(7);
  ledger.Flip(7);
  EXPECT_EQ(LedgerToJson(ledger), R"({"flips":[{"count":2,"e":7}]})");
}

int CountOf(const std::string& haystack, const std::string& needle) {
  int count = 0;
  for (std::size_t at = haystack.find(needle); at != std::string::npos;
       at = haystack.find(needle, at + 1)) {
    ++count;
  }
  return count;
}

TEST(RenderTest, MarkerCounts) {
  EXPECT_EQ(CountOf(RenderStembridgeSvg(testing::Complete(2), VertexOrder::Identity(2)),
                    "class=\"crossing\""),
            0);
  std::string k4 = RenderStembridgeSvg(testing::Complete(4), VertexOrder::Identity(4));
  EXPECT_EQ(CountOf(k4, "class=\"crossing\""), 1);
  EXPECT_EQ(CountOf(k4, "class=\"vertex\""), 4);
  EXPECT_EQ(CountOf(k4, "<path "), 6);
  Graph k33 = testing::K33();
  EXPECT_EQ(CountOf(RenderStembridgeSvg(k33, VertexOrder::Identity(6)),
                    "class=\"crossing\""),
            3);
}

TEST(RenderTest, MarkerSitsOnBothCircles) {
  Point p = HalfCircleCrossing(1, 3, 2, 4);
  EXPECT_DOUBLE_EQ(p.x, 2.5);
  EXPECT_DOUBLE_EQ(p.y, std::sqrt(0.75));
  Rng rng(113);
  for (int trial = 0; trial < 200; ++trial) {
    int a = static_cast<int>(rng.Uniform(1, 20));
    int c = a + static_cast<int>(rng.Uniform(1, 10));
    int b = c + static_cast<int>(rng.Uniform(1, 10));
    int d = b + static_cast<int>(rng.Uniform(1, 10));
    Point q = HalfCircleCrossing(a, b, c, d);
    EXPECT_NEAR(std::hypot(q.x - (a + b) / 2.0, q.y), (b - a) / 2.0, 1e-9);
    EXPECT_NEAR(std::hypot(q.x - (c + d) / 2.0, q.y), (d - c) / 2.0, 1e-9);
    EXPECT_GT(q.y, 0.0);
  }
}

TEST(RenderTest, Deterministic) {
  Graph g = testing::Grid(2, 3);
  VertexOrder order({3, 1, 6, 2, 5, 4});
  EXPECT_EQ(RenderStembridgeSvg(g, order), RenderStembridgeSvg(g, order));
}

TEST(VerifyTest, PassesAndIsDeterministic) {
  VerifyOptions options;
  options.trials = 40;
  VerifyReport a = RunVerify(options);
  VerifyReport b = RunVerify(options);
  EXPECT_TRUE(a.ok()) << a.ToString();
  EXPECT_EQ(a.ToString(), b.ToString());
  EXPECT_EQ(a.suites.size(), 4u);
  for (const SuiteResult& s : a.suites) EXPECT_GT(s.passed, 0) << s.name;
  EXPECT_NE(a.ToString().find("seed = 20260101"), std::string::npos);
}

TEST(VerifyTest, InjectedFaultIsCaught) {
  VerifyOptions options;
  options.trials = 20;
  options.inject_fault = true;
  VerifyReport report = RunVerify(options);
  EXPECT_FALSE(report.ok());
  for (const SuiteResult& s : report.suites) EXPECT_GT(s.failed, 0) << s.name;
}

}  // namespace
}  // namespace kasteleyn
