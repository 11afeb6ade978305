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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails or exceeds its time limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "kasteleyn/matching.h"
#include "kasteleyn/moves.h"
#include "kasteleyn/random.h"
#include "kasteleyn/sign_solver.h"
#include "oracles.h"
#include "test_graphs.h"

namespace kasteleyn {
namespace {

using testing::Complete;
using testing::Cycle;
using testing::Grid;
using testing::K33;
using testing::Path;
using testing::Wheel;

struct Outcome {
  bool ok = true;
  std::string detail;
};

void Check(Outcome& out, bool condition, const std::string& what) {
  if (!condition && out.ok) {
    out.ok = false;
    out.detail = what;
  }
}

Outcome SignAnchors() {
  Outcome out;
  Check(out, SignOfCrossings(3) == -1, "sign(C=3)");
  Check(out, SignOfCrossings(6) == 1, "sign(C=6)");
  CrossingProfile three;
  three.set_cross(1, 2, 1);
  three.set_cross(1, 3, 1);
  three.set_cross(2, 3, 1);
  Check(out, MatchingSign(std::vector<EdgeId>{1, 2, 3}, three) == -1,
        "three pairwise crossings");
  CrossingProfile six;
  for (EdgeId a = 1; a <= 4; ++a) {
    for (EdgeId b = a + 1; b <= 4; ++b) six.set_cross(a, b, 1);
  }
  Check(out, MatchingSign(std::vector<EdgeId>{1, 2, 3, 4}, six) == 1,
        "four pairwise crossing edges");
  return out;
}

std::vector<Graph> Corpus() {
  std::vector<Graph> corpus;
  for (int n = 2; n <= 8; ++n) corpus.push_back(Path(n));
  for (int n = 3; n <= 8; ++n) corpus.push_back(Cycle(n));
  corpus.push_back(Grid(2, 2));
  corpus.push_back(Grid(2, 3));
  corpus.push_back(Grid(2, 4));
  corpus.push_back(Complete(4));
  corpus.push_back(K33());
  for (int n = 4; n <= 8; ++n) corpus.push_back(Wheel(n));
  return corpus;
}

Outcome PfaffianOracleEquivalence() {
  Outcome out;
  Rng rng(1001);
  std::vector<std::pair<Graph, VertexOrder>> cases;
  for (Graph& g : Corpus()) {
    const int n = g.num_vertices();
    cases.emplace_back(std::move(g), VertexOrder::Identity(n));
  }
  for (int i = 0; i < 200; ++i) {
    const int n = static_cast<int>(rng.Uniform(1, 8));
    cases.emplace_back(RandomSimpleGraph(rng, n, 0.5), RandomOrder(rng, n));
  }
  int index = 0;
  for (const auto& [g, order] : cases) {
    WeightAssignment w = RandomIntegerWeights(rng, g, 5);
    Polynomial lhs = PfaffianOfGraph(g, w, order);
    Polynomial rhs = PfaffianExpand(SkewFromGraph(g, w, order));
    Check(out, lhs == rhs, "case " + std::to_string(index) + ": " +
                               lhs.ToString() + " vs " + rhs.ToString());
    ++index;
  }
  out.detail = out.ok ? std::to_string(cases.size()) + " graphs" : out.detail;
  return out;
}

Outcome PfaffianSquaredIsDeterminant() {
  Outcome out;
  Rng rng(1002);
  for (int i = 0; i < 200; ++i) {
    const int n = static_cast<int>(rng.Uniform(2, 10));
    SkewMatrix a = RandomIntegerSkewMatrix(rng, n, 5);
    Polynomial pf = PfaffianExpand(a);
    Check(out, pf * pf == Determinant(a), "matrix " + std::to_string(i));
  }
  if (out.ok) out.detail = "200 matrices";
  return out;
}

Outcome ParityOracle() {
  Outcome out;
  Rng rng(1003);
  for (int i = 0; i < 200; ++i) {
    const int n = 2 * static_cast<int>(rng.Uniform(1, 5));
    Graph g = RandomSimpleGraph(rng, n, 0.4);
    VertexOrder order = RandomOrder(rng, n);
    std::vector<Matching> all = EnumeratePerfectMatchings(g);
    const Matching& m = all[static_cast<std::size_t>(
        rng.Uniform(0, static_cast<std::int64_t>(all.size()) - 1))];
    std::vector<std::pair<int, int>> positions;
    for (EdgeId id : m) {
      positions.emplace_back(order.position(g.edge(id).u),
                             order.position(g.edge(id).v));
    }
    Check(out,
          MatchingSign(m, StembridgeProfile(g, order)) ==
              testing::InversionSignOfPairs(positions),
          "triple " + std::to_string(i));
  }
  if (out.ok) out.detail = "200 triples";
  return out;
}

Outcome MoveInvariance() {
  Outcome out;
  Rng rng(1004);
  int applied = 0;
  while (applied < 1000) {
    const int n = 2 * static_cast<int>(rng.Uniform(1, 4));
    Graph g = RandomSimpleGraph(rng, n, 0.5);
    WeightAssignment w = applied % 2 == 0 ? WeightAssignment::Symbolic(g)
                                          : RandomIntegerWeights(rng, g, 5);
    CrossingProfile p = RandomProfile(rng, g, 2);
    Ledger ledger;
    if (rng.Coin()) ledger.Flip(static_cast<EdgeId>(rng.Uniform(1, g.num_edges())));
    std::optional<Move> move = RandomValidMove(rng, g, p);
    if (!move) continue;
    MoveResult r = ApplyMove(g, p, ledger, *move);
    Polynomial before = SignedSum(g, LedgerToModification(ledger).Apply(w), p);
    Polynomial after =
        SignedSum(g, LedgerToModification(r.ledger).Apply(w), r.profile);
    Check(out, before == after, "trial " + std::to_string(applied));
    ++applied;
  }
  if (out.ok) out.detail = std::to_string(applied) + " moves";
  return out;
}

Outcome PlanarFamilies() {
  Outcome out;
  struct Family {
    const char* name;
    Graph graph;
    long long expected;
  };
  // 3x4 = 11 and 4x4 = 36 were fixed by the subset-scan oracle.
  std::vector<Family> families = {
      {"C4", Cycle(4), 2},        {"K4", Complete(4), 3},
      {"grid2x2", Grid(2, 2), 2}, {"grid2x3", Grid(2, 3), 3},
      {"grid2x4", Grid(2, 4), 5}, {"grid3x4", Grid(3, 4), 11},
      {"grid4x4", Grid(4, 4), 36},
  };
  std::string summary;
  for (const Family& f : families) {
    const long long oracle =
        static_cast<long long>(testing::SubsetScanMatchings(f.graph).size());
    Check(out, oracle == f.expected, std::string(f.name) + " oracle count");
    WeightAssignment unit = WeightAssignment::Unit(f.graph);
    VertexOrder order = VertexOrder::Identity(f.graph.num_vertices());
    try {
      SignModification mod = KasteleynWeights(f.graph, unit, order);
      Polynomial m = MatchingSum(f.graph, unit);
      Polynomial pf = PfaffianOfGraph(f.graph, mod.Apply(unit), order);
      Check(out, m == f.expected && pf == m,
            std::string(f.name) + ": m = " + m.ToString() + ", Pf = " +
                pf.ToString());
      summary += std::string(summary.empty() ? "" : " ") + f.name + "=" +
                 pf.ToString();
    } catch (const Error& e) {
      Check(out, false, std::string(f.name) + ": " + e.what());
    }
  }
  if (out.ok) out.detail = summary;
  return out;
}

Outcome EqualizeAfterScripts() {
  Outcome out;
  Rng rng(1005);
  for (int i = 0; i < 500; ++i) {
    const int n = 2 * static_cast<int>(rng.Uniform(1, 4));
    Graph g = RandomSimpleGraph(rng, n, 0.5);
    WeightAssignment w = RandomIntegerWeights(rng, g, 5);
    CrossingProfile start = StembridgeProfile(g, RandomOrder(rng, n));
    CrossingProfile profile = start;
    Ledger ledger;
    const int steps = static_cast<int>(rng.Uniform(1, 10));
    for (int s = 0; s < steps; ++s) {
      std::optional<Move> move = RandomValidMove(rng, g, profile);
      if (!move) break;
      MoveResult r = ApplyMove(g, profile, ledger, *move);
      profile = std::move(r.profile);
      ledger = std::move(r.ledger);
    }
    try {
      // Equalize recomputes both signed sums and throws on mismatch.
      Equalize(g, w, start, profile);
    } catch (const Error& e) {
      Check(out, false, "trial " + std::to_string(i) + ": " + e.what());
    }
  }
  if (out.ok) out.detail = "500 scripts";
  return out;
}

Outcome NonPlanarBoundary() {
  Outcome out;
  Graph g = K33();
  Rng rng(1006);
  for (int i = 0; i < 50; ++i) {
    VertexOrder order = RandomOrder(rng, 6);
    try {
      KasteleynWeights(g, WeightAssignment::Unit(g), order);
      Check(out, false, "order " + std::to_string(i) + " solved");
    } catch (const Error& e) {
      Check(out, e.code() == ErrorCode::kNoSolution,
            "order " + std::to_string(i) + ": " + e.what());
    }
  }
  if (out.ok) out.detail = "50 orders, all NoSolution";
  return out;
}

Outcome K33Regression() {
  Outcome out;
  Graph g = K33();
  CrossingProfile start = StembridgeProfile(g, VertexOrder::Identity(6));
  std::vector<Move> script = testing::K33Script();
  MoveResult r = ApplyScript(g, start, script);
  for (const WeightAssignment& w :
       {WeightAssignment::Unit(g), WeightAssignment::Symbolic(g)}) {
    Polynomial before = SignedSum(g, w, start);
    Polynomial after =
        SignedSum(g, LedgerToModification(r.ledger).Apply(w), r.profile);
    Check(out, before == after,
          "signed sums " + before.ToString() + " vs " + after.ToString());
  }
  Check(out, r.profile.TotalCrossings() == 1 &&
                 r.profile.cross(testing::kK33E36, testing::kK33E45) == 1,
        "final profile is not the single crossing e36 x e45");

  std::span<const Move> all(script);
  MoveResult prefix = ApplyScript(g, start, all.first(testing::kK33DragBegin));
  MoveResult drag = ApplyScript(
      g, prefix.profile,
      all.subspan(testing::kK33DragBegin,
                  testing::kK33DragEnd - testing::kK33DragBegin));
  Check(out,
        drag.ledger.flips(testing::kK33E36) == 2 &&
            LedgerToModification(drag.ledger).sign(testing::kK33E36) == 1,
        "drag over v4 and v5 does not net +1 on e36");
  if (out.ok) {
    out.detail = "s = " + SignedSum(g, WeightAssignment::Unit(g), start).ToString() +
                 ", ledger e36:" + std::to_string(r.ledger.flips(testing::kK33E36)) +
                 " e25:" + std::to_string(r.ledger.flips(testing::kK33E25));
  }
  return out;
}

struct Criterion {
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace
}  // namespace kasteleyn

int main() {
  using namespace kasteleyn;
  const std::vector<Criterion> criteria = {
      {"sign_anchors", 0.001, SignAnchors},
      {"pfaffian_oracle_equivalence", 60, PfaffianOracleEquivalence},
      {"pf_squared_equals_det", 30, PfaffianSquaredIsDeterminant},
      {"stembridge_parity_oracle", 10, ParityOracle},
      {"move_invariance", 60, MoveInvariance},
      {"kasteleyn_planar_families", 60, PlanarFamilies},
      {"equalize_after_move_scripts", 120, EqualizeAfterScripts},
      {"k33_no_solution", 30, NonPlanarBoundary},
      {"k33_script_regression", 5, K33Regression},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    const bool in_time = elapsed < c.limit_seconds;
    const bool pass = outcome.ok && in_time;
    failures += !pass;
    std::printf("%s %s (%.4f s, limit %g s)%s%s\n", pass ? "PASS" : "FAIL",
                c.name, elapsed, c.limit_seconds,
                outcome.detail.empty() ? "" : ": ", outcome.detail.c_str());
    if (outcome.ok && !in_time) std::printf("  time limit exceeded\n");
  }
  std::printf("%d/%zu criteria passed\n",
              static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
