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

#include "kasteleyn/moves.h"

#include <gtest/gtest.h>

#include "kasteleyn/matching.h"
#include "kasteleyn/random.h"
#include "test_graphs.h"

namespace kasteleyn {
namespace {

using testing::Complete;
using testing::K33;

ErrorCode CodeOf(const Graph& g, const CrossingProfile& p, const Move& m) {
  try {
    ApplyMove(g, p, Ledger(), m);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "move accepted";
  return ErrorCode::kParse;
}

// K4 ids: 1:{1,2} 2:{1,3} 3:{1,4} 4:{2,3} 5:{2,4} 6:{3,4}.

TEST(ApplyMoveTest, DoubleCrossRemovesPair) {
  Graph g = Complete(4);
  CrossingProfile p;
  p.set_cross(1, 6, 2);
  MoveResult r = ApplyMove(g, p, Ledger(), DoubleCross{1, 6, -2});
  EXPECT_EQ(r.profile.cross(1, 6), 0);
  EXPECT_TRUE(r.ledger.entries().empty());
}

TEST(ApplyMoveTest, VertexTransitionAddsOnePerIncidentEdge) {
  // Drag {1,2} over vertex 3 of K4: incident edges 2, 4, 6.
  Graph g = Complete(4);
  MoveResult r = ApplyMove(g, CrossingProfile(), Ledger(),
                           VertexTransition{1, 3, {{2, 1}, {4, 1}, {6, 1}}});
  EXPECT_EQ(r.profile.cross(1, 2), 1);
  EXPECT_EQ(r.profile.cross(1, 4), 1);
  EXPECT_EQ(r.profile.cross(1, 6), 1);
  EXPECT_EQ(r.profile.TotalCrossings(), 3);
  EXPECT_EQ(r.ledger.flips(1), 1u);
}

TEST(ApplyMoveTest, AdjacentAndSelfCross) {
  Graph g = Complete(4);
  MoveResult r = ApplyMove(g, CrossingProfile(), Ledger(), AdjacentCross{1, 2, 1});
  EXPECT_EQ(r.profile.cross(1, 2), 1);
  r = ApplyMove(g, r.profile, r.ledger, SelfCross{3, 1});
  EXPECT_EQ(r.profile.self_cross(3), 1);
  EXPECT_TRUE(r.ledger.entries().empty());
}

TEST(ApplyMoveTest, Errors) {
  Graph g = Complete(4);
  CrossingProfile zero;
  EXPECT_EQ(CodeOf(g, zero, SelfCross{1, -1}), ErrorCode::kNegativeCount);
  EXPECT_EQ(CodeOf(g, zero, AdjacentCross{1, 6, 1}), ErrorCode::kNotAdjacent);
  EXPECT_EQ(CodeOf(g, zero, AdjacentCross{1, 2, -1}), ErrorCode::kNegativeCount);
  EXPECT_EQ(CodeOf(g, zero, DoubleCross{1, 6, -2}), ErrorCode::kNegativeCount);
  EXPECT_EQ(CodeOf(g, zero, DoubleCross{1, 6, 1}), ErrorCode::kInvalidMove);
  EXPECT_EQ(CodeOf(g, zero, SelfCross{1, 2}), ErrorCode::kInvalidMove);
  EXPECT_EQ(CodeOf(g, zero, VertexTransition{1, 2, {{4, 1}, {5, 1}}}),
            ErrorCode::kEndpointVertex);
  EXPECT_EQ(CodeOf(g, zero, VertexTransition{1, 3, {{2, 1}, {4, 1}}}),
            ErrorCode::kIncompleteDeltas);
  EXPECT_EQ(CodeOf(g, zero, VertexTransition{1, 3, {{2, 1}, {4, 1}, {6, 1}, {5, 1}}}),
            ErrorCode::kIncompleteDeltas);
  EXPECT_EQ(CodeOf(g, zero, VertexTransition{1, 3, {{2, 1}, {4, -1}, {6, 1}}}),
            ErrorCode::kNegativeCount);
  EXPECT_EQ(CodeOf(g, zero, SelfCross{9, 1}), ErrorCode::kUnknownEdgeId);
}

TEST(ApplyMoveTest, FailedMoveLeavesInputUntouched) {
  Graph g = Complete(4);
  CrossingProfile p;
  p.set_cross(1, 2, 1);
  CrossingProfile before = p;
  EXPECT_THROW(ApplyMove(g, p, Ledger(), VertexTransition{1, 3, {{2, -1}, {4, -1}, {6, 1}}}),
               Error);
  EXPECT_EQ(p, before);
}

TEST(ApplyScriptTest, EmptyScript) {
  Graph g = Complete(4);
  CrossingProfile p;
  p.set_cross(2, 5, 1);
  MoveResult r = ApplyScript(g, p, {});
  EXPECT_EQ(r.profile, p);
  EXPECT_TRUE(r.ledger.entries().empty());
}

TEST(ApplyScriptTest, TransitionThereAndBack) {
  Graph g = Complete(4);
  std::vector<Move> script = {
      VertexTransition{1, 3, {{2, 1}, {4, -1}, {6, 1}}},
      VertexTransition{1, 3, {{2, -1}, {4, 1}, {6, -1}}},
  };
  CrossingProfile p;
  p.set_cross(1, 4, 1);
  MoveResult r = ApplyScript(g, p, script);
  EXPECT_EQ(r.profile, p);
  EXPECT_EQ(r.ledger.flips(1), 2u);
  EXPECT_TRUE(LedgerToModification(r.ledger).is_identity());
}

TEST(ApplyScriptTest, ReportsFailingIndex) {
  Graph g = Complete(4);
  std::vector<Move> script = {AdjacentCross{1, 2, 1}, AdjacentCross{1, 2, -1},
                              AdjacentCross{1, 2, -1}};
  try {
    ApplyScript(g, CrossingProfile(), script);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNegativeCount);
    ASSERT_TRUE(e.move_index().has_value());
    EXPECT_EQ(*e.move_index(), 2u);
  }
}

TEST(LedgerTest, ToModification) {
  Ledger ledger;
  EXPECT_TRUE(LedgerToModification(ledger).is_identity());
  ledger.Flip(4);
  EXPECT_EQ(LedgerToModification(ledger).sign(4), -1);
  ledger.Flip(4);
  EXPECT_EQ(LedgerToModification(ledger).sign(4), 1);
  EXPECT_EQ(LedgerToModification(ledger).sign(2), 1);
}

TEST(SignModificationTest, ApplyAndCompose) {
  Graph g = Complete(4);
  SignModification a({1, 2});
  SignModification b({2, 3});
  EXPECT_EQ(a.Compose(b), SignModification({1, 3}));
  WeightAssignment w = a.Apply(WeightAssignment::Symbolic(g));
  EXPECT_EQ(w.at(1), -Polynomial::Variable(1));
  EXPECT_EQ(w.at(3), Polynomial::Variable(3));
}

TEST(K33ScriptTest, ReplaysToSingleCrossing) {
  Graph g = K33();
  CrossingProfile start = StembridgeProfile(g, VertexOrder::Identity(6));
  ASSERT_EQ(start.TotalCrossings(), 3);
  std::vector<Move> script = testing::K33Script();
  MoveResult r = ApplyScript(g, start, script);

  CrossingProfile expected;
  expected.set_cross(testing::kK33E36, testing::kK33E45, 1);
  EXPECT_EQ(r.profile, expected);
  EXPECT_EQ(r.ledger.flips(testing::kK33E36), 3u);
  EXPECT_EQ(r.ledger.flips(testing::kK33E25), 2u);

  WeightAssignment unit = WeightAssignment::Unit(g);
  Polynomial before = SignedSum(g, unit, start);
  Polynomial after =
      SignedSum(g, LedgerToModification(r.ledger).Apply(unit), r.profile);
  EXPECT_EQ(before, after);
  WeightAssignment symbolic = WeightAssignment::Symbolic(g);
  EXPECT_EQ(SignedSum(g, symbolic, start),
            SignedSum(g, LedgerToModification(r.ledger).Apply(symbolic), r.profile));
}

TEST(K33ScriptTest, DragOverTwoVerticesFlipsTwice) {
  Graph g = K33();
  std::vector<Move> script = testing::K33Script();
  MoveResult prefix = ApplyScript(
      g, StembridgeProfile(g, VertexOrder::Identity(6)),
      std::span<const Move>(script).first(testing::kK33DragBegin));
  MoveResult drag = ApplyScript(
      g, prefix.profile,
      std::span<const Move>(script).subspan(
          testing::kK33DragBegin, testing::kK33DragEnd - testing::kK33DragBegin));
  EXPECT_EQ(drag.ledger.flips(testing::kK33E36), 2u);
  EXPECT_EQ(LedgerToModification(drag.ledger).sign(testing::kK33E36), 1);
}

WeightAssignment Adjusted(const WeightAssignment& w, const Ledger& ledger) {
  return LedgerToModification(ledger).Apply(w);
}

TEST(MovePropertyTest, SignedSumInvariant) {
  Rng rng(83);
  int applied = 0;
  for (int trial = 0; trial < 1200; ++trial) {
    const int n = 2 * static_cast<int>(rng.Uniform(1, 4));
    Graph g = RandomSimpleGraph(rng, n, 0.5);
    WeightAssignment w = trial % 2 == 0 ? WeightAssignment::Symbolic(g)
                                        : RandomIntegerWeights(rng, g, 5);
    CrossingProfile p = RandomProfile(rng, g, 2);
    Ledger ledger;
    if (rng.Coin()) ledger.Flip(static_cast<EdgeId>(rng.Uniform(1, g.num_edges())));
    std::optional<Move> move = RandomValidMove(rng, g, p);
    if (!move) continue;
    MoveResult r = ApplyMove(g, p, ledger, *move);
    ASSERT_EQ(SignedSum(g, Adjusted(w, ledger), p),
              SignedSum(g, Adjusted(w, r.ledger), r.profile));
    ++applied;
  }
  EXPECT_GE(applied, 1000);
}

TEST(MovePropertyTest, LocalMovesNeedNoLedger) {
  Rng rng(89);
  for (int trial = 0; trial < 300; ++trial) {
    Graph g = RandomSimpleGraph(rng, 2 * static_cast<int>(rng.Uniform(1, 4)), 0.5);
    WeightAssignment w = WeightAssignment::Symbolic(g);
    CrossingProfile p = RandomProfile(rng, g, 2);
    std::optional<Move> move = RandomValidMove(rng, g, p);
    if (!move || std::holds_alternative<VertexTransition>(*move)) continue;
    MoveResult r = ApplyMove(g, p, Ledger(), *move);
    ASSERT_TRUE(r.ledger.entries().empty());
    ASSERT_EQ(SignedSum(g, w, p), SignedSum(g, w, r.profile));
  }
}

Move Inverse(Move move) {
  std::visit(
      [](auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, VertexTransition>) {
          for (auto& [f, d] : m.deltas) d = -d;
        } else {
          m.delta = -m.delta;
        }
      },
      move);
  return move;
}

TEST(MovePropertyTest, InverseRestoresProfile) {
  Rng rng(97);
  for (int trial = 0; trial < 500; ++trial) {
    Graph g = RandomSimpleGraph(rng, static_cast<int>(rng.Uniform(2, 8)), 0.5);
    CrossingProfile p = RandomProfile(rng, g, 2);
    std::optional<Move> move = RandomValidMove(rng, g, p);
    if (!move) continue;
    MoveResult there = ApplyMove(g, p, Ledger(), *move);
    MoveResult back = ApplyMove(g, there.profile, there.ledger, Inverse(*move));
    ASSERT_EQ(back.profile, p);
    ASSERT_TRUE(LedgerToModification(back.ledger).is_identity());
  }
}

}  // namespace
}  // namespace kasteleyn
