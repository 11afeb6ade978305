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

// Local modifications of a drawing, expressed on crossing profiles, together
// with the ledger of weight negations they require. Every move leaves
//
//   SignedSum(g, LedgerToModification(ledger).Apply(w), profile)
//
// unchanged:
//
//   AdjacentCross     adds/removes a crossing of two edges with a common
//                     vertex; such edges never share a perfect matching.
//   SelfCross         adds/removes a self-crossing; these never count.
//   DoubleCross       adds/removes two crossings of the same pair.
//   VertexTransition  drags edge e across vertex v, changing the crossing
//                     count of e with each other edge at v by one. A perfect
//                     matching contains exactly one edge at v, so its sign
//                     flips iff it contains e; negating w(e) offsets that.

#ifndef KASTELEYN_MOVES_H_
#define KASTELEYN_MOVES_H_

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <variant>
#include <vector>

#include "kasteleyn/embedding.h"
#include "kasteleyn/graph.h"

namespace kasteleyn {

struct AdjacentCross {
  EdgeId e1;
  EdgeId e2;
  int delta;  // +1 or -1
};

struct SelfCross {
  EdgeId e;
  int delta;  // +1 or -1
};

struct DoubleCross {
  EdgeId e1;
  EdgeId e2;
  int delta;  // +2 or -2
};

struct VertexTransition {
  EdgeId e;
  Vertex v;
  // One entry of +1 or -1 for every edge at v (none of which is e).
  std::map<EdgeId, int> deltas;
};

using Move = std::variant<AdjacentCross, SelfCross, DoubleCross, VertexTransition>;

// Number of times each edge weight has been negated.
class Ledger {
 public:
  void Flip(EdgeId e) { ++flips_[e]; }
  std::uint64_t flips(EdgeId e) const;
  const std::map<EdgeId, std::uint64_t>& entries() const { return flips_; }

  friend bool operator==(const Ledger&, const Ledger&) = default;

 private:
  std::map<EdgeId, std::uint64_t> flips_;
};

// Replacement of each edge weight by itself or its negation.
class SignModification {
 public:
  SignModification() = default;
  explicit SignModification(std::set<EdgeId> flipped)
      : flipped_(std::move(flipped)) {}

  int sign(EdgeId e) const { return flipped_.contains(e) ? -1 : 1; }
  const std::set<EdgeId>& flipped() const { return flipped_; }
  bool is_identity() const { return flipped_.empty(); }

  WeightAssignment Apply(const WeightAssignment& weights) const;

  // Componentwise product: the edges flipped by exactly one side.
  SignModification Compose(const SignModification& other) const;

  friend bool operator==(const SignModification&,
                         const SignModification&) = default;

 private:
  std::set<EdgeId> flipped_;
};

SignModification LedgerToModification(const Ledger& ledger);

struct MoveResult {
  CrossingProfile profile;
  Ledger ledger;
};

// Applies one move. Errors: kUnknownEdgeId, kInvalidMove (malformed delta or
// identical edges), kNotAdjacent, kEndpointVertex, kIncompleteDeltas,
// kNegativeCount. Inputs are never modified.
MoveResult ApplyMove(const Graph& g, const CrossingProfile& profile,
                     const Ledger& ledger, const Move& move);

// Left fold of ApplyMove from an empty ledger. A failure rethrows the move's
// error with move_index() set.
MoveResult ApplyScript(const Graph& g, const CrossingProfile& profile,
                       std::span<const Move> script);

}  // namespace kasteleyn

#endif  // KASTELEYN_MOVES_H_
