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

#include <string>

namespace kasteleyn {

std::uint64_t Ledger::flips(EdgeId e) const {
  auto it = flips_.find(e);
  return it == flips_.end() ? 0 : it->second;
}

WeightAssignment SignModification::Apply(const WeightAssignment& weights) const {
  WeightAssignment out = weights;
  for (EdgeId e : flipped_) out.Set(e, -weights.at(e));
  return out;
}

SignModification SignModification::Compose(const SignModification& other) const {
  std::set<EdgeId> out;
  for (EdgeId e : flipped_) {
    if (!other.flipped_.contains(e)) out.insert(e);
  }
  for (EdgeId e : other.flipped_) {
    if (!flipped_.contains(e)) out.insert(e);
  }
  return SignModification(std::move(out));
}

SignModification LedgerToModification(const Ledger& ledger) {
  std::set<EdgeId> flipped;
  for (const auto& [e, count] : ledger.entries()) {
    if (count % 2 == 1) flipped.insert(e);
  }
  return SignModification(std::move(flipped));
}

namespace {

std::string EdgeName(EdgeId e) { return "edge " + std::to_string(e); }

int SharedVertexCount(const Edge& a, const Edge& b) {
  return static_cast<int>(a.Touches(b.u)) + static_cast<int>(a.Touches(b.v));
}

void RequireUnitDelta(int delta, const char* what) {
  if (delta != 1 && delta != -1) {
    throw Error(ErrorCode::kInvalidMove,
                std::string(what) + " delta must be +1 or -1, got " +
                    std::to_string(delta));
  }
}

class MoveApplier {
 public:
  MoveApplier(const Graph& g, MoveResult& state) : g_(g), state_(state) {}

  void operator()(const AdjacentCross& m) {
    RequireUnitDelta(m.delta, "adjacent_cross");
    const Edge& a = g_.edge(m.e1);
    const Edge& b = g_.edge(m.e2);
    if (m.e1 == m.e2 || SharedVertexCount(a, b) != 1) {
      throw Error(ErrorCode::kNotAdjacent,
                  EdgeName(m.e1) + " and " + EdgeName(m.e2) +
                      " do not share exactly one vertex");
    }
    AddCross(m.e1, m.e2, m.delta);
  }

  void operator()(const SelfCross& m) {
    RequireUnitDelta(m.delta, "self_cross");
    g_.edge(m.e);
    state_.profile.set_self_cross(m.e, state_.profile.self_cross(m.e) + m.delta);
  }

  void operator()(const DoubleCross& m) {
    if (m.delta != 2 && m.delta != -2) {
      throw Error(ErrorCode::kInvalidMove,
                  "double_cross delta must be +2 or -2, got " +
                      std::to_string(m.delta));
    }
    g_.edge(m.e1);
    g_.edge(m.e2);
    if (m.e1 == m.e2) {
      throw Error(ErrorCode::kInvalidMove,
                  "double_cross needs two distinct edges");
    }
    AddCross(m.e1, m.e2, m.delta);
  }

  void operator()(const VertexTransition& m) {
    const Edge& e = g_.edge(m.e);
    if (m.v < 1 || m.v > g_.num_vertices()) {
      throw Error(ErrorCode::kInvalidMove,
                  "vertex " + std::to_string(m.v) + " not in graph");
    }
    if (e.Touches(m.v)) {
      throw Error(ErrorCode::kEndpointVertex,
                  "vertex " + std::to_string(m.v) + " is an endpoint of " +
                      EdgeName(m.e));
    }
    const std::vector<EdgeId>& at_v = g_.incident(m.v);
    for (EdgeId f : at_v) {
      if (!m.deltas.contains(f)) {
        throw Error(ErrorCode::kIncompleteDeltas,
                    "no delta for " + EdgeName(f) + " at vertex " +
                        std::to_string(m.v));
      }
    }
    for (const auto& [f, delta] : m.deltas) {
      if (!g_.HasEdge(f) || !g_.edge(f).Touches(m.v)) {
        throw Error(ErrorCode::kIncompleteDeltas,
                    EdgeName(f) + " is not incident to vertex " +
                        std::to_string(m.v));
      }
      RequireUnitDelta(delta, "vertex_transition");
    }
    // All counts are checked before any is written.
    for (const auto& [f, delta] : m.deltas) {
      if (state_.profile.cross(m.e, f) + delta < 0) {
        throw Error(ErrorCode::kNegativeCount,
                    "crossing count of " + EdgeName(m.e) + " with " +
                        EdgeName(f) + " would become negative");
      }
    }
    for (const auto& [f, delta] : m.deltas) AddCross(m.e, f, delta);
    state_.ledger.Flip(m.e);
  }

 private:
  void AddCross(EdgeId a, EdgeId b, int delta) {
    state_.profile.set_cross(a, b, state_.profile.cross(a, b) + delta);
  }

  const Graph& g_;
  MoveResult& state_;
};

}  // namespace

MoveResult ApplyMove(const Graph& g, const CrossingProfile& profile,
                     const Ledger& ledger, const Move& move) {
  MoveResult state{profile, ledger};
  std::visit(MoveApplier(g, state), move);
  return state;
}

MoveResult ApplyScript(const Graph& g, const CrossingProfile& profile,
                       std::span<const Move> script) {
  MoveResult state{profile, Ledger()};
  for (std::size_t i = 0; i < script.size(); ++i) {
    try {
      state = ApplyMove(g, state.profile, state.ledger, script[i]);
    } catch (Error& err) {
      err.set_move_index(i);
      throw;
    }
  }
  return state;
}

}  // namespace kasteleyn
