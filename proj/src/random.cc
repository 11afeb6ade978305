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

#include "kasteleyn/random.h"

#include <set>
#include <utility>

namespace kasteleyn {

std::int64_t Rng::Uniform(std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(engine_() % span);
}

bool Rng::Coin(double p_true) {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p_true;
}

Graph RandomSimpleGraph(Rng& rng, int n, double density) {
  std::set<std::pair<Vertex, Vertex>> pairs;
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[i] = i + 1;
  rng.Shuffle(perm);
  for (int i = 0; i + 1 < n; i += 2) {
    pairs.emplace(std::min(perm[i], perm[i + 1]), std::max(perm[i], perm[i + 1]));
  }
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) {
      if (rng.Coin(density)) pairs.emplace(u, v);
    }
  }
  std::vector<Edge> edges;
  EdgeId id = 1;
  for (const auto& [u, v] : pairs) edges.push_back({id++, u, v});
  return Graph(n, std::move(edges));
}

WeightAssignment RandomIntegerWeights(Rng& rng, const Graph& g, int bound) {
  std::vector<Polynomial> weights;
  for (int i = 0; i < g.num_edges(); ++i) {
    std::int64_t w = rng.Uniform(1, bound);
    weights.emplace_back(static_cast<long long>(rng.Coin() ? w : -w));
  }
  return WeightAssignment(std::move(weights));
}

CrossingProfile RandomProfile(Rng& rng, const Graph& g, int max_count) {
  CrossingProfile profile;
  for (EdgeId a = 1; a <= g.num_edges(); ++a) {
    for (EdgeId b = a + 1; b <= g.num_edges(); ++b) {
      if (rng.Coin(0.4)) profile.set_cross(a, b, rng.Uniform(0, max_count));
    }
    if (rng.Coin(0.1)) profile.set_self_cross(a, rng.Uniform(0, max_count));
  }
  return profile;
}

VertexOrder RandomOrder(Rng& rng, int n) {
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[i] = i + 1;
  rng.Shuffle(order);
  return VertexOrder(std::move(order));
}

namespace {

int PickDelta(Rng& rng, std::int64_t current, int step) {
  if (current >= step && rng.Coin()) return -step;
  return step;
}

}  // namespace

std::optional<Move> RandomValidMove(Rng& rng, const Graph& g,
                                    const CrossingProfile& profile) {
  std::vector<std::pair<EdgeId, EdgeId>> adjacent;
  std::vector<std::pair<EdgeId, Vertex>> transitions;
  for (const Edge& a : g.edges()) {
    for (const Edge& b : g.edges()) {
      if (a.id >= b.id) continue;
      int shared = static_cast<int>(a.Touches(b.u)) + static_cast<int>(a.Touches(b.v));
      if (shared == 1) adjacent.emplace_back(a.id, b.id);
    }
    for (Vertex v = 1; v <= g.num_vertices(); ++v) {
      if (!a.Touches(v)) transitions.emplace_back(a.id, v);
    }
  }
  const int m = g.num_edges();
  if (m == 0) return std::nullopt;

  for (int attempt = 0; attempt < 16; ++attempt) {
    switch (rng.Uniform(0, 3)) {
      case 0: {
        if (adjacent.empty()) break;
        auto [a, b] = adjacent[static_cast<std::size_t>(
            rng.Uniform(0, static_cast<std::int64_t>(adjacent.size()) - 1))];
        return AdjacentCross{a, b, PickDelta(rng, profile.cross(a, b), 1)};
      }
      case 1: {
        EdgeId e = static_cast<EdgeId>(rng.Uniform(1, m));
        return SelfCross{e, PickDelta(rng, profile.self_cross(e), 1)};
      }
      case 2: {
        if (m < 2) break;
        EdgeId a = static_cast<EdgeId>(rng.Uniform(1, m));
        EdgeId b = static_cast<EdgeId>(rng.Uniform(1, m - 1));
        if (b >= a) ++b;
        return DoubleCross{a, b, PickDelta(rng, profile.cross(a, b), 2)};
      }
      default: {
        if (transitions.empty()) break;
        auto [e, v] = transitions[static_cast<std::size_t>(
            rng.Uniform(0, static_cast<std::int64_t>(transitions.size()) - 1))];
        VertexTransition move{e, v, {}};
        for (EdgeId f : g.incident(v)) {
          move.deltas[f] = PickDelta(rng, profile.cross(e, f), 1);
        }
        return move;
      }
    }
  }
  return std::nullopt;
}

SkewMatrix RandomIntegerSkewMatrix(Rng& rng, int dimension, int bound) {
  SkewMatrix a(dimension);
  for (int i = 0; i < dimension; ++i) {
    for (int j = i + 1; j < dimension; ++j) {
      a.Set(i, j, Polynomial(static_cast<long long>(rng.Uniform(-bound, bound))));
    }
  }
  return a;
}

}  // namespace kasteleyn
