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

#include "kasteleyn/embedding.h"

#include <algorithm>
#include <string>

namespace kasteleyn {

EdgePair EdgePair::Of(EdgeId a, EdgeId b) {
  if (a == b) {
    throw Error(ErrorCode::kBadProfile,
                "crossing pair needs two distinct edges, got " +
                    std::to_string(a) + " twice");
  }
  return a < b ? EdgePair{a, b} : EdgePair{b, a};
}

std::int64_t CrossingProfile::cross(EdgeId a, EdgeId b) const {
  auto it = cross_.find(EdgePair::Of(a, b));
  return it == cross_.end() ? 0 : it->second;
}

std::int64_t CrossingProfile::self_cross(EdgeId e) const {
  auto it = self_.find(e);
  return it == self_.end() ? 0 : it->second;
}

void CrossingProfile::set_cross(EdgeId a, EdgeId b, std::int64_t count) {
  EdgePair key = EdgePair::Of(a, b);
  if (count < 0) {
    throw Error(ErrorCode::kNegativeCount,
                "crossing count of edges " + std::to_string(key.first) + "," +
                    std::to_string(key.second) + " would be " +
                    std::to_string(count));
  }
  if (count == 0) {
    cross_.erase(key);
  } else {
    cross_[key] = count;
  }
}

void CrossingProfile::set_self_cross(EdgeId e, std::int64_t count) {
  if (count < 0) {
    throw Error(ErrorCode::kNegativeCount,
                "self-crossing count of edge " + std::to_string(e) +
                    " would be " + std::to_string(count));
  }
  if (count == 0) {
    self_.erase(e);
  } else {
    self_[e] = count;
  }
}

std::int64_t CrossingProfile::TotalCrossings() const {
  std::int64_t total = 0;
  for (const auto& [pair, count] : cross_) total += count;
  return total;
}

void ValidateProfile(const CrossingProfile& profile, const Graph& g) {
  for (const auto& [pair, count] : profile.cross_entries()) {
    g.edge(pair.first);
    g.edge(pair.second);
  }
  for (const auto& [e, count] : profile.self_cross_entries()) g.edge(e);
}

VertexOrder VertexOrder::Identity(int num_vertices) {
  std::vector<Vertex> order(static_cast<std::size_t>(num_vertices));
  for (int i = 0; i < num_vertices; ++i) order[i] = i + 1;
  return VertexOrder(std::move(order));
}

VertexOrder::VertexOrder(std::vector<Vertex> order) : order_(std::move(order)) {
  const int n = static_cast<int>(order_.size());
  position_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 0; i < n; ++i) {
    Vertex v = order_[i];
    if (v < 1 || v > n || position_[v] != 0) {
      throw Error(ErrorCode::kBadVertexOrder,
                  "vertex order is not a permutation of 1.." +
                      std::to_string(n));
    }
    position_[v] = i + 1;
  }
}

CrossingProfile ZeroProfile(const Graph&) { return CrossingProfile(); }

CrossingProfile StembridgeProfile(const Graph& g, const VertexOrder& order) {
  RequireSimple(g);
  if (order.size() != g.num_vertices()) {
    throw Error(ErrorCode::kBadVertexOrder,
                "order has " + std::to_string(order.size()) +
                    " vertices, graph has " +
                    std::to_string(g.num_vertices()));
  }
  struct Span {
    EdgeId id;
    int lo, hi;
  };
  std::vector<Span> spans;
  for (const Edge& e : g.edges()) {
    int a = order.position(e.u);
    int b = order.position(e.v);
    spans.push_back({e.id, std::min(a, b), std::max(a, b)});
  }
  CrossingProfile out;
  for (std::size_t i = 0; i < spans.size(); ++i) {
    for (std::size_t j = i + 1; j < spans.size(); ++j) {
      const Span& s = spans[i];
      const Span& t = spans[j];
      bool interleave = (s.lo < t.lo && t.lo < s.hi && s.hi < t.hi) ||
                        (t.lo < s.lo && s.lo < t.hi && t.hi < s.hi);
      if (interleave) out.set_cross(s.id, t.id, 1);
    }
  }
  return out;
}

std::map<EdgePair, std::uint8_t> DisjointParity(const CrossingProfile& profile,
                                                const Graph& g) {
  std::map<EdgePair, std::uint8_t> out;
  auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (edges[i].SharesVertexWith(edges[j])) continue;
      out[EdgePair::Of(edges[i].id, edges[j].id)] =
          static_cast<std::uint8_t>(profile.cross(edges[i].id, edges[j].id) & 1);
    }
  }
  return out;
}

}  // namespace kasteleyn
