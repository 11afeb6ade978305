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

// A drawing of a graph is represented only by how often its edge-curves
// cross: one count per unordered pair of distinct edges plus one self-crossing
// count per edge. A point where k curves meet is recorded as its k(k-1)/2
// pairwise crossings, so untangling such a point does not change the profile.
// Nothing here checks that a profile is realizable by an actual drawing.

#ifndef KASTELEYN_EMBEDDING_H_
#define KASTELEYN_EMBEDDING_H_

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "kasteleyn/graph.h"

namespace kasteleyn {

// Unordered pair of distinct edges, stored with first < second.
struct EdgePair {
  EdgeId first;
  EdgeId second;

  // Throws Error(kBadProfile) if a == b.
  static EdgePair Of(EdgeId a, EdgeId b);

  friend auto operator<=>(const EdgePair&, const EdgePair&) = default;
};

class CrossingProfile {
 public:
  CrossingProfile() = default;

  std::int64_t cross(EdgeId a, EdgeId b) const;
  std::int64_t self_cross(EdgeId e) const;

  // Negative counts throw Error(kNegativeCount); zero erases the entry.
  void set_cross(EdgeId a, EdgeId b, std::int64_t count);
  void set_self_cross(EdgeId e, std::int64_t count);

  // Nonzero entries only.
  const std::map<EdgePair, std::int64_t>& cross_entries() const {
    return cross_;
  }
  const std::map<EdgeId, std::int64_t>& self_cross_entries() const {
    return self_;
  }
  std::int64_t TotalCrossings() const;

  friend bool operator==(const CrossingProfile&,
                         const CrossingProfile&) = default;

 private:
  std::map<EdgePair, std::int64_t> cross_;
  std::map<EdgeId, std::int64_t> self_;
};

// Throws Error(kUnknownEdgeId) if the profile mentions an edge not in g.
void ValidateProfile(const CrossingProfile& profile, const Graph& g);

// order[i] is the vertex placed at the point (i+1, 0).
class VertexOrder {
 public:
  static VertexOrder Identity(int num_vertices);
  // Throws Error(kBadVertexOrder) unless `order` is a permutation of 1..n.
  explicit VertexOrder(std::vector<Vertex> order);

  int size() const { return static_cast<int>(order_.size()); }
  // 1-based position of v on the line.
  int position(Vertex v) const { return position_[static_cast<std::size_t>(v)]; }
  // Vertex at 1-based position i.
  Vertex at(int i) const { return order_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<Vertex>& vertices() const { return order_; }

 private:
  std::vector<Vertex> order_;
  std::vector<int> position_;
};

// The planar profile: no crossings at all.
CrossingProfile ZeroProfile(const Graph& g);

// Vertices on the x-axis in the given order, each edge a half-circle in the
// upper half-plane. Two edges cross exactly once when their position
// intervals strictly interleave and never otherwise. Throws
// Error(kNotSimpleGraph) for multigraphs and Error(kBadVertexOrder) when the
// order does not cover g's vertices.
CrossingProfile StembridgeProfile(const Graph& g, const VertexOrder& order);

// Crossing parity for every pair of vertex-disjoint edges of g (zeros
// included). Pairs sharing a vertex are omitted: they never lie in a common
// matching, so they cannot affect any sign.
std::map<EdgePair, std::uint8_t> DisjointParity(const CrossingProfile& profile,
                                                const Graph& g);

}  // namespace kasteleyn

#endif  // KASTELEYN_EMBEDDING_H_
