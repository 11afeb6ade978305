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

#ifndef KASTELEYN_GRAPH_H_
#define KASTELEYN_GRAPH_H_

#include <cstddef>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "kasteleyn/error.h"
#include "kasteleyn/ring.h"

namespace kasteleyn {

using Vertex = int;  // 1-based
using EdgeId = int;  // 1-based, dense

struct Edge {
  EdgeId id;
  Vertex u;
  Vertex v;

  bool Touches(Vertex w) const { return u == w || v == w; }
  bool SharesVertexWith(const Edge& other) const {
    return Touches(other.u) || Touches(other.v);
  }
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Violation {
  ErrorCode code;
  std::string message;
};

// Reports every broken invariant: loops, labels outside 1..n, repeated ids,
// ids that are not exactly 1..|E|. Empty result means the input is valid.
std::vector<Violation> ValidateGraph(int num_vertices,
                                     std::span<const Edge> edges);

// Finite loopless multigraph on vertices 1..n. Edges are stored by id with
// u < v.
class Graph {
 public:
  // Throws Error with the first violation found by ValidateGraph.
  Graph(int num_vertices, std::vector<Edge> edges);

  int num_vertices() const { return num_vertices_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  std::span<const Edge> edges() const { return edges_; }
  bool HasEdge(EdgeId id) const { return id >= 1 && id <= num_edges(); }
  // Throws Error(kUnknownEdgeId).
  const Edge& edge(EdgeId id) const;
  // Ids of edges incident to v, ascending.
  const std::vector<EdgeId>& incident(Vertex v) const {
    return incident_[static_cast<std::size_t>(v)];
  }
  // No two edges join the same pair of vertices.
  bool IsSimple() const { return simple_; }

 private:
  int num_vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incident_;
  bool simple_ = true;
};

// Throws Error(kNotSimpleGraph) unless g.IsSimple().
void RequireSimple(const Graph& g);

// Edge weight function, indexed by edge id. Nowhere zero.
class WeightAssignment {
 public:
  // x<e> on every edge.
  static WeightAssignment Symbolic(const Graph& g);
  // 1 on every edge.
  static WeightAssignment Unit(const Graph& g);

  explicit WeightAssignment(std::vector<Polynomial> weights);

  std::size_t size() const { return weights_.size(); }
  const Polynomial& at(EdgeId id) const;
  // Throws Error(kZeroWeight) for zero.
  void Set(EdgeId id, Polynomial value);
  const std::vector<Polynomial>& values() const { return weights_; }

  friend bool operator==(const WeightAssignment&,
                         const WeightAssignment&) = default;

 private:
  std::vector<Polynomial> weights_;
};

// Sorted edge ids.
using Matching = std::vector<EdgeId>;

// Throws Error(kUnknownEdgeId) for ids not in g.
bool IsPerfectMatching(const Graph& g, std::span<const EdgeId> edge_ids);

inline constexpr std::size_t kNoMatchingLimit =
    std::numeric_limits<std::size_t>::max();

// Visits every perfect matching by branching on the lowest uncovered vertex.
// The matching passed to `visit` is sorted. Throws Error(kTooManyMatchings)
// once more than `limit` matchings have been seen.
void ForEachPerfectMatching(const Graph& g,
                            const std::function<void(const Matching&)>& visit,
                            std::size_t limit = kNoMatchingLimit);

// All perfect matchings, lexicographically sorted by edge-id sequence. Empty
// for odd n.
std::vector<Matching> EnumeratePerfectMatchings(
    const Graph& g, std::size_t limit = kNoMatchingLimit);

}  // namespace kasteleyn

#endif  // KASTELEYN_GRAPH_H_
