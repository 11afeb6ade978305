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

#include "kasteleyn/graph.h"

#include <algorithm>
#include <set>
#include <utility>

namespace kasteleyn {

std::vector<Violation> ValidateGraph(int num_vertices,
                                     std::span<const Edge> edges) {
  std::vector<Violation> out;
  if (num_vertices < 0) {
    out.push_back({ErrorCode::kBadVertexLabel, "negative vertex count"});
  }
  std::set<EdgeId> seen;
  for (const Edge& e : edges) {
    const std::string name = "edge " + std::to_string(e.id);
    if (e.u < 1 || e.u > num_vertices || e.v < 1 || e.v > num_vertices) {
      out.push_back({ErrorCode::kBadVertexLabel,
                     name + " has an endpoint outside 1.." +
                         std::to_string(num_vertices)});
    }
    if (e.u == e.v) {
      out.push_back({ErrorCode::kLoopEdge,
                     name + " is a loop at vertex " + std::to_string(e.u)});
    }
    if (!seen.insert(e.id).second) {
      out.push_back({ErrorCode::kDuplicateEdgeId,
                     "edge id " + std::to_string(e.id) + " repeated"});
    }
  }
  EdgeId expected = 1;
  for (EdgeId id : seen) {
    if (id != expected) {
      out.push_back({ErrorCode::kBadEdgeId,
                     "edge ids must be exactly 1.." +
                         std::to_string(edges.size()) + "; found " +
                         std::to_string(id)});
      break;
    }
    ++expected;
  }
  return out;
}

Graph::Graph(int num_vertices, std::vector<Edge> edges)
    : num_vertices_(num_vertices) {
  if (auto violations = ValidateGraph(num_vertices, edges);
      !violations.empty()) {
    throw Error(violations.front().code, violations.front().message);
  }
  for (Edge& e : edges) {
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end(),
            [](const Edge& a, const Edge& b) { return a.id < b.id; });
  edges_ = std::move(edges);

  incident_.resize(static_cast<std::size_t>(num_vertices_) + 1);
  std::set<std::pair<Vertex, Vertex>> pairs;
  for (const Edge& e : edges_) {
    incident_[e.u].push_back(e.id);
    incident_[e.v].push_back(e.id);
    if (!pairs.emplace(e.u, e.v).second) simple_ = false;
  }
}

const Edge& Graph::edge(EdgeId id) const {
  if (!HasEdge(id)) {
    throw Error(ErrorCode::kUnknownEdgeId,
                "edge id " + std::to_string(id) + " not in graph");
  }
  return edges_[static_cast<std::size_t>(id - 1)];
}

void RequireSimple(const Graph& g) {
  if (!g.IsSimple()) {
    throw Error(ErrorCode::kNotSimpleGraph, "graph has parallel edges");
  }
}

WeightAssignment WeightAssignment::Symbolic(const Graph& g) {
  std::vector<Polynomial> weights;
  weights.reserve(static_cast<std::size_t>(g.num_edges()));
  for (const Edge& e : g.edges()) {
    weights.push_back(Polynomial::Variable(static_cast<VarId>(e.id)));
  }
  return WeightAssignment(std::move(weights));
}

WeightAssignment WeightAssignment::Unit(const Graph& g) {
  return WeightAssignment(std::vector<Polynomial>(
      static_cast<std::size_t>(g.num_edges()), Polynomial(1)));
}

WeightAssignment::WeightAssignment(std::vector<Polynomial> weights)
    : weights_(std::move(weights)) {
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (weights_[i].is_zero()) {
      throw Error(ErrorCode::kZeroWeight,
                  "edge " + std::to_string(i + 1) + " has weight 0");
    }
  }
}

const Polynomial& WeightAssignment::at(EdgeId id) const {
  if (id < 1 || static_cast<std::size_t>(id) > weights_.size()) {
    throw Error(ErrorCode::kUnknownEdgeId,
                "no weight for edge " + std::to_string(id));
  }
  return weights_[static_cast<std::size_t>(id - 1)];
}

void WeightAssignment::Set(EdgeId id, Polynomial value) {
  at(id);
  if (value.is_zero()) {
    throw Error(ErrorCode::kZeroWeight,
                "edge " + std::to_string(id) + " has weight 0");
  }
  weights_[static_cast<std::size_t>(id - 1)] = std::move(value);
}

bool IsPerfectMatching(const Graph& g, std::span<const EdgeId> edge_ids) {
  std::vector<char> covered(static_cast<std::size_t>(g.num_vertices()) + 1, 0);
  bool ok = true;
  for (EdgeId id : edge_ids) {
    const Edge& e = g.edge(id);
    if (covered[e.u] || covered[e.v]) ok = false;
    covered[e.u] = covered[e.v] = 1;
  }
  if (!ok) return false;
  return std::count(covered.begin() + 1, covered.end(), 1) == g.num_vertices();
}

namespace {

class MatchingWalker {
 public:
  MatchingWalker(const Graph& g,
                 const std::function<void(const Matching&)>& visit,
                 std::size_t limit)
      : g_(g),
        visit_(visit),
        limit_(limit),
        covered_(static_cast<std::size_t>(g.num_vertices()) + 1, 0) {}

  void Run() {
    if (g_.num_vertices() % 2 != 0) return;
    Extend(1);
  }

 private:
  void Extend(Vertex from) {
    Vertex v = from;
    while (v <= g_.num_vertices() && covered_[v]) ++v;
    if (v > g_.num_vertices()) {
      if (++seen_ > limit_) {
        throw Error(ErrorCode::kTooManyMatchings,
                    "more than " + std::to_string(limit_) +
                        " perfect matchings");
      }
      Matching sorted = current_;
      std::sort(sorted.begin(), sorted.end());
      visit_(sorted);
      return;
    }
    covered_[v] = 1;
    for (EdgeId id : g_.incident(v)) {
      const Edge& e = g_.edge(id);
      Vertex other = e.u == v ? e.v : e.u;
      if (covered_[other]) continue;
      covered_[other] = 1;
      current_.push_back(id);
      Extend(v + 1);
      current_.pop_back();
      covered_[other] = 0;
    }
    covered_[v] = 0;
  }

  const Graph& g_;
  const std::function<void(const Matching&)>& visit_;
  std::size_t limit_;
  std::size_t seen_ = 0;
  std::vector<char> covered_;
  Matching current_;
};

}  // namespace

void ForEachPerfectMatching(const Graph& g,
                            const std::function<void(const Matching&)>& visit,
                            std::size_t limit) {
  MatchingWalker(g, visit, limit).Run();
}

std::vector<Matching> EnumeratePerfectMatchings(const Graph& g,
                                                std::size_t limit) {
  std::vector<Matching> out;
  ForEachPerfectMatching(
      g, [&out](const Matching& m) { out.push_back(m); }, limit);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace kasteleyn
