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

// Generating functions of perfect matchings, plain and signed by a crossing
// profile, and the Pfaffian as the signed sum for the half-circle drawing.
// SkewMatrix, PfaffianExpand and Determinant give the independent matrix
// route used to cross-check it.

#ifndef KASTELEYN_MATCHING_H_
#define KASTELEYN_MATCHING_H_

#include <cstdint>
#include <span>
#include <vector>

#include "kasteleyn/embedding.h"
#include "kasteleyn/graph.h"
#include "kasteleyn/ring.h"

namespace kasteleyn {

// Sum of cross(e, f) over unordered pairs {e, f} of the matching.
// Self-crossings never count.
std::int64_t CrossingNumber(std::span<const EdgeId> matching,
                            const CrossingProfile& profile);

// (-1)^crossings.
int SignOfCrossings(std::int64_t crossings);
int MatchingSign(std::span<const EdgeId> matching,
                 const CrossingProfile& profile);

Polynomial MatchingWeight(std::span<const EdgeId> matching,
                          const WeightAssignment& weights);

// Sum of weights over all perfect matchings.
Polynomial MatchingSum(const Graph& g, const WeightAssignment& weights);

// Sum of sign * weight over all perfect matchings, summed in enumeration
// order.
Polynomial SignedSum(const Graph& g, const WeightAssignment& weights,
                     const CrossingProfile& profile);

// SignedSum against StembridgeProfile(g, order). Throws
// Error(kNotSimpleGraph).
Polynomial PfaffianOfGraph(const Graph& g, const WeightAssignment& weights,
                           const VertexOrder& order);

// Skew-symmetric matrix over the polynomial ring, 0-based indices. Only the
// strict upper triangle is stored; the rest is derived, so skew-symmetry
// holds by construction.
class SkewMatrix {
 public:
  explicit SkewMatrix(int dimension);

  int dimension() const { return dimension_; }
  // a(i, i) = 0 and a(j, i) = -a(i, j).
  Polynomial at(int i, int j) const;
  // Requires i != j; sets a(i, j) and implicitly a(j, i).
  void Set(int i, int j, Polynomial value);

 private:
  std::size_t Index(int i, int j) const;

  int dimension_;
  std::vector<Polynomial> upper_;
};

// a(i, j) = sum of weights of the edges between order.at(i+1) and
// order.at(j+1), i < j. Throws Error(kNotSimpleGraph).
SkewMatrix SkewFromGraph(const Graph& g, const WeightAssignment& weights,
                         const VertexOrder& order);

inline constexpr int kMaxExpansionDimension = 20;

// Pfaffian by expansion along the first row, memoized on the set of remaining
// indices. Zero for odd dimension. Throws Error(kDimensionTooLarge) above
// kMaxExpansionDimension.
Polynomial PfaffianExpand(const SkewMatrix& a);

// Exact determinant by Laplace expansion over column subsets. Same dimension
// limit as PfaffianExpand.
Polynomial Determinant(const SkewMatrix& a);

}  // namespace kasteleyn

#endif  // KASTELEYN_MATCHING_H_
