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

#include "kasteleyn/matching.h"

#include <bit>
#include <cstdint>
#include <string>
#include <unordered_map>

namespace kasteleyn {

std::int64_t CrossingNumber(std::span<const EdgeId> matching,
                            const CrossingProfile& profile) {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < matching.size(); ++i) {
    for (std::size_t j = i + 1; j < matching.size(); ++j) {
      total += profile.cross(matching[i], matching[j]);
    }
  }
  return total;
}

int SignOfCrossings(std::int64_t crossings) { return crossings % 2 == 0 ? 1 : -1; }

int MatchingSign(std::span<const EdgeId> matching,
                 const CrossingProfile& profile) {
  return SignOfCrossings(CrossingNumber(matching, profile));
}

Polynomial MatchingWeight(std::span<const EdgeId> matching,
                          const WeightAssignment& weights) {
  Polynomial product(1);
  for (EdgeId e : matching) product *= weights.at(e);
  return product;
}

Polynomial MatchingSum(const Graph& g, const WeightAssignment& weights) {
  Polynomial total;
  for (const Matching& m : EnumeratePerfectMatchings(g)) {
    total += MatchingWeight(m, weights);
  }
  return total;
}

Polynomial SignedSum(const Graph& g, const WeightAssignment& weights,
                     const CrossingProfile& profile) {
  Polynomial total;
  for (const Matching& m : EnumeratePerfectMatchings(g)) {
    if (MatchingSign(m, profile) > 0) {
      total += MatchingWeight(m, weights);
    } else {
      total -= MatchingWeight(m, weights);
    }
  }
  return total;
}

Polynomial PfaffianOfGraph(const Graph& g, const WeightAssignment& weights,
                           const VertexOrder& order) {
  return SignedSum(g, weights, StembridgeProfile(g, order));
}

SkewMatrix::SkewMatrix(int dimension)
    : dimension_(dimension),
      upper_(static_cast<std::size_t>(dimension) * dimension) {}

std::size_t SkewMatrix::Index(int i, int j) const {
  return static_cast<std::size_t>(i) * dimension_ + j;
}

Polynomial SkewMatrix::at(int i, int j) const {
  if (i == j) return Polynomial();
  if (i < j) return upper_[Index(i, j)];
  return -upper_[Index(j, i)];
}

void SkewMatrix::Set(int i, int j, Polynomial value) {
  if (i == j) {
    throw Error(ErrorCode::kBadProfile, "skew matrix diagonal is fixed at 0");
  }
  if (i < j) {
    upper_[Index(i, j)] = std::move(value);
  } else {
    upper_[Index(j, i)] = -value;
  }
}

SkewMatrix SkewFromGraph(const Graph& g, const WeightAssignment& weights,
                         const VertexOrder& order) {
  RequireSimple(g);
  if (order.size() != g.num_vertices()) {
    throw Error(ErrorCode::kBadVertexOrder,
                "order size does not match vertex count");
  }
  SkewMatrix a(g.num_vertices());
  for (const Edge& e : g.edges()) {
    int i = order.position(e.u) - 1;
    int j = order.position(e.v) - 1;
    if (i > j) std::swap(i, j);
    a.Set(i, j, a.at(i, j) + weights.at(e.id));
  }
  return a;
}

namespace {

void CheckDimension(int n) {
  if (n > kMaxExpansionDimension) {
    throw Error(ErrorCode::kDimensionTooLarge,
                "dimension " + std::to_string(n) + " exceeds " +
                    std::to_string(kMaxExpansionDimension));
  }
}

class PfaffianExpander {
 public:
  explicit PfaffianExpander(const SkewMatrix& a) : a_(a) {}

  // Pfaffian of the principal submatrix on the index set `remaining`.
  Polynomial Of(std::uint32_t remaining) {
    if (remaining == 0) return Polynomial(1);
    if (auto it = memo_.find(remaining); it != memo_.end()) return it->second;
    const int first = std::countr_zero(remaining);
    const std::uint32_t rest = remaining & (remaining - 1);
    Polynomial total;
    // The k-th remaining index after `first` carries sign (-1)^(k+1).
    int k = 0;
    for (std::uint32_t scan = rest; scan != 0; scan &= scan - 1) {
      const int j = std::countr_zero(scan);
      ++k;
      Polynomial entry = a_.at(first, j);
      if (entry.is_zero()) continue;
      Polynomial term = entry * Of(rest & ~(std::uint32_t{1} << j));
      if (k % 2 == 1) {
        total += term;
      } else {
        total -= term;
      }
    }
    memo_.emplace(remaining, total);
    return total;
  }

 private:
  const SkewMatrix& a_;
  std::unordered_map<std::uint32_t, Polynomial> memo_;
};

}  // namespace

Polynomial PfaffianExpand(const SkewMatrix& a) {
  const int n = a.dimension();
  if (n % 2 != 0) return Polynomial();
  CheckDimension(n);
  PfaffianExpander expander(a);
  return expander.Of((std::uint32_t{1} << n) - 1);
}

Polynomial Determinant(const SkewMatrix& a) {
  const int n = a.dimension();
  CheckDimension(n);
  // partial[mask]: signed sum over injective assignments of the first
  // popcount(mask) rows onto the columns in mask.
  std::vector<Polynomial> partial(std::size_t{1} << n);
  partial[0] = Polynomial(1);
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    if (partial[mask].is_zero()) continue;
    const int row = std::popcount(mask);
    if (row == n) continue;
    for (int col = 0; col < n; ++col) {
      const std::uint32_t bit = std::uint32_t{1} << col;
      if (mask & bit) continue;
      Polynomial entry = a.at(row, col);
      if (entry.is_zero()) continue;
      // Earlier rows sitting in later columns are the new inversions.
      const int inversions = std::popcount(mask >> (col + 1));
      Polynomial term = partial[mask] * entry;
      if (inversions % 2 == 0) {
        partial[mask | bit] += term;
      } else {
        partial[mask | bit] -= term;
      }
    }
  }
  return partial[(std::size_t{1} << n) - 1];
}

}  // namespace kasteleyn
