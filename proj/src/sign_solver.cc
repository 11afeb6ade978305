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

#include "kasteleyn/sign_solver.h"

#include <string>
#include <utility>

#include "kasteleyn/matching.h"

namespace kasteleyn {

Gf2System BuildSystem(const Graph& g, const CrossingProfile& a,
                      const CrossingProfile& b, const SolverOptions& options) {
  Gf2System system;
  system.num_edges = g.num_edges();
  for (const Matching& m : EnumeratePerfectMatchings(g, options.max_matchings)) {
    boost::dynamic_bitset<> row(static_cast<std::size_t>(g.num_edges()));
    for (EdgeId e : m) row.set(static_cast<std::size_t>(e - 1));
    system.rows.push_back(std::move(row));
    system.rhs.push_back(((CrossingNumber(m, a) + CrossingNumber(m, b)) & 1) != 0);
  }
  return system;
}

Gf2Solution SolveGf2(const Gf2System& system) {
  std::vector<boost::dynamic_bitset<>> rows = system.rows;
  std::vector<bool> rhs = system.rhs;
  const std::size_t columns = static_cast<std::size_t>(system.num_edges);

  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, column)
  std::size_t next_row = 0;
  for (std::size_t col = 0; col < columns && next_row < rows.size(); ++col) {
    std::size_t pick = next_row;
    while (pick < rows.size() && !rows[pick].test(col)) ++pick;
    if (pick == rows.size()) continue;
    std::swap(rows[pick], rows[next_row]);
    std::swap(rhs[pick], rhs[next_row]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != next_row && rows[r].test(col)) {
        rows[r] ^= rows[next_row];
        rhs[r] = rhs[r] != rhs[next_row];
      }
    }
    pivots.emplace_back(next_row, col);
    ++next_row;
  }
  for (std::size_t r = next_row; r < rows.size(); ++r) {
    if (rhs[r]) {
      throw Error(ErrorCode::kNoSolution,
                  "sign constraints of the perfect matchings are "
                  "inconsistent");
    }
  }

  // Reduced form with free variables at zero: each pivot variable equals its
  // row's right-hand side.
  std::set<EdgeId> flipped;
  for (const auto& [row, col] : pivots) {
    if (rhs[row]) flipped.insert(static_cast<EdgeId>(col + 1));
  }
  Gf2Solution out;
  out.modification = SignModification(std::move(flipped));
  out.rank = static_cast<int>(pivots.size());
  out.nullity = system.num_edges - out.rank;
  return out;
}

SignModification Equalize(const Graph& g, const WeightAssignment& weights,
                          const CrossingProfile& a, const CrossingProfile& b,
                          const SolverOptions& options) {
  RequireSimple(g);
  ValidateProfile(a, g);
  ValidateProfile(b, g);
  SignModification modification =
      SolveGf2(BuildSystem(g, a, b, options)).modification;
  Polynomial before = SignedSum(g, weights, a);
  Polynomial after = SignedSum(g, modification.Apply(weights), b);
  if (before != after) {
    throw Error(ErrorCode::kVerificationFailed,
                "signed sums differ after sign modification: " +
                    before.ToString() + " vs " + after.ToString());
  }
  return modification;
}

SignModification KasteleynWeights(const Graph& g,
                                  const WeightAssignment& weights,
                                  const VertexOrder& order,
                                  const SolverOptions& options) {
  return Equalize(g, weights, ZeroProfile(g), StembridgeProfile(g, order),
                  options);
}

}  // namespace kasteleyn
