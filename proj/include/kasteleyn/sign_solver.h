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

// Finding a sign modification w' of w with
//
//   SignedSum(g, w, A) == SignedSum(g, w', B)
//
// for two crossing profiles A and B. With symbolic weights this holds iff,
// for every perfect matching M,
//
//   sum_{e in M} x_e == C(M, A) + C(M, B)   (mod 2),
//
// where x_e = 1 means w'(e) = -w(e). One row per perfect matching, one column
// per edge. Rows are exponential in n; intended scale is n <= 12.

#ifndef KASTELEYN_SIGN_SOLVER_H_
#define KASTELEYN_SIGN_SOLVER_H_

#include <cstddef>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "kasteleyn/embedding.h"
#include "kasteleyn/graph.h"
#include "kasteleyn/moves.h"

namespace kasteleyn {

struct Gf2System {
  int num_edges = 0;
  // rows[i][e - 1] is set iff edge e lies in the i-th matching.
  std::vector<boost::dynamic_bitset<>> rows;
  std::vector<bool> rhs;
};

struct SolverOptions {
  std::size_t max_matchings = 1'000'000;
};

// Rows follow EnumeratePerfectMatchings order. Throws
// Error(kTooManyMatchings) above options.max_matchings.
Gf2System BuildSystem(const Graph& g, const CrossingProfile& a,
                      const CrossingProfile& b,
                      const SolverOptions& options = {});

struct Gf2Solution {
  SignModification modification;
  int rank = 0;
  // Dimension of the solution space; 0 means the solution is unique.
  int nullity = 0;
};

// Gauss-Jordan elimination, pivot columns in ascending edge id, free
// variables set to 0. Throws Error(kNoSolution) for inconsistent systems.
Gf2Solution SolveGf2(const Gf2System& system);

// Throws Error(kNotSimpleGraph), Error(kNoSolution) when the two profiles
// cannot both come from drawings of g, or Error(kVerificationFailed) if the
// exact recomputation of both signed sums disagrees.
SignModification Equalize(const Graph& g, const WeightAssignment& weights,
                          const CrossingProfile& a, const CrossingProfile& b,
                          const SolverOptions& options = {});

// The sign modification w' with MatchingSum(g, w) == PfaffianOfGraph(g, w',
// order), i.e. Equalize between the planar profile and the half-circle
// profile. NoSolution here means g has no such modification (it is not
// planar, e.g. K_{3,3}).
SignModification KasteleynWeights(const Graph& g,
                                  const WeightAssignment& weights,
                                  const VertexOrder& order,
                                  const SolverOptions& options = {});

}  // namespace kasteleyn

#endif  // KASTELEYN_SIGN_SOLVER_H_
