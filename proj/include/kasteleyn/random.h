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

// Seeded generators of random test inputs: graphs, weights, profiles, valid
// moves. Draws are std::mt19937_64 output reduced modulo the range; a seed
// gives the same inputs on every platform.

#ifndef KASTELEYN_RANDOM_H_
#define KASTELEYN_RANDOM_H_

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "kasteleyn/embedding.h"
#include "kasteleyn/graph.h"
#include "kasteleyn/matching.h"
#include "kasteleyn/moves.h"

namespace kasteleyn {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [lo, hi].
  std::int64_t Uniform(std::int64_t lo, std::int64_t hi);
  bool Coin(double p_true = 0.5);
  std::uint64_t Next() { return engine_(); }

  template <typename T>
  void Shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1],
                items[static_cast<std::size_t>(Uniform(0, static_cast<std::int64_t>(i) - 1))]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

// Simple graph on n vertices containing at least one perfect matching when n
// is even: a random pairing plus every other pair with probability
// `density`.
Graph RandomSimpleGraph(Rng& rng, int n, double density);

// Integer weights drawn from [-bound, bound] \ {0}.
WeightAssignment RandomIntegerWeights(Rng& rng, const Graph& g, int bound);

// Random counts in [0, max_count] on a random subset of edge pairs, plus a
// few self-crossings.
CrossingProfile RandomProfile(Rng& rng, const Graph& g, int max_count);

VertexOrder RandomOrder(Rng& rng, int n);

// A move that ApplyMove accepts for (g, profile), or nullopt if the graph
// admits none (e.g. a single edge).
std::optional<Move> RandomValidMove(Rng& rng, const Graph& g,
                                    const CrossingProfile& profile);

SkewMatrix RandomIntegerSkewMatrix(Rng& rng, int dimension, int bound);

}  // namespace kasteleyn

#endif  // KASTELEYN_RANDOM_H_
