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

#include "kasteleyn/verify.h"

#include <algorithm>
#include <sstream>

#include "kasteleyn/matching.h"
#include "kasteleyn/moves.h"
#include "kasteleyn/random.h"
#include "kasteleyn/sign_solver.h"

namespace kasteleyn {

namespace {

void Record(SuiteResult& suite, bool ok) {
  if (ok) {
    ++suite.passed;
  } else {
    ++suite.failed;
  }
}

int RandomEvenSize(Rng& rng) { return 2 * static_cast<int>(rng.Uniform(1, 4)); }

SuiteResult MoveInvariance(Rng& rng, const VerifyOptions& options) {
  SuiteResult suite{"move_invariance"};
  while (suite.passed + suite.failed < options.trials) {
    Graph g = RandomSimpleGraph(rng, RandomEvenSize(rng), 0.5);
    WeightAssignment w = WeightAssignment::Symbolic(g);
    CrossingProfile p = RandomProfile(rng, g, 3);
    std::optional<Move> move = RandomValidMove(rng, g, p);
    if (!move) continue;
    Ledger before;
    MoveResult after = ApplyMove(g, p, before, *move);
    const Ledger& used = options.inject_fault ? before : after.ledger;
    Record(suite, SignedSum(g, LedgerToModification(before).Apply(w), p) ==
                      SignedSum(g, LedgerToModification(used).Apply(w),
                                after.profile));
  }
  return suite;
}

SuiteResult PfaffianSquared(Rng& rng, const VerifyOptions& options) {
  SuiteResult suite{"pf_squared_det"};
  for (int t = 0; t < options.trials; ++t) {
    const int dim = static_cast<int>(rng.Uniform(2, 10));
    SkewMatrix a = RandomIntegerSkewMatrix(rng, dim, 5);
    Polynomial pf = PfaffianExpand(a);
    if (options.inject_fault) pf += Polynomial(1);
    Record(suite, pf * pf == Determinant(a));
  }
  return suite;
}

// Sign of the permutation listing each matched pair's positions in turn,
// pairs taken by smallest position; counted by inversions.
int InversionSign(const Matching& m, const Graph& g, const VertexOrder& order) {
  std::vector<std::pair<int, int>> pairs;
  for (EdgeId id : m) {
    const Edge& e = g.edge(id);
    int a = order.position(e.u), b = order.position(e.v);
    pairs.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(pairs.begin(), pairs.end());
  std::vector<int> seq;
  for (const auto& [a, b] : pairs) {
    seq.push_back(a);
    seq.push_back(b);
  }
  int inversions = 0;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      if (seq[i] > seq[j]) ++inversions;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

SuiteResult ParityOracle(Rng& rng, const VerifyOptions& options) {
  SuiteResult suite{"parity_oracle"};
  while (suite.passed + suite.failed < options.trials) {
    const int n = RandomEvenSize(rng);
    Graph g = RandomSimpleGraph(rng, n, 0.5);
    VertexOrder order = RandomOrder(rng, n);
    std::vector<Matching> all = EnumeratePerfectMatchings(g);
    const Matching& m = all[static_cast<std::size_t>(
        rng.Uniform(0, static_cast<std::int64_t>(all.size()) - 1))];
    int sign = MatchingSign(m, StembridgeProfile(g, order));
    if (options.inject_fault) sign = -sign;
    Record(suite, sign == InversionSign(m, g, order));
  }
  return suite;
}

SuiteResult SolverSoundness(Rng& rng, const VerifyOptions& options) {
  SuiteResult suite{"solver_soundness"};
  while (suite.passed + suite.failed < options.trials) {
    const int n = RandomEvenSize(rng);
    Graph g = RandomSimpleGraph(rng, n, 0.5);
    WeightAssignment w = WeightAssignment::Symbolic(g);
    CrossingProfile start = StembridgeProfile(g, RandomOrder(rng, n));
    std::vector<Move> script;
    CrossingProfile p = start;
    const int length = static_cast<int>(rng.Uniform(1, 8));
    for (int i = 0; i < length; ++i) {
      std::optional<Move> move = RandomValidMove(rng, g, p);
      if (!move) break;
      p = ApplyMove(g, p, Ledger(), *move).profile;
      script.push_back(*move);
    }
    MoveResult replay = ApplyScript(g, start, script);
    bool ok = true;
    try {
      SignModification solved = Equalize(g, w, start, replay.profile);
      if (options.inject_fault && g.num_edges() > 0) {
        solved = solved.Compose(SignModification({1}));
      }
      const Polynomial target = SignedSum(g, w, start);
      ok = SignedSum(g, solved.Apply(w), replay.profile) == target &&
           SignedSum(g, LedgerToModification(replay.ledger).Apply(w),
                     replay.profile) == target;
    } catch (const Error&) {
      ok = false;
    }
    Record(suite, ok);
  }
  return suite;
}

}  // namespace

bool VerifyReport::ok() const {
  for (const SuiteResult& s : suites) {
    if (s.failed != 0 || s.passed == 0) return false;
  }
  return !suites.empty();
}

std::string VerifyReport::ToString() const {
  std::ostringstream out;
  out << "seed = " << seed << "\n";
  out << "trials = " << trials << "\n";
  for (const SuiteResult& s : suites) {
    out << s.name << ": " << s.passed << "/" << (s.passed + s.failed)
        << " passed\n";
  }
  out << "result = " << (ok() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

VerifyReport RunVerify(const VerifyOptions& options) {
  VerifyReport report;
  report.seed = options.seed;
  report.trials = options.trials;
  // Independent stream per suite.
  Rng moves(options.seed);
  Rng matrices(options.seed + 1);
  Rng parity(options.seed + 2);
  Rng solver(options.seed + 3);
  report.suites.push_back(MoveInvariance(moves, options));
  report.suites.push_back(PfaffianSquared(matrices, options));
  report.suites.push_back(ParityOracle(parity, options));
  report.suites.push_back(SolverSoundness(solver, options));
  return report;
}

}  // namespace kasteleyn
