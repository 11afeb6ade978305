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

// kasteleyn: perfect-matching generating functions, Pfaffians and sign
// modifications from JSON files.
//
// Exit codes: 0 success, 2 bad input, 3 unmet precondition, 4 internal
// oracle mismatch, 5 no solution, 6 invalid move.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kasteleyn/embedding.h"
#include "kasteleyn/error.h"
#include "kasteleyn/graph.h"
#include "kasteleyn/json_io.h"
#include "kasteleyn/matching.h"
#include "kasteleyn/moves.h"
#include "kasteleyn/render.h"
#include "kasteleyn/sign_solver.h"
#include "kasteleyn/verify.h"

namespace kasteleyn {
namespace {

constexpr int kExitInput = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitOracle = 4;
constexpr int kExitNoSolution = 5;
constexpr int kExitInvalidMove = 6;

int ExitCodeFor(const Error& err) {
  if (err.move_index()) return kExitInvalidMove;
  switch (err.code()) {
    case ErrorCode::kNotSimpleGraph:
    case ErrorCode::kTooManyMatchings:
    case ErrorCode::kDimensionTooLarge:
      return kExitPrecondition;
    case ErrorCode::kVerificationFailed:
      return kExitOracle;
    case ErrorCode::kNoSolution:
      return kExitNoSolution;
    default:
      return kExitInput;
  }
}

struct Flags {
  std::string graph;
  std::string profile;
  std::string profile_b;
  std::string script;
  std::string order;
  std::string out;
  std::uint64_t seed = VerifyOptions{}.seed;
  int trials = VerifyOptions{}.trials;
  std::size_t max_matchings = SolverOptions{}.max_matchings;
  bool inject_fault = false;
};

GraphFile LoadGraph(const Flags& flags) {
  return ParseGraph(ReadFile(flags.graph));
}

CrossingProfile LoadProfile(const std::string& path, const Graph& g) {
  CrossingProfile p = ParseProfile(ReadFile(path));
  ValidateProfile(p, g);
  return p;
}

VertexOrder OrderFor(const Flags& flags, const Graph& g) {
  if (flags.order.empty()) return VertexOrder::Identity(g.num_vertices());
  std::vector<Vertex> order;
  std::stringstream in(flags.order);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      order.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kBadVertexOrder, "bad --order entry '" + item + "'");
    }
  }
  if (static_cast<int>(order.size()) != g.num_vertices()) {
    throw Error(ErrorCode::kBadVertexOrder,
                "--order lists " + std::to_string(order.size()) +
                    " vertices, graph has " + std::to_string(g.num_vertices()));
  }
  return VertexOrder(std::move(order));
}

int CmdCount(const Flags& flags) {
  GraphFile file = LoadGraph(flags);
  std::cout << "m = " << MatchingSum(file.graph, file.weights) << "\n";
  std::cout << "count = "
            << MatchingSum(file.graph, WeightAssignment::Unit(file.graph))
            << "\n";
  return 0;
}

int CmdPfaffian(const Flags& flags) {
  GraphFile file = LoadGraph(flags);
  VertexOrder order = OrderFor(flags, file.graph);
  Polynomial pf = PfaffianOfGraph(file.graph, file.weights, order);
  Polynomial expanded =
      PfaffianExpand(SkewFromGraph(file.graph, file.weights, order));
  std::cout << "Pf = " << pf << "\n";
  std::cout << "Pf_expand = " << expanded << "\n";
  if (pf != expanded) {
    std::cerr << "error: Pfaffian routes disagree\n";
    return kExitOracle;
  }
  return 0;
}

int CmdSignedSum(const Flags& flags) {
  GraphFile file = LoadGraph(flags);
  CrossingProfile p = LoadProfile(flags.profile, file.graph);
  std::cout << "s = " << SignedSum(file.graph, file.weights, p) << "\n";
  return 0;
}

int CmdEqualize(const Flags& flags) {
  GraphFile file = LoadGraph(flags);
  CrossingProfile a = LoadProfile(flags.profile, file.graph);
  CrossingProfile b = LoadProfile(flags.profile_b, file.graph);
  SolverOptions options{flags.max_matchings};
  SignModification mod = Equalize(file.graph, file.weights, a, b, options);
  Gf2Solution diag = SolveGf2(BuildSystem(file.graph, a, b, options));
  std::cout << ModificationToJson(mod) << "\n";
  std::cout << "nullity = " << diag.nullity << "\n";
  std::cout << "s = " << SignedSum(file.graph, file.weights, a) << "\n";
  return 0;
}

int CmdKasteleyn(const Flags& flags) {
  GraphFile file = LoadGraph(flags);
  VertexOrder order = OrderFor(flags, file.graph);
  SignModification mod = KasteleynWeights(file.graph, file.weights, order,
                                          SolverOptions{flags.max_matchings});
  Polynomial m = MatchingSum(file.graph, file.weights);
  Polynomial pf = PfaffianOfGraph(file.graph, mod.Apply(file.weights), order);
  std::cout << "modification = " << ModificationToJson(mod) << "\n";
  if (m != pf) {
    std::cout << "m = " << m << "\n";
    std::cout << "Pf = " << pf << "\n";
    std::cerr << "error: m and Pf differ after sign modification\n";
    return kExitOracle;
  }
  std::cout << "m = Pf = " << m << "\n";
  return 0;
}

int CmdMoves(const Flags& flags) {
  GraphFile file = LoadGraph(flags);
  CrossingProfile p = LoadProfile(flags.profile, file.graph);
  std::vector<Move> script = ParseScript(ReadFile(flags.script));
  MoveResult result = ApplyScript(file.graph, p, script);
  SignModification mod = LedgerToModification(result.ledger);
  Polynomial before = SignedSum(file.graph, file.weights, p);
  Polynomial after =
      SignedSum(file.graph, mod.Apply(file.weights), result.profile);
  std::cout << "profile = " << ProfileToJson(result.profile) << "\n";
  std::cout << "ledger = " << LedgerToJson(result.ledger) << "\n";
  std::cout << "modification = " << ModificationToJson(mod) << "\n";
  std::cout << "s_before = " << before << "\n";
  std::cout << "s_after = " << after << "\n";
  if (before != after) {
    std::cerr << "error: signed sum changed under the move script\n";
    return kExitOracle;
  }
  return 0;
}

int CmdRender(const Flags& flags) {
  GraphFile file = LoadGraph(flags);
  std::string svg = RenderStembridgeSvg(file.graph, OrderFor(flags, file.graph));
  if (flags.out.empty()) {
    std::cout << svg;
    return 0;
  }
  std::ofstream out(flags.out, std::ios::binary);
  if (!out) throw Error(ErrorCode::kParse, "cannot write " + flags.out);
  out << svg;
  std::cout << "wrote " << flags.out << "\n";
  return 0;
}

int CmdVerify(const Flags& flags) {
  VerifyReport report = RunVerify({flags.seed, flags.trials, flags.inject_fault});
  std::cout << report.ToString();
  return report.ok() ? 0 : kExitOracle;
}

int Main(int argc, char** argv) {
  CLI::App app{"Perfect-matching generating functions, Pfaffians and sign "
               "modifications"};
  app.require_subcommand(1);
  Flags flags;

  auto add_graph = [&flags](CLI::App* cmd) {
    cmd->add_option("graph", flags.graph, "Graph JSON file")
        ->required()
        ->check(CLI::ExistingFile);
  };
  auto add_order = [&flags](CLI::App* cmd) {
    cmd->add_option("--order", flags.order,
                    "Comma-separated vertices, left to right");
  };
  auto add_cap = [&flags](CLI::App* cmd) {
    cmd->add_option("--max-matchings", flags.max_matchings,
                    "Refuse graphs with more perfect matchings");
  };

  CLI::App* count = app.add_subcommand("count", "Print m(G,w) and the number of perfect matchings");
  add_graph(count);

  CLI::App* pfaffian = app.add_subcommand("pfaffian", "Print the Pfaffian and its matrix-expansion check");
  add_graph(pfaffian);
  add_order(pfaffian);

  CLI::App* signed_sum = app.add_subcommand("signed-sum", "Print the signed generating function for a crossing profile");
  add_graph(signed_sum);
  signed_sum->add_option("profile", flags.profile, "Profile JSON file")
      ->required()
      ->check(CLI::ExistingFile);

  CLI::App* equalize = app.add_subcommand("equalize", "Find signs equating the signed sums of two profiles");
  add_graph(equalize);
  equalize->add_option("profile_a", flags.profile, "First profile")
      ->required()
      ->check(CLI::ExistingFile);
  equalize->add_option("profile_b", flags.profile_b, "Second profile")
      ->required()
      ->check(CLI::ExistingFile);
  add_cap(equalize);

  CLI::App* kasteleyn = app.add_subcommand("kasteleyn", "Find signs with m(G,w) = Pf(G,w')");
  add_graph(kasteleyn);
  add_order(kasteleyn);
  add_cap(kasteleyn);

  CLI::App* moves = app.add_subcommand("moves", "Replay a move script on a profile");
  add_graph(moves);
  moves->add_option("profile", flags.profile, "Starting profile")
      ->required()
      ->check(CLI::ExistingFile);
  moves->add_option("script", flags.script, "Move script JSON file")
      ->required()
      ->check(CLI::ExistingFile);

  CLI::App* render = app.add_subcommand("render", "Write an SVG of the half-circle drawing");
  add_graph(render);
  add_order(render);
  render->add_option("--out", flags.out, "Output SVG path (default stdout)");

  CLI::App* verify = app.add_subcommand("verify", "Run the randomized self-check suites");
  verify->add_option("--seed", flags.seed, "RNG seed");
  verify->add_option("--trials", flags.trials, "Trials per suite")
      ->check(CLI::NonNegativeNumber);
  verify->add_flag("--inject-fault", flags.inject_fault,
                   "Corrupt every check (harness self-test)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInput;
  }

  try {
    if (*count) return CmdCount(flags);
    if (*pfaffian) return CmdPfaffian(flags);
    if (*signed_sum) return CmdSignedSum(flags);
    if (*equalize) return CmdEqualize(flags);
    if (*kasteleyn) return CmdKasteleyn(flags);
    if (*moves) return CmdMoves(flags);
    if (*render) return CmdRender(flags);
    if (*verify) return CmdVerify(flags);
  } catch (const Error& err) {
    std::cerr << "error: " << err.what();
    if (err.move_index()) std::cerr << " (move " << *err.move_index() << ")";
    std::cerr << "\n";
    return ExitCodeFor(err);
  }
  return kExitInput;
}

}  // namespace
}  // namespace kasteleyn

int main(int argc, char** argv) { return kasteleyn::Main(argc, argv); }
