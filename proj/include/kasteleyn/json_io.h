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

// File formats. All readers throw Error(kParse) on malformed JSON or missing
// fields; graph readers also surface the graph validation codes.
//
//   graph:    {"n": 4, "edges": [{"id": 1, "u": 1, "v": 2, "weight": "x1"}]}
//             "weight" is optional and defaults to "x<id>".
//   profile:  {"cross": [{"e1": 1, "e2": 3, "count": 1}],
//              "self_cross": [{"e": 2, "count": 1}]}
//   script:   [{"type": "adjacent_cross", "e1": 1, "e2": 2, "delta": -1},
//              {"type": "self_cross", "e": 4, "delta": 1},
//              {"type": "double_cross", "e1": 1, "e2": 5, "delta": -2},
//              {"type": "vertex_transition", "e": 7, "v": 4,
//               "deltas": [{"f": 2, "d": 1}, ...]}]
//   signs:    {"flips": [3, 5]}

#ifndef KASTELEYN_JSON_IO_H_
#define KASTELEYN_JSON_IO_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "kasteleyn/embedding.h"
#include "kasteleyn/graph.h"
#include "kasteleyn/moves.h"

namespace kasteleyn {

struct GraphFile {
  Graph graph;
  WeightAssignment weights;
};

GraphFile ParseGraph(std::string_view json);
CrossingProfile ParseProfile(std::string_view json);
std::vector<Move> ParseScript(std::string_view json);
SignModification ParseModification(std::string_view json);

std::string GraphToJson(const Graph& g, const WeightAssignment& weights);
std::string ProfileToJson(const CrossingProfile& profile);
std::string ScriptToJson(const std::vector<Move>& script);
std::string ModificationToJson(const SignModification& modification);
std::string LedgerToJson(const Ledger& ledger);

// Throws Error(kParse) if the file cannot be read.
std::string ReadFile(const std::filesystem::path& path);

}  // namespace kasteleyn

#endif  // KASTELEYN_JSON_IO_H_
