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

#ifndef KASTELEYN_ERROR_H_
#define KASTELEYN_ERROR_H_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace kasteleyn {

enum class ErrorCode {
  // Input and validation.
  kParse,
  kLoopEdge,
  kBadVertexLabel,
  kDuplicateEdgeId,
  kBadEdgeId,
  kUnknownEdgeId,
  kZeroWeight,
  kBadVertexOrder,
  kBadProfile,
  kMissingIndeterminate,
  // Preconditions.
  kNotSimpleGraph,
  kTooManyMatchings,
  kDimensionTooLarge,
  // Move rewriting.
  kNegativeCount,
  kNotAdjacent,
  kEndpointVertex,
  kIncompleteDeltas,
  kInvalidMove,
  // Solver.
  kNoSolution,
  kVerificationFailed,
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures are reported as Error. The code is stable and is what
// callers (the CLI in particular) dispatch on; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const { return code_; }

  // Index of the failing move when the error came out of a move script.
  std::optional<std::size_t> move_index() const { return move_index_; }
  void set_move_index(std::size_t index) { move_index_ = index; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> move_index_;
};

}  // namespace kasteleyn

#endif  // KASTELEYN_ERROR_H_
