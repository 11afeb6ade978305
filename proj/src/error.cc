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

#include "kasteleyn/error.h"

namespace kasteleyn {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kLoopEdge: return "LoopEdge";
    case ErrorCode::kBadVertexLabel: return "BadVertexLabel";
    case ErrorCode::kDuplicateEdgeId: return "DuplicateEdgeId";
    case ErrorCode::kBadEdgeId: return "BadEdgeId";
    case ErrorCode::kUnknownEdgeId: return "UnknownEdgeId";
    case ErrorCode::kZeroWeight: return "ZeroWeight";
    case ErrorCode::kBadVertexOrder: return "BadVertexOrder";
    case ErrorCode::kBadProfile: return "BadProfile";
    case ErrorCode::kMissingIndeterminate: return "MissingIndeterminate";
    case ErrorCode::kNotSimpleGraph: return "NotSimpleGraph";
    case ErrorCode::kTooManyMatchings: return "TooManyMatchings";
    case ErrorCode::kDimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::kNegativeCount: return "NegativeCount";
    case ErrorCode::kNotAdjacent: return "NotAdjacent";
    case ErrorCode::kEndpointVertex: return "EndpointVertex";
    case ErrorCode::kIncompleteDeltas: return "IncompleteDeltas";
    case ErrorCode::kInvalidMove: return "InvalidMove";
    case ErrorCode::kNoSolution: return "NoSolution";
    case ErrorCode::kVerificationFailed: return "VerificationFailed";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code) {}

}  // namespace kasteleyn
