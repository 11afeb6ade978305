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

#ifndef KASTELEYN_RENDER_H_
#define KASTELEYN_RENDER_H_

#include <string>
#include <vector>

#include "kasteleyn/embedding.h"
#include "kasteleyn/graph.h"

namespace kasteleyn {

struct Point {
  double x;
  double y;
};

// Intersection of the upper half-circles over the position intervals
// [lo1, hi1] and [lo2, hi2], which must strictly interleave.
Point HalfCircleCrossing(int lo1, int hi1, int lo2, int hi2);

// Crossing points of the half-circle drawing in plane coordinates (vertex at
// position i sits at (i, 0)), one per crossing pair, ordered by edge pair.
std::vector<Point> StembridgeCrossingPoints(const Graph& g,
                                            const VertexOrder& order);

// Standalone SVG: black vertex dots, gray half-circle edges, a small white
// circle on every crossing. Output is byte-for-byte deterministic. Throws
// Error(kNotSimpleGraph).
std::string RenderStembridgeSvg(const Graph& g, const VertexOrder& order);

}  // namespace kasteleyn

#endif  // KASTELEYN_RENDER_H_
