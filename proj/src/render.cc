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

#include "kasteleyn/render.h"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace kasteleyn {

namespace {

constexpr double kScale = 60.0;   // pixels per unit
constexpr double kMargin = 30.0;
constexpr double kVertexRadius = 5.0;
constexpr double kCrossingRadius = 4.0;

std::string Num(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", value);
  return buf;
}

}  // namespace

Point HalfCircleCrossing(int lo1, int hi1, int lo2, int hi2) {
  const double c1 = (lo1 + hi1) / 2.0;
  const double r1 = (hi1 - lo1) / 2.0;
  const double c2 = (lo2 + hi2) / 2.0;
  const double r2 = (hi2 - lo2) / 2.0;
  // Radical line of two circles centered on the x-axis.
  const double x = (r1 * r1 - r2 * r2 + c2 * c2 - c1 * c1) / (2.0 * (c2 - c1));
  const double y = std::sqrt(std::max(0.0, r1 * r1 - (x - c1) * (x - c1)));
  return {x, y};
}

std::vector<Point> StembridgeCrossingPoints(const Graph& g,
                                            const VertexOrder& order) {
  std::vector<Point> out;
  const CrossingProfile profile = StembridgeProfile(g, order);
  for (const auto& [pair, count] : profile.cross_entries()) {
    const Edge& a = g.edge(pair.first);
    const Edge& b = g.edge(pair.second);
    int a1 = order.position(a.u), a2 = order.position(a.v);
    int b1 = order.position(b.u), b2 = order.position(b.v);
    out.push_back(HalfCircleCrossing(std::min(a1, a2), std::max(a1, a2),
                                     std::min(b1, b2), std::max(b1, b2)));
  }
  return out;
}

std::string RenderStembridgeSvg(const Graph& g, const VertexOrder& order) {
  const std::vector<Point> crossings = StembridgeCrossingPoints(g, order);
  const int n = g.num_vertices();
  const double max_radius = n > 1 ? (n - 1) / 2.0 : 0.0;
  const double width = 2 * kMargin + std::max(0, n - 1) * kScale;
  const double base = kMargin + max_radius * kScale;
  const double height = base + kMargin;
  auto px = [](double x) { return kMargin + (x - 1.0) * kScale; };
  auto py = [base](double y) { return base - y * kScale; };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + Num(width) +
         "\" height=\"" + Num(height) + "\" viewBox=\"0 0 " + Num(width) +
         " " + Num(height) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "<g fill=\"none\" stroke=\"gray\" stroke-width=\"2\">\n";
  for (const Edge& e : g.edges()) {
    int lo = std::min(order.position(e.u), order.position(e.v));
    int hi = std::max(order.position(e.u), order.position(e.v));
    const double r = (hi - lo) / 2.0 * kScale;
    svg += "<path id=\"e" + std::to_string(e.id) + "\" d=\"M " + Num(px(lo)) +
           " " + Num(base) + " A " + Num(r) + " " + Num(r) + " 0 0 1 " +
           Num(px(hi)) + " " + Num(base) + "\"/>\n";
  }
  svg += "</g>\n";
  svg += "<g fill=\"white\" stroke=\"black\" stroke-width=\"1\">\n";
  for (const Point& p : crossings) {
    svg += "<circle class=\"crossing\" cx=\"" + Num(px(p.x)) + "\" cy=\"" +
           Num(py(p.y)) + "\" r=\"" + Num(kCrossingRadius) + "\"/>\n";
  }
  svg += "</g>\n";
  svg += "<g fill=\"black\" font-family=\"sans-serif\" font-size=\"12\" "
         "text-anchor=\"middle\">\n";
  for (int i = 1; i <= n; ++i) {
    svg += "<circle class=\"vertex\" cx=\"" + Num(px(i)) + "\" cy=\"" +
           Num(base) + "\" r=\"" + Num(kVertexRadius) + "\"/>\n";
    svg += "<text x=\"" + Num(px(i)) + "\" y=\"" + Num(base + 20) + "\">v" +
           std::to_string(order.at(i)) + "</text>\n";
  }
  svg += "</g>\n</svg>\n";
  return svg;
}

}  // namespace kasteleyn
