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

#include "kasteleyn/json_io.h"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace kasteleyn {

using nlohmann::json;

namespace {

json Load(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
}

// Runs `body`, turning nlohmann type/key errors into kParse.
template <typename F>
auto Guard(const char* what, F&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, std::string(what) + ": " + e.what());
  }
}

}  // namespace

GraphFile ParseGraph(std::string_view text) {
  json doc = Load(text);
  return Guard("graph", [&]() -> GraphFile {
    const int n = doc.at("n").get<int>();
    std::vector<Edge> edges;
    std::vector<std::pair<EdgeId, std::string>> weight_text;
    for (const json& item : doc.at("edges")) {
      Edge e{item.at("id").get<int>(), item.at("u").get<int>(),
             item.at("v").get<int>()};
      edges.push_back(e);
      weight_text.emplace_back(e.id, item.contains("weight")
                                         ? item.at("weight").get<std::string>()
                                         : "x" + std::to_string(e.id));
    }
    Graph graph(n, std::move(edges));
    std::vector<Polynomial> weights(static_cast<std::size_t>(graph.num_edges()));
    for (const auto& [id, text] : weight_text) {
      Polynomial w = Polynomial::Parse(text);
      if (w.is_zero()) {
        throw Error(ErrorCode::kZeroWeight,
                    "edge " + std::to_string(id) + " has weight 0");
      }
      weights[static_cast<std::size_t>(id - 1)] = std::move(w);
    }
    return GraphFile{std::move(graph), WeightAssignment(std::move(weights))};
  });
}

CrossingProfile ParseProfile(std::string_view text) {
  json doc = Load(text);
  return Guard("profile", [&] {
    CrossingProfile profile;
    if (doc.contains("cross")) {
      for (const json& item : doc.at("cross")) {
        EdgeId a = item.at("e1").get<int>();
        EdgeId b = item.at("e2").get<int>();
        std::int64_t count = item.at("count").get<std::int64_t>();
        profile.set_cross(a, b, profile.cross(a, b) + count);
      }
    }
    if (doc.contains("self_cross")) {
      for (const json& item : doc.at("self_cross")) {
        EdgeId e = item.at("e").get<int>();
        profile.set_self_cross(
            e, profile.self_cross(e) + item.at("count").get<std::int64_t>());
      }
    }
    return profile;
  });
}

std::vector<Move> ParseScript(std::string_view text) {
  json doc = Load(text);
  return Guard("script", [&] {
    std::vector<Move> script;
    for (const json& item : doc) {
      const std::string type = item.at("type").get<std::string>();
      if (type == "adjacent_cross") {
        script.emplace_back(AdjacentCross{item.at("e1").get<int>(),
                                          item.at("e2").get<int>(),
                                          item.at("delta").get<int>()});
      } else if (type == "self_cross") {
        script.emplace_back(
            SelfCross{item.at("e").get<int>(), item.at("delta").get<int>()});
      } else if (type == "double_cross") {
        script.emplace_back(DoubleCross{item.at("e1").get<int>(),
                                        item.at("e2").get<int>(),
                                        item.at("delta").get<int>()});
      } else if (type == "vertex_transition") {
        VertexTransition move{item.at("e").get<int>(), item.at("v").get<int>(),
                              {}};
        for (const json& d : item.at("deltas")) {
          if (!move.deltas.emplace(d.at("f").get<int>(), d.at("d").get<int>())
                   .second) {
            throw Error(ErrorCode::kParse, "repeated delta edge in move " +
                                               std::to_string(script.size()));
          }
        }
        script.emplace_back(std::move(move));
      } else {
        throw Error(ErrorCode::kParse, "unknown move type '" + type + "'");
      }
    }
    return script;
  });
}

SignModification ParseModification(std::string_view text) {
  json doc = Load(text);
  return Guard("signs", [&] {
    return SignModification(doc.at("flips").get<std::set<EdgeId>>());
  });
}

std::string GraphToJson(const Graph& g, const WeightAssignment& weights) {
  json edges = json::array();
  for (const Edge& e : g.edges()) {
    edges.push_back({{"id", e.id},
                     {"u", e.u},
                     {"v", e.v},
                     {"weight", weights.at(e.id).ToString()}});
  }
  return json{{"n", g.num_vertices()}, {"edges", edges}}.dump();
}

std::string ProfileToJson(const CrossingProfile& profile) {
  json cross = json::array();
  for (const auto& [pair, count] : profile.cross_entries()) {
    cross.push_back({{"e1", pair.first}, {"e2", pair.second}, {"count", count}});
  }
  json self = json::array();
  for (const auto& [e, count] : profile.self_cross_entries()) {
    self.push_back({{"e", e}, {"count", count}});
  }
  return json{{"cross", cross}, {"self_cross", self}}.dump();
}

std::string ScriptToJson(const std::vector<Move>& script) {
  json out = json::array();
  for (const Move& move : script) {
    std::visit(
        [&out](const auto& m) {
          using T = std::decay_t<decltype(m)>;
          if constexpr (std::is_same_v<T, AdjacentCross>) {
            out.push_back({{"type", "adjacent_cross"},
                           {"e1", m.e1},
                           {"e2", m.e2},
                           {"delta", m.delta}});
          } else if constexpr (std::is_same_v<T, SelfCross>) {
            out.push_back({{"type", "self_cross"}, {"e", m.e}, {"delta", m.delta}});
          } else if constexpr (std::is_same_v<T, DoubleCross>) {
            out.push_back({{"type", "double_cross"},
                           {"e1", m.e1},
                           {"e2", m.e2},
                           {"delta", m.delta}});
          } else {
            json deltas = json::array();
            for (const auto& [f, d] : m.deltas) {
              deltas.push_back({{"f", f}, {"d", d}});
            }
            out.push_back({{"type", "vertex_transition"},
                           {"e", m.e},
                           {"v", m.v},
                           {"deltas", deltas}});
          }
        },
        move);
  }
  return out.dump();
}

std::string ModificationToJson(const SignModification& modification) {
  return json{{"flips", modification.flipped()}}.dump();
}

std::string LedgerToJson(const Ledger& ledger) {
  json flips = json::array();
  for (const auto& [e, count] : ledger.entries()) {
    flips.push_back({{"e", e}, {"count", count}});
  }
  return json{{"flips", flips}}.dump();
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParse, "cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace kasteleyn
