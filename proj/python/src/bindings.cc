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

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "kasteleyn/json_io.h"
#include "kasteleyn/matching.h"
#include "kasteleyn/moves.h"
#include "kasteleyn/render.h"
#include "kasteleyn/sign_solver.h"
#include "kasteleyn/verify.h"

namespace py = pybind11;

namespace kasteleyn {
namespace {

VertexOrder OrderOrIdentity(const Graph& g,
                            const std::optional<std::vector<Vertex>>& order) {
  return order ? VertexOrder(*order) : VertexOrder::Identity(g.num_vertices());
}

std::vector<EdgeId> Flipped(const SignModification& mod) {
  return {mod.flipped().begin(), mod.flipped().end()};
}

// Python-side ints become BigInt through their decimal text.
BigInt ToBigInt(const py::int_& value) {
  const std::string text = py::str(py::handle(value));
  return BigInt(text);
}

py::int_ ToPyInt(const BigInt& value) {
  return py::reinterpret_steal<py::int_>(
      PyLong_FromString(value.str().c_str(), nullptr, 10));
}

}  // namespace
}  // namespace kasteleyn

PYBIND11_MODULE(_kasteleyn, m) {
  using namespace kasteleyn;
  m.doc() = "Perfect-matching generating functions, Pfaffians and sign "
            "modifications.";

  static py::exception<Error> error(m, "KasteleynError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object args = py::make_tuple(ErrorCodeName(e.code()), e.what());
      PyErr_SetObject(error.ptr(), args.ptr());
    }
  });

  py::class_<Polynomial>(m, "Polynomial")
      .def(py::init<>())
      .def(py::init([](const py::int_& c) { return Polynomial(ToBigInt(c)); }))
      .def(py::init([](const std::string& text) { return Polynomial::Parse(text); }))
      .def_static("parse", &Polynomial::Parse)
      .def_static("variable", &Polynomial::Variable)
      .def("is_zero", &Polynomial::is_zero)
      .def("is_constant", &Polynomial::is_constant)
      .def("constant_term",
           [](const Polynomial& p) { return ToPyInt(p.constant_term()); })
      .def("evaluate",
           [](const Polynomial& p, const std::map<VarId, py::int_>& at) {
             IntegerAssignment values;
             for (const auto& [v, x] : at) values[v] = ToBigInt(x);
             return ToPyInt(p.Evaluate(values));
           })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__str__", &Polynomial::ToString)
      .def("__repr__",
           [](const Polynomial& p) { return "Polynomial('" + p.ToString() + "')"; });
  py::implicitly_convertible<py::int_, Polynomial>();
  py::implicitly_convertible<py::str, Polynomial>();

  py::class_<Graph>(m, "Graph")
      .def(py::init([](int n, const std::vector<std::tuple<EdgeId, Vertex, Vertex>>& edges) {
             std::vector<Edge> list;
             for (const auto& [id, u, v] : edges) list.push_back({id, u, v});
             return Graph(n, std::move(list));
           }),
           py::arg("n"), py::arg("edges"))
      .def_property_readonly("num_vertices", &Graph::num_vertices)
      .def_property_readonly("num_edges", &Graph::num_edges)
      .def_property_readonly("is_simple", &Graph::IsSimple)
      .def_property_readonly("edges", [](const Graph& g) {
        std::vector<std::tuple<EdgeId, Vertex, Vertex>> out;
        for (const Edge& e : g.edges()) out.emplace_back(e.id, e.u, e.v);
        return out;
      });

  py::class_<WeightAssignment>(m, "Weights")
      .def(py::init<std::vector<Polynomial>>())
      .def_static("unit", &WeightAssignment::Unit)
      .def_static("symbolic", &WeightAssignment::Symbolic)
      .def("__getitem__", &WeightAssignment::at)
      .def("__len__", &WeightAssignment::size)
      .def("values", &WeightAssignment::values);

  py::class_<GraphFile>(m, "GraphFile")
      .def_readonly("graph", &GraphFile::graph)
      .def_readonly("weights", &GraphFile::weights);

  py::class_<CrossingProfile>(m, "Profile")
      .def(py::init<>())
      .def("cross", &CrossingProfile::cross)
      .def("self_cross", &CrossingProfile::self_cross)
      .def("set_cross", &CrossingProfile::set_cross)
      .def("set_self_cross", &CrossingProfile::set_self_cross)
      .def("total_crossings", &CrossingProfile::TotalCrossings)
      .def("to_json", &ProfileToJson)
      .def_static("from_json", [](const std::string& text) { return ParseProfile(text); })
      .def(py::self == py::self);

  m.def("parse_graph", [](const std::string& text) { return ParseGraph(text); },
        "Graph and weights from graph JSON text.");
  m.def("graph_to_json", &GraphToJson);
  m.def("zero_profile", &ZeroProfile);
  m.def("stembridge_profile",
        [](const Graph& g, std::optional<std::vector<Vertex>> order) {
          return StembridgeProfile(g, OrderOrIdentity(g, order));
        },
        py::arg("graph"), py::arg("order") = py::none());

  m.def("perfect_matchings",
        [](const Graph& g, std::size_t limit) {
          return EnumeratePerfectMatchings(g, limit);
        },
        py::arg("graph"), py::arg("max_matchings") = kNoMatchingLimit);
  m.def("matching_sum", &MatchingSum);
  m.def("signed_sum", &SignedSum);
  m.def("pfaffian",
        [](const Graph& g, const WeightAssignment& w,
           std::optional<std::vector<Vertex>> order) {
          return PfaffianOfGraph(g, w, OrderOrIdentity(g, order));
        },
        py::arg("graph"), py::arg("weights"), py::arg("order") = py::none());
  m.def("pfaffian_expand",
        [](const Graph& g, const WeightAssignment& w,
           std::optional<std::vector<Vertex>> order) {
          return PfaffianExpand(SkewFromGraph(g, w, OrderOrIdentity(g, order)));
        },
        py::arg("graph"), py::arg("weights"), py::arg("order") = py::none());

  m.def("equalize",
        [](const Graph& g, const WeightAssignment& w, const CrossingProfile& a,
           const CrossingProfile& b, std::size_t max_matchings) {
          return Flipped(Equalize(g, w, a, b, {max_matchings}));
        },
        py::arg("graph"), py::arg("weights"), py::arg("a"), py::arg("b"),
        py::arg("max_matchings") = SolverOptions{}.max_matchings,
        "Sorted ids of the edges whose weights must be negated.");
  m.def("kasteleyn_weights",
        [](const Graph& g, const WeightAssignment& w,
           std::optional<std::vector<Vertex>> order, std::size_t max_matchings) {
          return Flipped(KasteleynWeights(g, w, OrderOrIdentity(g, order),
                                          {max_matchings}));
        },
        py::arg("graph"), py::arg("weights"), py::arg("order") = py::none(),
        py::arg("max_matchings") = SolverOptions{}.max_matchings);
  m.def("apply_flips",
        [](const WeightAssignment& w, const std::vector<EdgeId>& flips) {
          return SignModification({flips.begin(), flips.end()}).Apply(w);
        });

  m.def("apply_script",
        [](const Graph& g, const CrossingProfile& p, const std::string& script) {
          std::vector<Move> moves = ParseScript(script);
          MoveResult r = ApplyScript(g, p, moves);
          return py::make_tuple(r.profile, r.ledger.entries());
        },
        py::arg("graph"), py::arg("profile"), py::arg("script_json"),
        "(final profile, {edge id: flip count}) after a JSON move script.");

  m.def("render_svg",
        [](const Graph& g, std::optional<std::vector<Vertex>> order) {
          return RenderStembridgeSvg(g, OrderOrIdentity(g, order));
        },
        py::arg("graph"), py::arg("order") = py::none());

  m.def("verify",
        [](std::uint64_t seed, int trials, bool inject_fault) {
          VerifyReport report = RunVerify({seed, trials, inject_fault});
          return py::make_tuple(report.ok(), report.ToString());
        },
        py::arg("seed") = VerifyOptions{}.seed,
        py::arg("trials") = VerifyOptions{}.trials,
        py::arg("inject_fault") = false,
        "(ok, report text) from the randomized self-check suites.");
}
