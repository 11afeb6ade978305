# Copyright 2026 The Kasteleyn Signs Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Perfect-matching generating functions, Pfaffians and sign modifications."""

from ._kasteleyn import (
    Graph,
    GraphFile,
    KasteleynError,
    Polynomial,
    Profile,
    Weights,
    apply_flips,
    apply_script,
    equalize,
    graph_to_json,
    kasteleyn_weights,
    matching_sum,
    parse_graph,
    perfect_matchings,
    pfaffian,
    pfaffian_expand,
    render_svg,
    signed_sum,
    stembridge_profile,
    verify,
    zero_profile,
)


def load_graph(path):
    """GraphFile from a graph JSON file."""
    with open(path, encoding="utf-8") as f:
        return parse_graph(f.read())


def load_profile(path):
    """Profile from a crossing-profile JSON file."""
    with open(path, encoding="utf-8") as f:
        return Profile.from_json(f.read())


__all__ = [
    "Graph",
    "GraphFile",
    "KasteleynError",
    "Polynomial",
    "Profile",
    "Weights",
    "apply_flips",
    "apply_script",
    "equalize",
    "graph_to_json",
    "kasteleyn_weights",
    "load_graph",
    "load_profile",
    "matching_sum",
    "parse_graph",
    "perfect_matchings",
    "pfaffian",
    "pfaffian_expand",
    "render_svg",
    "signed_sum",
    "stembridge_profile",
    "verify",
    "zero_profile",
]
