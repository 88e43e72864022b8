/*
 * Copyright 2026 The sapzf Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include "sapzf/graph.hpp"

#include <optional>
#include <string_view>
#include <vector>

// Named graphs. Labels follow the usual drawings: paths and cycles in linear order,
// stars with the center at vertex 0.
namespace sapzf::families {

Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
/// n isolated vertices.
Graph empty(int n);
/// K_{1,n}, center 0.
Graph star(int n);
Graph complete_multipartite(std::span<const int> parts);
Graph complete_multipartite(std::initializer_list<int> parts);
/// GP(n, k): outer cycle 0..n-1, spokes i -- n+i, inner edges n+i -- n+(i+k mod n).
Graph generalized_petersen(int n, int k);
Graph petersen();
Graph tetrahedron();
Graph cube();
Graph octahedron();
Graph dodecahedron();
Graph icosahedron();
/// Path 1-2-3-4-5 closed into the 4-cycle 2-3-4-5 (1-based labels).
Graph kite();
/// 8 vertices: three pendant vertices on a 5-cycle 4-5-6-7-8 with chords 4-6 and 4-7.
Graph floor_gap_example();
/// K_{1,4} with one extra leaf attached to each of its leaves (9 vertices).
Graph double_spider();
/// Root with three children, each of which has three leaf children (13 vertices).
Graph ternary_tree_depth2();

/// Lookup by name ("P5", "C4", "K4", "E3", "K1,3", "K2,2,2", "petersen", "kite", ...).
std::optional<Graph> by_name(std::string_view name);

} // namespace sapzf::families
