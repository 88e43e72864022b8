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
#include "sapzf/limits.hpp"

#include <functional>
#include <vector>

namespace sapzf {

/// One canonically labeled representative per isomorphism class of connected graphs
/// on n vertices, sorted by canonical graph6. Results are memoized per n.
///
/// Every connected graph has a vertex whose removal leaves it connected, so the
/// classes on n vertices are generated by attaching a new vertex to every nonempty
/// subset of each class on n-1 vertices and de-duplicating by canonical form.
const std::vector<Graph>& connected_graphs(int n, const Limits& limits = default_limits);

/// Streams connected_graphs(n) to `visit`.
void enumerate_connected(int n, const std::function<void(const Graph&)>& visit,
                         const Limits& limits = default_limits);

/// Every connected graph with 1..max_n vertices.
std::vector<Graph> connected_corpus(int max_n, const Limits& limits = default_limits);

} // namespace sapzf
