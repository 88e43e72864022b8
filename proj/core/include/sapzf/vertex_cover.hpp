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

namespace sapzf {

struct VertexCover {
    int size = 0;
    VertexSet cover;
};

/// Exact minimum vertex cover by branch and bound on a maximum-degree vertex.
VertexCover min_vertex_cover(const Graph& g, const Limits& limits = default_limits);

inline int vertex_cover_number(const Graph& g, const Limits& limits = default_limits)
{
    return min_vertex_cover(g, limits).size;
}

bool is_vertex_cover(const Graph& g, VertexSet s);

} // namespace sapzf
