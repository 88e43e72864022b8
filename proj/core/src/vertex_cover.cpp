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

#include "sapzf/vertex_cover.hpp"

#include "sapzf/error.hpp"

namespace sapzf {

namespace {

struct Branch {
    const Graph& g;
    VertexCover best;

    // `alive` holds the vertices not yet decided; `chosen` is the partial cover.
    void run(VertexSet alive, VertexSet chosen)
    {
        if (chosen.size() >= best.size) return;
        Vertex pivot = -1;
        int pivot_degree = 0;
        int remaining_edges_twice = 0;
        for (auto v : alive) {
            int d = (g.neighbors(v) & alive).size();
            remaining_edges_twice += d;
            if (d > pivot_degree) {
                pivot = v;
                pivot_degree = d;
            }
        }
        if (pivot < 0) {
            best = {chosen.size(), chosen};
            return;
        }
        // each chosen vertex covers at most pivot_degree remaining edges
        const int edges = remaining_edges_twice / 2;
        if (chosen.size() + (edges + pivot_degree - 1) / pivot_degree >= best.size) return;

        auto without = alive;
        without.erase(pivot);
        run(without, chosen | VertexSet::single(pivot));
        auto nbrs = g.neighbors(pivot) & alive;
        run(without - nbrs, chosen | nbrs);
    }
};

} // namespace

bool is_vertex_cover(const Graph& g, VertexSet s)
{
    for (auto [u, v] : g.edges())
        if (!s.contains(u) && !s.contains(v)) return false;
    return true;
}

VertexCover min_vertex_cover(const Graph& g, const Limits& limits)
{
    if (g.order() > limits.vertex_cover_vertices)
        throw CapError("vertex_cover_number", g.order(), limits.vertex_cover_vertices);
    Branch search{g, {g.order(), g.vertices()}};
    search.run(g.vertices(), VertexSet{});
    return search.best;
}

} // namespace sapzf
