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

#include "sapzf/graph.hpp"

#include "sapzf/error.hpp"

#include <algorithm>

namespace sapzf {

std::string format_vertex_set(VertexSet s)
{
    std::string out = "{";
    bool first = true;
    for (auto v : s) {
        if (!first) out += ',';
        out += std::to_string(v + 1);
        first = false;
    }
    return out + "}";
}

std::string format_pair(NonEdge e)
{
    return "{" + std::to_string(e.a + 1) + "," + std::to_string(e.b + 1) + "}";
}

Graph::Graph(int n)
{
    if (n < 0 || n > max_vertices)
        throw DomainError("graph order " + std::to_string(n) + " outside 0.." + std::to_string(max_vertices));
    adj_.assign(static_cast<std::size_t>(n), VertexSet{});
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n)
{
    for (auto [u, v] : edges) add_edge(u, v);
}

Graph::Graph(int n, std::initializer_list<Edge> edges) : Graph(n)
{
    for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::add_edge(Vertex u, Vertex v)
{
    if (u < 0 || v < 0 || u >= order() || v >= order())
        throw DomainError("edge endpoint out of range");
    if (u == v) throw DomainError("self-loop at vertex " + std::to_string(u + 1));
    adj_[u].insert(v);
    adj_[v].insert(u);
}

void Graph::remove_edge(Vertex u, Vertex v)
{
    adj_[u].erase(v);
    adj_[v].erase(u);
}

int Graph::edge_count() const
{
    int twice = 0;
    for (auto s : adj_) twice += s.size();
    return twice / 2;
}

int Graph::non_edge_count() const
{
    int n = order();
    return n * (n - 1) / 2 - edge_count();
}

int Graph::max_degree() const
{
    int best = 0;
    for (auto s : adj_) best = std::max(best, s.size());
    return best;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    for (Vertex u = 0; u < order(); ++u)
        for (auto v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::vector<NonEdge> Graph::non_edges() const
{
    std::vector<NonEdge> out;
    for (Vertex u = 0; u < order(); ++u)
        for (auto v : non_neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

VertexSet Graph::isolated_vertices() const
{
    VertexSet out;
    for (Vertex v = 0; v < order(); ++v)
        if (adj_[v].empty()) out.insert(v);
    return out;
}

Graph complement(const Graph& g)
{
    Graph out(g.order());
    for (auto e : g.non_edges()) out.add_edge(e.a, e.b);
    return out;
}

Graph disjoint_union(const Graph& g, const Graph& h)
{
    Graph out(g.order() + h.order());
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    for (auto [u, v] : h.edges()) out.add_edge(u + g.order(), v + g.order());
    return out;
}

Graph join(const Graph& g, const Graph& h)
{
    Graph out = disjoint_union(g, h);
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = 0; v < h.order(); ++v) out.add_edge(u, v + g.order());
    return out;
}

Graph induced_subgraph(const Graph& g, VertexSet keep)
{
    std::vector<Vertex> index(static_cast<std::size_t>(g.order()), -1);
    int next = 0;
    for (auto v : keep) index[v] = next++;
    Graph out(next);
    for (auto [u, v] : g.edges())
        if (keep.contains(u) && keep.contains(v)) out.add_edge(index[u], index[v]);
    return out;
}

Graph remove_vertex(const Graph& g, Vertex v)
{
    auto keep = g.vertices();
    keep.erase(v);
    return induced_subgraph(g, keep);
}

Graph contract_edge(const Graph& g, Vertex u, Vertex v)
{
    Graph merged = g;
    for (auto w : g.neighbors(v))
        if (w != u) merged.add_edge(u, w);
    return remove_vertex(merged, v);
}

Graph relabel(const Graph& g, std::span<const Vertex> perm)
{
    Graph out(g.order());
    for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
    return out;
}

std::vector<VertexSet> components_within(const Graph& g, VertexSet within)
{
    std::vector<VertexSet> out;
    VertexSet left = within;
    while (!left.empty()) {
        VertexSet comp = VertexSet::single(left.first());
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            VertexSet next;
            for (auto v : frontier) next |= g.neighbors(v);
            next &= within;
            frontier = next - comp;
            comp |= frontier;
        }
        out.push_back(comp);
        left -= comp;
    }
    return out;
}

std::vector<VertexSet> components(const Graph& g)
{
    return components_within(g, g.vertices());
}

bool is_connected(const Graph& g)
{
    return g.order() > 0 && components(g).size() == 1;
}

bool is_tree(const Graph& g)
{
    return is_connected(g) && g.edge_count() == g.order() - 1;
}

bool is_path(const Graph& g)
{
    return is_tree(g) && g.max_degree() <= 2;
}

int diameter(const Graph& g)
{
    if (!is_connected(g)) return -1;
    int best = 0;
    for (Vertex s = 0; s < g.order(); ++s) {
        VertexSet seen = VertexSet::single(s);
        VertexSet frontier = seen;
        int dist = 0;
        while (seen != g.vertices()) {
            VertexSet next;
            for (auto v : frontier) next |= g.neighbors(v);
            frontier = next - seen;
            seen |= frontier;
            ++dist;
        }
        best = std::max(best, dist);
    }
    return best;
}

} // namespace sapzf
