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

#include "sapzf/vertex_set.hpp"

#include <compare>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace sapzf {

using Edge = std::pair<Vertex, Vertex>;

/// Unordered vertex pair {a, b} stored with a < b.
struct NonEdge {
    Vertex a = 0;
    Vertex b = 0;

    constexpr NonEdge() = default;
    constexpr NonEdge(Vertex u, Vertex v) : a(u < v ? u : v), b(u < v ? v : u) {}

    constexpr bool contains(Vertex v) const { return v == a || v == b; }
    /// The endpoint that is not `v`; `v` must be an endpoint.
    constexpr Vertex other(Vertex v) const { return v == a ? b : a; }

    constexpr auto operator<=>(const NonEdge&) const = default;
};

/// "{2,4}" with 1-based labels.
std::string format_pair(NonEdge e);

/// Simple undirected graph on vertices 0..n-1 (n <= 64), one neighbor bitset per vertex.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, std::span<const Edge> edges);
    Graph(int n, std::initializer_list<Edge> edges);

    int order() const { return static_cast<int>(adj_.size()); }
    VertexSet vertices() const { return VertexSet::range(order()); }
    VertexSet neighbors(Vertex v) const { return adj_[v]; }
    VertexSet closed_neighbors(Vertex v) const { return adj_[v] | VertexSet::single(v); }
    /// Vertices other than v that are not adjacent to v.
    VertexSet non_neighbors(Vertex v) const { return vertices() - closed_neighbors(v); }
    bool has_edge(Vertex u, Vertex v) const { return adj_[u].contains(v); }
    int degree(Vertex v) const { return adj_[v].size(); }
    int edge_count() const;
    int non_edge_count() const;
    int max_degree() const;

    void add_edge(Vertex u, Vertex v);
    void remove_edge(Vertex u, Vertex v);

    std::vector<Edge> edges() const;
    /// All non-edges in lexicographic order of (a, b).
    std::vector<NonEdge> non_edges() const;
    VertexSet isolated_vertices() const;

    bool operator==(const Graph&) const = default;

private:
    std::vector<VertexSet> adj_;
};

Graph complement(const Graph& g);
/// Vertices of g keep their labels; vertices of h are shifted by g.order().
Graph disjoint_union(const Graph& g, const Graph& h);
Graph join(const Graph& g, const Graph& h);
/// Induced subgraph relabeled in increasing vertex order.
Graph induced_subgraph(const Graph& g, VertexSet keep);
Graph remove_vertex(const Graph& g, Vertex v);
/// Contracts edge {u, v}: v merges into u, then v is removed and labels above v shift down.
Graph contract_edge(const Graph& g, Vertex u, Vertex v);
/// New graph with vertex perm[v] in place of v.
Graph relabel(const Graph& g, std::span<const Vertex> perm);

std::vector<VertexSet> components(const Graph& g);
/// Components of g restricted to the vertex subset `within`.
std::vector<VertexSet> components_within(const Graph& g, VertexSet within);
bool is_connected(const Graph& g);
bool is_tree(const Graph& g);
bool is_path(const Graph& g);
/// Longest shortest-path distance; -1 for a disconnected graph.
int diameter(const Graph& g);

} // namespace sapzf
