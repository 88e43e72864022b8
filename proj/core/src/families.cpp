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

#include "sapzf/families.hpp"

#include <charconv>
#include <numeric>
#include <string>

namespace sapzf::families {

namespace {

Graph from_one_based(int n, std::initializer_list<Edge> edges)
{
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u - 1, v - 1);
    return g;
}

std::optional<int> to_int(std::string_view s)
{
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
    return value;
}

} // namespace

Graph path(int n)
{
    Graph g(n);
    for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle(int n)
{
    Graph g = path(n);
    if (n >= 3) g.add_edge(0, n - 1);
    return g;
}

Graph complete(int n)
{
    return complement(empty(n));
}

Graph empty(int n)
{
    return Graph(n);
}

Graph star(int n)
{
    return join(complete(1), empty(n));
}

Graph complete_multipartite(std::span<const int> parts)
{
    Graph g(0);
    for (int p : parts) g = join(g, empty(p));
    return g;
}

Graph complete_multipartite(std::initializer_list<int> parts)
{
    return complete_multipartite(std::span<const int>(parts.begin(), parts.size()));
}

Graph generalized_petersen(int n, int k)
{
    Graph g(2 * n);
    for (Vertex i = 0; i < n; ++i) {
        g.add_edge(i, (i + 1) % n);
        g.add_edge(i, n + i);
        g.add_edge(n + i, n + (i + k) % n);
    }
    return g;
}

Graph petersen() { return generalized_petersen(5, 2); }
Graph tetrahedron() { return complete(4); }
Graph cube() { return generalized_petersen(4, 1); }
Graph octahedron() { return complete_multipartite({2, 2, 2}); }
Graph dodecahedron() { return generalized_petersen(10, 2); }

Graph icosahedron()
{
    // apex 0, upper ring 1..5, lower ring 6..10, apex 11
    Graph g(12);
    for (int i = 0; i < 5; ++i) {
        int up = 1 + i;
        int low = 6 + i;
        g.add_edge(0, up);
        g.add_edge(11, low);
        g.add_edge(up, 1 + (i + 1) % 5);
        g.add_edge(low, 6 + (i + 1) % 5);
        g.add_edge(up, low);
        g.add_edge(up, 6 + (i + 1) % 5);
    }
    return g;
}

Graph kite()
{
    return from_one_based(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 2}});
}

Graph floor_gap_example()
{
    return from_one_based(8, {{1, 4}, {2, 6}, {3, 7}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 4}, {4, 6}, {4, 7}});
}

Graph double_spider()
{
    return from_one_based(9, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 6}, {3, 7}, {4, 8}, {5, 9}});
}

Graph ternary_tree_depth2()
{
    Graph g(13);
    for (Vertex c = 1; c <= 3; ++c) {
        g.add_edge(0, c);
        for (Vertex k = 1; k <= 3; ++k) g.add_edge(c, 3 * c + k);
    }
    return g;
}

std::optional<Graph> by_name(std::string_view name)
{
    static const std::pair<std::string_view, Graph (*)()> named[] = {
        {"petersen", petersen},       {"tetrahedron", tetrahedron},
        {"cube", cube},               {"octahedron", octahedron},
        {"dodecahedron", dodecahedron}, {"icosahedron", icosahedron},
        {"kite", kite},               {"floor-gap", floor_gap_example},
        {"double-spider", double_spider}, {"ternary-tree", ternary_tree_depth2},
    };
    for (const auto& [key, make] : named)
        if (key == name) return make();
    if (name.size() < 2) return std::nullopt;
    const char kind = name[0];
    const auto rest = name.substr(1);
    if (kind == 'K' && rest.find(',') != std::string_view::npos) {
        std::vector<int> parts;
        std::size_t start = 0;
        while (start <= rest.size()) {
            auto comma = rest.find(',', start);
            auto piece = rest.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
            auto v = to_int(piece);
            if (!v || *v < 1) return std::nullopt;
            parts.push_back(*v);
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
        if (std::accumulate(parts.begin(), parts.end(), 0) > max_vertices) return std::nullopt;
        return complete_multipartite(parts);
    }
    auto n = to_int(rest);
    if (!n || *n < 0 || *n > max_vertices) return std::nullopt;
    switch (kind) {
    case 'P': return path(*n);
    case 'C': return *n >= 3 ? std::optional<Graph>(cycle(*n)) : std::nullopt;
    case 'K': return complete(*n);
    case 'E': return empty(*n);
    default: return std::nullopt;
    }
}

} // namespace sapzf::families
