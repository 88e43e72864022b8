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

#include "sapzf/minor.hpp"

#include "sapzf/canonical.hpp"
#include "sapzf/error.hpp"
#include "sapzf/families.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace sapzf {

namespace {

// H's vertices in an order where each vertex after the first of its component has an
// earlier neighbor, highest degree first.
std::vector<Vertex> embedding_order(const Graph& h)
{
    std::vector<Vertex> order;
    VertexSet placed;
    while (placed != h.vertices()) {
        Vertex start = -1;
        for (auto v : h.vertices() - placed)
            if (start < 0 || h.degree(v) > h.degree(start)) start = v;
        order.push_back(start);
        placed.insert(start);
        while (true) {
            Vertex next = -1;
            int links = -1;
            for (auto v : h.vertices() - placed) {
                int l = (h.neighbors(v) & placed).size();
                if (l == 0) continue;
                if (l > links || (l == links && h.degree(v) > h.degree(next))) {
                    next = v;
                    links = l;
                }
            }
            if (next < 0) break;
            order.push_back(next);
            placed.insert(next);
        }
    }
    return order;
}

bool extend(const Graph& g, const Graph& h, const std::vector<Vertex>& order, std::size_t depth,
            std::vector<Vertex>& image, VertexSet used)
{
    if (depth == order.size()) return true;
    const Vertex hv = order[depth];
    VertexSet candidates = g.vertices() - used;
    for (auto hu : h.neighbors(hv))
        if (image[hu] >= 0) candidates &= g.neighbors(image[hu]);
    for (auto c : candidates) {
        if (g.degree(c) < h.degree(hv)) continue;
        image[hv] = c;
        auto next_used = used;
        next_used.insert(c);
        if (extend(g, h, order, depth + 1, image, next_used)) return true;
    }
    image[hv] = -1;
    return false;
}

struct ContractionSearch {
    const Graph& h;
    const Limits& limits;
    std::set<std::string> failed;

    // `sets[v]` is the branch set of the original graph represented by vertex v of `g`.
    std::optional<MinorModel> run(const Graph& g, const std::vector<VertexSet>& sets)
    {
        if (g.order() < h.order() || g.edge_count() < h.edge_count()) return std::nullopt;
        auto key = canonical_form(g, limits).graph6;
        if (failed.contains(key)) return std::nullopt;
        if (auto image = find_subgraph(g, h)) {
            MinorModel model;
            for (auto v : *image) model.branch_sets.push_back(sets[v]);
            return model;
        }
        if (g.order() > h.order()) {
            for (auto [u, v] : g.edges()) {
                auto next_sets = sets;
                next_sets[u] |= next_sets[v];
                next_sets.erase(next_sets.begin() + v);
                if (auto found = run(contract_edge(g, u, v), next_sets)) return found;
            }
        }
        failed.insert(std::move(key));
        return std::nullopt;
    }
};

} // namespace

std::optional<std::vector<Vertex>> find_subgraph(const Graph& g, const Graph& h)
{
    if (h.order() > g.order() || h.edge_count() > g.edge_count()) return std::nullopt;
    std::vector<Vertex> image(static_cast<std::size_t>(h.order()), -1);
    if (!extend(g, h, embedding_order(h), 0, image, VertexSet{})) return std::nullopt;
    return image;
}

std::optional<MinorModel> find_minor(const Graph& g, const Graph& h, const Limits& limits)
{
    if (g.order() > limits.minor_vertices) throw CapError("has_minor", g.order(), limits.minor_vertices);
    std::vector<VertexSet> sets;
    for (Vertex v = 0; v < g.order(); ++v) sets.push_back(VertexSet::single(v));
    ContractionSearch search{h, limits, {}};
    return search.run(g, sets);
}

bool has_minor(const Graph& g, const Graph& h, const Limits& limits)
{
    return find_minor(g, h, limits).has_value();
}

bool is_minor_model(const Graph& g, const Graph& h, const MinorModel& model)
{
    if (static_cast<int>(model.branch_sets.size()) != h.order()) return false;
    VertexSet used;
    for (auto s : model.branch_sets) {
        if (s.empty() || s.intersects(used) || !s.subset_of(g.vertices())) return false;
        if (components_within(g, s).size() != 1) return false;
        used |= s;
    }
    for (auto [a, b] : h.edges()) {
        VertexSet reach;
        for (auto v : model.branch_sets[a]) reach |= g.neighbors(v);
        if (!reach.intersects(model.branch_sets[b])) return false;
    }
    return true;
}

HadwigerResult hadwiger(const Graph& g, const Limits& limits)
{
    if (g.order() > limits.minor_vertices) throw CapError("hadwiger", g.order(), limits.minor_vertices);
    HadwigerResult best;
    for (int p = 1; p <= g.order(); ++p) {
        if (p * (p - 1) / 2 > g.edge_count()) break;
        auto model = find_minor(g, families::complete(p), limits);
        if (!model) break;
        best.value = p;
        best.model = std::move(*model);
    }
    return best;
}

} // namespace sapzf
