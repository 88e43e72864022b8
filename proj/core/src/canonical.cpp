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

#include "sapzf/canonical.hpp"

#include "sapzf/error.hpp"
#include "sapzf/graph_io.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace sapzf {

namespace {

using Cells = std::vector<std::vector<Vertex>>;

// Splits cells by neighbor counts into every cell until the partition is equitable.
// Sub-cells are ordered by their count signature, which does not depend on labels.
Cells refine(const Graph& g, Cells cells)
{
    const int n = g.order();
    while (true) {
        std::vector<int> cell_of(static_cast<std::size_t>(n));
        std::vector<VertexSet> members;
        for (std::size_t c = 0; c < cells.size(); ++c) {
            VertexSet s;
            for (auto v : cells[c]) {
                cell_of[v] = static_cast<int>(c);
                s.insert(v);
            }
            members.push_back(s);
        }
        Cells next;
        for (const auto& cell : cells) {
            if (cell.size() == 1) {
                next.push_back(cell);
                continue;
            }
            std::vector<std::pair<std::vector<int>, Vertex>> keyed;
            for (auto v : cell) {
                std::vector<int> sig;
                sig.reserve(members.size());
                for (auto m : members) sig.push_back((g.neighbors(v) & m).size());
                keyed.emplace_back(std::move(sig), v);
            }
            std::sort(keyed.begin(), keyed.end());
            std::vector<Vertex> run{keyed.front().second};
            for (std::size_t k = 1; k < keyed.size(); ++k) {
                if (keyed[k].first != keyed[k - 1].first) {
                    next.push_back(std::move(run));
                    run.clear();
                }
                run.push_back(keyed[k].second);
            }
            next.push_back(std::move(run));
        }
        if (next.size() == cells.size()) return next;
        cells = std::move(next);
    }
}

struct Search {
    const Graph& g;
    int n;
    std::optional<std::string> first_code;
    std::vector<Vertex> first_order;
    std::optional<std::string> best_code;
    std::vector<Vertex> best_order;
    std::vector<std::vector<Vertex>> automorphisms;

    std::string code_of(const std::vector<Vertex>& order) const
    {
        std::vector<Vertex> label(static_cast<std::size_t>(n));
        for (int p = 0; p < n; ++p) label[order[p]] = p;
        return to_graph6(relabel(g, label));
    }

    // gamma maps the vertex at each position of `order` to the vertex at the same
    // position of `reference`.
    void record_automorphism(const std::vector<Vertex>& order, const std::vector<Vertex>& reference)
    {
        std::vector<Vertex> gamma(static_cast<std::size_t>(n));
        for (int p = 0; p < n; ++p) gamma[order[p]] = reference[p];
        bool identity = true;
        for (int v = 0; v < n; ++v) identity = identity && gamma[v] == v;
        if (!identity) automorphisms.push_back(std::move(gamma));
    }

    std::vector<int> orbits_fixing(VertexSet fixed) const
    {
        std::vector<int> parent(static_cast<std::size_t>(n));
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const auto& gamma : automorphisms) {
            bool fixes = true;
            for (auto v : fixed) fixes = fixes && gamma[v] == v;
            if (!fixes) continue;
            for (int v = 0; v < n; ++v) parent[find(v)] = find(gamma[v]);
        }
        for (int v = 0; v < n; ++v) parent[v] = find(v);
        return parent;
    }

    void visit(Cells cells, VertexSet individualized)
    {
        cells = refine(g, std::move(cells));
        auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
        if (target == cells.end()) {
            std::vector<Vertex> order;
            for (const auto& c : cells) order.push_back(c.front());
            auto code = code_of(order);
            if (!first_code) {
                first_code = code;
                first_order = order;
            } else if (code == *first_code) {
                record_automorphism(order, first_order);
            }
            if (!best_code || code < *best_code) {
                best_code = code;
                best_order = order;
            } else if (code == *best_code) {
                record_automorphism(order, best_order);
            }
            return;
        }
        const auto index = static_cast<std::size_t>(target - cells.begin());
        const auto choices = cells[index];
        std::vector<Vertex> explored;
        for (auto v : choices) {
            if (!explored.empty()) {
                auto orbit = orbits_fixing(individualized);
                bool equivalent = std::any_of(explored.begin(), explored.end(),
                                              [&](Vertex u) { return orbit[u] == orbit[v]; });
                if (equivalent) continue;
            }
            Cells child;
            child.reserve(cells.size() + 1);
            for (std::size_t c = 0; c < cells.size(); ++c) {
                if (c != index) {
                    child.push_back(cells[c]);
                    continue;
                }
                child.push_back({v});
                std::vector<Vertex> rest;
                for (auto w : cells[c])
                    if (w != v) rest.push_back(w);
                child.push_back(std::move(rest));
            }
            auto next_fixed = individualized;
            next_fixed.insert(v);
            visit(std::move(child), next_fixed);
            explored.push_back(v);
        }
    }
};

} // namespace

CanonicalLabeling canonical_labeling(const Graph& g, const Limits& limits)
{
    if (g.order() > limits.canonical_vertices) throw CapError("canonical_form", g.order(), limits.canonical_vertices);
    const int n = g.order();
    if (n == 0) return {CanonicalForm{to_graph6(g)}, {}};
    Search search{g, n, {}, {}, {}, {}, {}};
    std::vector<Vertex> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 0);
    search.visit(Cells{all}, VertexSet{});
    CanonicalLabeling out;
    out.form.graph6 = *search.best_code;
    out.labeling.resize(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p) out.labeling[search.best_order[p]] = p;
    return out;
}

CanonicalForm canonical_form(const Graph& g, const Limits& limits)
{
    return canonical_labeling(g, limits).form;
}

Graph canonical_graph(const Graph& g, const Limits& limits)
{
    return parse_graph6(canonical_form(g, limits).graph6);
}

bool isomorphic(const Graph& g, const Graph& h, const Limits& limits)
{
    if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
    return canonical_form(g, limits) == canonical_form(h, limits);
}

} // namespace sapzf
