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

#include "sapzf/zero_forcing.hpp"

#include "sapzf/error.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <unordered_set>

namespace sapzf {

std::string_view rule_name(Rule r)
{
    switch (r) {
    case Rule::Z: return "Z";
    case Rule::Zl: return "Zl";
    case Rule::Zplus: return "Zplus";
    case Rule::FloorZ: return "FloorZ";
    }
    return "?";
}

std::optional<Rule> parse_rule(std::string_view text)
{
    std::string t;
    for (char c : text) t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (t == "z") return Rule::Z;
    if (t == "zl" || t == "l" || t == "zell" || t == "ell") return Rule::Zl;
    if (t == "zplus" || t == "z+" || t == "+" || t == "plus") return Rule::Zplus;
    if (t == "floorz" || t == "floor") return Rule::FloorZ;
    return std::nullopt;
}

std::string format_trace(const ForceTrace& trace)
{
    std::string out;
    for (const auto& f : trace) {
        if (f.hop) out += "hop: ";
        out += std::to_string(f.from + 1) + "->" + std::to_string(f.to + 1) + "\n";
    }
    return out;
}

std::vector<Force> available_forces(const Graph& g, VertexSet blue, Rule rule)
{
    std::vector<Force> out;
    const VertexSet white = g.vertices() - blue;
    switch (rule) {
    case Rule::Z:
    case Rule::Zl:
    case Rule::FloorZ:
        for (auto i : blue) {
            auto w = g.neighbors(i) & white;
            if (w.size() == 1) out.push_back({i, w.first(), false});
        }
        if (rule == Rule::Zl) {
            for (auto i : white)
                if (!g.neighbors(i).empty() && !g.neighbors(i).intersects(white)) out.push_back({i, i, false});
        }
        break;
    case Rule::Zplus:
        for (auto part : components_within(g, white))
            for (auto i : blue) {
                auto w = g.neighbors(i) & part;
                if (w.size() == 1) out.push_back({i, w.first(), false});
            }
        break;
    }
    std::sort(out.begin(), out.end(), [](const Force& a, const Force& b) {
        return a.from != b.from ? a.from < b.from : a.to < b.to;
    });
    return out;
}

Closure closure(const Graph& g, VertexSet initial, Rule rule)
{
    if (rule == Rule::FloorZ) throw DomainError("closure: FloorZ has no unique closure; use floor_forcing_sequence");
    Closure out{initial & g.vertices(), {}};
    while (true) {
        auto forces = available_forces(g, out.blue, rule);
        bool progressed = false;
        // forces found at the start of a round stay valid while the round applies them
        for (const auto& f : forces) {
            if (out.blue.contains(f.to)) continue;
            out.blue.insert(f.to);
            out.trace.push_back(f);
            progressed = true;
        }
        if (!progressed) return out;
    }
}

namespace {

struct FloorState {
    VertexSet blue;
    VertexSet used;
    bool operator==(const FloorState&) const = default;
};

struct FloorStateHash {
    std::size_t operator()(const FloorState& s) const noexcept
    {
        return std::hash<std::uint64_t>{}(s.blue.bits() * 0x9E3779B97F4A7C15ULL ^ s.used.bits());
    }
};

struct FloorSearch {
    const Graph& g;
    std::unordered_set<FloorState, FloorStateHash> dead;
    ForceTrace path;

    // Regular forces by vertices already marked used cannot cost anything, so they are
    // applied eagerly; every other move is a branch.
    bool run(FloorState s)
    {
        const auto mark = path.size();
        bool changed = true;
        while (changed) {
            changed = false;
            for (auto i : s.blue & s.used) {
                auto w = g.neighbors(i) - s.blue;
                if (w.size() == 1) {
                    s.blue.insert(w.first());
                    path.push_back({i, w.first(), false});
                    changed = true;
                }
            }
        }
        if (s.blue == g.vertices()) return true;
        if (dead.contains(s)) {
            path.resize(mark);
            return false;
        }
        const VertexSet white = g.vertices() - s.blue;
        for (auto i : s.blue - s.used) {
            auto w = g.neighbors(i) & white;
            if (w.size() == 1) {
                path.push_back({i, w.first(), false});
                if (run({s.blue | w, s.used | VertexSet::single(i)})) return true;
                path.pop_back();
            } else if (w.empty()) {
                for (auto j : white) {
                    path.push_back({i, j, true});
                    if (run({s.blue | VertexSet::single(j), s.used | VertexSet::single(i)})) return true;
                    path.pop_back();
                }
            }
        }
        dead.insert(s);
        path.resize(mark);
        return false;
    }
};

} // namespace

std::optional<ForceTrace> floor_forcing_sequence(const Graph& g, VertexSet initial)
{
    FloorSearch search{g, {}, {}};
    if (search.run({initial & g.vertices(), VertexSet{}})) return search.path;
    return std::nullopt;
}

bool is_zero_forcing_set(const Graph& g, VertexSet initial, Rule rule)
{
    if (rule == Rule::FloorZ) return floor_forcing_sequence(g, initial).has_value();
    return closure(g, initial, rule).blue == g.vertices();
}

bool for_each_subset_of_size(VertexSet universe, int k, const std::function<bool(VertexSet)>& visit)
{
    const auto items = universe.to_vector();
    const int n = static_cast<int>(items.size());
    if (k < 0 || k > n) return false;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int t = 0; t < k; ++t) idx[t] = t;
    while (true) {
        VertexSet s;
        for (int t : idx) s.insert(items[t]);
        if (visit(s)) return true;
        int t = k - 1;
        while (t >= 0 && idx[t] == n - k + t) --t;
        if (t < 0) return false;
        ++idx[t];
        for (int u = t + 1; u < k; ++u) idx[u] = idx[u - 1] + 1;
    }
}

ZeroForcingNumber min_zero_forcing_set(const Graph& g, Rule rule, const Limits& limits)
{
    if (g.order() > limits.zfs_search_vertices)
        throw CapError(std::string("min_zfs(") + std::string(rule_name(rule)) + ")", g.order(),
                       limits.zfs_search_vertices);
    int start = 0;
    if (rule == Rule::FloorZ && g.order() > 0) {
        auto parts = components(g);
        if (parts.size() > 1) {
            for (auto part : parts) start = std::max(start, min_zero_forcing_set(induced_subgraph(g, part), rule, limits).value);
        }
    }
    if (rule == Rule::Z && g.order() > 1) {
        // Z(G) is at least the minimum degree
        int low = g.order();
        for (Vertex v = 0; v < g.order(); ++v) low = std::min(low, g.degree(v));
        start = low;
    }
    for (int k = start; k <= g.order(); ++k) {
        ZeroForcingNumber found{k, {}};
        if (for_each_subset_of_size(g.vertices(), k, [&](VertexSet s) {
                if (!is_zero_forcing_set(g, s, rule)) return false;
                found.witness = s;
                return true;
            }))
            return found;
    }
    throw std::logic_error("min_zero_forcing_set: V(G) is always a zero forcing set");
}

} // namespace sapzf
