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

#include "sapzf/sap_forcing.hpp"

#include "sapzf/error.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <unordered_set>

namespace sapzf {

NonEdgeColoring::NonEdgeColoring(Graph host)
    : host_(std::move(host)), blue_(static_cast<std::size_t>(host_.order()))
{
}

NonEdgeColoring::NonEdgeColoring(Graph host, std::span<const NonEdge> blue) : NonEdgeColoring(std::move(host))
{
    for (auto e : blue) color(e);
}

void NonEdgeColoring::color(NonEdge e)
{
    if (e.a < 0 || e.b >= host_.order() || e.a == e.b || host_.has_edge(e.a, e.b))
        throw DomainError("color: " + format_pair(e) + " is not a non-edge of the host graph");
    blue_[e.a].insert(e.b);
    blue_[e.b].insert(e.a);
}

std::vector<NonEdge> NonEdgeColoring::blue_non_edges() const
{
    std::vector<NonEdge> out;
    for (Vertex a = 0; a < host_.order(); ++a)
        for (auto b : blue_[a])
            if (b > a) out.emplace_back(a, b);
    return out;
}

std::vector<NonEdge> NonEdgeColoring::white_non_edges() const
{
    std::vector<NonEdge> out;
    for (Vertex a = 0; a < host_.order(); ++a)
        for (auto b : white_neighbors(a))
            if (b > a) out.emplace_back(a, b);
    return out;
}

int NonEdgeColoring::blue_count() const
{
    int twice = 0;
    for (auto row : blue_) twice += row.size();
    return twice / 2;
}

bool NonEdgeColoring::all_blue() const
{
    for (Vertex v = 0; v < host_.order(); ++v)
        if (!white_neighbors(v).empty()) return false;
    return true;
}

Graph NonEdgeColoring::white_graph() const
{
    Graph w(host_.order());
    for (auto e : white_non_edges()) w.add_edge(e.a, e.b);
    return w;
}

std::vector<NonEdge> colored_by(const SapForce& f)
{
    if (const auto* t = std::get_if<ForcingTriple>(&f)) return {NonEdge(t->j, t->k)};
    const auto& c = std::get<OddCycleForce>(f).cycle;
    std::vector<NonEdge> out;
    for (std::size_t t = 0; t < c.size(); ++t) out.emplace_back(c[t], c[(t + 1) % c.size()]);
    return out;
}

std::string format_force(const SapForce& f)
{
    std::ostringstream out;
    if (const auto* t = std::get_if<ForcingTriple>(&f)) {
        out << "(" << t->k + 1 << ": " << t->i + 1 << "->" << t->j + 1 << ") colors " << format_pair(NonEdge(t->j, t->k));
        return out.str();
    }
    const auto& oc = std::get<OddCycleForce>(f);
    out << "(" << oc.i + 1 << "->C) colors ";
    bool first = true;
    for (auto e : colored_by(f)) {
        if (!first) out << ',';
        out << format_pair(e);
        first = false;
    }
    return out.str();
}

std::string format_sap_trace(const SapTrace& trace)
{
    std::string out;
    for (std::size_t s = 0; s < trace.size(); ++s) out += std::to_string(s + 1) + " " + format_force(trace[s]) + "\n";
    return out;
}

VertexSet local_blue_set(const NonEdgeColoring& coloring, Vertex k)
{
    return coloring.host().closed_neighbors(k) | coloring.blue_neighbors(k);
}

std::vector<ForcingTriple> forcing_triples_at(const NonEdgeColoring& coloring, Vertex k, Rule rule,
                                              const VcRestriction& restriction)
{
    if (rule == Rule::FloorZ) throw DomainError("SAP forcing: the local game uses Z, Zl or Zplus");
    const Graph& g = coloring.host();
    std::vector<ForcingTriple> out;
    // every target lies outside the local blue set, so {j,k} is a white non-edge
    for (const auto& f : available_forces(g, local_blue_set(coloring, k), rule)) {
        if (restriction.blocks(g, k, f.from)) continue;
        out.push_back({k, f.from, f.to});
    }
    return out;
}

namespace {

// Cycle order: smallest vertex, then its smaller white neighbor, and so on.
std::vector<Vertex> cycle_order(const NonEdgeColoring& coloring, VertexSet part)
{
    std::vector<Vertex> order;
    Vertex prev = -1;
    Vertex cur = part.first();
    do {
        order.push_back(cur);
        auto nbrs = coloring.white_neighbors(cur) & part;
        if (prev >= 0) nbrs.erase(prev);
        Vertex next = nbrs.first();
        prev = cur;
        cur = next;
    } while (cur != order.front());
    return order;
}

} // namespace

std::vector<OddCycleForce> odd_cycles_at(const NonEdgeColoring& coloring, Vertex i)
{
    const VertexSet within = coloring.host().neighbors(i);
    std::vector<OddCycleForce> out;
    VertexSet seen;
    for (auto start : within) {
        if (seen.contains(start)) continue;
        VertexSet part = VertexSet::single(start);
        VertexSet frontier = part;
        while (!frontier.empty()) {
            VertexSet next;
            for (auto v : frontier) next |= coloring.white_neighbors(v) & within;
            frontier = next - part;
            part |= next;
        }
        seen |= part;
        if (part.size() < 3 || part.size() % 2 == 0) continue;
        bool two_regular = true;
        for (auto v : part)
            if ((coloring.white_neighbors(v) & part).size() != 2) two_regular = false;
        if (two_regular) out.push_back({i, cycle_order(coloring, part)});
    }
    return out;
}

std::vector<SapForce> applicable_forces(const NonEdgeColoring& coloring, Rule rule, const VcRestriction& restriction)
{
    std::vector<SapForce> out;
    const int n = coloring.host().order();
    for (Vertex i = 0; i < n; ++i)
        for (auto& oc : odd_cycles_at(coloring, i)) out.emplace_back(std::move(oc));
    for (Vertex k = 0; k < n; ++k)
        for (const auto& t : forcing_triples_at(coloring, k, rule, restriction)) out.emplace_back(t);
    return out;
}

bool is_applicable(const NonEdgeColoring& coloring, const SapForce& f, Rule rule, const VcRestriction& restriction)
{
    const int n = coloring.host().order();
    if (const auto* t = std::get_if<ForcingTriple>(&f)) {
        if (t->k < 0 || t->k >= n) return false;
        auto triples = forcing_triples_at(coloring, t->k, rule, restriction);
        return std::find(triples.begin(), triples.end(), *t) != triples.end();
    }
    const auto& oc = std::get<OddCycleForce>(f);
    if (oc.i < 0 || oc.i >= n) return false;
    for (const auto& c : odd_cycles_at(coloring, oc.i)) {
        auto sorted_a = c.cycle;
        auto sorted_b = oc.cycle;
        std::sort(sorted_a.begin(), sorted_a.end());
        std::sort(sorted_b.begin(), sorted_b.end());
        if (sorted_a == sorted_b) return true;
    }
    return false;
}

namespace {

void apply_force(NonEdgeColoring& coloring, const SapForce& f)
{
    for (auto e : colored_by(f)) coloring.color(e);
}

} // namespace

SapClosure sap_closure(const NonEdgeColoring& initial, Rule rule, const VcRestriction& restriction,
                       ClosurePolicy policy)
{
    SapClosure out{initial, {}};
    auto& coloring = out.coloring;
    const int n = coloring.host().order();
    // triples at k depend only on the blue non-edges at k
    std::vector<std::vector<ForcingTriple>> cache(static_cast<std::size_t>(n));
    std::vector<bool> fresh(static_cast<std::size_t>(n), false);
    auto triples_at = [&](Vertex k) -> const std::vector<ForcingTriple>& {
        if (!fresh[k]) {
            cache[k] = forcing_triples_at(coloring, k, rule, restriction);
            fresh[k] = true;
        }
        return cache[k];
    };
    auto record = [&](SapForce f) {
        for (auto e : colored_by(f)) {
            fresh[e.a] = false;
            fresh[e.b] = false;
        }
        apply_force(coloring, f);
        out.trace.push_back(std::move(f));
    };

    auto try_cycle = [&] {
        for (Vertex i = 0; i < n; ++i) {
            auto cycles = odd_cycles_at(coloring, i);
            if (!cycles.empty()) {
                record(std::move(cycles.front()));
                return true;
            }
        }
        return false;
    };
    auto try_triple = [&] {
        for (auto e : coloring.white_non_edges()) {
            std::optional<ForcingTriple> best;
            for (auto [k, j] : {std::pair{e.a, e.b}, std::pair{e.b, e.a}})
                for (const auto& t : triples_at(k))
                    if (t.j == j && (!best || std::pair{t.i, t.k} < std::pair{best->i, best->k})) best = t;
            if (best) {
                record(*best);
                return true;
            }
        }
        return false;
    };
    while (policy == ClosurePolicy::OddCycleFirst ? (try_cycle() || try_triple()) : (try_triple() || try_cycle())) {
    }
    return out;
}

std::optional<NonEdgeColoring> replay_trace(const NonEdgeColoring& initial, const SapTrace& trace, Rule rule,
                                            const VcRestriction& restriction)
{
    NonEdgeColoring coloring = initial;
    for (const auto& f : trace) {
        if (!is_applicable(coloring, f, rule, restriction)) return std::nullopt;
        apply_force(coloring, f);
    }
    return coloring;
}

bool is_zsap_zero(const Graph& g, Rule rule)
{
    return sap_closure(NonEdgeColoring(g), rule).coloring.all_blue();
}

ZsapNumber zsap(const Graph& g, Rule rule, const Limits& limits)
{
    const auto universe = g.non_edges();
    const int m = static_cast<int>(universe.size());
    if (m > limits.zsap_nonedges)
        throw CapError(std::string("zsap(") + std::string(rule_name(rule)) + ") non-edges", m, limits.zsap_nonedges);
    for (int s = 0; s <= m; ++s) {
        ZsapNumber found{s, {}};
        if (for_each_subset_of_size(VertexSet::range(m), s, [&](VertexSet pick) {
                std::vector<NonEdge> blue;
                for (auto t : pick) blue.push_back(universe[t]);
                if (!sap_closure(NonEdgeColoring(g, blue), rule).coloring.all_blue()) return false;
                found.witness = std::move(blue);
                return true;
            }))
            return found;
    }
    throw std::logic_error("zsap: coloring every non-edge is always a forcing set");
}

std::vector<NonEdge> complementary_closure(const Graph& g, VertexSet b)
{
    std::vector<NonEdge> out;
    for (auto e : g.non_edges())
        if (b.contains(e.a) || b.contains(e.b)) out.push_back(e);
    return out;
}

SapClosure zvc_closure(const Graph& g, VertexSet b, Rule rule)
{
    const auto start = complementary_closure(g, b);
    return sap_closure(NonEdgeColoring(g, start), rule, VcRestriction{b});
}

bool is_zvc_forcing_set(const Graph& g, VertexSet b, Rule rule)
{
    return zvc_closure(g, b, rule).coloring.all_blue();
}

ZvcNumber zvc(const Graph& g, Rule rule, const Limits& limits)
{
    if (g.order() > limits.zvc_vertices)
        throw CapError(std::string("zvc(") + std::string(rule_name(rule)) + ")", g.order(), limits.zvc_vertices);
    for (int k = 0; k <= g.order(); ++k) {
        ZvcNumber found{k, {}};
        if (for_each_subset_of_size(g.vertices(), k, [&](VertexSet b) {
                if (!is_zvc_forcing_set(g, b, rule)) return false;
                found.witness = b;
                return true;
            }))
            return found;
    }
    throw std::logic_error("zvc: B = V(G) colors every non-edge");
}

OrderExploration explore_orders(const NonEdgeColoring& initial, Rule rule, const VcRestriction& restriction,
                                int trials, std::uint64_t seed)
{
    const auto reference = sap_closure(initial, rule, restriction).coloring;
    OrderExploration out;
    out.trials = trials;
    out.deterministic_full = reference.all_blue();
    out.some_order_full = out.deterministic_full;
    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        NonEdgeColoring coloring = initial;
        while (true) {
            auto forces = applicable_forces(coloring, rule, restriction);
            if (forces.empty()) break;
            std::uniform_int_distribution<std::size_t> pick(0, forces.size() - 1);
            apply_force(coloring, forces[pick(rng)]);
        }
        if (!(coloring == reference)) ++out.disagreements;
        if (coloring.all_blue()) out.some_order_full = true;
    }
    return out;
}

namespace {

std::string state_key(const NonEdgeColoring& c)
{
    std::string key;
    for (Vertex v = 0; v < c.host().order(); ++v) {
        auto bits = c.blue_neighbors(v).bits();
        key.append(reinterpret_cast<const char*>(&bits), sizeof bits);
    }
    return key;
}

struct ReachSearch {
    Rule rule;
    const VcRestriction& restriction;
    std::size_t budget;
    std::unordered_set<std::string> seen;
    bool exhausted = false;

    bool run(const NonEdgeColoring& c)
    {
        if (c.all_blue()) return true;
        if (!seen.insert(state_key(c)).second) return false;
        if (seen.size() > budget) {
            exhausted = true;
            return false;
        }
        for (const auto& f : applicable_forces(c, rule, restriction)) {
            NonEdgeColoring next = c;
            apply_force(next, f);
            if (run(next)) return true;
            if (exhausted) return false;
        }
        return false;
    }
};

} // namespace

std::optional<bool> full_coloring_reachable(const NonEdgeColoring& initial, Rule rule,
                                            const VcRestriction& restriction, std::size_t state_budget)
{
    ReachSearch search{rule, restriction, state_budget, {}, false};
    bool found = search.run(initial);
    if (found) return true;
    if (search.exhausted) return std::nullopt;
    return false;
}

} // namespace sapzf
