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
#include "sapzf/xi.hpp"

#include "sapzf/canonical.hpp"
#include "sapzf/enumerate.hpp"
#include "sapzf/error.hpp"
#include "sapzf/graph_io.hpp"
#include "sapzf/sap_forcing.hpp"
#include "sapzf/zero_forcing.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>

#ifndef SAPZF_DEFAULT_DATA_DIR
#define SAPZF_DEFAULT_DATA_DIR "data"
#endif

namespace sapzf {

namespace {

constexpr int small_order = 7;

} // namespace

int m_small(const Graph& g, const Limits& limits)
{
    if (g.order() > small_order && !is_tree(g))
        throw GuardError("M(G) unknown at this size: n = " + std::to_string(g.order()) +
                         " > 7 and G is not a tree");
    return zero_forcing_number(g, Rule::Z, limits);
}

std::string T3Family::default_path()
{
    if (const char* dir = std::getenv("SAPZF_DATA_DIR"); dir && *dir) return std::string(dir) + "/t3_family.txt";
    return std::string(SAPZF_DEFAULT_DATA_DIR) + "/t3_family.txt";
}

T3Family T3Family::load(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ConfigError("T3 family data not found: " + path);
    std::vector<Graph> graphs;
    try {
        graphs = parse_edge_list_blocks(in);
    } catch (const ParseError& e) {
        throw ConfigError("T3 family data " + path + ": " + e.what());
    }
    if (graphs.size() != 6)
        throw ConfigError("T3 family data " + path + ": expected 6 graphs, found " + std::to_string(graphs.size()));
    for (std::size_t a = 0; a < graphs.size(); ++a)
        for (std::size_t b = a + 1; b < graphs.size(); ++b)
            if (isomorphic(graphs[a], graphs[b]))
                throw ConfigError("T3 family data " + path + ": graphs " + std::to_string(a + 1) + " and " +
                                  std::to_string(b + 1) + " are isomorphic");
    return T3Family(std::move(graphs));
}

T3Family T3Family::load_default()
{
    return load(default_path());
}

std::optional<T3Minor> t3_minor(const Graph& g, const T3Family& family, const Limits& limits)
{
    const auto& graphs = family.graphs();
    for (std::size_t t = 0; t < graphs.size(); ++t) {
        const auto& h = graphs[t];
        if (h.order() > g.order() || h.edge_count() > g.edge_count()) continue;
        if (auto model = find_minor(g, h, limits)) return T3Minor{static_cast<int>(t), std::move(*model)};
    }
    return std::nullopt;
}

std::string_view xi_case_name(XiCase c)
{
    switch (c) {
    case XiCase::ZsapZero: return "ZsapZero";
    case XiCase::Tree: return "Tree";
    case XiCase::VcBound: return "VcBound";
    case XiCase::Hadwiger: return "Hadwiger";
    case XiCase::T3Family: return "T3Family";
    case XiCase::ComponentMax: return "ComponentMax";
    case XiCase::Unresolved: return "Unresolved";
    }
    return "?";
}

namespace {

XiCertificate certify_connected(const Graph& g, const T3Family& family, const Limits& limits)
{
    XiCertificate c;
    c.graph6 = to_graph6(g);
    if (g.order() > small_order && !is_tree(g))
        throw GuardError("xi: component with " + std::to_string(g.order()) + " vertices exceeds 7 and is not a tree");

    const auto floor = min_zero_forcing_set(g, Rule::FloorZ, limits);
    c.upper = floor.value;
    c.upper_set = floor.witness;
    const auto z = min_zero_forcing_set(g, Rule::Z, limits);
    c.m = z.value;
    c.z_set = z.witness;

    auto settle = [&](XiCase kase, int value) {
        c.kase = kase;
        c.value = value;
        c.lower = std::max(c.lower, value);
        return c;
    };

    if (is_zsap_zero(g, Rule::Z)) return settle(XiCase::ZsapZero, c.m);
    if (is_tree(g)) return settle(XiCase::Tree, is_path(g) ? 1 : 2);

    const auto vc = zvc(g, Rule::Z, limits);
    c.zvc = vc.value;
    c.zvc_set = vc.witness;
    c.lower = std::max(c.lower, c.m - vc.value);
    if (c.upper == c.m - vc.value) return settle(XiCase::VcBound, c.upper);

    auto eta = hadwiger(g, limits);
    c.lower = std::max(c.lower, eta.value - 1);
    if (c.upper == eta.value - 1) {
        c.clique_model = std::move(eta.model);
        return settle(XiCase::Hadwiger, c.upper);
    }

    if (c.upper == 3) {
        if (auto t3 = t3_minor(g, family, limits)) {
            c.t3 = std::move(t3);
            return settle(XiCase::T3Family, 3);
        }
    }
    c.kase = XiCase::Unresolved;
    c.value = -1;
    return c;
}

} // namespace

XiCertificate certify_xi(const Graph& g, const T3Family& family, const Limits& limits)
{
    const auto parts = components(g);
    if (parts.size() <= 1) {
        if (g.order() == 0) {
            XiCertificate c;
            c.graph6 = to_graph6(g);
            c.kase = XiCase::ComponentMax;
            c.value = 0;
            return c;
        }
        return certify_connected(g, family, limits);
    }
    XiCertificate c;
    c.graph6 = to_graph6(g);
    c.kase = XiCase::ComponentMax;
    c.value = 0;
    bool resolved = true;
    for (auto part : parts) {
        auto sub = certify_connected(induced_subgraph(g, part), family, limits);
        resolved = resolved && sub.resolved();
        c.value = std::max(c.value, sub.value);
        c.lower = std::max(c.lower, sub.lower);
        c.upper = std::max(c.upper, sub.upper);
        c.components.push_back(std::move(sub));
    }
    if (!resolved) {
        c.kase = XiCase::Unresolved;
        c.value = -1;
    } else {
        c.lower = c.value;
    }
    return c;
}

XiCertificate xi(const Graph& g, const T3Family& family, const Limits& limits)
{
    auto c = certify_xi(g, family, limits);
    if (!c.resolved())
        throw UnresolvedError("xi: no case applies to " + c.graph6 + " (lower " + std::to_string(c.lower) +
                              ", upper " + std::to_string(c.upper) + ")");
    return c;
}

namespace {

using nlohmann::json;

json set_json(VertexSet s)
{
    json out = json::array();
    for (auto v : s) out.push_back(v + 1);
    return out;
}

json model_json(const MinorModel& m)
{
    json out = json::array();
    for (auto b : m.branch_sets) out.push_back(set_json(b));
    return out;
}

json certificate_object(const XiCertificate& c)
{
    json lower;
    switch (c.kase) {
    case XiCase::ZsapZero: lower = {{"kind", "zsap_zero"}, {"M", c.m}, {"Z_set", set_json(c.z_set)}}; break;
    case XiCase::Tree: lower = {{"kind", "tree"}, {"path", c.value == 1}}; break;
    case XiCase::VcBound:
        lower = {{"kind", "vc_bound"}, {"M", c.m}, {"Zvc", *c.zvc}, {"B", set_json(c.zvc_set)}};
        break;
    case XiCase::Hadwiger:
        lower = {{"kind", "clique_minor"}, {"p", c.value + 1}, {"branch_sets", model_json(*c.clique_model)}};
        break;
    case XiCase::T3Family:
        lower = {{"kind", "t3_minor"}, {"member", c.t3->index + 1}, {"branch_sets", model_json(c.t3->model)}};
        break;
    case XiCase::ComponentMax:
    case XiCase::Unresolved: {
        json parts = json::array();
        for (const auto& sub : c.components) parts.push_back(certificate_object(sub));
        lower = {{"kind", c.kase == XiCase::ComponentMax ? "components" : "none"}, {"bound", c.lower}};
        if (!c.components.empty()) lower["components"] = parts;
        break;
    }
    }
    json out;
    out["graph6"] = c.graph6;
    out["xi"] = c.resolved() ? json(c.value) : json(nullptr);
    out["case"] = std::string(xi_case_name(c.kase));
    out["lower_witness"] = lower;
    if (c.components.empty())
        out["upper_witness"] = {{"kind", "floor_z"}, {"value", c.upper}, {"set", set_json(c.upper_set)}};
    else
        out["upper_witness"] = {{"kind", "components"}, {"value", c.upper}};
    return out;
}

} // namespace

std::string certificate_json(const XiCertificate& c)
{
    return certificate_object(c).dump();
}

namespace {

std::vector<Graph> minor_minimal(const std::vector<Graph>& graphs, const Limits& limits)
{
    std::vector<Graph> out;
    for (std::size_t t = 0; t < graphs.size(); ++t) {
        const auto& g = graphs[t];
        bool minimal = true;
        for (std::size_t u = 0; u < graphs.size() && minimal; ++u) {
            const auto& h = graphs[u];
            if (u == t || h.order() + h.edge_count() >= g.order() + g.edge_count()) continue;
            if (h.order() <= g.order() && h.edge_count() <= g.edge_count() && has_minor(g, h, limits))
                minimal = false;
        }
        if (minimal) out.push_back(g);
    }
    return out;
}

} // namespace

std::optional<int> max_nullity_by_cut_vertices(const Graph& g, const Limits& limits)
{
    const int n = g.order();
    if (n == 0) return 0;
    const auto parts = components(g);
    if (parts.size() > 1) {
        int sum = 0;
        for (auto part : parts) {
            auto m = max_nullity_by_cut_vertices(induced_subgraph(g, part), limits);
            if (!m) return std::nullopt;
            sum += *m;
        }
        return sum;
    }
    if (n <= small_order) return zero_forcing_number(g, Rule::Z, limits);
    auto min_rank = [&](const Graph& h) -> std::optional<int> {
        auto m = max_nullity_by_cut_vertices(h, limits);
        if (!m) return std::nullopt;
        return h.order() - *m;
    };
    for (Vertex v = 0; v < n; ++v) {
        VertexSet rest = g.vertices();
        rest.erase(v);
        const auto branches = components_within(g, rest);
        if (branches.size() < 2) continue;
        int sum = 0;
        int spread = 0;
        for (auto b : branches) {
            auto with_v = min_rank(induced_subgraph(g, b | VertexSet::single(v)));
            auto without_v = min_rank(induced_subgraph(g, b));
            if (!with_v || !without_v) return std::nullopt;
            sum += *without_v;
            spread += *with_v - *without_v;
        }
        return n - (sum + std::min(spread, 2));
    }
    return std::nullopt;
}

namespace {

enum class AtLeastThree { yes, no, unknown };

// xi >= 3 from the lower-bound cases, xi < 3 from xi <= M; M comes from `m` when known.
AtLeastThree classify(const Graph& g, std::optional<int> m, const Limits& limits)
{
    if (m && *m < 3) return AtLeastThree::no;
    if (hadwiger(g, limits).value - 1 >= 3) return AtLeastThree::yes;
    if (!m) return AtLeastThree::unknown;
    if (is_zsap_zero(g, Rule::Z) || *m - zvc(g, Rule::Z, limits).value >= 3) return AtLeastThree::yes;
    return AtLeastThree::unknown;
}

} // namespace

T3Derivation derive_t3_family(int max_n, const Limits& limits)
{
    T3Derivation out;
    std::vector<Graph> certified;
    for (int n = 1; n <= std::min(max_n, small_order); ++n)
        for (const auto& g : connected_graphs(n, limits))
            if (classify(g, zero_forcing_number(g, Rule::Z, limits), limits) == AtLeastThree::yes)
                certified.push_back(g);
    out.members = minor_minimal(certified, limits);

    for (int n = small_order + 1; n <= max_n; ++n) {
        const T3Family sofar(out.members);
        std::vector<Graph> layer;
        for (const auto& g : connected_graphs(n, limits)) {
            if (zero_forcing_number(g, Rule::FloorZ, limits) < 3) continue;
            if (t3_minor(g, sofar, limits)) continue;
            switch (classify(g, max_nullity_by_cut_vertices(g, limits), limits)) {
            case AtLeastThree::yes: layer.push_back(g); break;
            case AtLeastThree::unknown: out.uncertified.push_back(g); break;
            case AtLeastThree::no: break;
            }
        }
        for (auto& g : minor_minimal(layer, limits)) out.members.push_back(std::move(g));
    }
    return out;
}

} // namespace sapzf
