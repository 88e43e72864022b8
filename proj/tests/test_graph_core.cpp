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

#include "support/oracles.hpp"
#include "support/properties.hpp"

#include "sapzf/canonical.hpp"
#include "sapzf/enumerate.hpp"
#include "sapzf/error.hpp"
#include "sapzf/families.hpp"
#include "sapzf/graph_io.hpp"
#include "sapzf/minor.hpp"
#include "sapzf/vertex_cover.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

using namespace sapzf;

namespace {

Graph one_based(int n, std::initializer_list<Edge> edges)
{
    Graph g(n);
    for (auto [a, b] : edges) g.add_edge(a - 1, b - 1);
    return g;
}

Graph shuffled(const Graph& g, std::mt19937_64& rng)
{
    std::vector<Vertex> perm(static_cast<std::size_t>(g.order()));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return relabel(g, perm);
}

// One random deletion or contraction; g must have an edge or at least two vertices.
Graph random_minor_step(const Graph& g, std::mt19937_64& rng)
{
    const auto edges = g.edges();
    const int pick = static_cast<int>(rng() % 3);
    if (pick == 0 || edges.empty()) return remove_vertex(g, static_cast<Vertex>(rng() % g.order()));
    const auto [u, v] = edges[rng() % edges.size()];
    if (pick == 1) {
        Graph h = g;
        h.remove_edge(u, v);
        return h;
    }
    return contract_edge(g, u, v);
}

} // namespace

TEST_CASE("graph invariants: symmetric, irreflexive, complement is an involution")
{
    for (const auto& g : props::all_graphs_up_to(6)) {
        for (Vertex v = 0; v < g.order(); ++v) {
            CHECK_FALSE(g.has_edge(v, v));
            for (auto u : g.neighbors(v)) CHECK(g.has_edge(u, v));
        }
        CHECK(complement(complement(g)) == g);
        CHECK(g.edge_count() + complement(g).edge_count() == g.order() * (g.order() - 1) / 2);
        CHECK(g.non_edge_count() == static_cast<int>(g.non_edges().size()));
    }
}

TEST_CASE("graph6 decoding and round trips")
{
    const Graph one = parse_graph6("@");
    CHECK(one.order() == 1);
    CHECK(one.edge_count() == 0);
    CHECK(parse_graph6(">>graph6<<C~") == families::complete(4));

    for (const auto& g : connected_graphs(5)) {
        const auto s = to_graph6(g);
        CHECK(to_graph6(parse_graph6(s)) == s);
    }
    const Graph fig = one_based(8, {{1, 4}, {2, 6}, {3, 7}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 4}, {4, 6}, {4, 7}});
    CHECK(fig == families::floor_gap_example());
    CHECK(parse_graph6(to_graph6(fig)) == fig);

    // 64 and more vertices switch to the long size header
    const Graph big = families::cycle(64);
    CHECK(parse_graph6(to_graph6(big)) == big);
}

TEST_CASE("graph6 errors name the offending byte")
{
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
    try {
        parse_graph6("C~~");
        FAIL("trailing byte accepted");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 2);
    }
    try {
        parse_graph6("A~");
        FAIL("nonzero padding accepted");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 1);
    }
    CHECK_THROWS_AS(parse_graph6("D"), ParseError);   // truncated bit vector
    CHECK_THROWS_AS(parse_graph6("C\x7f"), ParseError); // byte outside 63..126
}

TEST_CASE("edge lists")
{
    std::istringstream in("3 2\n1 2\n2 3\n");
    CHECK(parse_edge_list(in) == families::path(3));
    std::istringstream zero("3 2\n0 1\n1 2\n");
    CHECK(parse_edge_list(zero, false) == families::path(3));
    std::istringstream bad("3 2\n1 2\n");
    CHECK_THROWS_AS(parse_edge_list(bad), ParseError);
    std::istringstream loop("2 1\n1 1\n");
    CHECK_THROWS_AS(parse_edge_list(loop), ParseError);
    std::istringstream round(to_edge_list(families::petersen()));
    CHECK(parse_edge_list(round) == families::petersen());
}

TEST_CASE("complement examples")
{
    CHECK(complement(families::complete(4)).edge_count() == 0);
    const auto ne = complement(families::path(4)).edges();
    CHECK(ne == std::vector<Edge>{{0, 2}, {0, 3}, {1, 3}});
    const Graph oct = complement(families::octahedron());
    CHECK(oct.edge_count() == 3);
    CHECK(oct.max_degree() == 1);
    CHECK(components(oct).size() == 3);
}

TEST_CASE("join examples")
{
    CHECK(isomorphic(join(Graph(1), families::empty(3)), families::star(3)));
    const Graph g = join(families::complete(3), families::empty(4));
    CHECK(g.order() == 7);
    CHECK(g.edge_count() == 3 + 12);
    std::mt19937_64 rng(1);
    for (int t = 0; t < 50; ++t) {
        const Graph a = oracle::from_code(1 + t % 4, rng() & 63);
        const Graph b = oracle::from_code(1 + t % 3, rng() & 7);
        CHECK(join(a, b).edge_count() == a.edge_count() + b.edge_count() + a.order() * b.order());
    }
}

TEST_CASE("components examples")
{
    CHECK(components(families::path(4)) == std::vector<VertexSet>{VertexSet::range(4)});
    CHECK(components(families::empty(3)).size() == 3);
    const auto parts = components(disjoint_union(families::cycle(4), Graph(1)));
    REQUIRE(parts.size() == 2);
    CHECK(std::find(parts.begin(), parts.end(), VertexSet::range(4)) != parts.end());
    CHECK(std::find(parts.begin(), parts.end(), VertexSet::single(4)) != parts.end());
}

TEST_CASE("canonical form examples")
{
    const Graph p = families::path(4);
    const Graph q = one_based(4, {{2, 4}, {4, 1}, {1, 3}});
    CHECK(canonical_form(p) == canonical_form(q));
    CHECK(canonical_form(families::cycle(5)) != canonical_form(families::path(5)));
    CHECK_THROWS_AS(canonical_form(families::cycle(11)), CapError);
}

TEST_CASE("canonical form agrees with brute-force isomorphism")
{
    std::mt19937_64 rng(2);
    for (int n = 1; n <= 6; ++n) {
        std::vector<Graph> sample;
        for (int t = 0; t < 60; ++t) sample.push_back(oracle::from_code(n, rng() & ((std::uint64_t{1} << (n * (n - 1) / 2)) - 1)));
        for (std::size_t a = 0; a < sample.size(); ++a)
            for (std::size_t b = a; b < sample.size(); ++b)
                CHECK(isomorphic(sample[a], sample[b]) == oracle::brute_isomorphic(sample[a], sample[b]));
    }
    // labeled connected graphs on 5 vertices fall into 21 canonical classes
    std::set<CanonicalForm> forms;
    for (std::uint64_t code = 0; code < 1024; ++code) {
        const Graph g = oracle::from_code(5, code);
        if (is_connected(g)) forms.insert(canonical_form(g));
    }
    CHECK(forms.size() == 21);
}

TEST_CASE("canonical form is invariant under relabeling")
{
    std::mt19937_64 rng(3);
    for (int n = 5; n <= 7; ++n) {
        const auto& graphs = connected_graphs(n);
        for (int t = 0; t < 10; ++t) {
            const Graph& g = graphs[rng() % graphs.size()];
            const auto form = canonical_form(g);
            for (int r = 0; r < 100; ++r) CHECK(canonical_form(shuffled(g, rng)) == form);
        }
    }
    for (int r = 0; r < 20; ++r) CHECK(canonical_form(shuffled(families::petersen(), rng)) == canonical_form(families::petersen()));
}

TEST_CASE("enumeration counts match the labeled brute-force oracle")
{
    for (int n = 1; n <= 6; ++n) {
        CAPTURE(n);
        const auto& graphs = connected_graphs(n);
        CHECK(static_cast<int>(graphs.size()) == oracle::brute_class_count(n, true));
        std::set<CanonicalForm> forms;
        for (const auto& g : graphs) {
            CHECK(is_connected(g));
            forms.insert(canonical_form(g));
        }
        CHECK(forms.size() == graphs.size());
    }
    CHECK(connected_graphs(4).size() == 6);
    CHECK(connected_graphs(6).size() == 112);
    CHECK(connected_graphs(7).size() == 853);
    CHECK_THROWS_AS(connected_graphs(9), CapError);
}

TEST_CASE("minor examples")
{
    CHECK(has_minor(families::cycle(5), families::complete(3)));
    CHECK_FALSE(has_minor(families::path(6), families::star(3)));
    const auto model = find_minor(families::petersen(), families::complete(5));
    REQUIRE(model.has_value());
    CHECK(is_minor_model(families::petersen(), families::complete(5), *model));
    CHECK_FALSE(has_minor(families::petersen(), families::complete(6)));
}

TEST_CASE("has_minor agrees with brute-force branch-set assignment")
{
    std::mt19937_64 rng(4);
    const auto small = props::all_graphs_up_to(4);
    for (int t = 0; t < 150; ++t) {
        const int n = 3 + static_cast<int>(rng() % 4);
        const Graph g = oracle::from_code(n, rng() & ((std::uint64_t{1} << (n * (n - 1) / 2)) - 1));
        const Graph& h = small[rng() % small.size()];
        if (h.order() > g.order()) continue;
        const auto model = find_minor(g, h);
        CHECK(model.has_value() == oracle::brute_has_minor(g, h));
        if (model) CHECK(is_minor_model(g, h, *model));
    }
}

TEST_CASE("has_minor is reflexive and transitive")
{
    std::mt19937_64 rng(5);
    for (int t = 0; t < 60; ++t) {
        const Graph g = oracle::random_connected_graph(4 + t % 4, 0.4, rng);
        CHECK(has_minor(g, g));
        Graph h = g;
        for (int s = 0; s < 2 && h.order() > 1; ++s) h = random_minor_step(h, rng);
        Graph k = h;
        for (int s = 0; s < 2 && k.order() > 1; ++s) k = random_minor_step(k, rng);
        CHECK(has_minor(g, h));
        CHECK(has_minor(h, k));
        CHECK(has_minor(g, k));
    }
}

TEST_CASE("hadwiger examples and minor monotonicity")
{
    for (int n = 1; n <= 7; ++n) CHECK(hadwiger(families::complete(n)).value == n);
    for (const auto& g : connected_graphs(6))
        if (is_tree(g)) CHECK(hadwiger(g).value == 2);
    CHECK(hadwiger(families::kite()).value == 3);
    CHECK(hadwiger(families::petersen()).value == 5);

    for (const auto& g : props::standard_corpus()) {
        const int eta = hadwiger(g).value;
        for (Vertex v = 0; v < g.order() && g.order() > 1; ++v) CHECK(hadwiger(remove_vertex(g, v)).value <= eta);
        for (auto [u, v] : g.edges()) {
            Graph h = g;
            h.remove_edge(u, v);
            CHECK(hadwiger(h).value <= eta);
        }
    }
}

TEST_CASE("vertex cover examples and brute-force agreement")
{
    for (int n = 1; n <= 7; ++n) {
        CHECK(vertex_cover_number(families::complete(n)) == n - 1);
        CHECK(vertex_cover_number(families::empty(n)) == 0);
    }
    CHECK(vertex_cover_number(families::path(4)) == 2);
    for (const auto& g : props::all_graphs_up_to(6)) {
        const auto vc = min_vertex_cover(g);
        CHECK(is_vertex_cover(g, vc.cover));
        CHECK(vc.cover.size() == vc.size);
        CHECK(vc.size == oracle::brute_vertex_cover(g));
    }
}
