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

#include "sapzf/enumerate.hpp"
#include "sapzf/error.hpp"
#include "sapzf/exact_linalg.hpp"
#include "sapzf/families.hpp"
#include "sapzf/graph_io.hpp"
#include "sapzf/sap_forcing.hpp"
#include "sapzf/vertex_cover.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace sapzf;

namespace {

bool contains_force(const std::vector<SapForce>& forces, const SapForce& f)
{
    return std::find(forces.begin(), forces.end(), f) != forces.end();
}

ForcingTriple triple1(Vertex k, Vertex i, Vertex j) { return {k - 1, i - 1, j - 1}; }

std::vector<NonEdge> random_non_edges(const Graph& g, double p, std::mt19937_64& rng)
{
    std::bernoulli_distribution coin(p);
    std::vector<NonEdge> out;
    for (auto e : g.non_edges())
        if (coin(rng)) out.push_back(e);
    return out;
}

// Every null vector x of Psi with x_f = 0 on the initial blue set must vanish on each
// non-edge the closure colors.
bool closure_is_sound(const Graph& g, const RationalMatrix& a, const std::vector<NonEdge>& initial,
                      const NonEdgeColoring& final_coloring)
{
    const auto s = build_sap_matrix(g, a);
    const int cols = s.psi.cols();
    std::vector<std::vector<mpq_class>> rows;
    for (int r = 0; r < s.psi.rows(); ++r) rows.push_back(s.psi.row(r));
    for (auto e : initial) {
        std::vector<mpq_class> unit(static_cast<std::size_t>(cols), 0);
        unit[std::find(s.nonedge_order.begin(), s.nonedge_order.end(), e) - s.nonedge_order.begin()] = 1;
        rows.push_back(std::move(unit));
    }
    for (const auto& v : oracle::null_space(std::move(rows), cols))
        for (int c = 0; c < cols; ++c)
            if (final_coloring.is_blue(s.nonedge_order[c]) && v[c] != 0) return false;
    return true;
}

} // namespace

TEST_CASE("non-edge coloring bookkeeping")
{
    NonEdgeColoring c(families::path(4));
    CHECK(c.blue_count() == 0);
    CHECK(c.white_graph() == complement(families::path(4)));
    c.color({1, 3});
    CHECK(c.is_blue({3, 1}));
    CHECK(c.blue_neighbors(3) == VertexSet{1});
    CHECK(c.white_neighbors(3) == VertexSet{0});
    CHECK(c.white_non_edges() == std::vector<NonEdge>{{0, 2}, {0, 3}});
    CHECK_THROWS_AS(c.color({0, 1}), DomainError);
}

TEST_CASE("local blue sets")
{
    const Graph p4 = families::path(4);
    CHECK(local_blue_set(NonEdgeColoring(p4), 3) == VertexSet{2, 3});
    const std::vector<NonEdge> blue{{1, 3}};
    CHECK(local_blue_set(NonEdgeColoring(p4, blue), 3) == VertexSet{1, 2, 3});
    CHECK(local_blue_set(NonEdgeColoring(families::star(3)), 1) == VertexSet{0, 1});
}

TEST_CASE("applicable forces on P4 and K_{1,3}")
{
    const auto p4 = applicable_forces(NonEdgeColoring(families::path(4)), Rule::Z);
    CHECK(contains_force(p4, triple1(2, 3, 4)));
    CHECK(contains_force(p4, triple1(3, 2, 1)));
    CHECK_FALSE(contains_force(p4, triple1(4, 2, 1)));

    const auto star = applicable_forces(NonEdgeColoring(families::star(3)), Rule::Z);
    REQUIRE(star.size() == 1);
    CHECK(star[0] == SapForce(OddCycleForce{0, {1, 2, 3}}));
    CHECK(format_force(star[0]) == "(1->C) colors {2,3},{3,4},{2,4}");
}

TEST_CASE("the odd cycle rule ignores the vertex cover restriction")
{
    const Graph g = join(families::complete(3), families::empty(4));
    const VertexSet b{3};
    const auto initial = complementary_closure(g, b);
    CHECK(initial == std::vector<NonEdge>{{3, 4}, {3, 5}, {3, 6}});
    const NonEdgeColoring c(g, initial);
    const auto forces = applicable_forces(c, Rule::Z, VcRestriction{b});
    bool cycle = false;
    for (const auto& f : forces)
        if (const auto* oc = std::get_if<OddCycleForce>(&f)) cycle = cycle || oc->cycle == std::vector<Vertex>{4, 5, 6};
    CHECK(cycle);
    CHECK(is_zvc_forcing_set(g, b, Rule::Z));
}

TEST_CASE("restriction blocks triples from B across a non-edge")
{
    const Graph g = families::path(4);
    const VcRestriction r{VertexSet{1}};
    CHECK(r.blocks(g, 3, 1));
    CHECK_FALSE(r.blocks(g, 2, 1)); // {2,3} is an edge
    CHECK_FALSE(r.blocks(g, 1, 1));
    for (Vertex k = 0; k < 4; ++k)
        for (const auto& t : forcing_triples_at(NonEdgeColoring(g), k, Rule::Z, r)) CHECK_FALSE(r.blocks(g, t.k, t.i));
}

TEST_CASE("closure of the kite graph")
{
    const Graph kite = families::kite();
    const auto c = sap_closure(NonEdgeColoring(kite), Rule::Z);
    CHECK(c.coloring.all_blue());
    CHECK(c.coloring.blue_count() == 5);
    CHECK(replay_trace(NonEdgeColoring(kite), c.trace, Rule::Z) == c.coloring);

    // a five-step trace with one non-edge per step replays to the full coloring
    const SapTrace five{triple1(2, 3, 4), triple1(4, 2, 1), triple1(5, 4, 3), triple1(3, 2, 1), triple1(5, 2, 1)};
    const auto replayed = replay_trace(NonEdgeColoring(kite), five, Rule::Z);
    REQUIRE(replayed.has_value());
    CHECK(replayed->all_blue());

    const auto triples_first = sap_closure(NonEdgeColoring(kite), Rule::Z, {}, ClosurePolicy::TriplesFirst);
    CHECK(triples_first.trace.size() == 5);
    CHECK(triples_first.coloring.all_blue());
    CHECK(format_sap_trace(triples_first.trace).rfind("1 (2: 3->4) colors {2,4}\n", 0) == 0);

    // a step that is not applicable makes the replay fail
    const SapTrace bogus{triple1(1, 2, 3)};
    CHECK_FALSE(replay_trace(NonEdgeColoring(kite), bogus, Rule::Z).has_value());
}

TEST_CASE("closure examples on P4 and the empty graph")
{
    const auto p4 = sap_closure(NonEdgeColoring(families::path(4)), Rule::Z);
    CHECK(p4.coloring.all_blue());
    CHECK(p4.coloring.blue_count() == 3);
    const auto e4 = sap_closure(NonEdgeColoring(families::empty(4)), Rule::Z);
    CHECK(e4.trace.empty());
    CHECK(e4.coloring.blue_count() == 0);
}

TEST_CASE("Z_SAP = 0 for Petersen and the platonic solids")
{
    for (const char* name : {"petersen", "tetrahedron", "cube", "octahedron", "dodecahedron", "icosahedron"}) {
        CAPTURE(name);
        CHECK(is_zsap_zero(*families::by_name(name), Rule::Z));
    }
}

TEST_CASE("closed forms for empty graphs and stars")
{
    for (int n = 3; n <= 5; ++n) {
        CAPTURE(n);
        const auto e = zsap(families::empty(n), Rule::Z);
        CHECK(e.value == n * (n - 1) / 2);
        const auto s = zsap(families::star(n), Rule::Z);
        CHECK(s.value == (n - 1) * (n - 2) / 2 - 1);
        CHECK(static_cast<int>(s.witness.size()) == s.value);
        CHECK(sap_closure(NonEdgeColoring(families::star(n), s.witness), Rule::Z).coloring.all_blue());
    }
    CHECK(zsap(families::star(4), Rule::Z).value == 2);
    CHECK_THROWS_AS(zsap(families::empty(7), Rule::Z), CapError);
}

TEST_CASE("complementary closure")
{
    const Graph g = families::kite();
    CHECK(complementary_closure(g, {}).empty());
    const VertexSet cover = min_vertex_cover(complement(g)).cover;
    CHECK(complementary_closure(g, cover) == g.non_edges());
    const Graph k = join(families::complete(3), families::empty(4));
    CHECK(complementary_closure(k, {6}).size() == 3);
}

TEST_CASE("Z_vc examples and bounds")
{
    const Graph g = join(families::complete(3), families::empty(4));
    const auto vc = zvc(g, Rule::Z);
    CHECK(vc.value == 1);
    CHECK(is_zvc_forcing_set(g, vc.witness, Rule::Z));
    for (int n = 1; n <= 6; ++n)
        for (const auto& h : connected_graphs(n)) {
            const int value = zvc(h, Rule::Z).value;
            CHECK((value == 0) == is_zsap_zero(h, Rule::Z));
            CHECK(value <= vertex_cover_number(complement(h)));
            CHECK(zvc(h, Rule::Zl).value <= value);
        }
}

TEST_CASE("join formula on random small pairs")
{
    std::mt19937_64 rng(21);
    const Graph k1(1);
    for (int t = 0; t < 40; ++t) {
        const int a = 1 + static_cast<int>(rng() % 4);
        const int b = 1 + static_cast<int>(rng() % 3);
        const Graph g = oracle::from_code(a, rng());
        const Graph h = oracle::from_code(b, rng());
        CHECK(zsap(join(g, h), Rule::Z).value == zsap(join(g, k1), Rule::Z).value + zsap(join(h, k1), Rule::Z).value);
    }
}

TEST_CASE("join propositions on every graph with at most 5 vertices")
{
    const auto corpus = props::all_graphs_up_to(5);
    const auto le = props::join_with_vertex(corpus);
    CHECK(le.ok());
    CHECK_MESSAGE(le.violations == 0, le.first_violation);
    const auto zero = props::join_with_vertex_zero(corpus);
    CHECK(zero.ok());
    CHECK_MESSAGE(zero.violations == 0, zero.first_violation);
    const auto sum = props::join_sum(6);
    CHECK(sum.ok());
    CHECK_MESSAGE(sum.violations == 0, sum.first_violation);
}

TEST_CASE("variant chain of Z_SAP on connected graphs with at most 6 vertices")
{
    for (int n = 1; n <= 6; ++n)
        for (const auto& g : connected_graphs(n)) {
            const int z = zsap(g, Rule::Z).value;
            const int zl = zsap(g, Rule::Zl).value;
            const int zp = zsap(g, Rule::Zplus).value;
            CHECK(zp <= zl);
            CHECK(zl <= z);
        }
}

TEST_CASE("complete multipartite graphs")
{
    for (int n = 2; n <= 7; ++n)
        for (int first = 1; first < n; ++first)
            for (int second = 1; first + second <= n; ++second) {
                std::vector<int> parts{first, second};
                int rest = n - first - second;
                while (rest > 0) {
                    parts.push_back(std::min(rest, second));
                    rest -= parts.back();
                }
                const Graph g = families::complete_multipartite(parts);
                CAPTURE(to_graph6(g));
                CHECK(is_zsap_zero(g, Rule::Zl));
                CHECK(is_zsap_zero(g, Rule::Zplus));
                if (*std::max_element(parts.begin(), parts.end()) >= 4) CHECK_FALSE(is_zsap_zero(g, Rule::Z));
            }
}

TEST_CASE("trees")
{
    for (int n = 1; n <= 7; ++n)
        for (const auto& g : connected_graphs(n))
            if (is_tree(g)) CHECK(is_zsap_zero(g, Rule::Zplus));
    CHECK_FALSE(is_zsap_zero(families::double_spider(), Rule::Zl));
}

TEST_CASE("forest complements and diameter-2 graphs of maximum degree 3")
{
    std::vector<Graph> corpus = props::all_graphs_up_to(6);
    for (int n = 7; n <= 8; ++n)
        for (const auto& g : connected_graphs(n)) corpus.push_back(g);
    const auto forest = props::forest_complement(corpus);
    CHECK(forest.ok());
    CHECK_MESSAGE(forest.violations == 0, forest.first_violation);
    const auto cubic = props::diameter_two_cubic(corpus);
    CHECK(cubic.ok());
    CHECK_MESSAGE(cubic.violations == 0, cubic.first_violation);
}

TEST_CASE("forcing triples persist as the blue set grows")
{
    const auto r = props::monotone_closure(props::standard_corpus(), 23);
    CHECK(r.ok());
    CHECK_MESSAGE(r.violations == 0, r.first_violation);
}

TEST_CASE("closure policies reach the same coloring on every graph with at most 7 vertices")
{
    for (int n = 1; n <= 7; ++n)
        for (const auto& g : connected_graphs(n))
            for (auto rule : {Rule::Z, Rule::Zl, Rule::Zplus}) {
                const NonEdgeColoring empty(g);
                const auto a = sap_closure(empty, rule, {}, ClosurePolicy::OddCycleFirst);
                const auto b = sap_closure(empty, rule, {}, ClosurePolicy::TriplesFirst);
                CHECK(a.coloring == b.coloring);
            }
}

TEST_CASE("random application orders never change the final coloring")
{
    std::mt19937_64 rng(24);
    for (int n = 4; n <= 7; ++n)
        for (const auto& g : connected_graphs(n)) {
            if (n == 7 && rng() % 4 != 0) continue;
            const auto x = explore_orders(NonEdgeColoring(g), Rule::Z, {}, 5, rng());
            CHECK(x.disagreements == 0);
            CHECK(x.some_order_full == x.deterministic_full);
        }
}

TEST_CASE("no application order rescues a stalled closure on 6 vertices")
{
    for (int n = 3; n <= 6; ++n)
        for (const auto& g : connected_graphs(n)) {
            if (is_zsap_zero(g, Rule::Z)) continue;
            const auto reachable = full_coloring_reachable(NonEdgeColoring(g), Rule::Z);
            REQUIRE(reachable.has_value());
            CHECK_FALSE(*reachable);
        }
}

TEST_CASE("colored non-edges are zero in every SAP null vector")
{
    std::mt19937_64 rng(25);
    int nontrivial = 0;
    for (const auto& g : props::standard_corpus()) {
        if (g.non_edge_count() == 0) continue;
        for (int t = 0; t < 2; ++t) {
            const auto initial = random_non_edges(g, t == 0 ? 0.0 : 0.3, rng);
            const bool ell = t == 1;
            const Rule rule = ell ? Rule::Zl : Rule::Z;
            const auto final_coloring = sap_closure(NonEdgeColoring(g, initial), rule).coloring;
            const auto a = oracle::singular_sample(g, 1 + static_cast<int>(rng() % 2), ell, rng);
            if (!a) continue;
            if (!has_sap(g, *a)) ++nontrivial;
            CAPTURE(to_graph6(g));
            CHECK(closure_is_sound(g, *a, initial, final_coloring));
        }
    }
    // the check is only meaningful if some sampled matrices lack the SAP
    CHECK(nontrivial > 20);
}

TEST_CASE("trace text format")
{
    CHECK(format_force(triple1(2, 3, 4)) == "(2: 3->4) colors {2,4}");
    const SapTrace t{triple1(2, 3, 4), OddCycleForce{1, {0, 2, 4}}};
    CHECK(format_sap_trace(t) == "1 (2: 3->4) colors {2,4}\n2 (2->C) colors {1,3},{3,5},{1,5}\n");
    CHECK(colored_by(t[1]) == std::vector<NonEdge>{{0, 2}, {2, 4}, {0, 4}});
    CHECK_THROWS_AS(forcing_triples_at(NonEdgeColoring(families::path(3)), 0, Rule::FloorZ), DomainError);
}
