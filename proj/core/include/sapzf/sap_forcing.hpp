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

// SAP zero forcing: a color change game on the non-edges of G. A blue non-edge {j,k}
// records that the variable x_{j,k} of the SAP system is forced to zero.
//
// Two rules color non-edges:
//   forcing triple (k: i->j)  i forces j in the local game at k, i.e. the conventional
//                             game on G started from N_G[k] u N_{B_E}(k); it colors {j,k}.
//   odd cycle rule (i->C)     C is a component of the white-non-edge graph restricted to
//                             N_G(i) and C is an odd cycle; it colors every edge of C.
//
// The conventional rule of the local game (Z, Zl or Zplus) selects Z_SAP, Z_SAP^l or
// Z_SAP^+. Z_vc starts from all non-edges touching a vertex set B and forbids
// triples (k: i->j) with i in B and {i,k} a non-edge.

#include "sapzf/graph.hpp"
#include "sapzf/limits.hpp"
#include "sapzf/zero_forcing.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace sapzf {

/// Blue/white partition of the non-edges of a host graph.
class NonEdgeColoring {
public:
    NonEdgeColoring() = default;
    explicit NonEdgeColoring(Graph host);
    NonEdgeColoring(Graph host, std::span<const NonEdge> blue);

    const Graph& host() const { return host_; }
    bool is_blue(NonEdge e) const { return blue_[e.a].contains(e.b); }
    /// Colors a non-edge blue; throws DomainError if `e` is an edge of the host.
    void color(NonEdge e);
    /// N_{B_E}(v): endpoints of blue non-edges at v.
    VertexSet blue_neighbors(Vertex v) const { return blue_[v]; }
    /// Neighbors of v in the white graph (white non-edges at v).
    VertexSet white_neighbors(Vertex v) const { return host_.non_neighbors(v) - blue_[v]; }
    std::vector<NonEdge> blue_non_edges() const;
    std::vector<NonEdge> white_non_edges() const;
    int blue_count() const;
    bool all_blue() const;
    /// The graph whose edges are the white non-edges.
    Graph white_graph() const;

    bool operator==(const NonEdgeColoring&) const = default;

private:
    Graph host_;
    std::vector<VertexSet> blue_;
};

/// Vertex set B of a Z_vc game; empty means no restriction.
struct VcRestriction {
    VertexSet vertices;

    /// True when the triple (k: i->j) is forbidden.
    bool blocks(const Graph& g, Vertex k, Vertex i) const
    {
        return vertices.contains(i) && i != k && !g.has_edge(i, k);
    }
};

struct ForcingTriple {
    Vertex k = 0;
    Vertex i = 0;
    Vertex j = 0;
    bool operator==(const ForcingTriple&) const = default;
};

struct OddCycleForce {
    Vertex i = 0;
    /// Cycle vertices in cyclic order starting from the smallest, then its smaller neighbor.
    std::vector<Vertex> cycle;
    bool operator==(const OddCycleForce&) const = default;
};

using SapForce = std::variant<ForcingTriple, OddCycleForce>;
using SapTrace = std::vector<SapForce>;

/// Non-edges a force colors: {j,k} for a triple, the cycle edges for the odd cycle rule.
std::vector<NonEdge> colored_by(const SapForce& f);

/// "(k: i->j) colors {j,k}" or "(i->C) colors {a,b},{b,c},..." with 1-based labels.
std::string format_force(const SapForce& f);
/// One line per step: "<step> <force>".
std::string format_sap_trace(const SapTrace& trace);

/// N_G[k] u N_{B_E}(k), the initial blue set of the local game at k.
VertexSet local_blue_set(const NonEdgeColoring& coloring, Vertex k);

/// Triples available at k: forces of the local game from its initial blue set whose
/// target j makes {j,k} a white non-edge, minus those blocked by the restriction.
std::vector<ForcingTriple> forcing_triples_at(const NonEdgeColoring& coloring, Vertex k, Rule rule,
                                              const VcRestriction& restriction = {});

/// Odd-cycle components of the white graph restricted to N_G(i).
std::vector<OddCycleForce> odd_cycles_at(const NonEdgeColoring& coloring, Vertex i);

/// Every applicable triple and odd cycle application. The odd cycle rule ignores the restriction.
std::vector<SapForce> applicable_forces(const NonEdgeColoring& coloring, Rule rule,
                                        const VcRestriction& restriction = {});

bool is_applicable(const NonEdgeColoring& coloring, const SapForce& f, Rule rule,
                   const VcRestriction& restriction = {});

struct SapClosure {
    NonEdgeColoring coloring;
    SapTrace trace;
};

/// Step selection of sap_closure. Triples are chosen by the lexicographically first white
/// non-edge they can color, then by the smallest forcing vertex i; odd cycles by the
/// smallest vertex i, then by the smallest cycle vertex.
enum class ClosurePolicy {
    OddCycleFirst, ///< an odd cycle application whenever one exists, else a triple
    TriplesFirst,  ///< a triple whenever one exists, else an odd cycle application
};

/// Deterministic fixed point of the SAP forcing rules under `policy`.
SapClosure sap_closure(const NonEdgeColoring& initial, Rule rule, const VcRestriction& restriction = {},
                       ClosurePolicy policy = ClosurePolicy::OddCycleFirst);

/// Re-applies a trace, checking each step is applicable; nullopt if some step is not.
std::optional<NonEdgeColoring> replay_trace(const NonEdgeColoring& initial, const SapTrace& trace, Rule rule,
                                            const VcRestriction& restriction = {});

/// Closure from no blue non-edges colors every non-edge.
bool is_zsap_zero(const Graph& g, Rule rule);

struct ZsapNumber {
    int value = 0;
    std::vector<NonEdge> witness;
};

/// Minimum number of initially blue non-edges whose closure colors all non-edges.
ZsapNumber zsap(const Graph& g, Rule rule, const Limits& limits = default_limits);

/// Non-edges with at least one endpoint in B.
std::vector<NonEdge> complementary_closure(const Graph& g, VertexSet b);

/// Z_vc game from the vertex set B: closure of the complementary closure under the restriction.
SapClosure zvc_closure(const Graph& g, VertexSet b, Rule rule);
bool is_zvc_forcing_set(const Graph& g, VertexSet b, Rule rule);

struct ZvcNumber {
    int value = 0;
    VertexSet witness;
};

/// Minimum |B| over Z_vc forcing sets; rule Z gives Z_vc, rule Zl gives Z_vc^l.
ZvcNumber zvc(const Graph& g, Rule rule, const Limits& limits = default_limits);

struct OrderExploration {
    int trials = 0;
    int disagreements = 0; ///< random orders whose final coloring differs from the deterministic one
    bool deterministic_full = false;
    bool some_order_full = false;
};

/// Replays the closure under `trials` random application orders.
OrderExploration explore_orders(const NonEdgeColoring& initial, Rule rule, const VcRestriction& restriction,
                                int trials, std::uint64_t seed);

/// Exhaustive search over application orders: can some order color every non-edge?
/// nullopt when more than `state_budget` colorings would have to be visited.
std::optional<bool> full_coloring_reachable(const NonEdgeColoring& initial, Rule rule,
                                            const VcRestriction& restriction = {},
                                            std::size_t state_budget = 2'000'000);

} // namespace sapzf
