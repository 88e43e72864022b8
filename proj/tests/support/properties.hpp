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

// Corpus-wide invariant checks shared by the property suites and the acceptance binary.
// Each check counts the instances it looked at and keeps the first counterexample.

#include "sapzf/graph.hpp"
#include "sapzf/xi.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace sapzf::props {

struct PropertyResult {
    std::string name;
    long checked = 0;
    long violations = 0;
    std::string first_violation;

    bool ok() const { return violations == 0 && checked > 0; }
    void fail(const std::string& what)
    {
        if (violations++ == 0) first_violation = what;
    }
};

/// Every graph on 1..5 vertices, connected or not, plus every connected graph on 6.
std::vector<Graph> standard_corpus();
/// Every graph (connected or not) on 1..max_n vertices.
std::vector<Graph> all_graphs_up_to(int max_n);

/// Closures of Z, Zl, Zplus and the SAP forcing triples only grow with the initial set.
PropertyResult monotone_closure(const std::vector<Graph>& corpus, std::uint64_t seed);
/// Zplus <= Zl <= Z, FloorZ <= Z, the three Z_SAP variants, Z_vc = 0 iff Z_SAP = 0,
/// Z_vc <= beta(complement), and the report validator.
PropertyResult inequality_chains(const std::vector<Graph>& corpus, const T3Family& family);
/// Z_SAP(G v H) = Z_SAP(G v K1) + Z_SAP(H v K1) for all pairs with |G| + |H| <= max_total.
PropertyResult join_sum(int max_total);
/// Z_SAP(G v K1) <= Z_SAP(G), with equality when G has no isolated vertex.
PropertyResult join_with_vertex(const std::vector<Graph>& corpus);
/// Z_SAP(G v K1) = 0 exactly in the three listed cases.
PropertyResult join_with_vertex_zero(const std::vector<Graph>& corpus);
/// No isolated vertex and a forest complement give Z_SAP = 0.
PropertyResult forest_complement(const std::vector<Graph>& corpus);
/// Diameter 2 and maximum degree at most 3 give Z_SAP = 0.
PropertyResult diameter_two_cubic(const std::vector<Graph>& corpus);
/// xi(G) <= xi(G - v) + 1 whenever Z_SAP(G - v) = 0.
PropertyResult xi_vertex_deletion(const std::vector<Graph>& corpus, const T3Family& family);

} // namespace sapzf::props
