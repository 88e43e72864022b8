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

#include "sapzf/graph.hpp"
#include "sapzf/limits.hpp"

#include <optional>
#include <vector>

namespace sapzf {

/// Disjoint connected branch sets of G, one per vertex of H, such that every edge of H
/// joins two branch sets that are adjacent in G.
struct MinorModel {
    std::vector<VertexSet> branch_sets;
};

/// Searches contraction sequences of G for one that contains H as a subgraph.
/// Contracted graphs that already failed are remembered by canonical form.
std::optional<MinorModel> find_minor(const Graph& g, const Graph& h, const Limits& limits = default_limits);
bool has_minor(const Graph& g, const Graph& h, const Limits& limits = default_limits);

/// True iff `model` is a valid H-minor model in G.
bool is_minor_model(const Graph& g, const Graph& h, const MinorModel& model);

/// Injective map from V(H) into V(G) carrying edges to edges, if one exists.
std::optional<std::vector<Vertex>> find_subgraph(const Graph& g, const Graph& h);

struct HadwigerResult {
    int value = 0;
    MinorModel model; ///< a K_value model
};

/// Largest p such that G has a K_p minor.
HadwigerResult hadwiger(const Graph& g, const Limits& limits = default_limits);

} // namespace sapzf
