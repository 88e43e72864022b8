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

#include <compare>
#include <string>
#include <vector>

namespace sapzf {

/// graph6 string of the canonically relabeled graph; equal iff the graphs are isomorphic.
struct CanonicalForm {
    std::string graph6;
    auto operator<=>(const CanonicalForm&) const = default;
};

struct CanonicalLabeling {
    CanonicalForm form;
    /// labeling[v] is the canonical label of vertex v.
    std::vector<Vertex> labeling;
};

/// Partition refinement with individualization and automorphism pruning.
CanonicalLabeling canonical_labeling(const Graph& g, const Limits& limits = default_limits);
CanonicalForm canonical_form(const Graph& g, const Limits& limits = default_limits);
Graph canonical_graph(const Graph& g, const Limits& limits = default_limits);
bool isomorphic(const Graph& g, const Graph& h, const Limits& limits = default_limits);

} // namespace sapzf
