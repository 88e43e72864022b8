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

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sapzf {

/// Color change rule of a conventional zero forcing game.
///  - Z:      a blue vertex with exactly one white neighbor forces it.
///  - Zl:     Z, or a white non-isolated vertex without white neighbors turns itself blue.
///  - Zplus:  Z applied inside G[B u W] for each component W of G - B.
///  - FloorZ: Z, or a blue vertex with no white neighbors that has never forced
///            may force any white vertex (a hop).
enum class Rule { Z, Zl, Zplus, FloorZ };

std::string_view rule_name(Rule r);
/// Accepts "Z", "Zl", "Zplus", "FloorZ" (case-insensitive, also "l", "+", "floor").
std::optional<Rule> parse_rule(std::string_view text);

struct Force {
    Vertex from = 0;
    Vertex to = 0;
    bool hop = false;
    bool operator==(const Force&) const = default;
};

using ForceTrace = std::vector<Force>;

/// "i->j" per force, "hop: i->j" for hops; 1-based labels, one per line.
std::string format_trace(const ForceTrace& trace);

/// Forces applicable in the state `blue` under Z, Zl or Zplus, ordered by (from, to).
/// Self-forces of Zl appear with from == to.
std::vector<Force> available_forces(const Graph& g, VertexSet blue, Rule rule);

struct Closure {
    VertexSet blue;
    ForceTrace trace;
};

/// Least fixed point of `rule` (Z, Zl or Zplus) from the initial blue set.
Closure closure(const Graph& g, VertexSet initial, Rule rule);

/// Finds a sequence of regular forces and hops turning everything blue, if one exists.
std::optional<ForceTrace> floor_forcing_sequence(const Graph& g, VertexSet initial);

/// Z/Zl/Zplus: the closure is V(G). FloorZ: some force sequence reaches V(G).
bool is_zero_forcing_set(const Graph& g, VertexSet initial, Rule rule);

struct ZeroForcingNumber {
    int value = 0;
    VertexSet witness;
};

/// Minimum zero forcing set by ascending-size subset search. For FloorZ on a
/// disconnected graph the value is the maximum over components.
ZeroForcingNumber min_zero_forcing_set(const Graph& g, Rule rule, const Limits& limits = default_limits);

inline int zero_forcing_number(const Graph& g, Rule rule, const Limits& limits = default_limits)
{
    return min_zero_forcing_set(g, rule, limits).value;
}

/// Calls `visit` on each k-subset of `universe` in colexicographic order until it returns true.
bool for_each_subset_of_size(VertexSet universe, int k, const std::function<bool(VertexSet)>& visit);

} // namespace sapzf
