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

#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace sapzf {

/// Decodes one graph6 string (an optional ">>graph6<<" header is accepted).
/// Throws ParseError naming the byte offset of the first bad byte.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

/// Reads non-empty, non-comment lines as graph6 strings. ParseError offsets are line numbers.
std::vector<Graph> read_graph6_lines(std::istream& in);

/// Edge-list text: first line "n m", then m lines "i j".
Graph parse_edge_list(std::istream& in, bool one_based = true);
std::string to_edge_list(const Graph& g, bool one_based = true);

/// Blocks of edge lists separated by blank lines.
std::vector<Graph> parse_edge_list_blocks(std::istream& in, bool one_based = true);

} // namespace sapzf
