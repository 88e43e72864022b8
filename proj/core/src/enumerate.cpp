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

#include "sapzf/enumerate.hpp"

#include "sapzf/canonical.hpp"
#include "sapzf/error.hpp"
#include "sapzf/graph_io.hpp"

#include <map>
#include <mutex>
#include <set>
#include <string>

namespace sapzf {

namespace {

std::vector<Graph> generate(int n, const std::vector<Graph>& smaller, const Limits& limits)
{
    std::set<std::string> seen;
    for (const auto& base : smaller) {
        const std::uint64_t subsets = std::uint64_t{1} << (n - 1);
        for (std::uint64_t mask = 1; mask < subsets; ++mask) {
            Graph g(n);
            for (auto [u, v] : base.edges()) g.add_edge(u, v);
            for (auto v : VertexSet(mask)) g.add_edge(v, n - 1);
            seen.insert(canonical_form(g, limits).graph6);
        }
    }
    std::vector<Graph> out;
    out.reserve(seen.size());
    for (const auto& code : seen) out.push_back(parse_graph6(code));
    return out;
}

} // namespace

const std::vector<Graph>& connected_graphs(int n, const Limits& limits)
{
    if (n < 1 || n > limits.enumerate_vertices) {
        if (n < 1) throw DomainError("connected_graphs: n must be at least 1");
        throw CapError("enumerate_connected", n, limits.enumerate_vertices);
    }
    static std::mutex lock;
    static std::map<int, std::vector<Graph>> memo;
    std::lock_guard guard(lock);
    if (memo.empty()) memo.emplace(1, std::vector<Graph>{Graph(1)});
    for (int k = 2; k <= n; ++k)
        if (!memo.contains(k)) memo.emplace(k, generate(k, memo.at(k - 1), limits));
    return memo.at(n);
}

void enumerate_connected(int n, const std::function<void(const Graph&)>& visit, const Limits& limits)
{
    for (const auto& g : connected_graphs(n, limits)) visit(g);
}

std::vector<Graph> connected_corpus(int max_n, const Limits& limits)
{
    std::vector<Graph> out;
    for (int n = 1; n <= max_n; ++n) {
        const auto& layer = connected_graphs(n, limits);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

} // namespace sapzf
