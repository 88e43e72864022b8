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

#include "sapzf/graph_io.hpp"

#include "sapzf/error.hpp"

#include <sstream>

namespace sapzf {

namespace {

constexpr std::string_view graph6_header = ">>graph6<<";

int graph6_byte(std::string_view text, std::size_t pos)
{
    if (pos >= text.size()) throw ParseError("graph6: truncated input", pos);
    auto c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126) throw ParseError("graph6: byte " + std::to_string(c) + " out of range 63..126", pos);
    return c - 63;
}

std::string trim(const std::string& s)
{
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

} // namespace

Graph parse_graph6(std::string_view text)
{
    std::size_t base = 0;
    if (text.starts_with(graph6_header)) base = graph6_header.size();
    std::size_t pos = base;

    long long n = graph6_byte(text, pos++);
    if (n == 63) {
        if (pos < text.size() && text[pos] == 126)
            throw ParseError("graph6: order too large (8-byte header)", pos);
        n = 0;
        for (int k = 0; k < 3; ++k) n = (n << 6) | graph6_byte(text, pos++);
        if (n < 63) throw ParseError("graph6: non-canonical 4-byte order header", base);
    }
    if (n > max_vertices)
        throw ParseError("graph6: order " + std::to_string(n) + " exceeds " + std::to_string(max_vertices), base);

    Graph g(static_cast<int>(n));
    const long long bits = n * (n - 1) / 2;
    const long long nbytes = (bits + 5) / 6;
    long long bit = 0;
    for (long long b = 0; b < nbytes; ++b) {
        int chunk = graph6_byte(text, pos);
        for (int k = 5; k >= 0; --k, ++bit) {
            bool set = (chunk >> k) & 1;
            if (bit >= bits) {
                if (set) throw ParseError("graph6: nonzero padding bit", pos);
                continue;
            }
            if (!set) continue;
            // column-major upper triangle: (0,1),(0,2),(1,2),(0,3),...
            long long j = 1;
            while (j * (j + 1) / 2 <= bit) ++j;
            long long i = bit - j * (j - 1) / 2;
            g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
        }
        ++pos;
    }
    if (pos != text.size()) throw ParseError("graph6: trailing bytes", pos);
    return g;
}

std::string to_graph6(const Graph& g)
{
    std::string out;
    const int n = g.order();
    if (n <= 62) {
        out += static_cast<char>(n + 63);
    } else {
        out += static_cast<char>(126);
        for (int k = 2; k >= 0; --k) out += static_cast<char>(((n >> (6 * k)) & 63) + 63);
    }
    int chunk = 0;
    int filled = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            chunk = (chunk << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out += static_cast<char>(chunk + 63);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out += static_cast<char>((chunk << (6 - filled)) + 63);
    return out;
}

std::vector<Graph> read_graph6_lines(std::istream& in)
{
    std::vector<Graph> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        try {
            out.push_back(parse_graph6(t));
        } catch (const ParseError& e) {
            throw ParseError(std::string("line ") + std::to_string(lineno) + ": " + e.what(), lineno);
        }
    }
    return out;
}

namespace {

Graph parse_edge_block(const std::vector<std::pair<std::size_t, std::string>>& lines, bool one_based)
{
    std::istringstream head(lines.front().second);
    long long n = -1;
    long long m = -1;
    if (!(head >> n >> m) || n < 0 || m < 0)
        throw ParseError("edge list: expected header \"n m\"", lines.front().first);
    if (n > max_vertices) throw ParseError("edge list: order exceeds " + std::to_string(max_vertices), lines.front().first);
    if (static_cast<long long>(lines.size()) - 1 != m)
        throw ParseError("edge list: header announces " + std::to_string(m) + " edges, found " +
                             std::to_string(lines.size() - 1),
                         lines.front().first);
    Graph g(static_cast<int>(n));
    const int shift = one_based ? 1 : 0;
    for (std::size_t k = 1; k < lines.size(); ++k) {
        std::istringstream row(lines[k].second);
        long long i = 0;
        long long j = 0;
        std::string extra;
        if (!(row >> i >> j) || (row >> extra)) throw ParseError("edge list: expected \"i j\"", lines[k].first);
        i -= shift;
        j -= shift;
        if (i < 0 || j < 0 || i >= n || j >= n) throw ParseError("edge list: endpoint out of range", lines[k].first);
        if (i == j) throw ParseError("edge list: self-loop", lines[k].first);
        g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
    return g;
}

} // namespace

std::vector<Graph> parse_edge_list_blocks(std::istream& in, bool one_based)
{
    std::vector<Graph> out;
    std::vector<std::pair<std::size_t, std::string>> block;
    std::string line;
    std::size_t lineno = 0;
    auto flush = [&] {
        if (!block.empty()) out.push_back(parse_edge_block(block, one_based));
        block.clear();
    };
    while (std::getline(in, line)) {
        ++lineno;
        auto t = trim(line);
        if (!t.empty() && t[0] == '#') continue;
        if (t.empty()) {
            flush();
            continue;
        }
        block.emplace_back(lineno, t);
    }
    flush();
    return out;
}

Graph parse_edge_list(std::istream& in, bool one_based)
{
    auto blocks = parse_edge_list_blocks(in, one_based);
    if (blocks.size() != 1)
        throw ParseError("edge list: expected exactly one graph, found " + std::to_string(blocks.size()), 0);
    return blocks.front();
}

std::string to_edge_list(const Graph& g, bool one_based)
{
    const int shift = one_based ? 1 : 0;
    std::ostringstream out;
    auto edges = g.edges();
    out << g.order() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges) out << u + shift << ' ' << v + shift << '\n';
    return out.str();
}

} // namespace sapzf
