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
#include "sapzf/survey.hpp"

#include "sapzf/enumerate.hpp"
#include "sapzf/error.hpp"
#include "sapzf/graph_io.hpp"
#include "sapzf/sap_forcing.hpp"
#include "sapzf/zero_forcing.hpp"

#include <atomic>
#include <exception>
#include <array>
#include <map>
#include <mutex>
#include <thread>

namespace sapzf {

namespace {

// Runs work(i) for i in [0, count) on `jobs` threads; rethrows the first exception.
template <class Work>
void parallel_for(std::size_t count, int jobs, Work work)
{
    if (jobs <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) work(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    const auto threads = std::min<std::size_t>(static_cast<std::size_t>(jobs), count);
    for (std::size_t t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) {
                try {
                    work(i);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            }
        });
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
}

} // namespace

int percent_half_up(int count, int total)
{
    if (total <= 0) throw DomainError("percent_half_up: total must be positive");
    return static_cast<int>((200LL * count + total) / (2LL * total));
}

std::string format_proportion(int count, int total)
{
    const int p = percent_half_up(count, total);
    std::string frac = std::to_string(p % 100);
    if (frac.size() < 2) frac = "0" + frac;
    return std::to_string(p / 100) + "." + frac;
}

SurveyRow survey_graphs(int n, const std::vector<Graph>& graphs, int jobs)
{
    std::vector<std::array<bool, 3>> flags(graphs.size());
    parallel_for(graphs.size(), jobs, [&](std::size_t i) {
        const auto& g = graphs[i];
        if (g.order() != n) throw DomainError("survey: graph of order " + std::to_string(g.order()) + " in row n=" + std::to_string(n));
        flags[i] = {is_zsap_zero(g, Rule::Z), is_zsap_zero(g, Rule::Zl), is_zsap_zero(g, Rule::Zplus)};
    });
    SurveyRow row{n, static_cast<int>(graphs.size()), 0, 0, 0};
    for (const auto& f : flags) {
        row.zsap0 += f[0];
        row.zsapl0 += f[1];
        row.zsapp0 += f[2];
    }
    return row;
}

SurveyRow survey_connected(int n, int jobs, const Limits& limits)
{
    return survey_graphs(n, connected_graphs(n, limits), jobs);
}

std::vector<SurveyRow> survey_corpus(const std::vector<Graph>& graphs, int jobs)
{
    std::map<int, std::vector<Graph>> by_order;
    for (const auto& g : graphs) by_order[g.order()].push_back(g);
    std::vector<SurveyRow> rows;
    for (const auto& [n, gs] : by_order) rows.push_back(survey_graphs(n, gs, jobs));
    return rows;
}

std::string survey_csv_header()
{
    return "n,total,zsap0,zsapl0,zsapp0,p_zsap0,p_zsapl0,p_zsapp0";
}

std::string survey_csv_line(const SurveyRow& r)
{
    return std::to_string(r.n) + "," + std::to_string(r.total) + "," + std::to_string(r.zsap0) + "," +
           std::to_string(r.zsapl0) + "," + std::to_string(r.zsapp0) + "," + format_proportion(r.zsap0, r.total) +
           "," + format_proportion(r.zsapl0, r.total) + "," + format_proportion(r.zsapp0, r.total);
}

XiVerification verify_xi_connected(int n, const T3Family& family, int jobs, const Limits& limits)
{
    if (n > 7) throw GuardError("verify-xi: n = " + std::to_string(n) + " > 7, where M(G) = Z(G) is not available");
    const auto& graphs = connected_graphs(n, limits);
    std::vector<XiCertificate> certs(graphs.size());
    std::vector<int> floors(graphs.size());
    parallel_for(graphs.size(), jobs, [&](std::size_t i) {
        certs[i] = certify_xi(graphs[i], family, limits);
        floors[i] = zero_forcing_number(graphs[i], Rule::FloorZ, limits);
    });
    XiVerification out;
    out.n = n;
    out.graphs = static_cast<int>(graphs.size());
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const auto& c = certs[i];
        ++out.case_counts[std::string(xi_case_name(c.kase))];
        if (!c.resolved()) {
            ++out.unresolved;
            out.exceptions.push_back({to_graph6(graphs[i]), -1, floors[i], "unresolved"});
        } else if (c.value != floors[i]) {
            out.exceptions.push_back({to_graph6(graphs[i]), c.value, floors[i], "xi != floor-Z"});
        }
    }
    return out;
}

} // namespace sapzf
