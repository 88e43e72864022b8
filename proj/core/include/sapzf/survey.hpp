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

// Batch runs over graph corpora: proportions of Z_SAP = 0 and the xi = floor-Z check.

#include "sapzf/graph.hpp"
#include "sapzf/limits.hpp"
#include "sapzf/xi.hpp"

#include <map>
#include <string>
#include <vector>

namespace sapzf {

struct SurveyRow {
    int n = 0;
    int total = 0;
    int zsap0 = 0;
    int zsapl0 = 0;
    int zsapp0 = 0;
};

/// count/total in hundredths, rounded half-up; total must be positive.
int percent_half_up(int count, int total);
/// "0.86", "1.00"
std::string format_proportion(int count, int total);

/// Aggregates the three zsap-zero flags over `graphs`, which must all have `n` vertices.
/// `jobs` > 1 spreads graphs over worker threads; the result does not depend on it.
SurveyRow survey_graphs(int n, const std::vector<Graph>& graphs, int jobs = 1);
/// All connected graphs on n vertices (n <= limits.enumerate_vertices).
SurveyRow survey_connected(int n, int jobs = 1, const Limits& limits = default_limits);
/// One row per order present in `graphs`, ascending.
std::vector<SurveyRow> survey_corpus(const std::vector<Graph>& graphs, int jobs = 1);

std::string survey_csv_header();
std::string survey_csv_line(const SurveyRow& row);

struct XiException {
    std::string graph6;
    int xi = -1;     ///< -1 when unresolved
    int floor_z = 0;
    std::string reason;
};

struct XiVerification {
    int n = 0;
    int graphs = 0;
    int unresolved = 0;
    std::vector<XiException> exceptions; ///< mismatches and unresolved graphs
    std::map<std::string, int> case_counts;
};

/// Checks xi(G) = floor-Z(G) for every connected graph on n vertices; GuardError for n > 7.
XiVerification verify_xi_connected(int n, const T3Family& family, int jobs = 1, const Limits& limits = default_limits);

} // namespace sapzf
