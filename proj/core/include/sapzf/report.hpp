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

// Per-graph parameter reports, the inequality-chain validator and the result cache.

#include "sapzf/graph.hpp"
#include "sapzf/limits.hpp"
#include "sapzf/xi.hpp"

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sapzf {

/// Integer parameters a report can hold.
inline constexpr std::string_view param_names[] = {"Z",   "Zl",   "Zplus",           "FloorZ",   "Zsap",
                                                   "Zsapl", "Zsapp", "Zvc",           "Zvcl",     "beta_complement",
                                                   "hadwiger", "M_small", "xi"};
/// Boolean flags a report can hold.
inline constexpr std::string_view flag_names[] = {"zsap_zero", "zsapl_zero", "zsapp_zero", "t3_minor"};

bool is_param_name(std::string_view name);
bool is_flag_name(std::string_view name);

struct ParameterReport {
    std::string graph6; ///< canonical form
    std::map<std::string, int> params;
    std::map<std::string, bool> flags;
    /// Requested fields that were not computed, with the reason (cap or guard message).
    std::map<std::string, std::string> refused;
    std::optional<XiCertificate> certificate;
};

/// Violated inequalities among Zplus <= Zl <= Z, Zsapp <= Zsapl <= Zsap and
/// M_small - Zvc <= xi <= FloorZ <= Z, over the fields present.
std::vector<std::string> validate_report(const ParameterReport& r);

/// Append-only JSONL cache; one record {"v","g6","param","value"} per line, keyed by
/// (canonical graph6, name, version). Records of other versions are ignored.
class ResultCache {
public:
    static constexpr std::string_view version = "sapzf-1";

    ResultCache() = default;
    /// Loads existing records; lines that fail to parse raise ParseError with the line number.
    explicit ResultCache(std::filesystem::path path);

    std::optional<int> get_int(const std::string& g6, std::string_view name) const;
    std::optional<bool> get_bool(const std::string& g6, std::string_view name) const;
    void put_int(const std::string& g6, std::string_view name, int value);
    void put_bool(const std::string& g6, std::string_view name, bool value);
    bool enabled() const { return !path_.empty(); }
    std::size_t size() const;

private:
    void append(const std::string& g6, std::string_view name, const std::string& value_json);

    std::filesystem::path path_;
    mutable std::mutex mutex_;
    std::map<std::pair<std::string, std::string>, std::string> values_;
};

struct ReportOptions {
    const T3Family* family = nullptr; ///< needed for xi and t3_minor
    ResultCache* cache = nullptr;
    Limits limits = default_limits;
};

/// Computes the requested names on the canonical labeling of G. Cap and guard errors
/// are recorded in `refused` instead of thrown.
ParameterReport compute_report(const Graph& g, std::span<const std::string> names, const ReportOptions& options);

/// Every param and flag name.
std::vector<std::string> all_report_names();

/// Single-line JSON rendering with sorted keys.
std::string report_json(const ParameterReport& r);
/// "name=value" lines, params then flags then refusals.
std::string report_text(const ParameterReport& r);

} // namespace sapzf
