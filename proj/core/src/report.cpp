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
#include "sapzf/report.hpp"

#include "sapzf/canonical.hpp"
#include "sapzf/error.hpp"
#include "sapzf/graph_io.hpp"
#include "sapzf/minor.hpp"
#include "sapzf/sap_forcing.hpp"
#include "sapzf/vertex_cover.hpp"
#include "sapzf/zero_forcing.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

namespace sapzf {

using nlohmann::json;

bool is_param_name(std::string_view name)
{
    return std::find(std::begin(param_names), std::end(param_names), name) != std::end(param_names);
}

bool is_flag_name(std::string_view name)
{
    return std::find(std::begin(flag_names), std::end(flag_names), name) != std::end(flag_names);
}

std::vector<std::string> all_report_names()
{
    std::vector<std::string> out;
    for (auto n : param_names) out.emplace_back(n);
    for (auto n : flag_names) out.emplace_back(n);
    return out;
}

std::vector<std::string> validate_report(const ParameterReport& r)
{
    std::vector<std::string> out;
    auto get = [&](const char* name) -> std::optional<int> {
        auto it = r.params.find(name);
        if (it == r.params.end()) return std::nullopt;
        return it->second;
    };
    auto le = [&](const char* a, const char* b) {
        auto x = get(a);
        auto y = get(b);
        if (x && y && *x > *y)
            out.push_back(std::string(a) + " = " + std::to_string(*x) + " > " + b + " = " + std::to_string(*y));
    };
    le("Zplus", "Zl");
    le("Zl", "Z");
    le("Zsapp", "Zsapl");
    le("Zsapl", "Zsap");
    le("xi", "FloorZ");
    le("FloorZ", "Z");
    le("M_small", "Z");
    if (auto m = get("M_small"), vc = get("Zvc"), x = get("xi"); m && vc && x && *m - *vc > *x)
        out.push_back("M_small - Zvc = " + std::to_string(*m - *vc) + " > xi = " + std::to_string(*x));
    return out;
}

ResultCache::ResultCache(std::filesystem::path path) : path_(std::move(path))
{
    std::ifstream in(path_);
    if (!in) return;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        json rec;
        try {
            rec = json::parse(line);
        } catch (const json::exception& e) {
            throw ParseError(std::string("cache ") + path_.string() + ": " + e.what(), line_no);
        }
        if (!rec.is_object() || !rec.contains("v") || !rec.contains("g6") || !rec.contains("param") ||
            !rec.contains("value"))
            throw ParseError("cache " + path_.string() + ": record lacks v/g6/param/value", line_no);
        if (rec["v"] != version) continue;
        // later records win; the file is append-only
        values_[{rec["g6"].get<std::string>(), rec["param"].get<std::string>()}] = rec["value"].dump();
    }
}

std::optional<int> ResultCache::get_int(const std::string& g6, std::string_view name) const
{
    std::lock_guard lock(mutex_);
    auto it = values_.find({g6, std::string(name)});
    if (it == values_.end()) return std::nullopt;
    auto v = json::parse(it->second);
    if (!v.is_number_integer()) return std::nullopt;
    return v.get<int>();
}

std::optional<bool> ResultCache::get_bool(const std::string& g6, std::string_view name) const
{
    std::lock_guard lock(mutex_);
    auto it = values_.find({g6, std::string(name)});
    if (it == values_.end()) return std::nullopt;
    auto v = json::parse(it->second);
    if (!v.is_boolean()) return std::nullopt;
    return v.get<bool>();
}

void ResultCache::append(const std::string& g6, std::string_view name, const std::string& value_json)
{
    std::lock_guard lock(mutex_);
    auto key = std::pair{g6, std::string(name)};
    if (auto it = values_.find(key); it != values_.end() && it->second == value_json) return;
    values_[key] = value_json;
    if (path_.empty()) return;
    std::ofstream out(path_, std::ios::app);
    if (!out) throw ConfigError("cannot write cache " + path_.string());
    json rec = {{"v", version}, {"g6", g6}, {"param", std::string(name)}, {"value", json::parse(value_json)}};
    out << rec.dump() << '\n';
}

void ResultCache::put_int(const std::string& g6, std::string_view name, int value)
{
    append(g6, name, json(value).dump());
}

void ResultCache::put_bool(const std::string& g6, std::string_view name, bool value)
{
    append(g6, name, json(value).dump());
}

std::size_t ResultCache::size() const
{
    std::lock_guard lock(mutex_);
    return values_.size();
}

namespace {

const T3Family& need_family(const ReportOptions& o)
{
    if (!o.family) throw ConfigError("T3 family data is required for xi and t3_minor");
    return *o.family;
}

} // namespace

ParameterReport compute_report(const Graph& input, std::span<const std::string> names, const ReportOptions& options)
{
    const Limits& lim = options.limits;
    const bool canonical_ok = input.order() <= lim.canonical_vertices;
    const Graph g = canonical_ok ? canonical_graph(input, lim) : input;
    ParameterReport r;
    r.graph6 = to_graph6(g);
    ResultCache* cache = canonical_ok ? options.cache : nullptr;

    const std::map<std::string, std::function<int()>, std::less<>> params = {
        {"Z", [&] { return zero_forcing_number(g, Rule::Z, lim); }},
        {"Zl", [&] { return zero_forcing_number(g, Rule::Zl, lim); }},
        {"Zplus", [&] { return zero_forcing_number(g, Rule::Zplus, lim); }},
        {"FloorZ", [&] { return zero_forcing_number(g, Rule::FloorZ, lim); }},
        {"Zsap", [&] { return zsap(g, Rule::Z, lim).value; }},
        {"Zsapl", [&] { return zsap(g, Rule::Zl, lim).value; }},
        {"Zsapp", [&] { return zsap(g, Rule::Zplus, lim).value; }},
        {"Zvc", [&] { return zvc(g, Rule::Z, lim).value; }},
        {"Zvcl", [&] { return zvc(g, Rule::Zl, lim).value; }},
        {"beta_complement", [&] { return vertex_cover_number(complement(g), lim); }},
        {"hadwiger", [&] { return hadwiger(g, lim).value; }},
        {"M_small", [&] { return m_small(g, lim); }},
        {"xi",
         [&] {
             auto c = xi(g, need_family(options), lim);
             r.certificate = c;
             return c.value;
         }},
    };
    const std::map<std::string, std::function<bool()>, std::less<>> flags = {
        {"zsap_zero", [&] { return is_zsap_zero(g, Rule::Z); }},
        {"zsapl_zero", [&] { return is_zsap_zero(g, Rule::Zl); }},
        {"zsapp_zero", [&] { return is_zsap_zero(g, Rule::Zplus); }},
        {"t3_minor", [&] { return t3_minor(g, need_family(options), lim).has_value(); }},
    };

    for (const auto& name : names) {
        try {
            if (auto p = params.find(name); p != params.end()) {
                if (cache)
                    if (auto v = cache->get_int(r.graph6, name)) {
                        r.params[name] = *v;
                        continue;
                    }
                const int v = p->second();
                r.params[name] = v;
                if (cache) cache->put_int(r.graph6, name, v);
            } else if (auto f = flags.find(name); f != flags.end()) {
                if (cache)
                    if (auto v = cache->get_bool(r.graph6, name)) {
                        r.flags[name] = *v;
                        continue;
                    }
                const bool v = f->second();
                r.flags[name] = v;
                if (cache) cache->put_bool(r.graph6, name, v);
            } else {
                throw DomainError("unknown parameter '" + name + "'");
            }
        } catch (const CapError& e) {
            r.refused[name] = e.what();
        } catch (const GuardError& e) {
            r.refused[name] = e.what();
        } catch (const UnresolvedError& e) {
            r.refused[name] = e.what();
        }
    }
    return r;
}

std::string report_json(const ParameterReport& r)
{
    json out;
    out["graph6"] = r.graph6;
    out["params"] = r.params;
    out["flags"] = r.flags;
    if (!r.refused.empty()) out["refused"] = r.refused;
    return out.dump();
}

std::string report_text(const ParameterReport& r)
{
    std::ostringstream out;
    out << "graph6=" << r.graph6 << '\n';
    for (const auto& [k, v] : r.params) out << k << '=' << v << '\n';
    for (const auto& [k, v] : r.flags) out << k << '=' << (v ? "true" : "false") << '\n';
    for (const auto& [k, v] : r.refused) out << k << ": refused: " << v << '\n';
    return out.str();
}

} // namespace sapzf
