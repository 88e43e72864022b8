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
// sapzf: command line front end. Exit codes: 0 verified, 1 violation found,
// 2 input error, 3 cap or guard refusal.

#include "sapzf/canonical.hpp"
#include "sapzf/enumerate.hpp"
#include "sapzf/error.hpp"
#include "sapzf/exact_linalg.hpp"
#include "sapzf/families.hpp"
#include "sapzf/graph_io.hpp"
#include "sapzf/minor.hpp"
#include "sapzf/report.hpp"
#include "sapzf/sap_forcing.hpp"
#include "sapzf/survey.hpp"
#include "sapzf/xi.hpp"
#include "sapzf/zero_forcing.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace sapzf;
using nlohmann::json;

enum Exit { ok = 0, violation = 1, input_error = 2, refusal = 3 };

struct Options {
    std::string graph;
    std::string rule = "Z";
    std::string policy = "odd-cycle-first";
    std::string family = "S";
    int samples = 10;
    std::uint64_t seed = 1;
    std::vector<int> orders;
    std::string corpus;
    std::string cache;
    std::string out = "text";
    std::string t3_data;
    std::string minor;
    std::vector<std::string> params;
    int jobs = 1;
    int max_n = 9;
    bool certificate = false;
    bool zfs = false;
    bool derive_t3 = false;
    bool t3 = false;
};

// A file path (graph6 lines or one edge list), a named graph, or a graph6 string.
Graph load_graph(const std::string& source)
{
    if (source.empty()) throw ConfigError("--graph is required");
    if (std::filesystem::exists(source)) {
        std::ifstream in(source);
        std::stringstream buf;
        buf << in.rdbuf();
        const std::string text = buf.str();
        std::istringstream probe(text);
        std::string line;
        while (std::getline(probe, line)) {
            auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos || line[first] == '#') continue;
            break;
        }
        std::istringstream head(line);
        long a = 0, b = 0;
        std::istringstream in2(text);
        if (head >> a >> b) return parse_edge_list(in2);
        auto graphs = read_graph6_lines(in2);
        if (graphs.size() != 1)
            throw ParseError(source + ": expected exactly one graph, found " + std::to_string(graphs.size()), 0);
        return graphs.front();
    }
    if (auto named = families::by_name(source)) return *named;
    return parse_graph6(source);
}

std::vector<Graph> load_corpus(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open corpus " + path);
    return read_graph6_lines(in);
}

T3Family load_family(const Options& o)
{
    return o.t3_data.empty() ? T3Family::load_default() : T3Family::load(o.t3_data);
}

Rule need_rule(const std::string& text, bool allow_floor)
{
    auto r = parse_rule(text);
    if (!r || (!allow_floor && *r == Rule::FloorZ)) throw ConfigError("unknown or unsupported rule '" + text + "'");
    return *r;
}

std::vector<std::string> split_names(const std::vector<std::string>& raw)
{
    std::vector<std::string> out;
    for (const auto& item : raw) {
        std::stringstream ss(item);
        std::string name;
        while (std::getline(ss, name, ','))
            if (!name.empty()) out.push_back(name);
    }
    return out;
}

int cmd_param(const Options& o)
{
    const Graph g = load_graph(o.graph);
    auto names = split_names(o.params);
    if (names.empty()) names = all_report_names();
    for (const auto& n : names)
        if (!is_param_name(n) && !is_flag_name(n)) throw ConfigError("unknown parameter '" + n + "'");

    std::optional<T3Family> family;
    const bool needs_family = std::any_of(names.begin(), names.end(), [](const std::string& n) {
        return n == "xi" || n == "t3_minor";
    });
    if (needs_family) family = load_family(o);
    std::optional<ResultCache> cache;
    if (!o.cache.empty()) cache.emplace(o.cache);

    ReportOptions ro;
    ro.family = family ? &*family : nullptr;
    ro.cache = cache ? &*cache : nullptr;
    const auto report = compute_report(g, names, ro);
    if (o.out == "jsonl")
        std::cout << report_json(report) << '\n';
    else
        std::cout << report_text(report);
    if (o.certificate && report.certificate) std::cout << certificate_json(*report.certificate) << '\n';

    const auto violations = validate_report(report);
    for (const auto& v : violations) std::cerr << "violation: " << v << '\n';
    if (!violations.empty()) return violation;
    return report.refused.empty() ? ok : refusal;
}

int cmd_trace(const Options& o)
{
    const Graph g = load_graph(o.graph);
    if (o.zfs) {
        const Rule rule = need_rule(o.rule, true);
        const auto best = min_zero_forcing_set(g, rule);
        std::cout << "# " << rule_name(rule) << " = " << best.value << ", initial " << format_vertex_set(best.witness)
                  << '\n';
        if (rule == Rule::FloorZ)
            std::cout << format_trace(*floor_forcing_sequence(g, best.witness));
        else
            std::cout << format_trace(closure(g, best.witness, rule).trace);
        return ok;
    }
    const Rule rule = need_rule(o.rule, false);
    const NonEdgeColoring start(g);
    const auto policy = o.policy == "triples-first" ? ClosurePolicy::TriplesFirst : ClosurePolicy::OddCycleFirst;
    const auto result = sap_closure(start, rule, {}, policy);
    const auto replayed = replay_trace(start, result.trace, rule);
    if (!replayed || !(*replayed == result.coloring)) {
        std::cerr << "trace failed replay verification\n";
        return violation;
    }
    std::cout << format_sap_trace(result.trace);
    const int white = static_cast<int>(result.coloring.white_non_edges().size());
    if (white == 0)
        std::cout << "all " << g.non_edge_count() << " non-edges blue\n";
    else
        std::cout << white << " non-edges remain white\n";
    return ok;
}

int cmd_verify_sap(const Options& o)
{
    const Graph g = load_graph(o.graph);
    auto fam = parse_family(o.family);
    if (!fam) throw ConfigError("unknown family '" + o.family + "'");
    const Rule rule = *fam == PatternFamily::S ? Rule::Z : *fam == PatternFamily::S_ell ? Rule::Zl : Rule::Zplus;
    const bool guaranteed = is_zsap_zero(g, rule);
    int passed = 0;
    for (int s = 0; s < o.samples; ++s) {
        const auto a = sample_matrix(g, *fam, o.seed + static_cast<std::uint64_t>(s));
        const bool sap = has_sap(g, a);
        passed += sap;
        std::cout << "sample " << s + 1 << ": " << (sap ? "SAP" : "no SAP") << " (nullity "
                  << g.order() - rank(a) << ")\n";
    }
    std::cout << family_name(*fam) << ": " << passed << "/" << o.samples << " samples have the SAP\n";
    if (!guaranteed) {
        std::cout << "not guaranteed: zsap-zero flag for " << rule_name(rule) << " is false\n";
        return ok;
    }
    const bool pass = passed == o.samples;
    std::cout << (pass ? "PASS" : "FAIL") << '\n';
    return pass ? ok : violation;
}

int cmd_survey(const Options& o)
{
    std::vector<SurveyRow> rows;
    if (!o.corpus.empty()) {
        rows = survey_corpus(load_corpus(o.corpus), o.jobs);
    } else {
        if (o.orders.empty()) throw ConfigError("survey needs --n or --corpus");
        for (int n : o.orders) {
            if (n < 1 || n > default_limits.enumerate_vertices)
                throw CapError("survey enumeration", n, default_limits.enumerate_vertices);
            rows.push_back(survey_connected(n, o.jobs));
        }
    }
    if (o.out == "jsonl") {
        for (const auto& r : rows)
            std::cout << json{{"n", r.n},
                              {"total", r.total},
                              {"zsap0", r.zsap0},
                              {"zsapl0", r.zsapl0},
                              {"zsapp0", r.zsapp0},
                              {"p_zsap0", format_proportion(r.zsap0, r.total)},
                              {"p_zsapl0", format_proportion(r.zsapl0, r.total)},
                              {"p_zsapp0", format_proportion(r.zsapp0, r.total)}}
                             .dump()
                      << '\n';
    } else {
        std::cout << survey_csv_header() << '\n';
        for (const auto& r : rows) std::cout << survey_csv_line(r) << '\n';
    }
    return ok;
}

int cmd_verify_xi(const Options& o)
{
    if (o.orders.empty()) throw ConfigError("verify-xi needs --n");
    const auto family = load_family(o);
    bool clean = true;
    for (int n : o.orders) {
        if (n > 7) throw GuardError("verify-xi: n = " + std::to_string(n) + " > 7, where M(G) = Z(G) is not available");
        const auto res = verify_xi_connected(n, family, o.jobs);
        std::cout << "n=" << n << " graphs=" << res.graphs << " exceptions=" << res.exceptions.size() - res.unresolved
                  << " unresolved=" << res.unresolved;
        for (const auto& [kase, count] : res.case_counts) std::cout << ' ' << kase << '=' << count;
        std::cout << '\n';
        for (const auto& e : res.exceptions)
            std::cout << "  " << e.graph6 << ": " << e.reason << " (xi " << e.xi << ", floor-Z " << e.floor_z << ")\n";
        if (o.certificate)
            for (const auto& g : connected_graphs(n)) std::cout << certificate_json(certify_xi(g, family)) << '\n';
        clean = clean && res.exceptions.empty();
    }
    return clean ? ok : violation;
}

int cmd_minors(const Options& o)
{
    if (o.derive_t3) {
        Limits lim;
        lim.enumerate_vertices = std::max(lim.enumerate_vertices, o.max_n);
        const auto d = derive_t3_family(o.max_n, lim);
        for (const auto& g : d.members) std::cout << "# " << to_graph6(g) << '\n' << to_edge_list(g) << '\n';
        std::cout << "# members=" << d.members.size() << " uncertified=" << d.uncertified.size() << '\n';
        for (const auto& g : d.uncertified) std::cout << "# uncertified " << to_graph6(g) << '\n';
        const auto loaded = load_family(o);
        std::vector<CanonicalForm> a, b;
        for (const auto& g : d.members) a.push_back(canonical_form(g));
        for (const auto& g : loaded.graphs()) b.push_back(canonical_form(g));
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        const bool same = a == b;
        std::cout << "# matches data file: " << (same ? "yes" : "no") << '\n';
        return same ? ok : violation;
    }
    const Graph g = load_graph(o.graph);
    auto print_model = [](const MinorModel& m) {
        for (std::size_t t = 0; t < m.branch_sets.size(); ++t)
            std::cout << (t ? " " : "") << format_vertex_set(m.branch_sets[t]);
        std::cout << '\n';
    };
    if (!o.minor.empty()) {
        const Graph h = load_graph(o.minor);
        auto model = find_minor(g, h);
        std::cout << "minor: " << (model ? "yes" : "no") << '\n';
        if (model) print_model(*model);
        return ok;
    }
    const auto eta = hadwiger(g);
    std::cout << "hadwiger=" << eta.value << '\n';
    print_model(eta.model);
    if (o.t3) {
        const auto family = load_family(o);
        auto m = t3_minor(g, family);
        std::cout << "t3_minor=" << (m ? "true" : "false") << '\n';
        if (m) {
            std::cout << "member " << m->index + 1 << ": ";
            print_model(m->model);
        }
    }
    return ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Zero forcing, SAP forcing and xi certificates for small graphs"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--t3-data", o.t3_data, "T3 family data file");
        sub->add_option("--cache", o.cache, "append-only JSONL result cache");
        sub->add_option("--out", o.out, "output format")->check(CLI::IsMember({"text", "csv", "jsonl"}));
        sub->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
    };
    auto add_graph = [&](CLI::App* sub) {
        sub->add_option("--graph", o.graph, "graph6 string, file, or name such as petersen, K1,3, P4")->required();
    };

    auto* param = app.add_subcommand("param", "compute parameters of one graph");
    add_graph(param);
    add_common(param);
    param->add_option("--param,-p", o.params, "parameter names (comma separated; default all)");
    param->add_flag("--certificate", o.certificate, "print the xi certificate");

    auto* trace = app.add_subcommand("trace", "print the deterministic SAP forcing trace");
    add_graph(trace);
    add_common(trace);
    trace->add_option("--rule", o.rule, "Z, Zl or Zplus (FloorZ with --zfs)");
    trace->add_option("--policy", o.policy, "step selection of the SAP closure")
        ->check(CLI::IsMember({"odd-cycle-first", "triples-first"}));
    trace->add_flag("--zfs", o.zfs, "trace a minimum conventional zero forcing set instead");

    auto* verify_sap = app.add_subcommand("verify-sap", "check sampled matrices for the SAP");
    add_graph(verify_sap);
    add_common(verify_sap);
    verify_sap->add_option("--family", o.family, "S, S_ell or S_plus");
    verify_sap->add_option("--samples", o.samples, "number of samples")->check(CLI::NonNegativeNumber);
    verify_sap->add_option("--seed", o.seed, "seed of the first sample");

    auto* survey = app.add_subcommand("survey", "proportions of graphs with Z_SAP = 0");
    add_common(survey);
    survey->add_option("--n", o.orders, "orders to enumerate")->delimiter(',');
    survey->add_option("--corpus", o.corpus, "graph6 file");

    auto* verify_xi = app.add_subcommand("verify-xi", "check xi = floor-Z on all connected graphs of order n");
    add_common(verify_xi);
    verify_xi->add_option("--n", o.orders, "orders (at most 7)")->delimiter(',')->required();
    verify_xi->add_flag("--certificate", o.certificate, "print one certificate per graph");

    auto* minors = app.add_subcommand("minors", "minor containment, Hadwiger number, T3 family");
    minors->add_option("--graph", o.graph, "host graph");
    add_common(minors);
    minors->add_option("--minor", o.minor, "test this graph as a minor of --graph");
    minors->add_flag("--t3", o.t3, "test for a T3 family minor");
    minors->add_flag("--derive-t3", o.derive_t3, "recompute the T3 family and compare with the data file");
    minors->add_option("--max-n", o.max_n, "largest order searched by --derive-t3");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? ok : input_error;
    }

    try {
        if (*param) return cmd_param(o);
        if (*trace) return cmd_trace(o);
        if (*verify_sap) return cmd_verify_sap(o);
        if (*survey) return cmd_survey(o);
        if (*verify_xi) return cmd_verify_xi(o);
        if (*minors) return cmd_minors(o);
    } catch (const CapError& e) {
        std::cerr << "refused: " << e.what() << '\n';
        return refusal;
    } catch (const GuardError& e) {
        std::cerr << "refused: " << e.what() << '\n';
        return refusal;
    } catch (const UnresolvedError& e) {
        std::cerr << "unresolved: " << e.what() << '\n';
        return violation;
    } catch (const sapzf::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return input_error;
    }
    return input_error;
}
