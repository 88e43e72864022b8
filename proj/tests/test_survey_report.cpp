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

#include "support/oracles.hpp"

#include "sapzf/enumerate.hpp"
#include "sapzf/error.hpp"
#include "sapzf/families.hpp"
#include "sapzf/graph_io.hpp"
#include "sapzf/report.hpp"
#include "sapzf/survey.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

using namespace sapzf;

namespace {

const T3Family& family()
{
    static const T3Family f = T3Family::load_default();
    return f;
}

std::filesystem::path fresh_file(const std::string& name)
{
    auto p = std::filesystem::temp_directory_path() / name;
    std::filesystem::remove(p);
    return p;
}

std::vector<std::string> names(std::initializer_list<const char*> list) { return {list.begin(), list.end()}; }

} // namespace

TEST_CASE("half-up rounding to hundredths")
{
    CHECK(percent_half_up(1, 1) == 100);
    CHECK(percent_half_up(18, 21) == 86);
    CHECK(percent_half_up(1, 8) == 13);   // 0.125 rounds up
    CHECK(percent_half_up(1, 200) == 1);  // 0.005 rounds up
    CHECK(percent_half_up(0, 5) == 0);
    CHECK(format_proportion(18, 21) == "0.86");
    CHECK(format_proportion(1, 1) == "1.00");
    CHECK(format_proportion(1, 20) == "0.05");
}

TEST_CASE("survey rows for 1 to 8 vertices")
{
    for (int n = 1; n <= 4; ++n) {
        const auto r = survey_connected(n);
        CHECK(r.zsap0 == r.total);
        CHECK(r.zsapl0 == r.total);
        CHECK(r.zsapp0 == r.total);
    }
    struct Row {
        int n, total, z, zl, zp;
    };
    // counts frozen from the enumeration; the proportions match the published table
    for (const Row& e : {Row{5, 21, 18, 20, 20}, Row{6, 112, 88, 103, 103}, Row{7, 853, 628, 756, 757},
                         Row{8, 11117, 8164, 9753, 9784}}) {
        CAPTURE(e.n);
        const auto r = survey_connected(e.n);
        CHECK(r.total == e.total);
        CHECK(r.zsap0 == e.z);
        CHECK(r.zsapl0 == e.zl);
        CHECK(r.zsapp0 == e.zp);
    }
    const auto eight = survey_connected(8);
    CHECK(format_proportion(eight.zsap0, eight.total) == "0.73");
    CHECK(format_proportion(eight.zsapl0, eight.total) == "0.88");
    CHECK(format_proportion(eight.zsapp0, eight.total) == "0.88");
}

TEST_CASE("survey results do not depend on the worker count")
{
    const auto one = survey_connected(7, 1);
    const auto four = survey_connected(7, 4);
    CHECK(one.zsap0 == four.zsap0);
    CHECK(one.zsapl0 == four.zsapl0);
    CHECK(one.zsapp0 == four.zsapp0);
}

TEST_CASE("corpus surveys and CSV rows")
{
    std::vector<Graph> corpus;
    for (int n = 3; n <= 5; ++n)
        for (const auto& g : connected_graphs(n)) corpus.push_back(g);
    const auto rows = survey_corpus(corpus, 2);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].n == 3);
    CHECK(rows[2].total == 21);
    CHECK(survey_csv_header() == "n,total,zsap0,zsapl0,zsapp0,p_zsap0,p_zsapl0,p_zsapp0");
    const auto line = survey_csv_line(rows[2]);
    CHECK(line == "5,21,18,20,20,0.86,0.95,0.95");
    // proportions are re-derivable from the stored counts
    std::istringstream in(line);
    std::vector<std::string> cells;
    for (std::string cell; std::getline(in, cell, ',');) cells.push_back(cell);
    REQUIRE(cells.size() == 8);
    const int total = std::stoi(cells[1]);
    for (int c = 2; c <= 4; ++c) {
        const int count = std::stoi(cells[c]);
        CHECK(count <= total);
        CHECK(format_proportion(count, total) == cells[c + 3]);
    }
}

TEST_CASE("xi verification summaries")
{
    const auto v = verify_xi_connected(5, family());
    CHECK(v.graphs == 21);
    CHECK(v.exceptions.empty());
    int counted = 0;
    for (const auto& [name, count] : v.case_counts) counted += count;
    CHECK(counted == 21);
}

TEST_CASE("parameter reports")
{
    ReportOptions options;
    options.family = &family();
    const auto p4 = compute_report(families::path(4), all_report_names(), options);
    CHECK(p4.params.at("Z") == 1);
    CHECK(p4.params.at("FloorZ") == 1);
    CHECK(p4.params.at("Zsap") == 0);
    CHECK(p4.params.at("Zvc") == 0);
    CHECK(p4.params.at("xi") == 1);
    CHECK(p4.refused.empty());
    CHECK(validate_report(p4).empty());

    const auto star = compute_report(families::star(4), names({"Zsap"}), options);
    CHECK(star.params.at("Zsap") == 2);
    CHECK(star.params.size() == 1);

    const auto pet = compute_report(families::petersen(), names({"zsap_zero", "Z", "xi"}), options);
    CHECK(pet.flags.at("zsap_zero"));
    CHECK(pet.params.at("Z") == 5);
    CHECK(pet.params.count("xi") == 0);
    CHECK(pet.refused.count("xi") == 1);

    CHECK_THROWS_AS(compute_report(families::path(3), names({"nonsense"}), options), DomainError);
    CHECK_THROWS_AS(compute_report(families::path(3), names({"xi"}), ReportOptions{}), ConfigError);
}

TEST_CASE("reports are keyed by the canonical form")
{
    ReportOptions options;
    options.family = &family();
    std::mt19937_64 rng(51);
    for (const auto& g : connected_graphs(6)) {
        if (rng() % 10 != 0) continue;
        std::vector<Vertex> perm(6);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        const auto a = compute_report(g, all_report_names(), options);
        const auto b = compute_report(relabel(g, perm), all_report_names(), options);
        CHECK(report_json(a) == report_json(b));
    }
}

TEST_CASE("the validator reports broken chains")
{
    ParameterReport r;
    r.params = {{"Z", 2}, {"Zl", 3}, {"Zplus", 1}, {"Zsap", 0}, {"Zsapl", 1}, {"xi", 3}, {"FloorZ", 2}};
    const auto v = validate_report(r);
    CHECK(v.size() >= 3);
    ParameterReport fine;
    fine.params = {{"Z", 3}, {"Zl", 2}, {"Zplus", 2}, {"M_small", 3}, {"Zvc", 1}, {"xi", 2}, {"FloorZ", 3}};
    CHECK(validate_report(fine).empty());
    fine.params["Zvc"] = 0;
    CHECK(validate_report(fine).size() == 1);
}

TEST_CASE("warm-cache reports are byte-identical")
{
    const auto path = fresh_file("sapzf_cache_test.jsonl");
    std::string cold, warm;
    {
        ResultCache cache(path);
        ReportOptions options{&family(), &cache};
        for (const auto& g : connected_graphs(5)) cold += report_json(compute_report(g, all_report_names(), options)) + "\n";
        CHECK(cache.size() > 0);
    }
    const auto size_after_cold = std::filesystem::file_size(path);
    {
        ResultCache cache(path);
        ReportOptions options{&family(), &cache};
        for (const auto& g : connected_graphs(5)) warm += report_json(compute_report(g, all_report_names(), options)) + "\n";
    }
    CHECK(cold == warm);
    // nothing new was appended on the warm run
    CHECK(std::filesystem::file_size(path) == size_after_cold);
}

TEST_CASE("cache records and versions")
{
    const auto path = fresh_file("sapzf_cache_records.jsonl");
    {
        ResultCache cache(path);
        cache.put_int("CL", "Z", 1);
        cache.put_bool("CL", "zsap_zero", true);
        CHECK(cache.get_int("CL", "Z") == 1);
    }
    {
        std::ofstream(path, std::ios::app) << R"({"v":"sapzf-0","g6":"CL","param":"Zl","value":7})" << "\n";
    }
    ResultCache reloaded(path);
    CHECK(reloaded.get_int("CL", "Z") == 1);
    CHECK(reloaded.get_bool("CL", "zsap_zero") == true);
    CHECK_FALSE(reloaded.get_int("CL", "Zl").has_value());
    CHECK_FALSE(reloaded.get_int("C~", "Z").has_value());

    const auto bad = fresh_file("sapzf_cache_bad.jsonl");
    std::ofstream(bad) << R"({"v":"sapzf-1","g6":"CL","param":"Z","value":1})" << "\nnot json\n";
    try {
        ResultCache broken(bad);
        FAIL("malformed cache accepted");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 2);
    }
}

TEST_CASE("concurrent cache writers keep every record")
{
    const auto path = fresh_file("sapzf_cache_threads.jsonl");
    {
        ResultCache cache(path);
        std::vector<std::thread> workers;
        for (int w = 0; w < 4; ++w)
            workers.emplace_back([&cache, w] {
                for (int i = 0; i < 50; ++i) cache.put_int("g" + std::to_string(w) + "_" + std::to_string(i), "Z", i);
            });
        for (auto& t : workers) t.join();
        CHECK(cache.size() == 200);
    }
    ResultCache reloaded(path);
    CHECK(reloaded.size() == 200);
    CHECK(reloaded.get_int("g3_49", "Z") == 49);
}

TEST_CASE("report text and JSON renderings")
{
    ReportOptions options;
    options.family = &family();
    const auto r = compute_report(families::path(4), names({"Z", "zsap_zero"}), options);
    CHECK(report_text(r) == "graph6=" + r.graph6 + "\nZ=1\nzsap_zero=true\n");
    const auto j = nlohmann::json::parse(report_json(r));
    CHECK(j.at("params").at("Z") == 1);
    CHECK(j.at("flags").at("zsap_zero") == true);
}
