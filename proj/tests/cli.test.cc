// Copyright 2026 The netbell Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "netbell/cli.h"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "gtest/gtest.h"

using namespace netbell;
using nlohmann::json;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(const std::vector<std::string> &args) {
    std::ostringstream out;
    std::ostringstream err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string read_file(const std::string &path) {
    std::ifstream f(path);
    std::stringstream s;
    s << f.rdbuf();
    return s.str();
}

/// Structural equality with a relative-or-absolute numeric tolerance.
void expect_json_near(const json &expected, const json &actual, const std::string &path) {
    if (expected.is_number() && actual.is_number()) {
        double a = expected.get<double>();
        double b = actual.get<double>();
        EXPECT_NEAR(a, b, 1e-9 * std::max(1.0, std::abs(a))) << path;
        return;
    }
    ASSERT_EQ(expected.type(), actual.type()) << path;
    if (expected.is_object()) {
        ASSERT_EQ(expected.size(), actual.size()) << path;
        for (auto it = expected.begin(); it != expected.end(); ++it) {
            ASSERT_TRUE(actual.contains(it.key())) << path << "/" << it.key();
            if (path.empty() && it.key() == "tool") {
                continue;
            }
            expect_json_near(it.value(), actual[it.key()], path + "/" + it.key());
        }
    } else if (expected.is_array()) {
        ASSERT_EQ(expected.size(), actual.size()) << path;
        for (std::size_t i = 0; i < expected.size(); i++) {
            expect_json_near(expected[i], actual[i], path + "/" + std::to_string(i));
        }
    } else {
        EXPECT_EQ(expected, actual) << path;
    }
}

void check_golden(const std::string &name, const std::vector<std::string> &args) {
    CliRun r = run(args);
    ASSERT_EQ(r.code, 0) << r.err;
    json expected = json::parse(read_file(std::string(NETBELL_TEST_DATA_DIR) + "/golden/" + name + ".json"));
    expect_json_near(expected, json::parse(r.out), "");
}

}  // namespace

TEST(cli, list) {
    CliRun r = run({"list"});
    ASSERT_EQ(r.code, 0);
    json j = json::parse(r.out);
    std::set<std::string> names;
    for (const auto &s : j.at("scenarios")) {
        names.insert(s.at("name").get<std::string>());
        ASSERT_FALSE(s.at("tag").get<std::string>().empty());
    }
    ASSERT_TRUE(names.count("star"));
    ASSERT_TRUE(names.count("ghz-a"));
    ASSERT_TRUE(names.count("ghz-b"));
    for (const auto &s : j.at("scenarios")) {
        if (s.at("name") == "star") {
            bool has_k = false;
            for (const auto &p : s.at("parameters")) {
                has_k = has_k || p.at("name") == "k";
            }
            ASSERT_TRUE(has_k);
        }
    }
}

TEST(cli, usage_errors) {
    ASSERT_EQ(run({"simulate", "--scenario", "star", "--rounds", "0"}).code, 2);
    ASSERT_EQ(run({"simulate", "--scenario", "star"}).code, 2);
    ASSERT_EQ(run({"evaluate", "--scenario", "nope"}).code, 2);
    ASSERT_EQ(run({"evaluate", "--family", "third"}).code, 2);
    ASSERT_EQ(run({"evaluate", "--scenario", "star", "--k", "1"}).code, 2);
    ASSERT_EQ(run({"evaluate", "--angles", "0"}).code, 2);
    ASSERT_EQ(run({"evaluate", "--tolerance", "-1"}).code, 2);
    ASSERT_EQ(run({"evaluate", "--state", "smolin", "--scenario", "star", "--k", "3"}).code, 2);
    ASSERT_EQ(run({"frobnicate"}).code, 2);
    ASSERT_EQ(run({}).code, 2);
}

TEST(cli, certify_reports) {
    CliRun r = run({"certify", "--scenario", "star", "--k", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    json j = json::parse(r.out);
    ASSERT_EQ(j.at("verdict"), "PASS");
    ASSERT_EQ(j.at("vertex_count"), 8);
    ASSERT_EQ(j.at("bound"), 1.0);

    j = json::parse(run({"certify", "--scenario", "star-nonlinear", "--k", "3", "--r-num", "1", "--r-den", "3"}).out);
    ASSERT_EQ(j.at("verdict"), "PASS");
    ASSERT_NEAR(j.at("bound").get<double>(), 4, 1e-9);

    j = json::parse(run({"certify", "--scenario", "ghz-a", "--family", "combined"}).out);
    ASSERT_EQ(j.at("verdict"), "PASS");
    ASSERT_EQ(j.at("bound"), 2.0);
}

TEST(cli, optimize_and_evaluate) {
    json j = json::parse(run({"optimize", "--scenario", "star", "--k", "3", "--family", "combined"}).out);
    ASSERT_NEAR(j.at("value").get<double>(), 4 * std::sqrt(2.0), 1e-9);
    ASSERT_NEAR(j.at("violation_ratio").get<double>(), 2 * std::sqrt(2.0), 1e-9);
    ASSERT_EQ(j.at("verdict"), "PASS");

    j = json::parse(run({"optimize", "--scenario", "chsh"}).out);
    ASSERT_NEAR(j.at("value").get<double>(), 2 * std::sqrt(2.0), 1e-9);
    ASSERT_NEAR(j.at("violation_ratio").get<double>(), std::sqrt(2.0), 1e-9);

    CliRun smolin_run = run({"evaluate", "--scenario", "two-source", "--family", "combined", "--state", "smolin"});
    ASSERT_EQ(smolin_run.code, 1);  // no violation: the claimed maximum is not reached
    j = json::parse(smolin_run.out);
    ASSERT_NEAR(j.at("value").get<double>(), 2, 1e-12);
    ASSERT_NEAR(j.at("violation_ratio").get<double>(), 1, 1e-12);
    ASSERT_FALSE(j.at("violates_classical_bound").get<bool>());
}

TEST(cli, simulate_deterministic) {
    std::vector<std::string> args{"simulate", "--scenario", "star", "--k", "2", "--rounds", "20000", "--seed", "5"};
    CliRun a = run(args);
    CliRun b = run(args);
    ASSERT_EQ(a.code, 0) << a.err;
    ASSERT_EQ(a.out, b.out);
    json j = json::parse(a.out);
    ASSERT_EQ(j.at("estimate").at("rounds"), 20000);
    ASSERT_EQ(j.at("config").at("seed"), 5);
}

TEST(cli, simulate_csv_and_out) {
    auto dir = std::filesystem::temp_directory_path() / "netbell_cli_test";
    std::filesystem::create_directories(dir);
    std::string csv_path = (dir / "rounds.csv").string();
    CliRun r = run({"simulate", "--scenario", "chsh", "--rounds", "5", "--format", "csv", "--out", csv_path});
    ASSERT_EQ(r.code == 0 || r.code == 1, true) << r.err;
    std::string csv = read_file(csv_path);
    ASSERT_EQ(csv.rfind("round,party,input,outcome\n", 0), 0u);
    ASSERT_NO_THROW(json::parse(r.out));

    std::string json_path = (dir / "report.json").string();
    r = run({"certify", "--scenario", "chsh", "--out", json_path});
    ASSERT_EQ(r.code, 0);
    ASSERT_TRUE(r.out.empty());
    ASSERT_EQ(json::parse(read_file(json_path)).at("verdict"), "PASS");
    std::filesystem::remove_all(dir);
}

TEST(cli, config_file) {
    auto dir = std::filesystem::temp_directory_path() / "netbell_cli_config";
    std::filesystem::create_directories(dir);
    std::string path = (dir / "run.json").string();
    {
        std::ofstream f(path);
        f << R"({"scenario": "star", "k": 3, "family": "first"})";
    }
    json j = json::parse(run({"optimize", "--config", path}).out);
    ASSERT_NEAR(j.at("value").get<double>(), std::sqrt(8.0), 1e-9);
    j = json::parse(run({"optimize", "--config", path, "--k", "2"}).out);
    ASSERT_NEAR(j.at("value").get<double>(), 2, 1e-9);
    {
        std::ofstream f(path);
        f << R"({"scenario": "star", "colour": "blue"})";
    }
    ASSERT_EQ(run({"optimize", "--config", path}).code, 2);
    ASSERT_EQ(run({"optimize", "--config", (dir / "missing.json").string()}).code, 2);
    std::filesystem::remove_all(dir);

    RunConfig cfg;
    cfg.scenario = "nkm";
    cfg.angles = {0.3, 0.4};
    RunConfig back = run_config_from_json(to_json(cfg));
    ASSERT_EQ(to_json(back), to_json(cfg));
}

TEST(cli, reports_embed_config_and_tool) {
    json j = json::parse(run({"evaluate", "--scenario", "ghz-b", "--angles", "pi/4"}).out);
    ASSERT_EQ(j.at("tool").at("name"), "netbell");
    ASSERT_EQ(j.at("tag"), "ghz/b");
    ASSERT_EQ(j.at("config").at("scenario"), "ghz-b");
    ASSERT_NEAR(j.at("value").get<double>(), 2 * std::sqrt(2.0), 1e-12);
}

TEST(cli, golden_reports) {
    check_golden("certify_chsh", {"certify", "--scenario", "chsh"});
    check_golden("optimize_star3_combined", {"optimize", "--scenario", "star", "--k", "3", "--family", "combined"});
    check_golden("simulate_ghz_b", {"simulate", "--scenario", "ghz-b", "--rounds", "4000", "--seed", "11"});
}
