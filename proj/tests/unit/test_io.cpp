// Copyright 2026 The isingpds Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "../support/oracles.hpp"
#include "isingpds/errors.hpp"
#include "isingpds/generators.hpp"
#include "isingpds/io.hpp"

using namespace isingpds;
using nlohmann::json;

namespace {
std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("isingpds_test_" + name);
}
IsingModel parse_text(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}
}  // namespace

TEST_CASE("json instances") {
    const auto doc = json::parse(
            R"({"format":"ising-v1","d":2,"convention":"hamiltonian","couplings":[[0,1,1.0]],"fields":[0,0],"offset":0})");
    const auto m = instance_from_json(doc);
    REQUIRE(m.couplings().size() == 1);
    CHECK(m.couplings()[0].weight == 0.5);

    auto bad = doc;
    bad["couplings"] = json::array({json::array({1, 0, 1.0})});
    CHECK_THROWS_AS(instance_from_json(bad), ParseError);
    bad["couplings"] = json::array({json::array({0, 1, 1.0}), json::array({0, 1, 2.0})});
    CHECK_THROWS_AS(instance_from_json(bad), ParseError);
    bad = doc;
    bad["fields"] = json::array({0});
    CHECK_THROWS_AS(instance_from_json(bad), ParseError);
    bad = doc;
    bad["format"] = "ising-v0";
    CHECK_THROWS_AS(instance_from_json(bad), ParseError);
}

TEST_CASE("edge lists") {
    const auto m = parse_text("2 1\n0 1 1.0\n");
    CHECK(m.couplings()[0].weight == 1.0);
    const auto one = parse_text("# comment\n3 2 one-indexed\n1 2 0.5\n2 3 -1\nF 3 2.5\n");
    CHECK(one.couplings()[0] == Coupling{0, 1, 0.5});
    CHECK(one.couplings()[1] == Coupling{1, 2, -1.0});
    CHECK(one.field(2) == 2.5);

    try {
        parse_text("2 2\n0 1 1\n0 1 2\n");
        FAIL("duplicate accepted");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
    try {
        parse_text("2 1\n0 5 1\n");
        FAIL("out of range accepted");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(parse_text("2 1\n0 x 1\n"), ParseError);
    CHECK_THROWS_AS(parse_text("2 2\n0 1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_text(""), ParseError);
}

TEST_CASE("save and load round trip") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 10; ++t) {
        const auto m = oracle::random_model(rng, 20, 0.3, t % 3).with_offset(0.1 * t - 0.3);
        const auto path = temp_file("rt.json");
        save_instance(path, m);
        CHECK(load_instance(path) == m);
    }
    InstanceSpec spec;
    spec.family = Family::kNAE3SAT;
    spec.d = 30;
    spec.seed = 4;
    const auto path = temp_file("spec.json");
    save_instance(path, generate(spec), spec);
    std::ifstream in(path);
    const auto doc = json::parse(in);
    const auto back = spec_from_json(doc.at("generator"));
    CHECK(generate(back) == load_instance(path));

    std::ofstream(temp_file("el.txt")) << "3 1\n0 2 0.25\n";
    CHECK(load_instance(temp_file("el.txt")).couplings()[0] == Coupling{0, 2, 0.25});
}

TEST_CASE("csv rows") {
    ResultRecord r;
    r.instance_id = "x-1";
    r.family = "sk-ising";
    r.d = 100;
    r.seed = 18446744073709551615ULL;
    r.eta = 0.123456789012345;
    r.iterations = 77;
    r.wall_time_s = 1.0 / 3.0;
    r.energy = -1234.56789012345;
    r.chi_hat = 1.1;
    r.solver = "pds";
    const std::string row = to_csv_row(r);
    const auto back = parse_csv_row(row);
    CHECK(to_csv_row(back) == row);
    CHECK(back.seed == r.seed);
    CHECK(back.eta == doctest::Approx(r.eta).epsilon(1e-11));
    CHECK_FALSE(back.tts.has_value());
    CHECK(std::string(kResultCsvHeader).starts_with("instance_id,family,d,seed,eta"));
    r.instance_id = "a,b";
    CHECK_THROWS(to_csv_row(r));
}
