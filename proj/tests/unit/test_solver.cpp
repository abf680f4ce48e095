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

#include "isingpds/baselines.hpp"
#include "isingpds/generators.hpp"
#include "isingpds/io.hpp"
#include "isingpds/solver.hpp"

using namespace isingpds;

TEST_CASE("fully pruned chain") {
    const IsingModel a(2, {{0, 1, 0.5}}, {3, 0});
    const auto r = solve(a, SolveConfig{});
    CHECK(r.s == SpinConfiguration{-1, 1});
    CHECK(r.energy == doctest::Approx(-4.0));
    CHECK(r.eta == 1.0);
    CHECK(r.reduced_d == 0);
    CHECK(r.iterations == 0);
}

TEST_CASE("solve is deterministic and consistent") {
    const auto m = generate(regular_ensemble_spec(RegularEnsemble::kGaussian, 300, 5));
    SolveConfig c;
    c.domain.seed = 4;
    const auto a = solve(m, c);
    const auto b = solve(m, c);
    CHECK(a.s == b.s);
    CHECK(result_to_json(a, false) == result_to_json(b, false));
    CHECK(a.energy == doctest::Approx(energy(m, a.s)));
    REQUIRE(a.chi_hat.has_value());
    CHECK(*a.chi_hat > 0.5);

    c.enable_pruning = false;
    const auto raw = solve(m, c);
    CHECK(raw.eta == 0.0);
    CHECK(raw.reduced_d == 300);
}

TEST_CASE("small instances reach the optimum often") {
    int hits = 0;
    for (int t = 0; t < 30; ++t) {
        const auto m = sk_ising(10, 200 + t);
        SolveConfig c;
        c.domain.seed = t;
        c.domain.restarts = 20;
        hits += solve(m, c).energy <= brute_force(m).energy + 1e-9;
    }
    CHECK(hits >= 15);
}

TEST_CASE("batch solving") {
    SolveConfig c;
    CHECK(solve_many({}, c).empty());

    const auto m = sk_ising(30, 1);
    const std::vector<IsingModel> same(3, m);
    const auto slots = solve_many(same, c, 2);
    REQUIRE(slots.size() == 3);
    for (const auto& s : slots) CHECK(s.result->s == slots[0].result->s);

    std::vector<IsingModel> ensemble;
    for (std::size_t i = 0; i < 20; ++i) {
        ensemble.push_back(generate(regular_ensemble_spec(RegularEnsemble::kUniform, 200, member_seed(2, i))));
    }
    const auto batch = solve_many(ensemble, c, 3);
    for (std::size_t i = 0; i < 20; ++i) {
        REQUIRE(batch[i].result.has_value());
        CHECK(batch[i].result->s == solve(ensemble[i], c).s);
    }

    SolveConfig broken = c;
    broken.domain.restarts = 0;
    const auto failed = solve_many(same, broken, 1);
    for (const auto& s : failed) {
        CHECK_FALSE(s.result.has_value());
        CHECK_FALSE(s.error.empty());
    }
}
