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

#include <random>

#include "../support/oracles.hpp"
#include "isingpds/baselines.hpp"
#include "isingpds/errors.hpp"
#include "isingpds/generators.hpp"

using namespace isingpds;

TEST_CASE("brute force") {
    const IsingModel pair(2, {{0, 1, 0.5}}, {0, 0});
    const auto r = brute_force(pair);
    CHECK(r.energy == doctest::Approx(-1.0));
    CHECK(r.s == SpinConfiguration{-1, 1});
    const auto one = brute_force(IsingModel(1, {}, {-3}));
    CHECK(one.s == SpinConfiguration{1});
    CHECK(one.energy == doctest::Approx(-3.0));
    CHECK(brute_force_max(pair).energy == doctest::Approx(1.0));
    CHECK_THROWS_AS(brute_force(sk_ising(25, 1)), TooLarge);

    std::mt19937_64 rng(21);
    for (int t = 0; t < 40; ++t) {
        const auto m = t % 2 ? sk_ising(3 + t % 9, t) : oracle::random_model(rng, 3 + t % 9, 0.5, t % 3);
        CHECK(brute_force(m).energy == doctest::Approx(oracle::enumerate_min(m)).epsilon(1e-12).scale(1.0));
        CHECK(energy(m, brute_force(m).s) == doctest::Approx(brute_force(m).energy));
    }
}

TEST_CASE("steepest descent") {
    const IsingModel pair(2, {{0, 1, 0.5}}, {0, 0});
    CHECK(steepest_descent(pair, {1, 1}).s == SpinConfiguration{-1, 1});

    std::mt19937_64 rng(22);
    for (int t = 0; t < 30; ++t) {
        const auto m = oracle::random_model(rng, 10, 0.4, t % 3);
        const auto best = brute_force(m);
        CHECK(steepest_descent(m, best.s).s == best.s);
        const auto r = steepest_descent(m, oracle::config_of(oracle::random_spins(rng, 10)));
        CHECK(r.energy == doctest::Approx(energy(m, r.s)));
        for (std::size_t i = 0; i < 10; ++i) {
            CHECK(flip_delta(m, r.s, FlipSet({i}, 10)) >= -1e-9);
        }
    }
}

TEST_CASE("simulated annealing") {
    const auto m = sk_ising(12, 5);
    const auto start = SpinConfiguration::uniform(12);

    AnnealSchedule none = default_schedule(m);
    none.sweeps = 0;
    CHECK(simulated_annealing(m, none, 1, start).s == start);

    AnnealSchedule hot{50.0, 50.0, 3, 0};
    CHECK(simulated_annealing(m, hot, 2, start).energy <= energy(m, start));

    AnnealSchedule bad{1.0, 2.0, 1, 0};
    CHECK_THROWS_AS(bad.validate(), ContractViolation);

    const auto a = simulated_annealing(m, default_schedule(m), 7);
    const auto b = simulated_annealing(m, default_schedule(m), 7);
    CHECK(a.s == b.s);
    CHECK(a.energy == doctest::Approx(energy(m, a.s)));

    int hits = 0;
    for (int t = 0; t < 100; ++t) {
        const auto inst = sk_ising(12, 100 + t);
        AnnealSchedule sched = default_schedule(inst);
        sched.sweeps = 1000;
        hits += simulated_annealing(inst, sched, t).energy <= brute_force(inst).energy + 1e-9;
    }
    CHECK(hits >= 90);
}
