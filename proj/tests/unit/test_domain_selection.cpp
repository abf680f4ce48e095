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

#include <cmath>
#include <numbers>
#include <random>

#include "../support/oracles.hpp"
#include "isingpds/baselines.hpp"
#include "isingpds/domain_selection.hpp"
#include "isingpds/errors.hpp"
#include "isingpds/generators.hpp"

using namespace isingpds;
using std::numbers::pi;

namespace {
const IsingModel kOne(1, {}, {1});
}

TEST_CASE("penalty rules") {
    CHECK(auto_mu(IsingModel(2, {{0, 1, 0.5}}, {0, 0})) == doctest::Approx(0.5005));
    CHECK(auto_mu(IsingModel(3, {}, {1, 2, 3})) == 1.0);
    CHECK(auto_mu(sk_ising(100, 3)) == doctest::Approx(1.001 * 49.5));

    const auto sk = sk_ising(100, 3);
    DomainConfig c;
    CHECK(resolve_mu(sk, c) == doctest::Approx(0.01 * 0.5 * std::sqrt(99.0)));
    c.mu_rule = MuRule::kDominant;
    CHECK(resolve_mu(sk, c) == auto_mu(sk));
    c.mu = 2.5;
    CHECK(resolve_mu(sk, c) == 2.5);
    c.mu = -1.0;
    CHECK_THROWS_AS(c.validate(), ContractViolation);
}

TEST_CASE("domain signs") {
    CHECK(domain_signs(std::vector<double>{pi / 2, -pi / 2}) == SpinConfiguration{1, -1});
    CHECK(domain_signs(std::vector<double>{0, 0, 0}) == SpinConfiguration::uniform(3));
    CHECK(domain_signs(std::vector<double>{3 * pi / 4, -0.1, pi}) == SpinConfiguration{1, -1, 1});
}

TEST_CASE("loss") {
    CHECK(relaxed_loss(kOne, 2.0, std::vector<double>{pi / 2}) == doctest::Approx(-1.0));
    CHECK(relaxed_loss(kOne, 2.0, std::vector<double>{0.0}) == 0.0);
    CHECK_THROWS_AS(relaxed_loss(kOne, 0.0, std::vector<double>{0.0}), ContractViolation);
    CHECK_THROWS_AS(relaxed_loss(kOne, 1.0, std::vector<double>{0.0, 1.0}), ContractViolation);

    std::mt19937_64 rng(4);
    for (int t = 0; t < 20; ++t) {
        const auto m = oracle::random_model(rng, 8, 0.5, t % 3).with_offset(3.0);
        std::vector<double> theta(8);
        for (auto& x : theta) x = (rng() & 1u) ? pi / 2 : -pi / 2;
        const auto s = domain_signs(theta);
        std::vector<int> sv(s.values().begin(), s.values().end());
        const double mu = 0.7;
        CHECK(relaxed_loss(m, mu, theta) ==
              doctest::Approx(oracle::dense_energy(m, sv) - m.offset() - mu * 8).epsilon(1e-12));
    }
}

TEST_CASE("gradient") {
    CHECK(relaxed_gradient(kOne, 2.0, std::vector<double>{0.0})[0] == doctest::Approx(-1.0));
    CHECK(relaxed_gradient(kOne, 2.0, std::vector<double>{pi / 2})[0] == doctest::Approx(0.0));

    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> angle(-pi, pi);
    for (int t = 0; t < 20; ++t) {
        const auto m = oracle::random_model(rng, 10, 0.4, t % 3);
        std::vector<double> theta(10);
        for (auto& x : theta) {
            do x = angle(rng);
            while (std::abs(std::sin(x)) <= 0.1);
        }
        const auto grad = relaxed_gradient(m, 1.3, theta);
        for (std::size_t j = 0; j < 10; ++j) {
            auto plus = theta, minus = theta;
            plus[j] += 1e-6;
            minus[j] -= 1e-6;
            const double fd = (relaxed_loss(m, 1.3, plus) - relaxed_loss(m, 1.3, minus)) / 2e-6;
            CHECK(std::abs(fd - grad[j]) <= 1e-4);
        }
    }
}

TEST_CASE("adam step") {
    DomainConfig c;
    DomainState zero({0.5, -0.5});
    adam_step(zero, std::vector<double>{0.0, 0.0}, c);
    CHECK(zero.theta == std::vector<double>{0.5, -0.5});
    CHECK(zero.iteration == 1);

    DomainState first({0.0});
    adam_step(first, std::vector<double>{1.0}, c);
    CHECK(first.theta[0] == doctest::Approx(-6.0 / (1.0 + 1e-8)));

    CHECK_THROWS_AS(adam_step(first, std::vector<double>{1.0, 2.0}, c), ContractViolation);

    c.learning_rate = 0.1;
    DomainState s({0.3});
    const double before = relaxed_loss(kOne, 2.0, s.theta);
    for (int i = 0; i < 2; ++i) adam_step(s, relaxed_gradient(kOne, 2.0, s.theta), c);
    CHECK(relaxed_loss(kOne, 2.0, s.theta) < before);
}

TEST_CASE("convergence test") {
    DomainConfig c;
    CHECK(converged(std::vector<double>{-1, -5, -5, -5, -5, -5}, c));
    CHECK_FALSE(converged(std::vector<double>{-1, -2}, c));
    CHECK_FALSE(converged(std::vector<double>{0.0, -0.9, -1.0, -0.95, -0.92, -0.9}, c));
    CHECK(converged(std::vector<double>{0.0, -1000.0, -1000.1, -1000.05, -1000.2, -1000.1}, c));
}

TEST_CASE("extract") {
    CHECK(extract(kOne, 2.0, std::vector<double>{-pi / 2}) == SpinConfiguration{-1});

    std::mt19937_64 rng(6);
    for (int t = 0; t < 50; ++t) {
        const auto m = oracle::random_model(rng, 12, 0.4, t % 3);
        std::vector<double> theta(12);
        for (auto& x : theta) x = std::uniform_real_distribution<double>(-pi, pi)(rng);
        const double mu = 0.5;
        const auto c1 = domain_signs(theta);
        CHECK(energy(m, extract(m, mu, theta)) <= energy(m, c1));

        // A local optimum with the dominant penalty is a fixed point.
        const auto local = steepest_descent(m, c1).s;
        std::vector<double> vertex(12);
        for (std::size_t j = 0; j < 12; ++j) vertex[j] = local[j] * pi / 2;
        CHECK(extract(m, auto_mu(m), vertex) == local);
    }
}

TEST_CASE("initial angles are seeded and in range") {
    const auto a = initial_angles(9, 2, 50);
    CHECK(a == initial_angles(9, 2, 50));
    CHECK(a != initial_angles(9, 3, 50));
    CHECK(a != initial_angles(10, 2, 50));
    for (double x : a) CHECK((x >= -pi && x < pi));
}

TEST_CASE("run domain selection") {
    DomainConfig c;
    const auto empty = run_domain_selection(IsingModel(0, {}, {}, 1.5), c);
    CHECK(empty.best_s.empty());
    CHECK(empty.best_energy == 1.5);

    const auto m = sk_ising(40, 8);
    c.seed = 3;
    const auto r = run_domain_selection(m, c);
    CHECK(r.iterations_per_restart.size() == 5);
    CHECK(r.restart_energies.size() == 5);
    CHECK(r.best_energy == doctest::Approx(energy(m, r.best_s)));
    CHECK(r.best_energy == *std::min_element(r.restart_energies.begin(), r.restart_energies.end()));
    CHECK(r.restart_energies[r.best_restart] == r.best_energy);
    for (std::size_t k = 0; k < r.best_restart; ++k) CHECK(r.restart_energies[k] > r.best_energy);
    for (std::size_t k = 0; k < 5; ++k) {
        CHECK(r.loss_histories[k].size() == r.iterations_per_restart[k] + 1);
        CHECK(r.iterations_per_restart[k] <= c.max_iterations);
    }
    const auto again = run_domain_selection(m, c);
    CHECK(again.best_s == r.best_s);
    CHECK(again.iterations_per_restart == r.iterations_per_restart);
}
