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
#include <random>

#include "isingpds/errors.hpp"
#include "isingpds/generators.hpp"
#include "isingpds/metrics.hpp"
#include "isingpds/pruning.hpp"

using namespace isingpds;

namespace {
double phi_pdf(double z) { return std::exp(-0.5 * z * z) / std::sqrt(2 * M_PI); }
double phi_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

// P(U(0, beta) > N(m, s^2)) = (1/beta) * int_0^beta Phi((x - m)/s) dx, closed form
// via int Phi(z) dz = z Phi(z) + phi(z).
double eta1_closed_form(double k, double alpha, double beta) {
    const double m = k * alpha / 2;
    const double s = std::sqrt(k * alpha * alpha / 12);
    auto F = [&](double z) { return z * phi_cdf(z) + phi_pdf(z); };
    return s / beta * (F((beta - m) / s) - F(-m / s));
}
}  // namespace

TEST_CASE("chi hat") {
    const IsingModel one(1, {}, {2});
    CHECK(chi_hat(one, -2.0) == doctest::Approx(1.0));
    CHECK(chi_hat(one, 2.0) == doctest::Approx(0.0));
    CHECK(chi_hat(sk_ising(30, 1), 0.0) == 0.5);
    CHECK_THROWS_AS(chi_hat(IsingModel(2, {}, {0, 0}), -1.0), MetricUndefined);

    const auto m = sk_ising(30, 2);
    CHECK(energy_scale(m) == doctest::Approx(std::sqrt(30.0) * frobenius_norm(m)));
    CHECK(chi_hat(m, -10.0) > chi_hat(m, -5.0));
    CHECK(chi_hat(m, -10.0) - chi_hat(m, -5.0) == doctest::Approx(chi_hat(m, -5.0) - chi_hat(m, 0.0)));
    CHECK(hamiltonian_ratio(-3.0, -3.0, 5.0) == 1.0);
    CHECK(hamiltonian_ratio(5.0, -3.0, 5.0) == 0.0);
    CHECK_THROWS_AS(hamiltonian_ratio(0.0, 1.0, 1.0), MetricUndefined);
}

TEST_CASE("time to solution and speed") {
    CHECK(time_to_solution(1.0, 0.0, 100) == doctest::Approx(std::log(0.01) / std::log(0.99)));
    CHECK(time_to_solution(1.0, 0.0, 100) == doctest::Approx(458.21).epsilon(1e-4));
    CHECK(time_to_solution(2.0, 0.0, 100) == doctest::Approx(2 * time_to_solution(1.0, 0.0, 100)));
    CHECK(time_to_solution(0.196, 1.169, 1000) == doctest::Approx(280.0).epsilon(0.01));
    CHECK(time_to_solution(1.0, 0.5, 100) > time_to_solution(0.5, 0.5, 100));
    CHECK(time_to_solution(1.0, 0.6, 100) < time_to_solution(1.0, 0.5, 100));
    CHECK_THROWS_AS(time_to_solution(0.0, 0.5, 100), MetricUndefined);
    CHECK_THROWS_AS(time_to_solution(1.0, 5.0, 2), MetricUndefined);

    CHECK(solution_speed(1.169, 0.196) == doctest::Approx(5.964).epsilon(1e-3));
    CHECK(solution_speed(0.0, 1.0) == 0.0);
    CHECK(solution_speed(1.0, 0.5) == 2.0);
    CHECK_THROWS_AS(solution_speed(1.0, 0.0), MetricUndefined);

    const auto r = evaluate_metrics(IsingModel(1, {}, {2}), -2.0, 0.0);
    CHECK(r.chi_hat == doctest::Approx(1.0));
    CHECK_FALSE(r.tts.has_value());
    CHECK_FALSE(r.speed.has_value());
}

TEST_CASE("eta1 estimate") {
    CHECK(estimate_eta1(6, 1, 6) == doctest::Approx(0.5).epsilon(1e-4));
    CHECK(estimate_eta1(20, 1, 1e-3) < 1e-9);
    CHECK(estimate_eta1(6, 1, 1e-3) == doctest::Approx(phi_cdf(-std::sqrt(18.0))).epsilon(1e-3));
    for (double k : {3.0, 6.0, 10.0})
        for (double a : {0.2, 1.0, 3.0})
            for (double b : {0.5, 2.0, 6.0, 20.0})
                CHECK(estimate_eta1(k, a, b) == doctest::Approx(eta1_closed_form(k, a, b)).epsilon(1e-7).scale(1.0));
    double prev = -1;
    for (double b = 0.5; b < 30; b += 0.5) {
        const double e = estimate_eta1(6, 1, b);
        CHECK(e >= prev);
        CHECK((e >= 0.0 && e <= 1.0));
        prev = e;
    }
    prev = 2;
    for (double a = 0.1; a < 5; a += 0.1) {
        const double e = estimate_eta1(6, a, 6);
        CHECK(e <= prev);
        prev = e;
    }
}

TEST_CASE("eta1 estimate matches the first pruning round") {
    double fraction = 0;
    for (std::size_t i = 0; i < 100; ++i) {
        const auto m = generate(regular_ensemble_spec(RegularEnsemble::kUniform, 1000, member_seed(99, i)));
        fraction += classify(m).determined.size() / 1000.0;
    }
    CHECK(std::abs(fraction / 100 - estimate_eta1(6, 1, 6)) <= 0.05);
}
