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

#pragma once

#include <cstddef>
#include <optional>

#include "isingpds/model.hpp"

namespace isingpds {

/// Norm-based estimate of the extreme energy, sqrt(d) * ||J||_F + ||h||_1.
double energy_scale(const IsingModel& model);

/// Approximate Hamiltonian ratio 1/2 - E / (2 * energy_scale(model)).
/// Throws MetricUndefined when J and h are both zero.
double chi_hat(const IsingModel& model, double energy_value);

/// Exact ratio (E_max - E) / (E_max - E_min); requires E_max > E_min.
double hamiltonian_ratio(double energy_value, double e_min, double e_max);

/// Estimated time to solution T * ln(0.01) / ln(1 - e^chi / d).
/// Throws MetricUndefined unless T > 0 and e^chi / d < 1.
double time_to_solution(double wall_time_s, double chi_hat_value, std::size_t d);

/// chi / T. Throws MetricUndefined for T <= 0.
double solution_speed(double chi_hat_value, double wall_time_s);

/// First-round pruning-rate estimate for a k-regular model with
/// J-hat ~ U(-alpha, alpha) and h-hat ~ U(-beta, beta): the probability that
/// a U(0, beta) draw exceeds N(k alpha / 2, k alpha^2 / 12), integrated
/// numerically to 1e-8.
double estimate_eta1(double k, double alpha, double beta);

struct MetricReport {
    double chi_hat = 0.0;
    std::optional<double> tts;
    std::optional<double> speed;
    double e_hat = 0.0;
    double e_max_hat = 0.0;
    std::size_t d = 0;
};

/// All metrics for one solution. tts / speed are left empty where undefined.
MetricReport evaluate_metrics(const IsingModel& model, double energy_value, double wall_time_s);

}  // namespace isingpds
