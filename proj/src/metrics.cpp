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

#include "isingpds/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "isingpds/errors.hpp"

namespace isingpds {

double energy_scale(const IsingModel& model) {
    return std::sqrt(static_cast<double>(model.size())) * frobenius_norm(model) +
           field_l1_norm(model);
}

double chi_hat(const IsingModel& model, double energy_value) {
    const double scale = energy_scale(model);
    if (!(scale > 0.0)) throw MetricUndefined("chi_hat is undefined for an all-zero model");
    return 0.5 - energy_value / (2.0 * scale);
}

double hamiltonian_ratio(double energy_value, double e_min, double e_max) {
    if (!(e_max > e_min)) throw MetricUndefined("hamiltonian ratio needs e_max > e_min");
    return (e_max - energy_value) / (e_max - e_min);
}

double time_to_solution(double wall_time_s, double chi_hat_value, std::size_t d) {
    if (!(wall_time_s > 0.0)) throw MetricUndefined("time to solution needs a positive time");
    if (d == 0) throw MetricUndefined("time to solution needs d > 0");
    const double success = std::exp(chi_hat_value) / static_cast<double>(d);
    if (!(success < 1.0)) {
        throw MetricUndefined("estimated success probability e^chi/d is not below 1");
    }
    return wall_time_s * std::log(0.01) / std::log1p(-success);
}

double solution_speed(double chi_hat_value, double wall_time_s) {
    if (!(wall_time_s > 0.0)) throw MetricUndefined("speed needs a positive time");
    return chi_hat_value / wall_time_s;
}

double estimate_eta1(double k, double alpha, double beta) {
    if (!(k >= 1.0) || !(alpha > 0.0) || !(beta > 0.0)) {
        throw ContractViolation("estimate_eta1 needs k >= 1, alpha > 0, beta > 0");
    }
    const double mean = k * alpha / 2.0;
    const double sd = alpha * std::sqrt(k / 12.0);
    auto cdf = [&](double x) { return 0.5 * std::erfc(-(x - mean) / (sd * std::numbers::sqrt2)); };
    double error = 0.0;
    const double integral = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
            cdf, 0.0, beta, 10, 1e-12, &error);
    return std::clamp(integral / beta, 0.0, 1.0);
}

MetricReport evaluate_metrics(const IsingModel& model, double energy_value, double wall_time_s) {
    MetricReport report;
    report.d = model.size();
    report.e_hat = energy_value;
    report.e_max_hat = energy_scale(model);
    report.chi_hat = chi_hat(model, energy_value);
    if (wall_time_s > 0.0) {
        report.speed = solution_speed(report.chi_hat, wall_time_s);
        if (model.size() > 0 && std::exp(report.chi_hat) < static_cast<double>(model.size())) {
            report.tts = time_to_solution(wall_time_s, report.chi_hat, model.size());
        }
    }
    return report;
}

}  // namespace isingpds
