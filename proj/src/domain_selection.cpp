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

#include "isingpds/domain_selection.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "isingpds/errors.hpp"

namespace isingpds {

namespace {

void require_length(std::size_t got, std::size_t want) {
    if (got != want) {
        throw ContractViolation("angle vector has length " + std::to_string(got) +
                                ", model has " + std::to_string(want) + " spins");
    }
}

void require_mu(double mu) {
    if (!(mu > 0.0) || !std::isfinite(mu)) throw ContractViolation("mu must be positive");
}

Spin angle_sign(double theta) { return std::sin(theta) >= 0.0 ? Spin{1} : Spin{-1}; }

// Scratch buffers reused across iterations of one restart.
struct Workspace {
    std::vector<Spin> signs;
    std::vector<double> coupled;
    std::vector<double> gradient;
};

// Loss at theta; leaves the gradient in ws.gradient.
double evaluate(const IsingModel& model, double mu, std::span<const double> theta, Workspace& ws) {
    const std::size_t d = model.size();
    ws.signs.resize(d);
    for (std::size_t j = 0; j < d; ++j) ws.signs[j] = angle_sign(theta[j]);
    local_fields(model, ws.signs, ws.coupled);
    ws.gradient.resize(d);
    double loss = 0.0;
    for (std::size_t j = 0; j < d; ++j) {
        const double g = ws.coupled[j] - mu * ws.signs[j] + model.field(j);
        loss += std::sin(theta[j]) * g;
        ws.gradient[j] = std::cos(theta[j]) * g;
    }
    return loss;
}

}  // namespace

void DomainConfig::validate() const {
    if (mu) require_mu(*mu);
    if (!(mu_scale > 0.0) || !std::isfinite(mu_scale)) throw ContractViolation("mu_scale must be positive");
    if (!(learning_rate > 0.0)) throw ContractViolation("learning_rate must be positive");
    if (!(beta1 >= 0.0 && beta1 < 1.0)) throw ContractViolation("beta1 must lie in [0, 1)");
    if (!(beta2 >= 0.0 && beta2 < 1.0)) throw ContractViolation("beta2 must lie in [0, 1)");
    if (!(eps_adam > 0.0)) throw ContractViolation("eps_adam must be positive");
    if (!(convergence_ratio > 0.0)) throw ContractViolation("convergence_ratio must be positive");
    if (convergence_window < 2) throw ContractViolation("convergence_window must be >= 2");
    if (restarts < 1) throw ContractViolation("restarts must be >= 1");
}

std::size_t DomainResult::total_iterations() const {
    std::size_t total = 0;
    for (std::size_t n : iterations_per_restart) total += n;
    return total;
}

double auto_mu(const IsingModel& model) {
    if (model.couplings().empty()) return 1.0;
    return 1.001 * max_abs_row_sum(model);
}

double rms_row_norm(const IsingModel& model) {
    if (model.size() == 0) return 0.0;
    return frobenius_norm(model) / std::sqrt(static_cast<double>(model.size()));
}

double resolve_mu(const IsingModel& model, const DomainConfig& config) {
    if (config.mu) return *config.mu;
    if (config.mu_rule == MuRule::kDominant || model.couplings().empty()) return auto_mu(model);
    return config.mu_scale * rms_row_norm(model);
}

SpinConfiguration domain_signs(std::span<const double> theta) {
    std::vector<Spin> s(theta.size());
    std::transform(theta.begin(), theta.end(), s.begin(), angle_sign);
    return SpinConfiguration(std::move(s));
}

double relaxed_loss(const IsingModel& model, double mu, std::span<const double> theta) {
    require_length(theta.size(), model.size());
    require_mu(mu);
    Workspace ws;
    return evaluate(model, mu, theta, ws);
}

std::vector<double> relaxed_gradient(const IsingModel& model, double mu,
                                     std::span<const double> theta) {
    require_length(theta.size(), model.size());
    require_mu(mu);
    Workspace ws;
    evaluate(model, mu, theta, ws);
    return std::move(ws.gradient);
}

void adam_step(DomainState& state, std::span<const double> gradient, const DomainConfig& config) {
    const std::size_t d = state.theta.size();
    require_length(gradient.size(), d);
    if (state.m.size() != d || state.v.size() != d) {
        throw ContractViolation("moment accumulators do not match theta");
    }
    ++state.iteration;
    const double t = static_cast<double>(state.iteration);
    const double correction1 = 1.0 - std::pow(config.beta1, t);
    const double correction2 = 1.0 - std::pow(config.beta2, t);
    for (std::size_t j = 0; j < d; ++j) {
        const double g = gradient[j];
        state.m[j] = config.beta1 * state.m[j] + (1.0 - config.beta1) * g;
        state.v[j] = config.beta2 * state.v[j] + (1.0 - config.beta2) * g * g;
        const double m_hat = state.m[j] / correction1;
        const double v_hat = state.v[j] / correction2;
        state.theta[j] -= config.learning_rate * m_hat / (std::sqrt(v_hat) + config.eps_adam);
    }
}

bool converged(std::span<const double> history, const DomainConfig& config) {
    const std::size_t window = config.convergence_window;
    if (history.size() < window + 1) return false;
    const auto recent = history.last(window);
    const auto [lo, hi] = std::minmax_element(recent.begin(), recent.end());
    const double spread = *hi - *lo;
    const double progress = std::max(std::abs(history.back() - history.front()), 1e-12);
    return spread / progress <= config.convergence_ratio;
}

SpinConfiguration extract(const IsingModel& model, double mu, std::span<const double> theta) {
    require_length(theta.size(), model.size());
    require_mu(mu);
    SpinConfiguration domain = domain_signs(theta);
    std::vector<double> coupled;
    local_fields(model, domain.values(), coupled);
    std::vector<Spin> response(model.size());
    for (std::size_t i = 0; i < model.size(); ++i) {
        const double g = coupled[i] - mu * domain[i] + model.field(i);
        response[i] = g >= 0.0 ? Spin{-1} : Spin{1};
    }
    SpinConfiguration partner(std::move(response));
    return energy(model, partner) < energy(model, domain) ? partner : domain;
}

std::vector<double> initial_angles(std::uint64_t seed, std::size_t restart, std::size_t d) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(restart), 0x5eedu};
    std::mt19937_64 rng(seq);
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    std::vector<double> theta(d);
    for (double& t : theta) t = angle(rng);
    return theta;
}

DomainResult run_domain_selection(const IsingModel& model, const DomainConfig& config) {
    config.validate();
    DomainResult result;
    if (model.size() == 0) {
        result.best_energy = model.offset();
        return result;
    }
    const double mu = resolve_mu(model, config);

    Workspace ws;
    for (std::size_t r = 0; r < config.restarts; ++r) {
        DomainState state(initial_angles(config.seed, r, model.size()));
        state.loss_history.push_back(evaluate(model, mu, state.theta, ws));
        bool done = false;
        while (state.iteration < config.max_iterations) {
            adam_step(state, ws.gradient, config);
            state.loss_history.push_back(evaluate(model, mu, state.theta, ws));
            if (converged(state.loss_history, config)) {
                done = true;
                break;
            }
        }
        SpinConfiguration s = extract(model, mu, state.theta);
        const double e = energy(model, s);
        if (r == 0 || e < result.best_energy) {
            result.best_energy = e;
            result.best_s = std::move(s);
            result.best_restart = r;
        }
        result.iterations_per_restart.push_back(state.iteration);
        result.converged_flags.push_back(done);
        result.restart_energies.push_back(e);
        result.loss_histories.push_back(std::move(state.loss_history));
    }
    return result;
}

}  // namespace isingpds
