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
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "isingpds/model.hpp"

namespace isingpds {

/// How the penalty is picked when DomainConfig::mu is empty.
enum class MuRule {
    kScaled,    ///< mu_scale * rms_row_norm(J)
    kDominant,  ///< auto_mu()
};

/// Settings of the relaxed-domain gradient search.
struct DomainConfig {
    /// Consensus penalty; chosen by `mu_rule` when empty.
    std::optional<double> mu;
    MuRule mu_rule = MuRule::kScaled;
    double mu_scale = 0.01;
    double learning_rate = 6.0;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps_adam = 1e-8;
    double convergence_ratio = 0.005;
    std::size_t convergence_window = 5;
    std::size_t max_iterations = 1000;
    std::size_t restarts = 5;
    std::uint64_t seed = 0;

    /// Throws ContractViolation on non-positive rates, window < 2, zero restarts.
    void validate() const;
};

/// Per-restart optimiser state over the angles theta.
struct DomainState {
    std::vector<double> theta;
    std::vector<double> m;
    std::vector<double> v;
    std::vector<double> loss_history;
    std::size_t iteration = 0;

    explicit DomainState(std::vector<double> initial_theta)
            : theta(std::move(initial_theta)), m(theta.size(), 0.0), v(theta.size(), 0.0) {}
};

struct DomainResult {
    SpinConfiguration best_s;
    double best_energy = 0.0;
    std::size_t best_restart = 0;
    std::vector<std::size_t> iterations_per_restart;
    std::vector<bool> converged_flags;
    std::vector<double> restart_energies;
    std::vector<std::vector<double>> loss_histories;

    std::size_t total_iterations() const;
};

/// 1.001 * max_i sum_j |J_ij|, or 1 when there are no couplings.
double auto_mu(const IsingModel& model);

/// sqrt(sum_ij J_ij^2 / d), the typical size of a local field under random spins.
double rms_row_norm(const IsingModel& model);

/// Penalty used by run_domain_selection for `config`.
double resolve_mu(const IsingModel& model, const DomainConfig& config);

/// Sign pattern of sin(theta); sin(theta_j) == 0 maps to +1.
SpinConfiguration domain_signs(std::span<const double> theta);

/// L(theta) = sum_j sin(theta_j) * ((J - mu I) s + h)_j with s = domain_signs(theta).
double relaxed_loss(const IsingModel& model, double mu, std::span<const double> theta);

/// dL/dtheta_j = cos(theta_j) * ((J - mu I) s + h)_j, the sign pattern held fixed.
std::vector<double> relaxed_gradient(const IsingModel& model, double mu,
                                     std::span<const double> theta);

/// One bias-corrected adaptive-moment descent step on `state.theta`.
void adam_step(DomainState& state, std::span<const double> gradient, const DomainConfig& config);

/// Relative flatness test over the last `convergence_window` losses.
/// `history[0]` is the loss at the initial angles.
bool converged(std::span<const double> history, const DomainConfig& config);

/// Better of the domain sign pattern and its best-response partner
/// -sgn((J - mu I) s + h) with sgn(0) = +1, by energy. Ties keep the domain pattern.
SpinConfiguration extract(const IsingModel& model, double mu, std::span<const double> theta);

/// Initial angles of restart `restart`: Uniform(-pi, pi) from a stream derived
/// from `seed` and the restart index.
std::vector<double> initial_angles(std::uint64_t seed, std::size_t restart, std::size_t d);

/// Runs every restart to convergence (or the iteration cap) and keeps the
/// lowest-energy extracted configuration; ties go to the lowest restart index.
DomainResult run_domain_selection(const IsingModel& model, const DomainConfig& config);

}  // namespace isingpds
