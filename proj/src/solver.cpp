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

#include "isingpds/solver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <thread>

#include "isingpds/errors.hpp"
#include "isingpds/metrics.hpp"
#include "isingpds/pruning.hpp"

namespace isingpds {

SolveResult solve(const IsingModel& model, const SolveConfig& config) {
    config.domain.validate();
    SolveResult out;

    const auto start = std::chrono::steady_clock::now();
    std::optional<PrunedProblem> pruned;
    if (config.enable_pruning) pruned = prune(model);
    const IsingModel& target = pruned ? pruned->reduced : model;
    DomainResult selected = run_domain_selection(target, config.domain);
    out.s = pruned ? reconstruct(pruned->trace, selected.best_s) : std::move(selected.best_s);
    const auto stop = std::chrono::steady_clock::now();

    out.wall_time_s = std::chrono::duration<double>(stop - start).count();
    out.energy = energy(model, out.s);
    const double tolerance = 1e-9 * std::max({1.0, std::abs(out.energy), std::abs(selected.best_energy)});
    if (std::abs(out.energy - selected.best_energy) > tolerance) {
        throw ContractViolation("reconstructed energy disagrees with the reduced problem");
    }
    if (pruned) {
        out.eta = pruning_rate(pruned->trace);
        out.prune_rounds = pruned->trace.rounds.size();
    }
    out.reduced_d = target.size();
    out.iterations = selected.total_iterations();
    out.iterations_per_restart = std::move(selected.iterations_per_restart);
    out.best_restart = selected.best_restart;

    if (config.collect_metrics && energy_scale(model) > 0.0) {
        const MetricReport report = evaluate_metrics(model, out.energy, out.wall_time_s);
        out.chi_hat = report.chi_hat;
        out.tts = report.tts;
        out.speed = report.speed;
    }
    return out;
}

std::size_t default_thread_count() {
    if (const char* env = std::getenv("ISINGPDS_THREADS")) {
        char* end = nullptr;
        const unsigned long value = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && value > 0) return value;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<BatchSlot> solve_many(std::span<const IsingModel> models, const SolveConfig& config,
                                  std::size_t threads) {
    std::vector<BatchSlot> slots(models.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < models.size(); i = next++) {
            try {
                slots[i].result = solve(models[i], config);
            } catch (const std::exception& e) {
                slots[i].error = e.what();
            }
        }
    };
    if (threads == 0) threads = default_thread_count();
    threads = std::min(threads, models.size());
    if (threads <= 1) {
        worker();
        return slots;
    }
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    pool.clear();
    return slots;
}

}  // namespace isingpds
