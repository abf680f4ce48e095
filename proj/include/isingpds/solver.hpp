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
#include <span>
#include <string>
#include <vector>

#include "isingpds/domain_selection.hpp"
#include "isingpds/model.hpp"

namespace isingpds {

struct SolveConfig {
    DomainConfig domain;
    bool enable_pruning = true;
    bool collect_metrics = true;
};

struct SolveResult {
    SpinConfiguration s;
    double energy = 0.0;
    double eta = 0.0;
    std::size_t reduced_d = 0;
    std::size_t prune_rounds = 0;
    std::size_t iterations = 0;
    std::vector<std::size_t> iterations_per_restart;
    std::size_t best_restart = 0;
    /// prune + domain selection + reconstruction, seconds
    double wall_time_s = 0.0;
    std::optional<double> chi_hat;
    std::optional<double> tts;
    std::optional<double> speed;
};

/// Prune, run domain selection on what is left, lift the result back and
/// score it against the original model.
SolveResult solve(const IsingModel& model, const SolveConfig& config);

/// Outcome of one instance in a batch; exactly one of `result` / `error` is set.
struct BatchSlot {
    std::optional<SolveResult> result;
    std::string error;
};

/// Solves every model (on up to `threads` workers; 0 picks the default) and
/// returns slots in input order. A failing instance never aborts the batch.
std::vector<BatchSlot> solve_many(std::span<const IsingModel> models, const SolveConfig& config,
                                  std::size_t threads = 0);

/// Worker count from ISINGPDS_THREADS, else hardware concurrency (at least 1).
std::size_t default_thread_count();

}  // namespace isingpds
