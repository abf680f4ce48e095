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

#include "isingpds/model.hpp"

namespace isingpds {

/// Largest instance brute_force() will enumerate.
inline constexpr std::size_t kBruteForceMaxSpins = 24;

struct ExactSolution {
    SpinConfiguration s;
    double energy = 0.0;
};

/// Exact minimum by Gray-code enumeration; ties resolve to the
/// lexicographically smallest configuration (-1 < +1).
/// Throws TooLarge for d > kBruteForceMaxSpins.
ExactSolution brute_force(const IsingModel& model);

/// Exact maximum, same enumeration and tie rule.
ExactSolution brute_force_max(const IsingModel& model);

struct LocalSearchResult {
    SpinConfiguration s;
    double energy = 0.0;
    std::size_t flips = 0;
};

/// Greedy single-flip descent: flips the most negative delta (lowest index on
/// ties) until no flip lowers the energy.
LocalSearchResult steepest_descent(const IsingModel& model, SpinConfiguration start);

struct AnnealSchedule {
    double t_start = 1.0;
    double t_end = 1e-3;
    std::size_t sweeps = 5;
    /// Proposals per sweep; 0 means one per spin.
    std::size_t moves_per_sweep = 0;

    void validate() const;
};

/// t_start = max row sum |J| + max |h|, t_end = 1e-3 t_start, 5 sweeps of d moves.
AnnealSchedule default_schedule(const IsingModel& model);

struct AnnealResult {
    SpinConfiguration s;
    double energy = 0.0;
    std::size_t accepted = 0;
};

/// Metropolis single-flip annealing with geometric cooling; returns the best
/// configuration visited. Starts from `start`, or a seeded random
/// configuration when none is given.
AnnealResult simulated_annealing(const IsingModel& model, const AnnealSchedule& schedule,
                                 std::uint64_t seed,
                                 std::optional<SpinConfiguration> start = std::nullopt);

}  // namespace isingpds
