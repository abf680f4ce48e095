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
#include <vector>

#include "isingpds/model.hpp"

namespace isingpds {

/// Spin whose optimal direction is fixed by its own field.
struct DeterminedSpin {
    std::size_t index = 0;
    Spin sign = 1;

    friend bool operator==(const DeterminedSpin&, const DeterminedSpin&) = default;
};

/// Spin tied to a single surviving neighbour: s_index = coeff * s_anchor.
struct SemiDeterminedSpin {
    std::size_t index = 0;
    std::size_t anchor = 0;
    Spin coeff = 1;

    friend bool operator==(const SemiDeterminedSpin&, const SemiDeterminedSpin&) = default;
};

/// Partition of a model's spins into determined, semi-determined and general.
/// Indices refer to the model that was classified; `general` is ascending.
struct Classification {
    std::vector<DeterminedSpin> determined;
    std::vector<SemiDeterminedSpin> semi;
    std::vector<std::size_t> general;

    bool trivial() const { return determined.empty() && semi.empty(); }
};

/// One round of pruning, recorded against original spin indices.
struct PruneRound {
    std::vector<DeterminedSpin> determined;
    std::vector<SemiDeterminedSpin> semi;
    double constant = 0.0;
};

struct PruneTrace {
    std::vector<PruneRound> rounds;
    std::size_t original_d = 0;
    /// reduced index -> original index
    std::vector<std::size_t> survivor_map;
};

struct PrunedProblem {
    IsingModel reduced;
    PruneTrace trace;
};

/// Relative margin applied to the strict determined-spin test so that
/// exact ties lost to rounding stay unpruned.
inline constexpr double kDeterminedTieMargin = 1e-12;

/// Splits spins into D, S and G for one pruning round.
///
/// D: 2 * sum_j |J_ij| < |h_i| (strict), sign -sgn(h_i); an isolated spin with
/// zero field is placed in D with sign +1.
/// S: spins outside D with exactly one neighbour outside D (the anchor), the
/// anchor not already in S, and 2 |J_ia| >= |h_i + 2 sum_{j in D} J_ij s_j|;
/// coefficient -sgn(J_ia). Candidates are scanned in ascending index order.
Classification classify(const IsingModel& model);

/// Substitutes the D and S assignments into `model`, returning the problem
/// over G (in ascending original order) whose offset absorbs the constant
/// energy of the removed spins.
IsingModel fold(const IsingModel& model, const Classification& classes);

/// Classify and fold until nothing more can be removed.
PrunedProblem prune(const IsingModel& model);

/// Lifts a reduced configuration back to the original spin set.
SpinConfiguration reconstruct(const PruneTrace& trace, const SpinConfiguration& reduced);

/// 1 - d_G / d. Zero for an empty original problem.
double pruning_rate(const PruneTrace& trace);

}  // namespace isingpds
