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

#include "isingpds/baselines.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>

#include "isingpds/errors.hpp"

namespace isingpds {

namespace {

double field_scale(const IsingModel& model) {
    double max_h = 0.0;
    for (double h : model.fields()) max_h = std::max(max_h, std::abs(h));
    return max_abs_row_sum(model) + max_h;
}

// Flips spin i and keeps the local fields J s in step.
void flip_tracked(const IsingModel& model, std::vector<Spin>& s, std::vector<double>& local,
                  std::size_t i) {
    s[i] = static_cast<Spin>(-s[i]);
    const double change = 2.0 * s[i];
    for (const auto& nb : model.neighbors(i)) local[nb.index] += nb.weight * change;
}

ExactSolution enumerate_minimum(const IsingModel& model) {
    const std::size_t d = model.size();
    if (d > kBruteForceMaxSpins) {
        throw TooLarge("brute force is limited to " + std::to_string(kBruteForceMaxSpins) +
                       " spins, got " + std::to_string(d));
    }
    std::vector<Spin> s(d, -1);
    std::vector<double> local;
    local_fields(model, s, local);

    ExactSolution best{SpinConfiguration(s), 0.0};
    best.energy = energy(model, best.s);
    double running = best.energy;
    // Incremental energies drift by rounding; anything this close to the
    // incumbent is settled by exact re-evaluation.
    const double tie = 1e-9 * (1.0 + std::abs(model.offset()) + field_scale(model) * d);

    const std::uint64_t count = std::uint64_t{1} << d;
    for (std::uint64_t k = 1; k < count; ++k) {
        const auto i = static_cast<std::size_t>(std::countr_zero(k));
        running += single_flip_delta(local[i], model.field(i), s[i]);
        flip_tracked(model, s, local, i);
        if (running > best.energy + tie) continue;

        SpinConfiguration candidate(s);
        const double exact = energy(model, candidate);
        if (exact < best.energy || (exact == best.energy && candidate < best.s)) {
            best.s = std::move(candidate);
            best.energy = exact;
        }
        running = exact;
    }
    return best;
}

IsingModel negated(const IsingModel& model) {
    std::vector<Coupling> couplings(model.couplings().begin(), model.couplings().end());
    for (auto& c : couplings) c.weight = -c.weight;
    std::vector<double> fields(model.fields().begin(), model.fields().end());
    for (double& h : fields) h = -h;
    return IsingModel(model.size(), std::move(couplings), std::move(fields), -model.offset());
}

}  // namespace

ExactSolution brute_force(const IsingModel& model) { return enumerate_minimum(model); }

ExactSolution brute_force_max(const IsingModel& model) {
    ExactSolution out = enumerate_minimum(negated(model));
    out.energy = energy(model, out.s);
    return out;
}

LocalSearchResult steepest_descent(const IsingModel& model, SpinConfiguration start) {
    const std::size_t d = model.size();
    if (start.size() != d) throw ContractViolation("start configuration has the wrong length");
    std::vector<Spin> s(start.values().begin(), start.values().end());
    std::vector<double> local;
    local_fields(model, s, local);

    const double threshold = -1e-12 * std::max(1.0, field_scale(model));
    const std::size_t cap = 10 * d * d + 10;
    std::size_t flips = 0;
    while (flips < cap) {
        std::size_t pick = d;
        double most_negative = threshold;
        for (std::size_t i = 0; i < d; ++i) {
            const double delta = single_flip_delta(local[i], model.field(i), s[i]);
            if (delta < most_negative) {
                most_negative = delta;
                pick = i;
            }
        }
        if (pick == d) break;
        flip_tracked(model, s, local, pick);
        ++flips;
    }
    LocalSearchResult out{SpinConfiguration(std::move(s)), 0.0, flips};
    out.energy = energy(model, out.s);
    return out;
}

void AnnealSchedule::validate() const {
    if (!(t_start > 0.0) || !(t_end > 0.0)) throw ContractViolation("temperatures must be positive");
    if (t_end > t_start) throw ContractViolation("temperature must not increase");
}

AnnealSchedule default_schedule(const IsingModel& model) {
    AnnealSchedule schedule;
    schedule.t_start = std::max(field_scale(model), 1e-12);
    schedule.t_end = 1e-3 * schedule.t_start;
    return schedule;
}

AnnealResult simulated_annealing(const IsingModel& model, const AnnealSchedule& schedule,
                                 std::uint64_t seed, std::optional<SpinConfiguration> start) {
    schedule.validate();
    const std::size_t d = model.size();
    std::mt19937_64 rng(seed);
    std::vector<Spin> s(d);
    if (start) {
        if (start->size() != d) throw ContractViolation("start configuration has the wrong length");
        std::copy(start->values().begin(), start->values().end(), s.begin());
    } else {
        std::bernoulli_distribution coin(0.5);
        for (Spin& v : s) v = coin(rng) ? Spin{1} : Spin{-1};
    }

    AnnealResult best{SpinConfiguration(s), 0.0, 0};
    best.energy = energy(model, best.s);
    if (d == 0 || schedule.sweeps == 0) return best;

    std::vector<double> local;
    local_fields(model, s, local);
    double current = best.energy;
    double best_running = current;

    const std::size_t moves = schedule.moves_per_sweep == 0 ? d : schedule.moves_per_sweep;
    std::uniform_int_distribution<std::size_t> pick(0, d - 1);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double ratio = schedule.t_end / schedule.t_start;
    for (std::size_t sweep = 0; sweep < schedule.sweeps; ++sweep) {
        const double frac = schedule.sweeps == 1
                                    ? 0.0
                                    : static_cast<double>(sweep) /
                                              static_cast<double>(schedule.sweeps - 1);
        const double temperature = schedule.t_start * std::pow(ratio, frac);
        for (std::size_t move = 0; move < moves; ++move) {
            const std::size_t i = pick(rng);
            const double delta = single_flip_delta(local[i], model.field(i), s[i]);
            if (delta > 0.0 && unit(rng) >= std::exp(-delta / temperature)) continue;
            flip_tracked(model, s, local, i);
            current += delta;
            ++best.accepted;
            if (current < best_running) {
                best_running = current;
                best.s = SpinConfiguration(s);
            }
        }
    }
    best.energy = energy(model, best.s);
    return best;
}

}  // namespace isingpds
