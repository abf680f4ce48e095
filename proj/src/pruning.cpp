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

#include "isingpds/pruning.hpp"

#include <cmath>
#include <cstdint>
#include <string>

#include "isingpds/errors.hpp"

namespace isingpds {

namespace {

enum class Role : std::uint8_t { kGeneral, kDetermined, kSemi };

}  // namespace

Classification classify(const IsingModel& model) {
    const std::size_t d = model.size();
    Classification out;
    std::vector<Role> role(d, Role::kGeneral);
    std::vector<Spin> sign(d, 0);

    for (std::size_t i = 0; i < d; ++i) {
        const double h = model.field(i);
        if (model.degree(i) == 0) {
            role[i] = Role::kDetermined;
            sign[i] = h > 0.0 ? Spin{-1} : Spin{1};
            continue;
        }
        double mass = 0.0;
        for (const auto& nb : model.neighbors(i)) mass += std::abs(nb.weight);
        if (2.0 * mass < std::abs(h) * (1.0 - kDeterminedTieMargin)) {
            role[i] = Role::kDetermined;
            sign[i] = static_cast<Spin>(-sign_or_zero(h));
        }
    }

    for (std::size_t i = 0; i < d; ++i) {
        if (role[i] != Role::kGeneral) continue;
        // Field seen by spin i once its determined neighbours are substituted.
        double effective = model.field(i);
        const Neighbor* anchor = nullptr;
        std::size_t free_neighbors = 0;
        for (const auto& nb : model.neighbors(i)) {
            if (role[nb.index] == Role::kDetermined) {
                effective += 2.0 * nb.weight * sign[nb.index];
            } else if (++free_neighbors == 1) {
                anchor = &nb;
            }
        }
        if (free_neighbors != 1 || role[anchor->index] == Role::kSemi) continue;
        if (2.0 * std::abs(anchor->weight) >= std::abs(effective)) {
            role[i] = Role::kSemi;
            out.semi.push_back({i, anchor->index, static_cast<Spin>(-sign_or_zero(anchor->weight))});
        }
    }

    for (std::size_t i = 0; i < d; ++i) {
        if (role[i] == Role::kDetermined) out.determined.push_back({i, sign[i]});
        if (role[i] == Role::kGeneral) out.general.push_back(i);
    }
    return out;
}

IsingModel fold(const IsingModel& model, const Classification& classes) {
    const std::size_t d = model.size();
    constexpr std::size_t kNone = static_cast<std::size_t>(-1);

    std::vector<Role> role(d, Role::kGeneral);
    std::vector<bool> seen(d, false);
    std::vector<Spin> sign(d, 0);
    std::vector<std::size_t> reduced_index(d, kNone);
    auto claim = [&](std::size_t i) {
        if (i >= d) throw ContractViolation("classified index out of range");
        if (seen[i]) throw ContractViolation("spin " + std::to_string(i) + " classified twice");
        seen[i] = true;
    };
    for (const auto& ds : classes.determined) {
        claim(ds.index);
        if (ds.sign != 1 && ds.sign != -1) throw ContractViolation("determined sign must be +-1");
        role[ds.index] = Role::kDetermined;
        sign[ds.index] = ds.sign;
    }
    for (const auto& ss : classes.semi) {
        claim(ss.index);
        role[ss.index] = Role::kSemi;
    }
    for (std::size_t k = 0; k < classes.general.size(); ++k) {
        claim(classes.general[k]);
        if (k > 0 && classes.general[k] <= classes.general[k - 1]) {
            throw ContractViolation("general spins must be ascending");
        }
        reduced_index[classes.general[k]] = k;
    }
    if (classes.determined.size() + classes.semi.size() + classes.general.size() != d) {
        throw ContractViolation("classification does not cover every spin");
    }

    std::vector<double> fields(classes.general.size());
    for (std::size_t k = 0; k < classes.general.size(); ++k) {
        fields[k] = model.field(classes.general[k]);
    }
    double constant = 0.0;

    for (const auto& ds : classes.determined) {
        const double s = ds.sign;
        constant += model.field(ds.index) * s;
        for (const auto& nb : model.neighbors(ds.index)) {
            if (role[nb.index] == Role::kDetermined) {
                // Each unordered D-D pair is visited from both ends.
                constant += nb.weight * s * sign[nb.index];
            } else if (role[nb.index] == Role::kGeneral) {
                fields[reduced_index[nb.index]] += 2.0 * nb.weight * s;
            }
        }
    }

    for (const auto& ss : classes.semi) {
        if (ss.coeff != 1 && ss.coeff != -1) throw ContractViolation("semi coefficient must be +-1");
        if (ss.anchor >= d || role[ss.anchor] != Role::kGeneral) {
            throw ContractViolation("anchor of spin " + std::to_string(ss.index) +
                                    " is not a general spin");
        }
        const double c = ss.coeff;
        double& anchor_field = fields[reduced_index[ss.anchor]];
        anchor_field += c * model.field(ss.index);
        bool anchored = false;
        for (const auto& nb : model.neighbors(ss.index)) {
            if (nb.index == ss.anchor) {
                constant += 2.0 * nb.weight * c;
                anchored = true;
            } else if (role[nb.index] == Role::kDetermined) {
                anchor_field += 2.0 * nb.weight * sign[nb.index] * c;
            } else {
                throw ContractViolation("semi-determined spin " + std::to_string(ss.index) +
                                        " has more than one free neighbour");
            }
        }
        if (!anchored) {
            throw ContractViolation("semi-determined spin " + std::to_string(ss.index) +
                                    " is not coupled to its anchor");
        }
    }

    std::vector<Coupling> couplings;
    for (const auto& c : model.couplings()) {
        if (role[c.i] == Role::kGeneral && role[c.j] == Role::kGeneral) {
            couplings.push_back({reduced_index[c.i], reduced_index[c.j], c.weight});
        }
    }
    return IsingModel(classes.general.size(), std::move(couplings), std::move(fields),
                      model.offset() + constant);
}

PrunedProblem prune(const IsingModel& model) {
    PrunedProblem out{model, {}};
    out.trace.original_d = model.size();
    out.trace.survivor_map.resize(model.size());
    for (std::size_t i = 0; i < model.size(); ++i) out.trace.survivor_map[i] = i;

    for (;;) {
        Classification classes = classify(out.reduced);
        if (classes.trivial()) break;

        const auto& to_original = out.trace.survivor_map;
        PruneRound round;
        for (const auto& ds : classes.determined) {
            round.determined.push_back({to_original[ds.index], ds.sign});
        }
        for (const auto& ss : classes.semi) {
            round.semi.push_back({to_original[ss.index], to_original[ss.anchor], ss.coeff});
        }
        std::vector<std::size_t> survivors;
        survivors.reserve(classes.general.size());
        for (std::size_t g : classes.general) survivors.push_back(to_original[g]);

        IsingModel next = fold(out.reduced, classes);
        round.constant = next.offset() - out.reduced.offset();
        out.trace.rounds.push_back(std::move(round));
        out.trace.survivor_map = std::move(survivors);
        out.reduced = std::move(next);
    }
    return out;
}

SpinConfiguration reconstruct(const PruneTrace& trace, const SpinConfiguration& reduced) {
    if (reduced.size() != trace.survivor_map.size()) {
        throw ContractViolation("reduced configuration has length " +
                                std::to_string(reduced.size()) + ", trace expects " +
                                std::to_string(trace.survivor_map.size()));
    }
    std::vector<Spin> full(trace.original_d, 0);
    for (std::size_t k = 0; k < reduced.size(); ++k) full[trace.survivor_map[k]] = reduced[k];
    for (auto round = trace.rounds.rbegin(); round != trace.rounds.rend(); ++round) {
        for (const auto& ss : round->semi) {
            full[ss.index] = static_cast<Spin>(ss.coeff * full[ss.anchor]);
        }
        for (const auto& ds : round->determined) full[ds.index] = ds.sign;
    }
    return SpinConfiguration(std::move(full));
}

double pruning_rate(const PruneTrace& trace) {
    if (trace.original_d == 0) return 0.0;
    return 1.0 - static_cast<double>(trace.survivor_map.size()) /
                         static_cast<double>(trace.original_d);
}

}  // namespace isingpds
