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

#include "isingpds/model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "isingpds/errors.hpp"

namespace isingpds {

namespace {

void require_finite(double value, const char* what) {
    if (!std::isfinite(value)) {
        throw ContractViolation(std::string("non-finite ") + what);
    }
}

void require_size(std::size_t got, std::size_t want, const char* what) {
    if (got != want) {
        throw ContractViolation(std::string(what) + ": expected length " + std::to_string(want) +
                                ", got " + std::to_string(got));
    }
}

}  // namespace

IsingModel::IsingModel(std::size_t d, std::vector<Coupling> couplings, std::vector<double> fields,
                       double offset, DuplicatePolicy duplicates)
        : d_(d), fields_(std::move(fields)), offset_(offset) {
    require_size(fields_.size(), d_, "field vector");
    require_finite(offset_, "offset");
    for (double h : fields_) require_finite(h, "field");

    for (auto& c : couplings) {
        if (c.i == c.j) {
            throw ContractViolation("self-coupling on spin " + std::to_string(c.i));
        }
        if (c.i > c.j) std::swap(c.i, c.j);
        if (c.j >= d_) {
            throw ContractViolation("coupling index " + std::to_string(c.j) + " out of range");
        }
        require_finite(c.weight, "coupling");
    }
    std::stable_sort(couplings.begin(), couplings.end(), [](const Coupling& a, const Coupling& b) {
        return a.i != b.i ? a.i < b.i : a.j < b.j;
    });

    couplings_.reserve(couplings.size());
    for (const auto& c : couplings) {
        if (!couplings_.empty() && couplings_.back().i == c.i && couplings_.back().j == c.j) {
            if (duplicates == DuplicatePolicy::kReject) {
                throw ContractViolation("duplicate coupling (" + std::to_string(c.i) + ", " +
                                        std::to_string(c.j) + ")");
            }
            couplings_.back().weight += c.weight;
        } else {
            couplings_.push_back(c);
        }
    }
    std::erase_if(couplings_, [](const Coupling& c) { return c.weight == 0.0; });
    build_adjacency();
}

void IsingModel::build_adjacency() {
    row_start_.assign(d_ + 1, 0);
    for (const auto& c : couplings_) {
        ++row_start_[c.i + 1];
        ++row_start_[c.j + 1];
    }
    for (std::size_t i = 0; i < d_; ++i) row_start_[i + 1] += row_start_[i];
    adjacency_.resize(row_start_[d_]);
    std::vector<std::size_t> cursor(row_start_.begin(), row_start_.end() - 1);
    // Lower neighbours first, then higher; with (i, j) sorted input every row ends up sorted.
    for (const auto& c : couplings_) adjacency_[cursor[c.j]++] = {c.i, c.weight};
    for (const auto& c : couplings_) adjacency_[cursor[c.i]++] = {c.j, c.weight};
}

IsingModel IsingModel::with_offset(double offset) const {
    require_finite(offset, "offset");
    IsingModel copy = *this;
    copy.offset_ = offset;
    return copy;
}

std::vector<double> IsingModel::dense_couplings() const {
    std::vector<double> dense(d_ * d_, 0.0);
    for (const auto& c : couplings_) {
        dense[c.i * d_ + c.j] = c.weight;
        dense[c.j * d_ + c.i] = c.weight;
    }
    return dense;
}

SpinConfiguration::SpinConfiguration(std::vector<Spin> spins) : spins_(std::move(spins)) {
    for (Spin v : spins_) {
        if (v != 1 && v != -1) throw ContractViolation("spin value must be -1 or +1");
    }
}

SpinConfiguration::SpinConfiguration(std::initializer_list<int> spins) {
    spins_.reserve(spins.size());
    for (int v : spins) {
        if (v != 1 && v != -1) throw ContractViolation("spin value must be -1 or +1");
        spins_.push_back(static_cast<Spin>(v));
    }
}

SpinConfiguration SpinConfiguration::uniform(std::size_t d, Spin value) {
    return SpinConfiguration(std::vector<Spin>(d, value));
}

void SpinConfiguration::set(std::size_t i, Spin value) {
    if (value != 1 && value != -1) throw ContractViolation("spin value must be -1 or +1");
    spins_.at(i) = value;
}

FlipSet::FlipSet(std::vector<std::size_t> indices, std::size_t d) : indices_(std::move(indices)) {
    std::sort(indices_.begin(), indices_.end());
    if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end()) {
        throw ContractViolation("flip set contains duplicate indices");
    }
    if (!indices_.empty() && indices_.back() >= d) {
        throw ContractViolation("flip index out of range");
    }
}

double energy(const IsingModel& model, const SpinConfiguration& s) {
    require_size(s.size(), model.size(), "spin configuration");
    double pair = 0.0;
    for (const auto& c : model.couplings()) pair += c.weight * s[c.i] * s[c.j];
    double linear = 0.0;
    const auto h = model.fields();
    for (std::size_t i = 0; i < h.size(); ++i) linear += h[i] * s[i];
    return model.offset() + 2.0 * pair + linear;
}

double flip_delta(const IsingModel& model, const SpinConfiguration& s, const FlipSet& flips) {
    require_size(s.size(), model.size(), "spin configuration");
    if (flips.empty()) return 0.0;
    if (flips.indices().back() >= model.size()) throw ContractViolation("flip index out of range");

    std::vector<bool> in_set(model.size(), false);
    for (std::size_t i : flips.indices()) in_set[i] = true;

    // Pairs with both ends in F keep their product, so only cross terms to
    // spins outside F change sign.
    double delta = 0.0;
    for (std::size_t i : flips.indices()) {
        double outside = 0.0;
        for (const auto& nb : model.neighbors(i)) {
            if (!in_set[nb.index]) outside += nb.weight * s[nb.index];
        }
        delta += -4.0 * s[i] * outside - 2.0 * model.field(i) * s[i];
    }
    return delta;
}

SpinConfiguration apply_flips(SpinConfiguration s, const FlipSet& flips) {
    if (!flips.empty() && flips.indices().back() >= s.size()) {
        throw ContractViolation("flip index out of range");
    }
    for (std::size_t i : flips.indices()) s.flip(i);
    return s;
}

std::vector<double> matvec(const IsingModel& model, std::span<const double> x) {
    require_size(x.size(), model.size(), "matvec operand");
    std::vector<double> out(model.size(), 0.0);
    for (std::size_t i = 0; i < model.size(); ++i) {
        double acc = 0.0;
        for (const auto& nb : model.neighbors(i)) acc += nb.weight * x[nb.index];
        out[i] = acc;
    }
    return out;
}

void local_fields(const IsingModel& model, std::span<const Spin> s, std::vector<double>& out) {
    require_size(s.size(), model.size(), "spin configuration");
    out.resize(model.size());
    for (std::size_t i = 0; i < model.size(); ++i) {
        double acc = 0.0;
        for (const auto& nb : model.neighbors(i)) acc += nb.weight * s[nb.index];
        out[i] = acc;
    }
}

double max_abs_row_sum(const IsingModel& model) {
    double best = 0.0;
    for (std::size_t i = 0; i < model.size(); ++i) {
        double row = 0.0;
        for (const auto& nb : model.neighbors(i)) row += std::abs(nb.weight);
        best = std::max(best, row);
    }
    return best;
}

double frobenius_norm(const IsingModel& model) {
    double sq = 0.0;
    for (const auto& c : model.couplings()) sq += c.weight * c.weight;
    return std::sqrt(2.0 * sq);
}

double field_l1_norm(const IsingModel& model) {
    double total = 0.0;
    for (double h : model.fields()) total += std::abs(h);
    return total;
}

}  // namespace isingpds
