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

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "isingpds/model.hpp"

namespace oracle {

using isingpds::Coupling;
using isingpds::IsingModel;
using isingpds::SpinConfiguration;

/// Dense double-loop energy: offset + sum_ij J_ij s_i s_j + sum_i h_i s_i.
inline double dense_energy(const IsingModel& m, const std::vector<int>& s) {
    const std::size_t d = m.size();
    std::vector<double> J(d * d, 0.0);
    for (const auto& c : m.couplings()) {
        J[c.i * d + c.j] = c.weight;
        J[c.j * d + c.i] = c.weight;
    }
    double e = m.offset();
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) e += J[i * d + j] * s[i] * s[j];
        e += m.field(i) * s[i];
    }
    return e;
}

inline std::vector<int> spins_of(std::uint64_t code, std::size_t d) {
    std::vector<int> s(d);
    for (std::size_t i = 0; i < d; ++i) s[i] = (code >> i) & 1u ? 1 : -1;
    return s;
}

inline SpinConfiguration config_of(const std::vector<int>& s) {
    std::vector<isingpds::Spin> v(s.begin(), s.end());
    return SpinConfiguration(std::move(v));
}

/// Minimum over all 2^d configurations by plain enumeration.
inline double enumerate_min(const IsingModel& m) {
    double best = std::numeric_limits<double>::infinity();
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << m.size()); ++code) {
        best = std::min(best, dense_energy(m, spins_of(code, m.size())));
    }
    return best;
}

/// Random model: each pair present with probability `density`, weights and
/// fields from the chosen family (0 uniform, 1 gaussian, 2 binary).
inline IsingModel random_model(std::mt19937_64& rng, std::size_t d, double density, int family,
                               double field_scale = 3.0) {
    std::bernoulli_distribution edge(density);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::normal_distribution<double> g(0.0, 1.0);
    auto draw = [&](double scale) {
        switch (family) {
            case 0: return scale * u(rng);
            case 1: return scale * g(rng) / std::sqrt(3.0);
            default: return (rng() & 1u) ? scale / std::sqrt(3.0) : -scale / std::sqrt(3.0);
        }
    };
    std::vector<Coupling> cs;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
            if (edge(rng)) cs.push_back({i, j, draw(0.5)});
    std::vector<double> h(d);
    for (auto& x : h) x = draw(field_scale);
    return IsingModel(d, std::move(cs), std::move(h), 0.0);
}

inline std::vector<int> random_spins(std::mt19937_64& rng, std::size_t d) {
    std::vector<int> s(d);
    for (auto& x : s) x = (rng() & 1u) ? 1 : -1;
    return s;
}

}  // namespace oracle
