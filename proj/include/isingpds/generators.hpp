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
#include <random>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "isingpds/model.hpp"

namespace isingpds {

using Rng = std::mt19937_64;

struct UniformDist {
    double half_width = 1.0;
};
struct GaussianDist {
    double variance = 1.0;
};
struct BinaryDist {
    double level = 1.0;
};

/// Symmetric zero-mean sampling distribution for couplings and fields.
class Distribution {
 public:
    using Kind = std::variant<UniformDist, GaussianDist, BinaryDist>;

    static Distribution uniform(double half_width);
    static Distribution gaussian(double variance);
    static Distribution binary(double level);

    /// "uniform:<half width>", "gaussian:<variance>" or "binary:<level>".
    static Distribution parse(const std::string& text);

    double sample(Rng& rng) const;
    double mean() const { return 0.0; }
    double variance() const;
    std::string to_string() const;
    const Kind& kind() const { return kind_; }

 private:
    explicit Distribution(Kind kind) : kind_(kind) {}
    Kind kind_;
};

/// Edge list of a simple k-regular graph on d vertices (configuration model,
/// up to 100 fresh pairings, then double-edge-swap repair).
std::vector<std::pair<std::size_t, std::size_t>> random_regular_graph(std::size_t d,
                                                                      std::size_t k,
                                                                      std::uint64_t seed);

/// k-regular model with Hamiltonian couplings drawn from `j_dist` (halved
/// into J) and fields from `h_dist`.
IsingModel random_k_regular(std::size_t d, std::size_t k, const Distribution& j_dist,
                            const Distribution& h_dist, std::uint64_t seed);

/// Complete graph with Hamiltonian couplings from `j_dist`, fields from `h_dist`.
IsingModel complete_random(std::size_t d, const Distribution& j_dist, const Distribution& h_dist,
                           std::uint64_t seed);

/// Complete graph whose couplings and fields share N(0, alpha^2) with
/// alpha ~ U(0, alpha_max) drawn once per instance.
IsingModel complete_random_scale(std::size_t d, double alpha_max, std::uint64_t seed);

/// 3-regular (or k-regular) MaxCut: unit Hamiltonian coupling per edge, no field.
IsingModel maxcut_regular(std::size_t d, std::size_t k, std::uint64_t seed);

/// Erdos-Renyi MaxCut of the given edge density, unit couplings, no field.
IsingModel maxcut_dense(std::size_t d, double density, std::uint64_t seed);

/// SK spin glass, Hamiltonian couplings +-1 with equal probability, no field.
IsingModel sk_ising(std::size_t d, std::uint64_t seed);

/// Complete graph with Hamiltonian couplings in {0, 1}, no field.
IsingModel sk_qubo(std::size_t d, std::uint64_t seed);

/// Random NAE-3SAT: round(ratio * n) clauses over 3 distinct variables with
/// random polarities; each clause adds sign_a * sign_b to the Hamiltonian
/// coupling of every literal pair.
IsingModel nae3sat(std::size_t n_vars, double clause_ratio, std::uint64_t seed);

enum class Family { kKRegular, kComplete, kCompleteScale, kMaxCut3, kMaxCutD, kSKIsing, kSKQubo, kNAE3SAT };

std::string family_name(Family family);
Family parse_family(const std::string& name);

/// Everything needed to regenerate one instance.
struct InstanceSpec {
    Family family = Family::kKRegular;
    std::size_t d = 0;
    std::size_t k = 6;
    double density = 0.5;
    double clause_ratio = 2.11;
    double alpha_max = 1000.0;
    Distribution j_dist = Distribution::uniform(1.0);
    Distribution h_dist = Distribution::uniform(6.0);
    std::uint64_t seed = 0;

    void validate() const;
};

IsingModel generate(const InstanceSpec& spec);

/// Member `index` of the complete-graph comparison ensemble: even draws are
/// U(-1000, 1000) couplings and fields, odd draws the random-scale Gaussian.
InstanceSpec comparison_ensemble_spec(std::size_t d, std::uint64_t seed, std::size_t index);

/// 6-regular ensembles with matched mean and variance.
enum class RegularEnsemble { kUniform, kGaussian, kBinary };
InstanceSpec regular_ensemble_spec(RegularEnsemble which, std::size_t d, std::uint64_t seed);

/// Seed of ensemble member `index`, derived from a master seed.
std::uint64_t member_seed(std::uint64_t master, std::size_t index);

}  // namespace isingpds
