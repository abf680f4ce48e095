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

#include "isingpds/generators.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <unordered_map>

#include "isingpds/errors.hpp"

namespace isingpds {

namespace {

using Edge = std::pair<std::size_t, std::size_t>;

std::string format_number(double x) {
    std::ostringstream out;
    out.precision(17);
    out << x;
    return out.str();
}

double parse_number(const std::string& text, const std::string& context) {
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != text.size()) {
        throw ContractViolation("cannot parse number '" + text + "' in " + context);
    }
    return value;
}

IsingModel from_hamiltonian_edges(std::size_t d, const std::vector<Edge>& edges,
                                  const Distribution& j_dist, const Distribution& h_dist,
                                  Rng& rng) {
    std::vector<Coupling> couplings;
    couplings.reserve(edges.size());
    for (const auto& [u, v] : edges) couplings.push_back({u, v, 0.5 * j_dist.sample(rng)});
    std::vector<double> fields(d);
    for (double& h : fields) h = h_dist.sample(rng);
    return IsingModel(d, std::move(couplings), std::move(fields), 0.0, DuplicatePolicy::kReject);
}

IsingModel unit_couplings(std::size_t d, const std::vector<Edge>& edges) {
    std::vector<Coupling> couplings;
    couplings.reserve(edges.size());
    for (const auto& [u, v] : edges) couplings.push_back({u, v, 0.5});
    return IsingModel(d, std::move(couplings), std::vector<double>(d, 0.0), 0.0,
                      DuplicatePolicy::kReject);
}

void require_min_size(std::size_t d, std::size_t min, const char* family) {
    if (d < min) {
        throw ContractViolation(std::string(family) + " needs at least " + std::to_string(min) +
                                " spins");
    }
}

// Pairing with double-edge swaps to remove self-loops and repeated edges.
class RegularGraphBuilder {
 public:
    RegularGraphBuilder(std::size_t d, std::size_t k, Rng& rng) : d_(d), k_(k), rng_(rng) {}

    std::vector<Edge> build() {
        std::vector<std::size_t> stubs;
        stubs.reserve(d_ * k_);
        for (std::size_t v = 0; v < d_; ++v) stubs.insert(stubs.end(), k_, v);

        for (int attempt = 0; attempt < 100; ++attempt) {
            std::shuffle(stubs.begin(), stubs.end(), rng_);
            pair_stubs(stubs);
            if (bad_edges() == 0) return finish();
        }
        repair();
        return finish();
    }

 private:
    std::uint64_t key(std::size_t a, std::size_t b) const {
        return a < b ? a * d_ + b : b * d_ + a;
    }

    void pair_stubs(const std::vector<std::size_t>& stubs) {
        edges_.clear();
        counts_.clear();
        for (std::size_t t = 0; t + 1 < stubs.size(); t += 2) {
            edges_.emplace_back(stubs[t], stubs[t + 1]);
            ++counts_[key(stubs[t], stubs[t + 1])];
        }
    }

    bool is_bad(const Edge& e) const {
        return e.first == e.second || counts_.at(key(e.first, e.second)) > 1;
    }

    std::size_t bad_edges() const {
        return static_cast<std::size_t>(
                std::count_if(edges_.begin(), edges_.end(), [&](const Edge& e) { return is_bad(e); }));
    }

    void replace(std::size_t index, Edge next) {
        auto it = counts_.find(key(edges_[index].first, edges_[index].second));
        if (--it->second == 0) counts_.erase(it);
        edges_[index] = next;
        ++counts_[key(next.first, next.second)];
    }

    bool try_swap(std::size_t e) {
        std::uniform_int_distribution<std::size_t> pick(0, edges_.size() - 1);
        std::bernoulli_distribution orient(0.5);
        for (int tries = 0; tries < 1000; ++tries) {
            const std::size_t f = pick(rng_);
            if (f == e) continue;
            const auto [u, v] = edges_[e];
            auto [x, y] = edges_[f];
            if (orient(rng_)) std::swap(x, y);
            if (u == x || v == y) continue;
            if (key(u, x) == key(v, y)) continue;
            if (counts_.contains(key(u, x)) || counts_.contains(key(v, y))) continue;
            replace(e, {u, x});
            replace(f, {v, y});
            return true;
        }
        return false;
    }

    void repair() {
        const std::size_t max_passes = 1000;
        for (std::size_t pass = 0; pass < max_passes; ++pass) {
            bool clean = true;
            for (std::size_t e = 0; e < edges_.size(); ++e) {
                if (!is_bad(edges_[e])) continue;
                clean = false;
                try_swap(e);
            }
            if (clean) return;
        }
        throw GenerationError("could not repair a simple " + std::to_string(k_) +
                              "-regular graph on " + std::to_string(d_) + " vertices");
    }

    std::vector<Edge> finish() {
        for (auto& [a, b] : edges_) {
            if (a > b) std::swap(a, b);
        }
        std::sort(edges_.begin(), edges_.end());
        return std::move(edges_);
    }

    std::size_t d_;
    std::size_t k_;
    Rng& rng_;
    std::vector<Edge> edges_;
    std::unordered_map<std::uint64_t, int> counts_;
};

std::vector<Edge> regular_edges(std::size_t d, std::size_t k, Rng& rng) {
    if (k >= d) throw ContractViolation("k-regular graph needs k < d");
    if ((d * k) % 2 != 0) throw ContractViolation("k-regular graph needs d * k even");
    if (2 * k < d) return RegularGraphBuilder(d, k, rng).build();
    // dense: complement of a sparse (d - 1 - k)-regular graph
    const std::size_t k_bar = d - 1 - k;
    std::vector<Edge> missing;
    if (k_bar > 0) missing = RegularGraphBuilder(d, k_bar, rng).build();
    std::sort(missing.begin(), missing.end());
    std::vector<Edge> edges;
    edges.reserve(d * k / 2);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i + 1; j < d; ++j) {
            if (!std::binary_search(missing.begin(), missing.end(), Edge{i, j})) edges.emplace_back(i, j);
        }
    }
    return edges;
}

}  // namespace

Distribution Distribution::uniform(double half_width) {
    if (!(half_width > 0.0)) throw ContractViolation("uniform half width must be positive");
    return Distribution(UniformDist{half_width});
}

Distribution Distribution::gaussian(double variance) {
    if (!(variance > 0.0)) throw ContractViolation("gaussian variance must be positive");
    return Distribution(GaussianDist{variance});
}

Distribution Distribution::binary(double level) {
    if (!(level > 0.0)) throw ContractViolation("binary level must be positive");
    return Distribution(BinaryDist{level});
}

Distribution Distribution::parse(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
        throw ContractViolation("distribution '" + text + "' must look like name:value");
    }
    const std::string name = text.substr(0, colon);
    const double value = parse_number(text.substr(colon + 1), "distribution '" + text + "'");
    if (name == "uniform") return uniform(value);
    if (name == "gaussian") return gaussian(value);
    if (name == "binary") return binary(value);
    throw ContractViolation("unknown distribution '" + name + "'");
}

double Distribution::sample(Rng& rng) const {
    return std::visit(
            [&](const auto& dist) -> double {
                using T = std::decay_t<decltype(dist)>;
                if constexpr (std::is_same_v<T, UniformDist>) {
                    return std::uniform_real_distribution<double>(-dist.half_width,
                                                                  dist.half_width)(rng);
                } else if constexpr (std::is_same_v<T, GaussianDist>) {
                    return std::normal_distribution<double>(0.0, std::sqrt(dist.variance))(rng);
                } else {
                    return std::bernoulli_distribution(0.5)(rng) ? dist.level : -dist.level;
                }
            },
            kind_);
}

double Distribution::variance() const {
    return std::visit(
            [](const auto& dist) -> double {
                using T = std::decay_t<decltype(dist)>;
                if constexpr (std::is_same_v<T, UniformDist>) {
                    return dist.half_width * dist.half_width / 3.0;
                } else if constexpr (std::is_same_v<T, GaussianDist>) {
                    return dist.variance;
                } else {
                    return dist.level * dist.level;
                }
            },
            kind_);
}

std::string Distribution::to_string() const {
    return std::visit(
            [](const auto& dist) -> std::string {
                using T = std::decay_t<decltype(dist)>;
                if constexpr (std::is_same_v<T, UniformDist>) {
                    return "uniform:" + format_number(dist.half_width);
                } else if constexpr (std::is_same_v<T, GaussianDist>) {
                    return "gaussian:" + format_number(dist.variance);
                } else {
                    return "binary:" + format_number(dist.level);
                }
            },
            kind_);
}

std::vector<std::pair<std::size_t, std::size_t>> random_regular_graph(std::size_t d,
                                                                      std::size_t k,
                                                                      std::uint64_t seed) {
    Rng rng(seed);
    return regular_edges(d, k, rng);
}

IsingModel random_k_regular(std::size_t d, std::size_t k, const Distribution& j_dist,
                            const Distribution& h_dist, std::uint64_t seed) {
    Rng rng(seed);
    const auto edges = regular_edges(d, k, rng);
    return from_hamiltonian_edges(d, edges, j_dist, h_dist, rng);
}

IsingModel complete_random(std::size_t d, const Distribution& j_dist, const Distribution& h_dist,
                           std::uint64_t seed) {
    require_min_size(d, 2, "complete graph");
    Rng rng(seed);
    std::vector<Edge> edges;
    edges.reserve(d * (d - 1) / 2);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i + 1; j < d; ++j) edges.emplace_back(i, j);
    }
    return from_hamiltonian_edges(d, edges, j_dist, h_dist, rng);
}

IsingModel complete_random_scale(std::size_t d, double alpha_max, std::uint64_t seed) {
    if (!(alpha_max > 0.0)) throw ContractViolation("alpha_max must be positive");
    Rng rng(seed);
    double alpha = 0.0;
    while (alpha == 0.0) alpha = std::uniform_real_distribution<double>(0.0, alpha_max)(rng);
    const auto dist = Distribution::gaussian(alpha * alpha);
    return complete_random(d, dist, dist, rng());
}

IsingModel maxcut_regular(std::size_t d, std::size_t k, std::uint64_t seed) {
    Rng rng(seed);
    return unit_couplings(d, regular_edges(d, k, rng));
}

IsingModel maxcut_dense(std::size_t d, double density, std::uint64_t seed) {
    if (!(density > 0.0 && density <= 1.0)) throw ContractViolation("density must lie in (0, 1]");
    Rng rng(seed);
    std::bernoulli_distribution keep(density);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i + 1; j < d; ++j) {
            if (keep(rng)) edges.emplace_back(i, j);
        }
    }
    return unit_couplings(d, edges);
}

IsingModel sk_ising(std::size_t d, std::uint64_t seed) {
    require_min_size(d, 2, "SK-Ising");
    Rng rng(seed);
    const auto sign = Distribution::binary(1.0);
    std::vector<Coupling> couplings;
    couplings.reserve(d * (d - 1) / 2);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i + 1; j < d; ++j) couplings.push_back({i, j, 0.5 * sign.sample(rng)});
    }
    return IsingModel(d, std::move(couplings), std::vector<double>(d, 0.0));
}

IsingModel sk_qubo(std::size_t d, std::uint64_t seed) {
    require_min_size(d, 2, "SK-QUBO");
    Rng rng(seed);
    std::bernoulli_distribution coin(0.5);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i + 1; j < d; ++j) {
            if (coin(rng)) edges.emplace_back(i, j);
        }
    }
    return unit_couplings(d, edges);
}

IsingModel nae3sat(std::size_t n_vars, double clause_ratio, std::uint64_t seed) {
    require_min_size(n_vars, 3, "NAE-3SAT");
    if (!(clause_ratio > 0.0)) throw ContractViolation("clause ratio must be positive");
    Rng rng(seed);
    const auto clauses = static_cast<std::size_t>(std::llround(clause_ratio * n_vars));
    std::uniform_int_distribution<std::size_t> var(0, n_vars - 1);
    std::bernoulli_distribution coin(0.5);
    std::map<Edge, double> hamiltonian;
    for (std::size_t c = 0; c < clauses; ++c) {
        std::size_t v[3];
        double polarity[3];
        for (int t = 0; t < 3; ++t) {
            do {
                v[t] = var(rng);
            } while ((t > 0 && v[t] == v[0]) || (t > 1 && v[t] == v[1]));
        }
        for (double& p : polarity) p = coin(rng) ? 1.0 : -1.0;
        for (int a = 0; a < 3; ++a) {
            for (int b = a + 1; b < 3; ++b) {
                hamiltonian[std::minmax(v[a], v[b])] += polarity[a] * polarity[b];
            }
        }
    }
    std::vector<Coupling> couplings;
    for (const auto& [edge, weight] : hamiltonian) {
        couplings.push_back({edge.first, edge.second, 0.5 * weight});
    }
    return IsingModel(n_vars, std::move(couplings), std::vector<double>(n_vars, 0.0));
}

std::string family_name(Family family) {
    switch (family) {
        case Family::kKRegular: return "k-regular";
        case Family::kComplete: return "complete";
        case Family::kCompleteScale: return "complete-scale";
        case Family::kMaxCut3: return "maxcut-3";
        case Family::kMaxCutD: return "maxcut-d";
        case Family::kSKIsing: return "sk-ising";
        case Family::kSKQubo: return "sk-qubo";
        case Family::kNAE3SAT: return "nae-3sat";
    }
    return "unknown";
}

Family parse_family(const std::string& name) {
    for (Family f : {Family::kKRegular, Family::kComplete, Family::kCompleteScale, Family::kMaxCut3,
                     Family::kMaxCutD, Family::kSKIsing, Family::kSKQubo, Family::kNAE3SAT}) {
        if (family_name(f) == name) return f;
    }
    throw ContractViolation("unknown instance family '" + name + "'");
}

void InstanceSpec::validate() const {
    switch (family) {
        case Family::kKRegular:
        case Family::kMaxCut3:
            if (k >= d) throw ContractViolation("k-regular family needs k < d");
            if ((d * k) % 2 != 0) throw ContractViolation("k-regular family needs d * k even");
            break;
        case Family::kMaxCutD:
            if (!(density > 0.0 && density <= 1.0)) {
                throw ContractViolation("density must lie in (0, 1]");
            }
            break;
        case Family::kNAE3SAT:
            require_min_size(d, 3, "NAE-3SAT");
            if (!(clause_ratio > 0.0)) throw ContractViolation("clause ratio must be positive");
            break;
        case Family::kCompleteScale:
            if (!(alpha_max > 0.0)) throw ContractViolation("alpha_max must be positive");
            [[fallthrough]];
        default:
            require_min_size(d, 2, family_name(family).c_str());
    }
}

IsingModel generate(const InstanceSpec& spec) {
    spec.validate();
    switch (spec.family) {
        case Family::kKRegular: return random_k_regular(spec.d, spec.k, spec.j_dist, spec.h_dist, spec.seed);
        case Family::kComplete: return complete_random(spec.d, spec.j_dist, spec.h_dist, spec.seed);
        case Family::kCompleteScale: return complete_random_scale(spec.d, spec.alpha_max, spec.seed);
        case Family::kMaxCut3: return maxcut_regular(spec.d, spec.k, spec.seed);
        case Family::kMaxCutD: return maxcut_dense(spec.d, spec.density, spec.seed);
        case Family::kSKIsing: return sk_ising(spec.d, spec.seed);
        case Family::kSKQubo: return sk_qubo(spec.d, spec.seed);
        case Family::kNAE3SAT: return nae3sat(spec.d, spec.clause_ratio, spec.seed);
    }
    throw ContractViolation("unknown instance family");
}

std::uint64_t member_seed(std::uint64_t master, std::size_t index) {
    // splitmix64 finaliser over (master, index)
    std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(index) + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

InstanceSpec comparison_ensemble_spec(std::size_t d, std::uint64_t seed, std::size_t index) {
    InstanceSpec spec;
    spec.d = d;
    spec.seed = member_seed(seed, index);
    if (index % 2 == 0) {
        spec.family = Family::kComplete;
        spec.j_dist = Distribution::uniform(1000.0);
        spec.h_dist = Distribution::uniform(1000.0);
    } else {
        spec.family = Family::kCompleteScale;
        spec.alpha_max = 1000.0;
    }
    return spec;
}

InstanceSpec regular_ensemble_spec(RegularEnsemble which, std::size_t d, std::uint64_t seed) {
    InstanceSpec spec;
    spec.family = Family::kKRegular;
    spec.d = d;
    spec.k = 6;
    spec.seed = seed;
    switch (which) {
        case RegularEnsemble::kUniform:
            spec.j_dist = Distribution::uniform(1.0);
            spec.h_dist = Distribution::uniform(6.0);
            break;
        case RegularEnsemble::kGaussian:
            spec.j_dist = Distribution::gaussian(1.0 / 3.0);
            spec.h_dist = Distribution::gaussian(12.0);
            break;
        case RegularEnsemble::kBinary:
            spec.j_dist = Distribution::binary(1.0 / std::sqrt(3.0));
            spec.h_dist = Distribution::binary(2.0 * std::sqrt(3.0));
            break;
    }
    return spec;
}

}  // namespace isingpds
