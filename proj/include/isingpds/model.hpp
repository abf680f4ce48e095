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
#include <initializer_list>
#include <span>
#include <vector>

namespace isingpds {

using Spin = std::int8_t;

/// One upper-triangular entry of the symmetric coupling matrix, i < j.
///
/// Weights are in the scalar convention E(s) = s^T J s + h^T s, so a stored
/// entry contributes 2 * weight * s_i * s_j to the energy.
struct Coupling {
    std::size_t i = 0;
    std::size_t j = 0;
    double weight = 0.0;

    friend bool operator==(const Coupling&, const Coupling&) = default;
};

/// What to do when the same (i, j) pair is supplied more than once.
enum class DuplicatePolicy { kSum, kReject };

/// Neighbour entry of the compressed adjacency.
struct Neighbor {
    std::size_t index = 0;
    double weight = 0.0;
};

/// Immutable Ising instance: d spins, symmetric zero-diagonal couplings,
/// a field vector and a constant energy offset.
///
/// Couplings are normalised on construction: pairs given as (j, i) are
/// swapped, duplicates are summed (or rejected), exact zeros are dropped and
/// the list is sorted by (i, j). A row-compressed adjacency is built alongside
/// so that neighbour scans and J*x cost O(nnz).
class IsingModel {
 public:
    IsingModel() = default;

    IsingModel(std::size_t d, std::vector<Coupling> couplings, std::vector<double> fields,
               double offset = 0.0, DuplicatePolicy duplicates = DuplicatePolicy::kSum);

    std::size_t size() const noexcept { return d_; }
    std::span<const Coupling> couplings() const noexcept { return couplings_; }
    std::span<const double> fields() const noexcept { return fields_; }
    double field(std::size_t i) const { return fields_[i]; }
    double offset() const noexcept { return offset_; }

    std::span<const Neighbor> neighbors(std::size_t i) const {
        return {adjacency_.data() + row_start_[i], adjacency_.data() + row_start_[i + 1]};
    }
    std::size_t degree(std::size_t i) const { return row_start_[i + 1] - row_start_[i]; }

    /// Copy with a different constant offset.
    IsingModel with_offset(double offset) const;

    /// Row-major d x d symmetric matrix J (both triangles filled).
    std::vector<double> dense_couplings() const;

    friend bool operator==(const IsingModel& a, const IsingModel& b) {
        return a.d_ == b.d_ && a.offset_ == b.offset_ && a.fields_ == b.fields_ &&
               a.couplings_ == b.couplings_;
    }

 private:
    void build_adjacency();

    std::size_t d_ = 0;
    std::vector<Coupling> couplings_;
    std::vector<double> fields_;
    double offset_ = 0.0;
    std::vector<std::size_t> row_start_ = {0};
    std::vector<Neighbor> adjacency_;
};

/// A point of {-1, +1}^d.
class SpinConfiguration {
 public:
    SpinConfiguration() = default;
    explicit SpinConfiguration(std::vector<Spin> spins);
    SpinConfiguration(std::initializer_list<int> spins);

    /// All spins set to `value`.
    static SpinConfiguration uniform(std::size_t d, Spin value = 1);

    std::size_t size() const noexcept { return spins_.size(); }
    bool empty() const noexcept { return spins_.empty(); }
    Spin operator[](std::size_t i) const { return spins_[i]; }
    void flip(std::size_t i) { spins_[i] = static_cast<Spin>(-spins_[i]); }
    void set(std::size_t i, Spin value);
    std::span<const Spin> values() const noexcept { return spins_; }

    friend bool operator==(const SpinConfiguration&, const SpinConfiguration&) = default;
    /// Lexicographic with -1 < +1.
    friend auto operator<=>(const SpinConfiguration& a, const SpinConfiguration& b) {
        return a.spins_ <=> b.spins_;
    }

 private:
    std::vector<Spin> spins_;
};

/// Set of spin indices to flip together. Stored sorted.
class FlipSet {
 public:
    FlipSet() = default;
    FlipSet(std::vector<std::size_t> indices, std::size_t d);

    std::span<const std::size_t> indices() const noexcept { return indices_; }
    std::size_t size() const noexcept { return indices_.size(); }
    bool empty() const noexcept { return indices_.empty(); }

 private:
    std::vector<std::size_t> indices_;
};

/// offset + s^T J s + h^T s.
double energy(const IsingModel& model, const SpinConfiguration& s);

/// E(X_F s) - E(s) from local fields, including the correction for pairs
/// that lie inside F.
double flip_delta(const IsingModel& model, const SpinConfiguration& s, const FlipSet& flips);

/// Single-spin version, -4 s_i (J s)_i - 2 h_i s_i given the local field (J s)_i.
inline double single_flip_delta(double local_field, double field, Spin s_i) {
    return -4.0 * s_i * local_field - 2.0 * field * s_i;
}

SpinConfiguration apply_flips(SpinConfiguration s, const FlipSet& flips);

/// J * x over the symmetric coupling matrix.
std::vector<double> matvec(const IsingModel& model, std::span<const double> x);

/// J * s written into `out` (resized to d).
void local_fields(const IsingModel& model, std::span<const Spin> s, std::vector<double>& out);

/// Largest absolute row sum of J, max_i sum_j |J_ij|.
double max_abs_row_sum(const IsingModel& model);

/// Frobenius norm of the symmetric J, sqrt(2 * sum over stored couplings of J_ij^2).
double frobenius_norm(const IsingModel& model);

/// sum_i |h_i|.
double field_l1_norm(const IsingModel& model);

inline int sign_or_zero(double x) { return (x > 0.0) - (x < 0.0); }

}  // namespace isingpds
