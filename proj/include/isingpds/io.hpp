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

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "isingpds/generators.hpp"
#include "isingpds/model.hpp"
#include "isingpds/solver.hpp"

namespace isingpds {

inline constexpr const char* kInstanceFormat = "ising-v1";

/// Weight convention of a stored instance. Hamiltonian weights are twice the
/// scalar-form J and are halved on load.
enum class Convention { kScalar, kHamiltonian };

/// Parses an ising-v1 JSON document.
IsingModel instance_from_json(const nlohmann::json& doc);

/// ising-v1 document in the scalar convention. `spec`, when given, is kept
/// under "generator" so the instance can be regenerated.
nlohmann::json instance_to_json(const IsingModel& model,
                                const std::optional<InstanceSpec>& spec = std::nullopt);

/// Text edge list: "d m [one-indexed]", m lines "i j w", then optional
/// "F i w" field lines. Weights are taken in the scalar convention.
IsingModel parse_edge_list(std::istream& in);

/// JSON when the first non-blank character is '{', edge list otherwise.
IsingModel load_instance(const std::filesystem::path& path);
void save_instance(const std::filesystem::path& path, const IsingModel& model,
                   const std::optional<InstanceSpec>& spec = std::nullopt);

nlohmann::json spec_to_json(const InstanceSpec& spec);
InstanceSpec spec_from_json(const nlohmann::json& doc);

/// One row of benchmark output.
struct ResultRecord {
    std::string instance_id;
    std::string family;
    std::size_t d = 0;
    std::uint64_t seed = 0;
    double eta = 0.0;
    std::size_t iterations = 0;
    double wall_time_s = 0.0;
    double energy = 0.0;
    std::optional<double> chi_hat;
    std::optional<double> tts;
    std::optional<double> speed;
    std::string solver;
};

/// Fixed column header (results schema v1).
extern const char* const kResultCsvHeader;

std::string to_csv_row(const ResultRecord& record);
ResultRecord parse_csv_row(const std::string& line);

/// Deterministic part of a solve result as JSON; timing fields are added only
/// when `with_timing` is set.
nlohmann::json result_to_json(const SolveResult& result, bool with_timing);

}  // namespace isingpds
