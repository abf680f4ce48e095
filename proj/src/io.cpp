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

#include "isingpds/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <set>
#include <sstream>

#include "isingpds/errors.hpp"

namespace isingpds {

using nlohmann::json;

namespace {

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

double finite_number(const json& value, const std::string& what) {
    if (!value.is_number()) throw ParseError(what + " must be a number");
    const double x = value.get<double>();
    if (!std::isfinite(x)) throw ParseError(what + " must be finite");
    return x;
}

std::size_t index_value(const json& value, const std::string& what) {
    if (!value.is_number_integer() || value.get<long long>() < 0) {
        throw ParseError(what + " must be a non-negative integer");
    }
    return value.get<std::size_t>();
}

std::string format12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, ',')) out.push_back(cell);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

double parse_double_cell(const std::string& cell) {
    std::size_t used = 0;
    const double x = std::stod(cell, &used);
    if (used != cell.size()) throw ParseError("bad numeric cell '" + cell + "'");
    return x;
}

std::optional<double> parse_optional_cell(const std::string& cell) {
    if (cell.empty()) return std::nullopt;
    return parse_double_cell(cell);
}

std::string optional_cell(const std::optional<double>& x) { return x ? format12(*x) : ""; }

void require_plain(const std::string& text, const char* column) {
    if (text.find_first_of(",\n\r\"") != std::string::npos) {
        throw ContractViolation(std::string(column) + " must not contain commas, quotes or newlines");
    }
}

}  // namespace

IsingModel instance_from_json(const json& doc) {
    if (!doc.is_object()) throw ParseError("instance document must be a JSON object");
    if (doc.value("format", std::string{}) != kInstanceFormat) {
        throw ParseError(std::string("instance format must be \"") + kInstanceFormat + "\"");
    }
    if (!doc.contains("d")) throw ParseError("missing \"d\"");
    const std::size_t d = index_value(doc["d"], "\"d\"");

    Convention convention = Convention::kScalar;
    if (doc.contains("convention")) {
        const auto& name = doc["convention"];
        if (name == "hamiltonian") {
            convention = Convention::kHamiltonian;
        } else if (name != "scalar") {
            throw ParseError("convention must be \"scalar\" or \"hamiltonian\"");
        }
    }
    const double scale = convention == Convention::kHamiltonian ? 0.5 : 1.0;

    std::vector<Coupling> couplings;
    std::set<std::pair<std::size_t, std::size_t>> seen;
    const json empty = json::array();
    const json& list = doc.contains("couplings") ? doc["couplings"] : empty;
    if (!list.is_array()) throw ParseError("\"couplings\" must be an array");
    for (std::size_t n = 0; n < list.size(); ++n) {
        const std::string where = "coupling #" + std::to_string(n);
        const auto& entry = list[n];
        if (!entry.is_array() || entry.size() != 3) throw ParseError(where + " must be [i, j, w]");
        const std::size_t i = index_value(entry[0], where + " index");
        const std::size_t j = index_value(entry[1], where + " index");
        const double w = finite_number(entry[2], where + " weight");
        if (i >= j) throw ParseError(where + " needs i < j");
        if (j >= d) throw ParseError(where + " index out of range");
        if (!seen.emplace(i, j).second) throw ParseError(where + " duplicates an earlier pair");
        couplings.push_back({i, j, scale * w});
    }

    std::vector<double> fields(d, 0.0);
    if (doc.contains("fields")) {
        const auto& h = doc["fields"];
        if (!h.is_array() || h.size() != d) throw ParseError("\"fields\" must hold d numbers");
        for (std::size_t i = 0; i < d; ++i) fields[i] = finite_number(h[i], "field");
    }
    const double offset = doc.contains("offset") ? finite_number(doc["offset"], "offset") : 0.0;
    return IsingModel(d, std::move(couplings), std::move(fields), offset, DuplicatePolicy::kReject);
}

json instance_to_json(const IsingModel& model, const std::optional<InstanceSpec>& spec) {
    json couplings = json::array();
    for (const auto& c : model.couplings()) couplings.push_back({c.i, c.j, c.weight});
    json doc = {
            {"format", kInstanceFormat},
            {"d", model.size()},
            {"convention", "scalar"},
            {"couplings", std::move(couplings)},
            {"fields", std::vector<double>(model.fields().begin(), model.fields().end())},
            {"offset", model.offset()},
    };
    if (spec) doc["generator"] = spec_to_json(*spec);
    return doc;
}

IsingModel parse_edge_list(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++line_no;
            const auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos || line[first] == '#') continue;
            return true;
        }
        return false;
    };

    if (!next_line()) throw ParseError("empty edge list", line_no);
    std::istringstream header(line);
    long long d_raw = -1;
    long long m_raw = -1;
    if (!(header >> d_raw >> m_raw) || d_raw < 0 || m_raw < 0) {
        throw ParseError("header must be \"d m [one-indexed]\"", line_no);
    }
    bool one_indexed = false;
    std::string flag;
    if (header >> flag) {
        if (flag != "one-indexed" && flag != "1") {
            throw ParseError("unknown header flag '" + flag + "'", line_no);
        }
        one_indexed = true;
    }
    const auto d = static_cast<std::size_t>(d_raw);
    const long long base = one_indexed ? 1 : 0;

    auto read_index = [&](std::istringstream& fields, const char* what) {
        long long raw = 0;
        if (!(fields >> raw)) throw ParseError(std::string("expected ") + what, line_no);
        raw -= base;
        if (raw < 0 || static_cast<std::size_t>(raw) >= d) {
            throw ParseError(std::string(what) + " out of range", line_no);
        }
        return static_cast<std::size_t>(raw);
    };
    auto read_weight = [&](std::istringstream& fields) {
        double w = 0.0;
        if (!(fields >> w) || !std::isfinite(w)) throw ParseError("expected a finite weight", line_no);
        std::string extra;
        if (fields >> extra) throw ParseError("trailing text '" + extra + "'", line_no);
        return w;
    };

    std::vector<Coupling> couplings;
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (long long e = 0; e < m_raw; ++e) {
        if (!next_line()) throw ParseError("expected " + std::to_string(m_raw) + " edges", line_no);
        std::istringstream fields(line);
        std::size_t i = read_index(fields, "vertex index");
        std::size_t j = read_index(fields, "vertex index");
        const double w = read_weight(fields);
        if (i == j) throw ParseError("self-loop", line_no);
        if (i > j) std::swap(i, j);
        if (!seen.emplace(i, j).second) throw ParseError("duplicate edge", line_no);
        couplings.push_back({i, j, w});
    }

    std::vector<double> h(d, 0.0);
    while (next_line()) {
        std::istringstream fields(line);
        std::string tag;
        fields >> tag;
        if (tag != "F") throw ParseError("expected a field line \"F i w\"", line_no);
        const std::size_t i = read_index(fields, "field index");
        h[i] = read_weight(fields);
    }
    return IsingModel(d, std::move(couplings), std::move(h), 0.0, DuplicatePolicy::kReject);
}

IsingModel load_instance(const std::filesystem::path& path) {
    const std::string text = read_file(path);
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        json doc;
        try {
            doc = json::parse(text);
        } catch (const json::parse_error& e) {
            throw ParseError(path.string() + ": " + e.what());
        }
        return instance_from_json(doc);
    }
    std::istringstream in(text);
    return parse_edge_list(in);
}

void save_instance(const std::filesystem::path& path, const IsingModel& model,
                   const std::optional<InstanceSpec>& spec) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << instance_to_json(model, spec).dump() << '\n';
}

json spec_to_json(const InstanceSpec& spec) {
    json doc = {{"family", family_name(spec.family)}, {"d", spec.d}, {"seed", spec.seed}};
    switch (spec.family) {
        case Family::kKRegular:
            doc["k"] = spec.k;
            doc["j_dist"] = spec.j_dist.to_string();
            doc["h_dist"] = spec.h_dist.to_string();
            break;
        case Family::kComplete:
            doc["j_dist"] = spec.j_dist.to_string();
            doc["h_dist"] = spec.h_dist.to_string();
            break;
        case Family::kCompleteScale: doc["alpha_max"] = spec.alpha_max; break;
        case Family::kMaxCut3: doc["k"] = spec.k; break;
        case Family::kMaxCutD: doc["density"] = spec.density; break;
        case Family::kNAE3SAT: doc["clause_ratio"] = spec.clause_ratio; break;
        case Family::kSKIsing:
        case Family::kSKQubo: break;
    }
    return doc;
}

InstanceSpec spec_from_json(const json& doc) {
    if (!doc.is_object()) throw ParseError("instance spec must be a JSON object");
    InstanceSpec spec;
    try {
        spec.family = parse_family(doc.at("family").get<std::string>());
        spec.d = doc.at("d").get<std::size_t>();
        spec.seed = doc.value("seed", std::uint64_t{0});
        if (spec.family == Family::kMaxCut3) spec.k = 3;
        spec.k = doc.value("k", spec.k);
        spec.density = doc.value("density", spec.density);
        spec.clause_ratio = doc.value("clause_ratio", spec.clause_ratio);
        spec.alpha_max = doc.value("alpha_max", spec.alpha_max);
        if (doc.contains("j_dist")) spec.j_dist = Distribution::parse(doc["j_dist"].get<std::string>());
        if (doc.contains("h_dist")) spec.h_dist = Distribution::parse(doc["h_dist"].get<std::string>());
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad instance spec: ") + e.what());
    }
    spec.validate();
    return spec;
}

const char* const kResultCsvHeader =
        "instance_id,family,d,seed,eta,iterations,wall_time_s,energy,chi_hat,tts,speed,solver";

std::string to_csv_row(const ResultRecord& r) {
    require_plain(r.instance_id, "instance_id");
    require_plain(r.family, "family");
    require_plain(r.solver, "solver");
    std::ostringstream out;
    out << r.instance_id << ',' << r.family << ',' << r.d << ',' << r.seed << ',' << format12(r.eta)
        << ',' << r.iterations << ',' << format12(r.wall_time_s) << ',' << format12(r.energy) << ','
        << optional_cell(r.chi_hat) << ',' << optional_cell(r.tts) << ','
        << optional_cell(r.speed) << ',' << r.solver;
    return out.str();
}

ResultRecord parse_csv_row(const std::string& line) {
    const auto cells = split_fields(line);
    if (cells.size() != 12) throw ParseError("result row must have 12 columns");
    ResultRecord r;
    try {
        r.instance_id = cells[0];
        r.family = cells[1];
        r.d = std::stoull(cells[2]);
        r.seed = std::stoull(cells[3]);
        r.eta = parse_double_cell(cells[4]);
        r.iterations = std::stoull(cells[5]);
        r.wall_time_s = parse_double_cell(cells[6]);
        r.energy = parse_double_cell(cells[7]);
        r.chi_hat = parse_optional_cell(cells[8]);
        r.tts = parse_optional_cell(cells[9]);
        r.speed = parse_optional_cell(cells[10]);
        r.solver = cells[11];
    } catch (const std::logic_error& e) {
        throw ParseError(std::string("bad result row: ") + e.what());
    }
    return r;
}

json result_to_json(const SolveResult& result, bool with_timing) {
    std::vector<int> spins(result.s.values().begin(), result.s.values().end());
    json doc = {
            {"d", result.s.size()},
            {"energy", result.energy},
            {"eta", result.eta},
            {"reduced_d", result.reduced_d},
            {"prune_rounds", result.prune_rounds},
            {"iterations", result.iterations},
            {"iterations_per_restart", result.iterations_per_restart},
            {"best_restart", result.best_restart},
            {"spins", std::move(spins)},
    };
    doc["chi_hat"] = result.chi_hat ? json(*result.chi_hat) : json(nullptr);
    if (with_timing) {
        doc["wall_time_s"] = result.wall_time_s;
        doc["tts"] = result.tts ? json(*result.tts) : json(nullptr);
        doc["speed"] = result.speed ? json(*result.speed) : json(nullptr);
    }
    return doc;
}

}  // namespace isingpds
