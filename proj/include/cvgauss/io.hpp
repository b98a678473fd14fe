// Copyright 2026 The cvgauss Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON encodings of states and circuits. Requires nlohmann/json on the include path.

#ifndef CVGAUSS_IO_HPP
#define CVGAUSS_IO_HPP

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cvgauss/circuit.hpp"

namespace cvgauss {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// Malformed input text. Line and column are 1-based.
struct ParseError : std::runtime_error {
    ParseError(const std::string &msg, std::size_t line, std::size_t column)
        : std::runtime_error(msg + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
          line(line),
          column(column) {}
    std::size_t line;
    std::size_t column;
};

/// 1-based line and column of a byte offset.
inline std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
    offset = std::min(offset, text.size());
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t k = 0; k < offset; ++k) {
        if (text[k] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

inline Json parse_json(std::string_view text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error &e) {
        // nlohmann reports the offset one past the offending byte.
        const std::size_t at = e.byte > 0 ? e.byte - 1 : 0;
        const auto [line, col] = line_column(text, at);
        throw ParseError("JSON syntax error", line, col);
    }
}

inline std::string read_text_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline Json vector_to_json(const Vector &v) {
    Json a = Json::array();
    for (Eigen::Index k = 0; k < v.size(); ++k) a.push_back(v(k));
    return a;
}

inline Json matrix_to_json(const Matrix &m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

/// {"n_modes": N, "mean": [2N], "cov": [[2N x 2N]]}. Doubles are written with round-trip precision.
inline Json state_to_json(const GaussianState &state) {
    return Json{{"n_modes", state.n_modes()}, {"mean", vector_to_json(state.mean())}, {"cov", matrix_to_json(state.cov())}};
}

inline GaussianState state_from_json(const Json &j) {
    try {
        const auto n = j.at("n_modes").get<std::size_t>();
        const auto &mean = j.at("mean");
        const auto &cov = j.at("cov");
        const auto dim = 2 * n;
        if (!mean.is_array() || mean.size() != dim) {
            throw StructuralError("mean must have 2 * n_modes entries");
        }
        if (!cov.is_array() || cov.size() != dim) {
            throw StructuralError("cov must have 2 * n_modes rows");
        }
        Vector m(static_cast<Eigen::Index>(dim));
        Matrix v(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
        for (std::size_t i = 0; i < dim; ++i) {
            m(static_cast<Eigen::Index>(i)) = mean[i].get<double>();
            if (!cov[i].is_array() || cov[i].size() != dim) {
                throw StructuralError("cov row " + std::to_string(i) + " must have 2 * n_modes entries");
            }
            for (std::size_t k = 0; k < dim; ++k) {
                v(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = cov[i][k].get<double>();
            }
        }
        return {std::move(m), std::move(v)};
    } catch (const Json::exception &e) {
        throw StructuralError(std::string("bad state description: ") + e.what());
    }
}

inline GaussianState read_state_file(const std::string &path) {
    return state_from_json(parse_json(read_text_file(path)));
}

inline void write_state_file(const std::string &path, const GaussianState &state) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write '" + path + "'");
    }
    out << state_to_json(state).dump(2) << '\n';
}

namespace detail {

inline double profile_entry(const Json &v) {
    if (v.is_string()) {
        const auto s = v.get<std::string>();
        if (s == "inf") return std::numeric_limits<double>::infinity();
        if (s == "-inf") return -std::numeric_limits<double>::infinity();
        throw CircuitError("squeeze_profile entries must be numbers, \"inf\" or \"-inf\"");
    }
    return v.get<double>();
}

}  // namespace detail

/// {"schema": 1, "modes": N, "squeeze_profile": [...]?, "ops": [{"gate", "params", "modes"}]}.
inline Circuit circuit_from_json(const Json &j) {
    Circuit c;
    try {
        if (j.contains("schema") && j.at("schema").get<int>() != kSchemaVersion) {
            throw CircuitError("unsupported circuit schema version");
        }
        for (const auto &[key, value] : j.items()) {
            if (key != "schema" && key != "modes" && key != "squeeze_profile" && key != "ops") {
                throw CircuitError("unknown circuit field '" + key + "'");
            }
        }
        c.modes = j.at("modes").get<std::size_t>();
        if (j.contains("squeeze_profile")) {
            for (const auto &v : j.at("squeeze_profile")) c.squeeze_profile.push_back(detail::profile_entry(v));
        }
        for (const auto &o : j.at("ops")) {
            for (const auto &[key, value] : o.items()) {
                if (key != "gate" && key != "params" && key != "modes") {
                    throw CircuitError("unknown operation field '" + key + "'");
                }
            }
            Operation op;
            op.gate = o.at("gate").get<std::string>();
            if (o.contains("params")) op.params = o.at("params").get<std::vector<double>>();
            op.modes = o.at("modes").get<std::vector<std::size_t>>();
            c.ops.push_back(std::move(op));
        }
    } catch (const Json::exception &e) {
        throw CircuitError(std::string("bad circuit description: ") + e.what());
    }
    validate(c);
    return c;
}

inline Json circuit_to_json(const Circuit &c) {
    Json ops = Json::array();
    for (const auto &op : c.ops) {
        ops.push_back(Json{{"gate", op.gate}, {"params", op.params}, {"modes", op.modes}});
    }
    Json j{{"schema", kSchemaVersion}, {"modes", c.modes}, {"ops", std::move(ops)}};
    if (!c.squeeze_profile.empty()) {
        Json prof = Json::array();
        for (double r : c.squeeze_profile) {
            if (std::isinf(r)) {
                prof.push_back(r > 0 ? "inf" : "-inf");
            } else {
                prof.push_back(r);
            }
        }
        j["squeeze_profile"] = std::move(prof);
    }
    return j;
}

inline Circuit read_circuit_file(const std::string &path) { return circuit_from_json(parse_json(read_text_file(path))); }

}  // namespace cvgauss

#endif
