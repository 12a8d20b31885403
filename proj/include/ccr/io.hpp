// Copyright 2026 The ccr-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON state files and report / verdict serialization.
//
//   density matrix: {"dim": d, "matrix": [[[re, im], ...], ...]}
//   bipartite ket:  {"dims": [dA, dB], "amplitudes": [[re, im], ...]}

#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "ccr/complementarity.hpp"
#include "ccr/props.hpp"
#include "ccr/states.hpp"

namespace ccr::io {

using json = nlohmann::json;
using State = std::variant<DensityMatrix, BipartitePureState>;

namespace detail {

inline cplx parse_complex(const json& j, const std::string& field) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw InputError("field '" + field + "': expected [re, im] pair of numbers");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

inline std::size_t parse_dim(const json& j, const std::string& field) {
    if (!j.is_number_integer() || j.get<long long>() < 1) {
        throw InputError("field '" + field + "': expected a positive integer");
    }
    return j.get<std::size_t>();
}

inline const json& require(const json& doc, const char* field) {
    auto it = doc.find(field);
    if (it == doc.end()) throw InputError(std::string("missing field '") + field + "'");
    return *it;
}

inline json complex_to_json(cplx z) { return json::array({z.real(), z.imag()}); }

}  // namespace detail

inline State parse_state(const json& doc) {
    if (!doc.is_object()) throw InputError("state document: expected a JSON object");
    if (doc.contains("matrix") || doc.contains("dim")) {
        const std::size_t d = detail::parse_dim(detail::require(doc, "dim"), "dim");
        if (d > kMaxDim) throw InputError("field 'dim': " + std::to_string(d) + " exceeds 64");
        const json& rows = detail::require(doc, "matrix");
        if (!rows.is_array() || rows.size() != d) throw InputError("field 'matrix': expected " + std::to_string(d) + " rows");
        Matrix m(d, d);
        for (std::size_t i = 0; i < d; ++i) {
            const std::string row_field = "matrix[" + std::to_string(i) + "]";
            if (!rows[i].is_array() || rows[i].size() != d) {
                throw InputError("field '" + row_field + "': expected " + std::to_string(d) + " entries");
            }
            for (std::size_t k = 0; k < d; ++k)
                m(i, k) = detail::parse_complex(rows[i][k], row_field + "[" + std::to_string(k) + "]");
        }
        return DensityMatrix(std::move(m));
    }
    if (doc.contains("amplitudes") || doc.contains("dims")) {
        const json& dims = detail::require(doc, "dims");
        if (!dims.is_array() || dims.size() != 2) throw InputError("field 'dims': expected [dA, dB]");
        const std::size_t da = detail::parse_dim(dims[0], "dims[0]");
        const std::size_t db = detail::parse_dim(dims[1], "dims[1]");
        if (da > kMaxDim || db > kMaxDim) throw InputError("field 'dims': factor dimension exceeds 64");
        const json& amps = detail::require(doc, "amplitudes");
        if (!amps.is_array() || amps.size() != da * db) {
            throw InputError("field 'amplitudes': expected " + std::to_string(da * db) + " entries");
        }
        Ket psi(da * db);
        for (std::size_t i = 0; i < psi.size(); ++i)
            psi[i] = detail::parse_complex(amps[i], "amplitudes[" + std::to_string(i) + "]");
        return BipartitePureState(da, db, std::move(psi));
    }
    throw InputError("state document: expected fields 'dim'/'matrix' or 'dims'/'amplitudes'");
}

inline State parse_state(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
    return parse_state(doc);
}

inline State parse_state(const char* text) { return parse_state(std::string(text)); }

inline State load_state(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open state file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_state(buf.str());
}

inline json to_json(const DensityMatrix& rho) {
    json rows = json::array();
    for (std::size_t i = 0; i < rho.dim(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < rho.dim(); ++k) row.push_back(detail::complex_to_json(rho(i, k)));
        rows.push_back(std::move(row));
    }
    return {{"dim", rho.dim()}, {"matrix", std::move(rows)}};
}

inline json to_json(const BipartitePureState& psi) {
    json amps = json::array();
    for (cplx z : psi.amplitudes()) amps.push_back(detail::complex_to_json(z));
    return {{"dims", {psi.dim_a(), psi.dim_b()}}, {"amplitudes", std::move(amps)}};
}

// Flat object of named reals; key names are those of QuantifierReport.
inline json to_json(const QuantifierReport& r) {
    json out = json::object();
    out["dim"] = r.dim;
    for (const auto& [k, v] : r.measures()) out[k] = v;
    for (const auto& [k, v] : r.residuals()) out[k] = v;
    out["residuals_ok"] = r.residuals_ok();
    out["entanglement_interpretation_valid"] = r.entanglement_interpretation_valid;
    return out;
}

inline json to_json(const PropertyVerdict& v) {
    return {{"name", v.name},   {"trials", v.trials}, {"worst_violation", v.worst_violation},
            {"slack", v.slack}, {"pass", v.pass},     {"seed", v.seed}};
}

inline json to_json(const std::vector<PropertyVerdict>& verdicts) {
    json arr = json::array();
    for (const auto& v : verdicts) arr.push_back(to_json(v));
    return arr;
}

}  // namespace ccr::io
