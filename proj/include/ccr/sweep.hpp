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

// Parameter sweeps over the named example families, emitted as CSV.
//
// CSV contract: header row first, then one row per grid point in grid order;
// every number printed with 12 significant digits ("%.12g", '.' decimal
// separator), negative zero printed as 0, '\n' line endings.

#pragma once

#include <cmath>
#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "ccr/complementarity.hpp"
#include "ccr/props.hpp"
#include "ccr/states.hpp"

namespace ccr {

enum class Experiment { Fig1, Fig2, Fig3, Detector };

inline Experiment parse_experiment(const std::string& id) {
    if (id == "fig1") return Experiment::Fig1;
    if (id == "fig2") return Experiment::Fig2;
    if (id == "fig3") return Experiment::Fig3;
    if (id == "detector") return Experiment::Detector;
    throw InvalidArgument("unknown experiment '" + id + "' (expected fig1, fig2, fig3 or detector)");
}

inline std::size_t default_resolution(Experiment e) { return e == Experiment::Fig2 ? 51 : 101; }

struct SweepSpec {
    Experiment experiment = Experiment::Fig1;
    std::size_t resolution = 0;  // points per axis; 0 picks the experiment default
    std::optional<std::string> output;  // stdout when empty
};

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

inline std::string format_number(double x) {
    if (x == 0.0) x = 0.0;  // folds -0 into 0
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

inline void write_csv(std::ostream& out, const CsvTable& table) {
    for (std::size_t c = 0; c < table.header.size(); ++c) out << (c ? "," : "") << table.header[c];
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << format_number(row[c]);
        out << '\n';
    }
}

namespace detail {
inline double grid_point(std::size_t i, std::size_t n) { return static_cast<double>(i) / static_cast<double>(n - 1); }
}  // namespace detail

// I_BZ and P_l of rho = p1|z+><z+| + p2|x+><x+| and sigma = p1|z+><z+| + p2|z-><z-|.
// The two P_l curves differ; both are reported.
inline CsvTable sweep_fig1(std::size_t n) {
    CsvTable t{{"p1", "I_BZ_rho", "I_BZ_sigma", "P_l_rho", "P_l_sigma"}, {}};
    for (std::size_t i = 0; i < n; ++i) {
        const double p1 = detail::grid_point(i, n);
        const Fig1States s = fig1_states(p1);
        t.rows.push_back({p1, bz_information(s.rho), bz_information(s.sigma), predictability_l(s.rho),
                          predictability_l(s.sigma)});
    }
    return t;
}

// l1 CCR on the closed-form reduced qubit of the three-qubit family.
inline CsvTable sweep_fig2(std::size_t n) {
    CsvTable t{{"p", "eps", "C_l1", "W_l1", "P_l1", "sum"}, {}};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const double p = detail::grid_point(i, n);
            const double eps = detail::grid_point(k, n);
            const DensityMatrix rho_b = three_qubit_phi(p, eps).rho_b;
            const double c = coherence_l1(rho_b), w = w_l1(rho_b), pl1 = predictability_l1(rho_b);
            t.rows.push_back({p, eps, c, w, pl1, c + w + pl1});
        }
    return t;
}

// Predictability and correlation measures of x|0,1> + sqrt(1-x^2)|1,0>.
inline CsvTable sweep_fig3(std::size_t n) {
    CsvTable t{{"x", "W_l1", "P_l1", "U_c", "P_l", "S_vn", "P_vn"}, {}};
    for (std::size_t i = 0; i < n; ++i) {
        const double x = detail::grid_point(i, n);
        const DensityMatrix rho_a = x_family_state(x).reduced(Subsystem::A);
        t.rows.push_back({x, w_l1(rho_a), predictability_l1(rho_a), total_classical_uncertainty(rho_a),
                          predictability_l(rho_a), vn_entropy(rho_a), predictability_vn(rho_a)});
    }
    return t;
}

// Balanced two-path detector with real overlap gamma.
inline CsvTable sweep_detector(std::size_t n) {
    CsvTable t{{"gamma", "U_q", "U_c", "P_l"}, {}};
    const cplx a(1.0 / std::sqrt(2.0));
    for (const DetectorPoint& pt : detector_curve(a, a, n)) t.rows.push_back({pt.gamma, pt.U_q, pt.U_c, pt.P_l});
    return t;
}

inline CsvTable run_sweep(const SweepSpec& spec) {
    const std::size_t n = spec.resolution == 0 ? default_resolution(spec.experiment) : spec.resolution;
    if (n < 2) throw InvalidArgument("sweep: resolution must be at least 2, got " + std::to_string(n));
    switch (spec.experiment) {
        case Experiment::Fig1: return sweep_fig1(n);
        case Experiment::Fig2: return sweep_fig2(n);
        case Experiment::Fig3: return sweep_fig3(n);
        case Experiment::Detector: return sweep_detector(n);
    }
    throw InvalidArgument("sweep: unknown experiment");
}

}  // namespace ccr
