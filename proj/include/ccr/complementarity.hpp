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

// Coherence, predictability, entropy and correlation quantifiers, and the
// complete complementarity relations (CCRs) tying them together.
//
// All logarithms are natural. Basis-dependent quantities refer to the
// standard (path) basis.

#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ccr/states.hpp"
#include "ccr/uncertainty.hpp"

namespace ccr {

inline constexpr double kMeasureClamp = 1e-10;
inline constexpr double kResidualTolerance = 1e-9;

namespace detail {

inline double entropy_of(std::span<const double> probabilities) {
    double s = 0.0;
    for (double p : probabilities)
        if (p > 0.0) s -= p * std::log(p);
    return s;
}

// sum_{j != k} sqrt(p_j p_k)
inline double offdiagonal_root_sum(const DensityMatrix& rho) {
    const auto p = rho.populations();
    double s = 0.0;
    for (std::size_t j = 0; j < p.size(); ++j)
        for (std::size_t k = 0; k < p.size(); ++k)
            if (j != k) s += std::sqrt(p[j] * p[k]);
    return s;
}

inline double purity(const DensityMatrix& rho) {
    double s = 0.0;
    for (cplx z : rho.matrix().entries()) s += abs2(z);
    return s;
}

inline double diagonal_purity(const DensityMatrix& rho) {
    double s = 0.0;
    for (double p : rho.populations()) s += p * p;
    return s;
}

}  // namespace detail

// S_l = 1 - Tr rho^2
inline double linear_entropy(const DensityMatrix& rho) {
    return nonnegative(1.0 - detail::purity(rho), kMeasureClamp, "linear entropy");
}

// S_vn = -sum lambda ln lambda
inline double vn_entropy(const DensityMatrix& rho) { return detail::entropy_of(rho.spectrum()); }

inline double max_linear_entropy(std::size_t d) { return (static_cast<double>(d) - 1.0) / static_cast<double>(d); }

inline double linear_entropy_diag(const DensityMatrix& rho) {
    return nonnegative(1.0 - detail::diagonal_purity(rho), kMeasureClamp, "diagonal linear entropy");
}

inline double vn_entropy_diag(const DensityMatrix& rho) { return detail::entropy_of(rho.populations()); }

// P_l = S_l^max - S_l(rho_diag) = sum_j rho_jj^2 - 1/d
inline double predictability_l(const DensityMatrix& rho) {
    return nonnegative(detail::diagonal_purity(rho) - 1.0 / static_cast<double>(rho.dim()), kMeasureClamp,
                       "linear predictability");
}

// P_vn = ln d - S_vn(rho_diag)
inline double predictability_vn(const DensityMatrix& rho) {
    return nonnegative(std::log(static_cast<double>(rho.dim())) - vn_entropy_diag(rho), kMeasureClamp,
                       "entropic predictability");
}

// P_l1 = d - 1 - sum_{j != k} sqrt(rho_jj rho_kk)
inline double predictability_l1(const DensityMatrix& rho) {
    return nonnegative(static_cast<double>(rho.dim()) - 1.0 - detail::offdiagonal_root_sum(rho), kMeasureClamp,
                       "l1 predictability");
}

inline double coherence_l1(const DensityMatrix& rho) {
    double s = 0.0;
    for (std::size_t j = 0; j < rho.dim(); ++j)
        for (std::size_t k = 0; k < rho.dim(); ++k)
            if (j != k) s += std::abs(rho(j, k));
    return s;
}

inline double coherence_hs(const DensityMatrix& rho) {
    double s = 0.0;
    for (std::size_t j = 0; j < rho.dim(); ++j)
        for (std::size_t k = 0; k < rho.dim(); ++k)
            if (j != k) s += abs2(rho(j, k));
    return s;
}

// Wigner-Yanase coherence: sum_{j != k} |(sqrt(rho))_jk|^2.
inline double coherence_wy(const DensityMatrix& rho) {
    const Matrix& s = rho.sqrt().matrix();
    double sum = 0.0;
    for (std::size_t j = 0; j < rho.dim(); ++j)
        for (std::size_t k = j + 1; k < rho.dim(); ++k) sum += 2.0 * abs2(s(j, k));
    return sum;
}

// C_re = S_vn(D(rho)) - S_vn(rho)
inline double coherence_re(const DensityMatrix& rho) {
    return nonnegative(vn_entropy(dephase(rho)) - vn_entropy(rho), kMeasureClamp, "relative entropy of coherence");
}

// W_l1 = sum_{j != k} (sqrt(rho_jj rho_kk) - |rho_jk|)
inline double w_l1(const DensityMatrix& rho) {
    return nonnegative(detail::offdiagonal_root_sum(rho) - coherence_l1(rho), kMeasureClamp, "W_l1");
}

// I_BZ = Tr rho^2 - 1/d
inline double bz_information(const DensityMatrix& rho) {
    return detail::purity(rho) - 1.0 / static_cast<double>(rho.dim());
}

// E = sqrt(2 (1 - Tr rho_A^2))
inline double concurrence(const BipartitePureState& psi) {
    const DensityMatrix rho_a = psi.reduced(Subsystem::A);
    return std::sqrt(2.0 * linear_entropy(rho_a));
}

// Everything computable for one state, plus the four CCR residuals.
struct QuantifierReport {
    std::size_t dim = 0;
    double S_l = 0, S_l_diag = 0, S_vn = 0, S_vn_diag = 0;
    double P_l = 0, P_vn = 0, P_l1 = 0;
    double C_wy = 0, C_hs = 0, C_l1 = 0, C_re = 0;
    double W_l1 = 0, I_BZ = 0, U_q = 0, U_c = 0;
    std::optional<double> concurrence;

    double r_unpl = 0;  // U_q + U_c + P_l - (d - 1)/d
    double r_rel = 0;   // C_re + S_vn + P_vn - ln d
    double r_l1 = 0;    // C_l1 + W_l1 + P_l1 - (d - 1)
    double r_bz = 0;    // I_BZ - P_l - C_hs

    // W_l1, U_c, S_vn read as entanglement only when a global pure state is known.
    bool entanglement_interpretation_valid = false;

    bool residuals_ok() const {
        return std::abs(r_unpl) <= kResidualTolerance && std::abs(r_rel) <= kResidualTolerance &&
               std::abs(r_l1) <= kResidualTolerance && std::abs(r_bz) <= kResidualTolerance;
    }

    // Stable key order for serialization.
    std::vector<std::pair<std::string, double>> measures() const {
        std::vector<std::pair<std::string, double>> out{
            {"S_l", S_l},   {"S_l_diag", S_l_diag}, {"S_vn", S_vn}, {"S_vn_diag", S_vn_diag}, {"P_l", P_l},
            {"P_vn", P_vn}, {"P_l1", P_l1},         {"C_wy", C_wy}, {"C_hs", C_hs},           {"C_l1", C_l1},
            {"C_re", C_re}, {"W_l1", W_l1},         {"I_BZ", I_BZ}, {"U_q", U_q},             {"U_c", U_c}};
        if (concurrence) out.emplace_back("concurrence", *concurrence);
        return out;
    }

    std::vector<std::pair<std::string, double>> residuals() const {
        return {{"r_unpl", r_unpl}, {"r_rel", r_rel}, {"r_l1", r_l1}, {"r_bz", r_bz}};
    }
};

inline QuantifierReport ccr_report(const DensityMatrix& rho) {
    const double d = static_cast<double>(rho.dim());
    QuantifierReport r;
    r.dim = rho.dim();
    r.S_l = linear_entropy(rho);
    r.S_l_diag = linear_entropy_diag(rho);
    r.S_vn = vn_entropy(rho);
    r.S_vn_diag = vn_entropy_diag(rho);
    r.P_l = predictability_l(rho);
    r.P_vn = predictability_vn(rho);
    r.P_l1 = predictability_l1(rho);
    r.C_wy = coherence_wy(rho);
    r.C_hs = coherence_hs(rho);
    r.C_l1 = coherence_l1(rho);
    r.C_re = coherence_re(rho);
    r.W_l1 = w_l1(rho);
    r.I_BZ = bz_information(rho);
    r.U_q = total_quantum_uncertainty(rho);
    r.U_c = total_classical_uncertainty(rho);

    r.r_unpl = r.U_q + r.U_c + r.P_l - max_linear_entropy(rho.dim());
    r.r_rel = r.C_re + r.S_vn + r.P_vn - std::log(d);
    r.r_l1 = r.C_l1 + r.W_l1 + r.P_l1 - (d - 1.0);
    r.r_bz = r.I_BZ - r.P_l - r.C_hs;
    return r;
}

// Report for rho that is known to be the reduced state of the pure state psi
// on subsystem `side`.
inline QuantifierReport ccr_report(const DensityMatrix& rho, const BipartitePureState& psi,
                                   Subsystem side = Subsystem::A) {
    const DensityMatrix reduced = psi.reduced(side);
    if (reduced.dim() != rho.dim()) {
        throw DimensionMismatch("ccr_report: state dim " + std::to_string(rho.dim()) + " vs reduced dim " +
                                std::to_string(reduced.dim()));
    }
    const double mismatch = max_abs_diff(reduced.matrix(), rho.matrix());
    if (mismatch > 1e-10) throw InvariantViolation("state equals reduced state of the supplied ket", mismatch, 1e-10);
    QuantifierReport r = ccr_report(rho);
    r.concurrence = concurrence(psi);
    r.entanglement_interpretation_valid = true;
    return r;
}

inline QuantifierReport ccr_report(const BipartitePureState& psi, Subsystem side = Subsystem::A) {
    return ccr_report(psi.reduced(side), psi, side);
}

}  // namespace ccr
