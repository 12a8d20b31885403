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

// Generalized Gell-Mann matrices (GMM), Bloch decomposition and the
// variance-sum identities built on them.
//
// Labels keep 1-based indices: diagonal members are "d(m)" for
// m = 1..d-1, off-diagonal ones "s(j,k)" / "a(j,k)" for 1 <= j < k <= d.
// Storage is 0-based.

#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "ccr/complementarity.hpp"
#include "ccr/uncertainty.hpp"

namespace ccr {

struct GmmElement {
    std::string label;
    HermitianMatrix matrix;
};

struct GmmBasis {
    std::size_t dim = 0;
    std::vector<GmmElement> diagonal;       // d - 1 members
    std::vector<GmmElement> symmetric;      // d(d-1)/2 members
    std::vector<GmmElement> antisymmetric;  // d(d-1)/2 members, paired index-wise with `symmetric`

    std::size_t size() const { return diagonal.size() + symmetric.size() + antisymmetric.size(); }

    std::vector<const GmmElement*> all() const {
        std::vector<const GmmElement*> out;
        for (const auto& g : diagonal) out.push_back(&g);
        for (const auto& g : symmetric) out.push_back(&g);
        for (const auto& g : antisymmetric) out.push_back(&g);
        return out;
    }
};

inline GmmBasis gmm_basis(std::size_t d) {
    if (d < 2) throw InvalidArgument("gmm_basis: d = " + std::to_string(d) + " < 2");
    GmmBasis basis;
    basis.dim = d;
    // Gamma^d_m = sqrt(2/(m(m+1))) (|1><1| + ... + |m><m| - m |m+1><m+1|)
    for (std::size_t m = 1; m < d; ++m) {
        const double norm = std::sqrt(2.0 / static_cast<double>(m * (m + 1)));
        Matrix g(d, d);
        for (std::size_t l = 0; l < m; ++l) g(l, l) = norm;
        g(m, m) = -static_cast<double>(m) * norm;
        basis.diagonal.push_back({"d(" + std::to_string(m) + ")", HermitianMatrix(std::move(g))});
    }
    const cplx i{0.0, 1.0};
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = j + 1; k < d; ++k) {
            const std::string idx = "(" + std::to_string(j + 1) + "," + std::to_string(k + 1) + ")";
            Matrix s(d, d), a(d, d);
            s(j, k) = 1.0;
            s(k, j) = 1.0;
            a(j, k) = -i;
            a(k, j) = i;
            basis.symmetric.push_back({"s" + idx, HermitianMatrix(std::move(s))});
            basis.antisymmetric.push_back({"a" + idx, HermitianMatrix(std::move(a))});
        }
    return basis;
}

// <Gamma|rho>_hs = Tr(Gamma rho), real for Hermitian arguments.
struct BlochCoefficients {
    double identity = 0.0;  // Tr rho
    std::vector<double> diagonal;
    std::vector<double> symmetric;
    std::vector<double> antisymmetric;
};

inline BlochCoefficients bloch_decompose(const GmmBasis& basis, const DensityMatrix& rho) {
    if (basis.dim != rho.dim()) throw DimensionMismatch("bloch_decompose: basis dim vs state dim");
    BlochCoefficients c;
    c.identity = rho.matrix().trace().real();
    auto coeff = [&](const GmmElement& g) { return trace_of_product(g.matrix, rho.matrix()).real(); };
    for (const auto& g : basis.diagonal) c.diagonal.push_back(coeff(g));
    for (const auto& g : basis.symmetric) c.symmetric.push_back(coeff(g));
    for (const auto& g : basis.antisymmetric) c.antisymmetric.push_back(coeff(g));
    return c;
}

inline BlochCoefficients bloch_decompose(const DensityMatrix& rho) { return bloch_decompose(gmm_basis(rho.dim()), rho); }

// rho = Tr(rho)/d I + 1/2 sum_Gamma <Gamma|rho> Gamma
inline Matrix bloch_reconstruct(const GmmBasis& basis, const BlochCoefficients& c) {
    Matrix out = Matrix::identity(basis.dim) * (c.identity / static_cast<double>(basis.dim));
    for (std::size_t n = 0; n < basis.diagonal.size(); ++n) out += basis.diagonal[n].matrix.matrix() * (0.5 * c.diagonal[n]);
    for (std::size_t n = 0; n < basis.symmetric.size(); ++n) out += basis.symmetric[n].matrix.matrix() * (0.5 * c.symmetric[n]);
    for (std::size_t n = 0; n < basis.antisymmetric.size(); ++n)
        out += basis.antisymmetric[n].matrix.matrix() * (0.5 * c.antisymmetric[n]);
    return out;
}

struct GmmExpectationSums {
    double diag_sq_sum;     // sum_m <Gamma^d_m>^2, equals 2 P_l
    double offdiag_sq_sum;  // sum_{j<k} <Gamma^s_jk>^2 + <Gamma^a_jk>^2, equals 2 C_hs
};

inline GmmExpectationSums gmm_expectation_sums(const GmmBasis& basis, const DensityMatrix& rho) {
    const BlochCoefficients c = bloch_decompose(basis, rho);
    GmmExpectationSums s{0.0, 0.0};
    for (double x : c.diagonal) s.diag_sq_sum += x * x;
    for (double x : c.symmetric) s.offdiag_sq_sum += x * x;
    for (double x : c.antisymmetric) s.offdiag_sq_sum += x * x;
    return s;
}

inline GmmExpectationSums gmm_expectation_sums(const DensityMatrix& rho) {
    return gmm_expectation_sums(gmm_basis(rho.dim()), rho);
}

// Variance sums over the diagonal and off-diagonal GMM subsets, evaluated
// both member by member and through the closed forms in P_l and C_hs.
struct GmmVarianceSums {
    double diag_var_sum;            // direct
    double offdiag_var_sum;         // direct
    double diag_var_closed_form;    // 2(d-1)/d - 2 P_l
    double offdiag_var_closed_form; // 2(d-1) - 2 C_hs
};

inline GmmVarianceSums gmm_variance_sums(const GmmBasis& basis, const DensityMatrix& rho) {
    if (basis.dim != rho.dim()) throw DimensionMismatch("gmm_variance_sums: basis dim vs state dim");
    const double d = static_cast<double>(rho.dim());
    GmmVarianceSums s{0.0, 0.0, 0.0, 0.0};
    for (const auto& g : basis.diagonal) s.diag_var_sum += variance(rho, g.matrix);
    for (const auto& g : basis.symmetric) s.offdiag_var_sum += variance(rho, g.matrix);
    for (const auto& g : basis.antisymmetric) s.offdiag_var_sum += variance(rho, g.matrix);
    s.diag_var_closed_form = 2.0 * (d - 1.0) / d - 2.0 * predictability_l(rho);
    s.offdiag_var_closed_form = 2.0 * (d - 1.0) - 2.0 * coherence_hs(rho);
    return s;
}

inline GmmVarianceSums gmm_variance_sums(const DensityMatrix& rho) { return gmm_variance_sums(gmm_basis(rho.dim()), rho); }

// C(rho, Gamma) = 1/2 sum V(diag) + 1/2 sum V(offdiag) - (d - 1), from the
// directly summed variances.
inline double gmm_classical_uncertainty(const GmmVarianceSums& sums, std::size_t d) {
    return nonnegative(0.5 * sums.diag_var_sum + 0.5 * sums.offdiag_var_sum - (static_cast<double>(d) - 1.0),
                       kMeasureClamp, "GMM classical uncertainty");
}

inline double gmm_classical_uncertainty(const DensityMatrix& rho) {
    return gmm_classical_uncertainty(gmm_variance_sums(rho), rho.dim());
}

struct SumUncertaintyCheck {
    double lhs;    // total GMM variance sum
    double bound;  // 2(d - 1)
    bool holds;
    // d = 2 only: lhs - (3 - 2(C_hs + P_l))
    std::optional<double> pauli_tradeoff_residual;
};

inline SumUncertaintyCheck sum_uncertainty_check(const GmmBasis& basis, const DensityMatrix& rho) {
    const GmmVarianceSums sums = gmm_variance_sums(basis, rho);
    const double d = static_cast<double>(rho.dim());
    SumUncertaintyCheck c;
    c.lhs = sums.diag_var_sum + sums.offdiag_var_sum;
    c.bound = 2.0 * (d - 1.0);
    c.holds = c.lhs >= c.bound - 1e-10;
    if (rho.dim() == 2) c.pauli_tradeoff_residual = c.lhs - (3.0 - 2.0 * (coherence_hs(rho) + predictability_l(rho)));
    return c;
}

inline SumUncertaintyCheck sum_uncertainty_check(const DensityMatrix& rho) {
    return sum_uncertainty_check(gmm_basis(rho.dim()), rho);
}

}  // namespace ccr
