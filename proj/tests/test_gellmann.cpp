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

#include <cmath>

#include <gtest/gtest.h>

#include "ccr/gellmann.hpp"

namespace ccr {
namespace {

const cplx I{0.0, 1.0};
DensityMatrix uniform_mixed(std::size_t d) { return DensityMatrix(Matrix::identity(d) * (1.0 / static_cast<double>(d))); }
DensityMatrix plus() { return DensityMatrix(Matrix{{0.5, 0.5}, {0.5, 0.5}}); }
DensityMatrix up() { return density_from_ket(Ket{1.0, 0.0}); }

TEST(GmmBasis, QubitIsPauli) {
    const GmmBasis b = gmm_basis(2);
    ASSERT_EQ(b.size(), 3u);
    EXPECT_LT(max_abs_diff(b.diagonal[0].matrix, Matrix{{1.0, 0.0}, {0.0, -1.0}}), 1e-15);
    EXPECT_LT(max_abs_diff(b.symmetric[0].matrix, Matrix{{0.0, 1.0}, {1.0, 0.0}}), 1e-15);
    EXPECT_LT(max_abs_diff(b.antisymmetric[0].matrix, Matrix{{0.0, -I}, {I, 0.0}}), 1e-15);
    EXPECT_EQ(b.diagonal[0].label, "d(1)");
    EXPECT_EQ(b.symmetric[0].label, "s(1,2)");
    EXPECT_EQ(b.antisymmetric[0].label, "a(1,2)");
}

TEST(GmmBasis, QutritSecondDiagonal) {
    const GmmBasis b = gmm_basis(3);
    const double r = 1.0 / std::sqrt(3.0);
    EXPECT_LT(max_abs_diff(b.diagonal[1].matrix, Matrix::diagonal(std::vector<double>{r, r, -2 * r})), 1e-15);
}

TEST(GmmBasis, TracelessAndOrthogonal) {
    for (std::size_t d : {2u, 3u, 5u}) {
        const GmmBasis b = gmm_basis(d);
        const auto all = b.all();
        ASSERT_EQ(all.size(), d * d - 1);
        for (std::size_t i = 0; i < all.size(); ++i) {
            EXPECT_LT(std::abs(all[i]->matrix.matrix().trace()), 1e-12);
            for (std::size_t k = 0; k < all.size(); ++k)
                EXPECT_NEAR(std::abs(trace_of_product(all[i]->matrix, all[k]->matrix)), i == k ? 2.0 : 0.0, 1e-12);
        }
    }
    EXPECT_THROW(gmm_basis(1), InvalidArgument);
}

TEST(Bloch, Coefficients) {
    const BlochCoefficients c = bloch_decompose(uniform_mixed(4));
    for (double x : c.diagonal) EXPECT_NEAR(x, 0.0, 1e-15);
    for (double x : c.symmetric) EXPECT_NEAR(x, 0.0, 1e-15);
    for (double x : c.antisymmetric) EXPECT_NEAR(x, 0.0, 1e-15);
    const BlochCoefficients z = bloch_decompose(up());
    EXPECT_NEAR(z.diagonal[0], 1.0, 1e-15);
    EXPECT_NEAR(z.symmetric[0], 0.0, 1e-15);
    EXPECT_NEAR(z.antisymmetric[0], 0.0, 1e-15);
}

TEST(Bloch, Reconstruction) {
    for (std::size_t d : {2u, 3u, 6u}) {
        const DensityMatrix rho = random_density(d, d, 100 + d);
        const GmmBasis b = gmm_basis(d);
        EXPECT_LT(max_abs_diff(bloch_reconstruct(b, bloch_decompose(b, rho)), rho.matrix()), 1e-13);
    }
    EXPECT_THROW(bloch_decompose(gmm_basis(3), up()), DimensionMismatch);
}

TEST(ExpectationSums, Examples) {
    const GmmExpectationSums u = gmm_expectation_sums(uniform_mixed(3));
    EXPECT_NEAR(u.diag_sq_sum, 0.0, 1e-15);
    EXPECT_NEAR(u.offdiag_sq_sum, 0.0, 1e-15);
    const GmmExpectationSums p = gmm_expectation_sums(plus());
    EXPECT_NEAR(p.diag_sq_sum, 0.0, 1e-15);
    EXPECT_NEAR(p.offdiag_sq_sum, 1.0, 1e-15);
    const GmmExpectationSums z = gmm_expectation_sums(up());
    EXPECT_NEAR(z.diag_sq_sum, 1.0, 1e-15);
    EXPECT_NEAR(z.offdiag_sq_sum, 0.0, 1e-15);
}

TEST(VarianceSums, Examples) {
    const GmmVarianceSums u = gmm_variance_sums(uniform_mixed(3));
    EXPECT_NEAR(u.diag_var_sum, 4.0 / 3.0, 1e-14);
    EXPECT_NEAR(u.offdiag_var_sum, 4.0, 1e-14);
    const GmmVarianceSums z = gmm_variance_sums(up());
    EXPECT_NEAR(z.diag_var_sum, 0.0, 1e-14);
    EXPECT_NEAR(z.offdiag_var_sum, 2.0, 1e-14);
    const GmmVarianceSums p = gmm_variance_sums(plus());
    EXPECT_NEAR(p.diag_var_sum, 1.0, 1e-14);
    EXPECT_NEAR(p.offdiag_var_sum, 1.0, 1e-14);
    for (const auto& s : {u, z, p}) {
        EXPECT_NEAR(s.diag_var_sum, s.diag_var_closed_form, 1e-13);
        EXPECT_NEAR(s.offdiag_var_sum, s.offdiag_var_closed_form, 1e-13);
    }
}

TEST(GmmClassicalUncertainty, Examples) {
    EXPECT_NEAR(gmm_classical_uncertainty(density_from_ket(Ket{0.6, 0.0, cplx(0.0, 0.8)})), 0.0, 1e-13);
    EXPECT_NEAR(gmm_classical_uncertainty(uniform_mixed(3)), 2.0 / 3.0, 1e-14);
    const DensityMatrix rho = random_density(4, 3, 55);
    EXPECT_NEAR(gmm_classical_uncertainty(rho), linear_entropy(rho), 1e-12);
}

TEST(SumUncertainty, Examples) {
    const SumUncertaintyCheck pure = sum_uncertainty_check(density_from_ket(Ket{0.6, cplx(0.0, 0.8)}));
    EXPECT_NEAR(pure.lhs, 2.0, 1e-13);
    EXPECT_TRUE(pure.holds);
    ASSERT_TRUE(pure.pauli_tradeoff_residual.has_value());
    EXPECT_NEAR(*pure.pauli_tradeoff_residual, 0.0, 1e-13);
    const SumUncertaintyCheck half = sum_uncertainty_check(uniform_mixed(2));
    EXPECT_NEAR(half.lhs, 3.0, 1e-14);
    const SumUncertaintyCheck third = sum_uncertainty_check(uniform_mixed(3));
    EXPECT_NEAR(third.lhs, 16.0 / 3.0, 1e-13);
    EXPECT_NEAR(third.bound, 4.0, 0.0);
    EXPECT_TRUE(third.holds);
    EXPECT_FALSE(third.pauli_tradeoff_residual.has_value());
}

}  // namespace
}  // namespace ccr
