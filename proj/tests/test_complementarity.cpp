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

#include "ccr/complementarity.hpp"

namespace ccr {
namespace {

const double kLn2 = std::log(2.0);
const double kR = 1.0 / std::sqrt(2.0);

DensityMatrix uniform_mixed(std::size_t d) { return DensityMatrix(Matrix::identity(d) * (1.0 / static_cast<double>(d))); }
DensityMatrix plus() { return DensityMatrix(Matrix{{0.5, 0.5}, {0.5, 0.5}}); }
DensityMatrix tilted() { return DensityMatrix(Matrix{{0.75, 0.25}, {0.25, 0.25}}); }
DensityMatrix basis_state(std::size_t d, std::size_t k) {
    Ket v(d);
    v[k] = 1.0;
    return density_from_ket(v);
}

TEST(Entropies, Examples) {
    EXPECT_NEAR(linear_entropy(plus()), 0.0, 1e-12);
    for (std::size_t d : {2u, 3u, 5u}) {
        EXPECT_NEAR(linear_entropy(uniform_mixed(d)), (d - 1.0) / d, 1e-15);
        EXPECT_NEAR(vn_entropy(uniform_mixed(d)), std::log(static_cast<double>(d)), 1e-14);
    }
    EXPECT_NEAR(linear_entropy(tilted()), 0.25, 1e-15);
    EXPECT_NEAR(vn_entropy(plus()), 0.0, 1e-12);
    const double x = 0.6, x2 = x * x, y2 = 1 - x2;
    const DensityMatrix rho = x_family_state(x).reduced(Subsystem::A);
    EXPECT_NEAR(vn_entropy(rho), -x2 * std::log(x2) - y2 * std::log(y2), 1e-14);
}

TEST(Predictability, Examples) {
    for (std::size_t d : {2u, 4u}) {
        EXPECT_NEAR(predictability_l(uniform_mixed(d)), 0.0, 1e-15);
        EXPECT_NEAR(predictability_vn(uniform_mixed(d)), 0.0, 1e-14);
        EXPECT_NEAR(predictability_l1(uniform_mixed(d)), 0.0, 1e-14);
        EXPECT_NEAR(predictability_l(basis_state(d, 1)), (d - 1.0) / d, 1e-15);
        EXPECT_NEAR(predictability_vn(basis_state(d, 1)), std::log(static_cast<double>(d)), 1e-14);
        EXPECT_NEAR(predictability_l1(basis_state(d, 1)), d - 1.0, 1e-14);
    }
    const double x = 0.3, x2 = x * x, y2 = 1 - x2;
    const DensityMatrix rho = x_family_state(x).reduced(Subsystem::A);
    EXPECT_NEAR(predictability_l(rho), 0.5 - 2 * x2 * y2, 1e-14);
    EXPECT_NEAR(predictability_vn(rho), kLn2 + x2 * std::log(x2) + y2 * std::log(y2), 1e-14);
    EXPECT_NEAR(predictability_l1(rho), 1 - 2 * x * std::sqrt(y2), 1e-14);
}

TEST(Coherence, Examples) {
    const DensityMatrix diag(Matrix::diagonal(std::vector<double>{0.2, 0.3, 0.5}));
    EXPECT_EQ(coherence_l1(diag), 0.0);
    EXPECT_EQ(coherence_hs(diag), 0.0);
    EXPECT_NEAR(coherence_wy(diag), 0.0, 1e-15);
    EXPECT_NEAR(coherence_re(diag), 0.0, 1e-14);
    EXPECT_NEAR(coherence_l1(plus()), 1.0, 1e-15);
    EXPECT_NEAR(coherence_hs(plus()), 0.5, 1e-15);
    EXPECT_NEAR(coherence_wy(plus()), 0.5, 1e-12);
    EXPECT_NEAR(coherence_re(plus()), kLn2, 1e-12);
    EXPECT_NEAR(coherence_l1(tilted()), 0.5, 1e-15);
    EXPECT_NEAR(coherence_hs(tilted()), 0.125, 1e-15);
    const DensityMatrix pure = density_from_ket(Ket{0.6, cplx(0.0, 0.48), 0.64});
    EXPECT_NEAR(coherence_re(pure), vn_entropy_diag(pure), 1e-12);
}

TEST(WL1, Examples) {
    EXPECT_NEAR(w_l1(density_from_ket(Ket{0.6, cplx(0.0, 0.48), 0.64})), 0.0, 1e-12);
    EXPECT_NEAR(w_l1(uniform_mixed(4)), 3.0, 1e-14);
    const double x = 0.8;
    EXPECT_NEAR(w_l1(x_family_state(x).reduced(Subsystem::A)), 2 * x * std::sqrt(1 - x * x), 1e-14);
}

TEST(BzInformation, Examples) {
    const Fig1States mid = fig1_states(0.5);
    EXPECT_NEAR(bz_information(mid.rho), 0.25, 1e-12);
    EXPECT_NEAR(bz_information(mid.sigma), 0.0, 1e-12);
    const DensityMatrix rho = random_density(3, 3, 8);
    Rng rng = make_rng(8, 1);
    EXPECT_NEAR(bz_information(rho.conjugated(haar_unitary(3, rng))), bz_information(rho), 1e-10);
}

TEST(Concurrence, Examples) {
    EXPECT_NEAR(concurrence(BipartitePureState(2, 2, kron(Ket{0.6, 0.8}, Ket{kR, kR}))), 0.0, 1e-7);
    for (double x : {0.1, 0.5, 0.9}) EXPECT_NEAR(concurrence(x_family_state(x)), 2 * x * std::sqrt(1 - x * x), 1e-12);
    EXPECT_NEAR(concurrence(x_family_state(kR)), 1.0, 1e-12);
}

TEST(CcrReport, PlusState) {
    const QuantifierReport r = ccr_report(plus());
    EXPECT_NEAR(r.U_q, 0.5, 1e-12);
    EXPECT_NEAR(r.U_c, 0.0, 1e-12);
    EXPECT_NEAR(r.P_l, 0.0, 1e-15);
    EXPECT_NEAR(r.r_unpl, 0.0, 1e-12);
    EXPECT_TRUE(r.residuals_ok());
    EXPECT_FALSE(r.concurrence.has_value());
}

TEST(CcrReport, BalancedXFamily) {
    const QuantifierReport r = ccr_report(x_family_state(kR), Subsystem::A);
    EXPECT_NEAR(r.W_l1, 1.0, 1e-12);
    EXPECT_NEAR(r.P_l1, 0.0, 1e-12);
    EXPECT_NEAR(r.C_l1, 0.0, 1e-15);
    EXPECT_NEAR(r.U_c, 0.5, 1e-12);
    EXPECT_NEAR(r.P_l, 0.0, 1e-12);
    EXPECT_NEAR(r.S_vn, kLn2, 1e-12);
    EXPECT_NEAR(r.P_vn, 0.0, 1e-12);
    ASSERT_TRUE(r.concurrence.has_value());
    EXPECT_NEAR(*r.concurrence, 1.0, 1e-12);
    EXPECT_TRUE(r.entanglement_interpretation_valid);
}

TEST(CcrReport, RandomStatesSatisfyRelations) {
    for (std::uint64_t s = 0; s < 50; ++s) {
        const QuantifierReport r = ccr_report(random_density(4, 1 + s % 4, s));
        EXPECT_TRUE(r.residuals_ok()) << "seed " << s;
        EXPECT_LE(r.C_re + r.P_vn, std::log(4.0) + 1e-10);
        EXPECT_LE(r.C_l1 + r.P_l1, 3.0 + 1e-10);
        EXPECT_LE(r.P_l + r.C_hs, 0.75 + 1e-10);
    }
}

TEST(CcrReport, MismatchedPurificationThrows) {
    EXPECT_THROW(ccr_report(plus(), x_family_state(kR), Subsystem::A), InvariantViolation);
    EXPECT_THROW(ccr_report(uniform_mixed(3), x_family_state(kR), Subsystem::A), DimensionMismatch);
}

TEST(Measures, PermutationInvariant) {
    const DensityMatrix rho = random_density(4, 3, 21);
    Matrix perm(4, 4);
    const std::size_t order[] = {2, 0, 3, 1};
    for (std::size_t i = 0; i < 4; ++i) perm(i, order[i]) = 1.0;
    const QuantifierReport a = ccr_report(rho);
    const QuantifierReport b = ccr_report(rho.conjugated(perm));
    const auto ma = a.measures(), mb = b.measures();
    ASSERT_EQ(ma.size(), mb.size());
    for (std::size_t i = 0; i < ma.size(); ++i) EXPECT_NEAR(ma[i].second, mb[i].second, 1e-12) << ma[i].first;
}

}  // namespace
}  // namespace ccr
