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

#include "ccr/uncertainty.hpp"

namespace ccr {
namespace {

const cplx I{0.0, 1.0};
const HermitianMatrix kSigmaX{{0.0, 1.0}, {1.0, 0.0}};
const HermitianMatrix kSigmaY{{0.0, -I}, {I, 0.0}};
const HermitianMatrix kSigmaZ{{1.0, 0.0}, {0.0, -1.0}};

DensityMatrix half() { return DensityMatrix(Matrix::identity(2) * 0.5); }
DensityMatrix plus() { return DensityMatrix(Matrix{{0.5, 0.5}, {0.5, 0.5}}); }
DensityMatrix tilted() { return DensityMatrix(Matrix{{0.75, 0.25}, {0.25, 0.25}}); }
DensityMatrix detector(double g) { return DensityMatrix(Matrix{{0.5, g / 2}, {g / 2, 0.5}}); }

TEST(Variance, Examples) {
    EXPECT_NEAR(variance(density_from_ket(Ket{1.0, 0.0}), kSigmaZ), 0.0, 1e-15);
    EXPECT_NEAR(variance(half(), kSigmaZ), 1.0, 1e-15);
    const DensityMatrix d(Matrix::diagonal(std::vector<double>{0.2, 0.5, 0.3}));
    for (std::size_t j = 0; j < 3; ++j) {
        const double p = d(j, j).real();
        EXPECT_NEAR(variance(d, path_projector(3, j)), p - p * p, 1e-15);
    }
    EXPECT_THROW(variance(half(), path_projector(3, 0)), DimensionMismatch);
}

TEST(SkewInformation, Examples) {
    EXPECT_NEAR(skew_information(half(), kSigmaZ), 0.0, 1e-15);
    const DensityMatrix pure = density_from_ket(Ket{0.6, cplx(0.0, 0.8)});
    EXPECT_NEAR(skew_information(pure, kSigmaX), variance(pure, kSigmaX), 1e-12);
    EXPECT_NEAR(skew_information(plus(), path_projector(2, 0)), 0.25, 1e-12);
}

TEST(ClassicalUncertainty, Examples) {
    EXPECT_NEAR(classical_uncertainty(plus(), kSigmaY), 0.0, 1e-12);
    EXPECT_NEAR(classical_uncertainty(half(), path_projector(2, 0)), 0.25, 1e-15);
    // Tilted state and sigma_z: C = 1/4 + sqrt2/4, Q = 1/2 - sqrt2/4, V = 3/4.
    const double r2 = std::sqrt(2.0);
    EXPECT_NEAR(classical_uncertainty(tilted(), kSigmaZ), 0.25 + r2 / 4, 1e-14);
    EXPECT_NEAR(skew_information(tilted(), kSigmaZ), 0.5 - r2 / 4, 1e-14);
    const UncertaintySplit s = uncertainty_split(tilted(), kSigmaZ);
    EXPECT_NEAR(s.variance, 0.75, 1e-15);
    EXPECT_NEAR(s.quantum + s.classical, s.variance, 1e-14);
}

TEST(PathUncertainty, Examples) {
    for (std::size_t j = 0; j < 2; ++j) EXPECT_NEAR(path_quantum_uncertainty(half(), j), 0.0, 1e-15);
    const double r3 = 1.0 / std::sqrt(3.0);
    const DensityMatrix uniform = density_from_ket(Ket{r3, r3, r3});
    for (std::size_t j = 0; j < 3; ++j) {
        EXPECT_NEAR(path_quantum_uncertainty(uniform, j), 2.0 / 9.0, 1e-12);
        EXPECT_NEAR(path_classical_uncertainty(uniform, j), 0.0, 1e-12);
    }
    const DensityMatrix known = density_from_ket(Ket{0.0, 1.0, 0.0});
    for (std::size_t j = 0; j < 3; ++j) EXPECT_NEAR(path_quantum_uncertainty(known, j), 0.0, 1e-15);
    EXPECT_NEAR(path_classical_uncertainty(half(), 0), 0.25, 1e-15);
    for (double g : {0.0, 0.3, 0.5, 0.9})
        EXPECT_NEAR(path_classical_uncertainty(detector(g), 0), std::sqrt(1 - g * g) / 4, 1e-13);
    EXPECT_THROW(path_quantum_uncertainty(half(), 2), InvalidArgument);
    EXPECT_THROW(path_classical_uncertainty(half(), 5), InvalidArgument);
}

TEST(TotalUncertainty, Examples) {
    EXPECT_NEAR(total_quantum_uncertainty(DensityMatrix(Matrix::diagonal(std::vector<double>{0.1, 0.9}))), 0.0, 1e-15);
    EXPECT_NEAR(total_quantum_uncertainty(plus()), 0.5, 1e-12);
    for (double g : {0.0, 0.5, 1.0})
        EXPECT_NEAR(total_quantum_uncertainty(detector(g)), (1 - std::sqrt(1 - g * g)) / 2, 1e-12);
    EXPECT_NEAR(total_classical_uncertainty(density_from_ket(Ket{0.6, 0.8})), 0.0, 1e-12);
    EXPECT_NEAR(total_classical_uncertainty(half()), 0.5, 1e-15);
    const double x = 0.4;
    const DensityMatrix xs(Matrix::diagonal(std::vector<double>{x * x, 1 - x * x}));
    EXPECT_NEAR(total_classical_uncertainty(xs), 2 * x * x * (1 - x * x), 1e-14);
}

TEST(Robertson, Examples) {
    const RobertsonCheck c = robertson_check(half(), kSigmaZ, HermitianMatrix(Matrix::identity(2)));
    EXPECT_NEAR(c.rhs, 0.0, 1e-15);
    EXPECT_TRUE(c.holds);
    const RobertsonCheck sat = robertson_check(density_from_ket(Ket{1.0, 0.0}), kSigmaX, kSigmaY);
    EXPECT_NEAR(sat.lhs, 1.0, 1e-14);
    EXPECT_NEAR(sat.rhs, 1.0, 1e-14);
    EXPECT_TRUE(sat.holds);
}

TEST(Robertson, RandomTriples) {
    Rng rng = make_rng(17);
    for (int t = 0; t < 1000; ++t) {
        const std::size_t d = 2 + t % 3;
        const DensityMatrix rho = random_density(d, 1 + t % d, rng);
        auto obs = [&] {
            Matrix m(d, d);
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t k = i; k < d; ++k) {
                    const cplx z = complex_gaussian(rng);
                    m(i, k) = i == k ? cplx(z.real()) : z;
                    m(k, i) = std::conj(m(i, k));
                }
            return HermitianMatrix(m);
        };
        EXPECT_TRUE(robertson_check(rho, obs(), obs()).holds);
    }
}

TEST(Nonnegative, ThrowsBeyondSlack) {
    EXPECT_EQ(nonnegative(-1e-14, 1e-12, "x"), 0.0);
    EXPECT_THROW(nonnegative(-1e-6, 1e-12, "x"), ConsistencyError);
}

}  // namespace
}  // namespace ccr
