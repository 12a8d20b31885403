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

// Variance split into a quantum part (Wigner-Yanase skew information) and a
// classical remainder, for a general observable and for path projectors.

#pragma once

#include <cmath>
#include <string>

#include "ccr/linalg.hpp"
#include "ccr/states.hpp"

namespace ccr {

inline constexpr double kUncertaintyClamp = 1e-12;

// Clamps float noise on an analytically nonnegative quantity; anything more
// negative than `slack` means the computation itself is wrong.
inline double nonnegative(double value, double slack, const char* what) {
    if (value < -slack) {
        throw ConsistencyError(std::string(what) + " came out negative: " + std::to_string(value));
    }
    return value < 0.0 ? 0.0 : value;
}

namespace detail {

inline void require_same_dim(const DensityMatrix& rho, const Matrix& a, const char* op) {
    if (!a.is_square() || a.rows() != rho.dim()) {
        throw DimensionMismatch(std::string(op) + ": observable " + a.shape() + " vs state dim " +
                                std::to_string(rho.dim()));
    }
}

inline void require_path(const DensityMatrix& rho, std::size_t j, const char* op) {
    if (j >= rho.dim()) {
        throw InvalidArgument(std::string(op) + ": path index " + std::to_string(j) + " out of range for d = " +
                              std::to_string(rho.dim()));
    }
}

// A - Tr(rho A) I
inline Matrix centered(const DensityMatrix& rho, const Matrix& a) {
    const double mean = trace_of_product(rho.matrix(), a).real();
    Matrix a0 = a;
    for (std::size_t i = 0; i < a0.rows(); ++i) a0(i, i) -= mean;
    return a0;
}

}  // namespace detail

struct UncertaintySplit {
    double variance;
    double quantum;
    double classical;
};

// V(rho, A) = Tr rho A0^2
inline double variance(const DensityMatrix& rho, const HermitianMatrix& a) {
    detail::require_same_dim(rho, a, "variance");
    const Matrix a0 = detail::centered(rho, a);
    return nonnegative(trace_of_product(rho.matrix(), a0 * a0).real(), kUncertaintyClamp, "variance");
}

// Q(rho, A) = -1/2 Tr([sqrt(rho), A0]^2)
inline double skew_information(const DensityMatrix& rho, const HermitianMatrix& a) {
    detail::require_same_dim(rho, a, "skew_information");
    const Matrix a0 = detail::centered(rho, a);
    const Matrix c = commutator(rho.sqrt(), a0);
    return nonnegative(-0.5 * trace_of_product(c, c).real(), kUncertaintyClamp, "skew information");
}

// C(rho, A) = Tr sqrt(rho) A0 sqrt(rho) A0
inline double classical_uncertainty(const DensityMatrix& rho, const HermitianMatrix& a) {
    detail::require_same_dim(rho, a, "classical_uncertainty");
    const Matrix a0 = detail::centered(rho, a);
    const Matrix x = rho.sqrt().matrix() * a0;
    return nonnegative(trace_of_product(x, x).real(), kUncertaintyClamp, "classical uncertainty");
}

inline UncertaintySplit uncertainty_split(const DensityMatrix& rho, const HermitianMatrix& a) {
    return {variance(rho, a), skew_information(rho, a), classical_uncertainty(rho, a)};
}

// |j><j|
inline HermitianMatrix path_projector(std::size_t d, std::size_t j) {
    Matrix m(d, d);
    m(j, j) = 1.0;
    return HermitianMatrix(std::move(m));
}

// rho_jj - (sqrt(rho))_jj^2
inline double path_quantum_uncertainty(const DensityMatrix& rho, std::size_t j) {
    detail::require_path(rho, j, "path_quantum_uncertainty");
    const double s = rho.sqrt()(j, j).real();
    return nonnegative(rho(j, j).real() - s * s, kUncertaintyClamp, "path quantum uncertainty");
}

// (sqrt(rho))_jj^2 - rho_jj^2
inline double path_classical_uncertainty(const DensityMatrix& rho, std::size_t j) {
    detail::require_path(rho, j, "path_classical_uncertainty");
    const double s = rho.sqrt()(j, j).real();
    const double p = rho(j, j).real();
    return nonnegative(s * s - p * p, kUncertaintyClamp, "path classical uncertainty");
}

// U_q = sum_{j != k} |(sqrt(rho))_jk|^2
inline double total_quantum_uncertainty(const DensityMatrix& rho) {
    const Matrix& s = rho.sqrt().matrix();
    double sum = 0.0;
    for (std::size_t j = 0; j < rho.dim(); ++j)
        for (std::size_t k = 0; k < rho.dim(); ++k)
            if (j != k) sum += abs2(s(j, k));
    return sum;
}

// U_c = sum_j ((sqrt(rho))_jj^2 - rho_jj^2)
inline double total_classical_uncertainty(const DensityMatrix& rho) {
    double sum = 0.0;
    for (std::size_t j = 0; j < rho.dim(); ++j) {
        const double s = rho.sqrt()(j, j).real();
        const double p = rho(j, j).real();
        sum += s * s - p * p;
    }
    return nonnegative(sum, kUncertaintyClamp, "total classical uncertainty");
}

struct RobertsonCheck {
    double lhs;  // V(rho, A) V(rho, B)
    double rhs;  // |Tr(rho [A, B])|^2 / 4
    bool holds;
};

inline RobertsonCheck robertson_check(const DensityMatrix& rho, const HermitianMatrix& a, const HermitianMatrix& b) {
    detail::require_same_dim(rho, a, "robertson_check");
    detail::require_same_dim(rho, b, "robertson_check");
    const double lhs = variance(rho, a) * variance(rho, b);
    const double rhs = 0.25 * std::norm(trace_of_product(rho.matrix(), commutator(a, b)));
    return {lhs, rhs, lhs >= rhs - 1e-10};
}

}  // namespace ccr
