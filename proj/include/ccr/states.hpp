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

// Quantum states: validated density matrices, bipartite pure kets, the
// path-detector coupling model, named example families and random sampling.
//
// The path basis is always the standard basis {|0>, ..., |d-1>}. To evaluate
// a basis-dependent quantity in another basis, conjugate the state first.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ccr/linalg.hpp"

namespace ccr {

inline constexpr double kTraceTolerance = 1e-10;
inline constexpr double kNormTolerance = 1e-10;

// Validated quantum state: Hermitian, unit trace, PSD. The spectrum and the
// square root are computed once at construction; the object is immutable.
class DensityMatrix {
public:
    explicit DensityMatrix(Matrix m) : DensityMatrix(HermitianMatrix(std::move(m))) {}

    explicit DensityMatrix(HermitianMatrix h) : rho_(std::move(h)) {
        const std::size_t d = rho_.dim();
        const double trace_residual = std::abs(rho_.matrix().trace().real() - 1.0);
        if (!(trace_residual <= kTraceTolerance)) throw InvariantViolation("unit trace", trace_residual, kTraceTolerance);
        for (std::size_t j = 0; j < d; ++j) {
            const double p = rho_(j, j).real();
            const double excess = std::max(-p, p - 1.0);
            if (!(excess <= kHermitianTolerance)) {
                throw InvariantViolation("diagonal entry " + std::to_string(j) + " in [0, 1]", excess, kHermitianTolerance);
            }
        }
        eigen_ = hermitian_eig(rho_);
        if (eigen_.values.front() < -kPsdTolerance) {
            throw InvariantViolation("positive semidefinite (min eigenvalue)", -eigen_.values.front(), kPsdTolerance);
        }
        spectrum_ = clamp_psd_spectrum(eigen_.values);
        sqrt_ = psd_sqrt(eigen_);
    }

    static DensityMatrix from_ket(std::span<const cplx> psi) {
        const double residual = std::abs(norm(psi) - 1.0);
        if (!(residual <= kNormTolerance)) throw InvariantViolation("unit norm ket", residual, kNormTolerance);
        return DensityMatrix(Matrix::outer(psi));
    }

    std::size_t dim() const noexcept { return rho_.dim(); }
    const Matrix& matrix() const noexcept { return rho_.matrix(); }
    const HermitianMatrix& hermitian() const noexcept { return rho_; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return rho_(i, j); }

    const EigenSystem& eigen() const noexcept { return eigen_; }
    // Eigenvalues with float noise mapped to exact zeros, ascending.
    const std::vector<double>& spectrum() const noexcept { return spectrum_; }
    const HermitianMatrix& sqrt() const noexcept { return sqrt_; }

    // Populations rho_jj clamped to [0, 1].
    std::vector<double> populations() const {
        std::vector<double> p(dim());
        for (std::size_t j = 0; j < dim(); ++j) p[j] = std::clamp(rho_(j, j).real(), 0.0, 1.0);
        return p;
    }

    // U rho U^dagger
    DensityMatrix conjugated(const Matrix& u) const { return DensityMatrix(u * matrix() * u.adjoint()); }

private:
    HermitianMatrix rho_;
    EigenSystem eigen_;
    std::vector<double> spectrum_;
    HermitianMatrix sqrt_;
};

// Pure state on C^dimA (x) C^dimB, amplitudes in lexicographic (a, b) order.
class BipartitePureState {
public:
    BipartitePureState(std::size_t dim_a, std::size_t dim_b, Ket amplitudes)
        : dim_a_(dim_a), dim_b_(dim_b), amplitudes_(std::move(amplitudes)) {
        if (dim_a_ == 0 || dim_b_ == 0) throw InvalidArgument("BipartitePureState: factor dimension must be positive");
        if (amplitudes_.size() != dim_a_ * dim_b_) {
            throw DimensionMismatch("BipartitePureState: " + std::to_string(amplitudes_.size()) + " amplitudes for " +
                                    std::to_string(dim_a_) + "x" + std::to_string(dim_b_));
        }
        const double residual = std::abs(norm(amplitudes_) - 1.0);
        if (!(residual <= kNormTolerance)) throw InvariantViolation("unit norm ket", residual, kNormTolerance);
    }

    std::size_t dim_a() const noexcept { return dim_a_; }
    std::size_t dim_b() const noexcept { return dim_b_; }
    const Ket& amplitudes() const noexcept { return amplitudes_; }

    DensityMatrix reduced(Subsystem keep) const {
        return DensityMatrix(reduced_from_ket(amplitudes_, dim_a_, dim_b_, keep));
    }

private:
    std::size_t dim_a_;
    std::size_t dim_b_;
    Ket amplitudes_;
};

// Quanton amplitudes a_j coupled to normalized detector states |d_j>, given
// through their Gram matrix gram(k, j) = <d_k|d_j>.
class DetectorModel {
public:
    DetectorModel(Ket amplitudes, Matrix gram) : amplitudes_(std::move(amplitudes)) {
        const std::size_t d = amplitudes_.size();
        if (d == 0) throw InvalidArgument("DetectorModel: no paths");
        if (!gram.is_square() || gram.rows() != d) {
            throw DimensionMismatch("DetectorModel: gram " + gram.shape() + " for " + std::to_string(d) + " paths");
        }
        const double norm_residual = std::abs(norm(amplitudes_) - 1.0);
        if (!(norm_residual <= kNormTolerance)) throw InvariantViolation("unit norm amplitudes", norm_residual, kNormTolerance);
        HermitianMatrix g(std::move(gram));
        for (std::size_t j = 0; j < d; ++j) {
            const double r = std::abs(g(j, j) - 1.0);
            if (!(r <= kHermitianTolerance)) throw InvariantViolation("normalized detector states (unit gram diagonal)", r, kHermitianTolerance);
        }
        const double lowest = hermitian_eig(g).values.front();
        if (lowest < -kPsdTolerance) throw InvariantViolation("unphysical detector: gram PSD", -lowest, kPsdTolerance);
        gram_ = std::move(g);
    }

    // Two paths with a real overlap <d_0|d_1> = gamma.
    static DetectorModel two_path(cplx a0, cplx a1, double gamma) {
        return DetectorModel({a0, a1}, Matrix{{1.0, gamma}, {gamma, 1.0}});
    }

    std::size_t dim() const noexcept { return amplitudes_.size(); }
    const Ket& amplitudes() const noexcept { return amplitudes_; }
    const HermitianMatrix& gram() const noexcept { return gram_; }

private:
    Ket amplitudes_;
    HermitianMatrix gram_;
};

inline DensityMatrix density_from_ket(std::span<const cplx> psi) { return DensityMatrix::from_ket(psi); }

// Projection onto the diagonal in the path basis.
inline DensityMatrix dephase(const DensityMatrix& rho) {
    Matrix m(rho.dim(), rho.dim());
    for (std::size_t j = 0; j < rho.dim(); ++j) m(j, j) = rho(j, j).real();
    return DensityMatrix(std::move(m));
}

// rho_A(j, k) = a_j conj(a_k) <d_k|d_j>
inline DensityMatrix detector_reduced_state(const DetectorModel& model) {
    const std::size_t d = model.dim();
    const auto& a = model.amplitudes();
    Matrix m(d, d);
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k) m(j, k) = a[j] * std::conj(a[k]) * model.gram()(k, j);
    return DensityMatrix(std::move(m));
}

namespace detail {
inline void require_unit_interval(double x, const char* name) {
    if (!(x >= 0.0 && x <= 1.0)) throw InvalidArgument(std::string(name) + " = " + std::to_string(x) + " outside [0, 1]");
}
}  // namespace detail

// |Phi(p, eps)> = sqrt(p eps)|000> + sqrt(p(1-eps))|111> + sqrt((1-p)/2)(|110> + |101>)
// as an 8-component ket over qubits (A, B, C).
inline Ket three_qubit_phi_ket(double p, double eps) {
    detail::require_unit_interval(p, "p");
    detail::require_unit_interval(eps, "eps");
    Ket psi(8);
    const double w = std::sqrt((1.0 - p) / 2.0);
    psi[0b000] = std::sqrt(p * eps);
    psi[0b111] = std::sqrt(p * (1.0 - eps));
    psi[0b110] = w;
    psi[0b101] = w;
    return psi;
}

struct ThreeQubitPhi {
    BipartitePureState a_bc;  // split A | (B C)
    DensityMatrix rho_b;      // closed-form reduced state of qubit B (= that of C)
};

inline ThreeQubitPhi three_qubit_phi(double p, double eps) {
    Ket psi = three_qubit_phi_ket(p, eps);
    const double off = std::sqrt(p * (1.0 - eps) * (1.0 - p) / 2.0);
    Matrix rho_b{{p * eps + (1.0 - p) / 2.0, off}, {off, p * (1.0 - eps) + (1.0 - p) / 2.0}};
    return {BipartitePureState(2, 4, std::move(psi)), DensityMatrix(std::move(rho_b))};
}

// x|0,1> + sqrt(1 - x^2)|1,0>
inline BipartitePureState x_family_state(double x) {
    detail::require_unit_interval(x, "x");
    return BipartitePureState(2, 2, {0.0, x, std::sqrt(1.0 - x * x), 0.0});
}

struct Fig1States {
    DensityMatrix rho;    // p1 |z+><z+| + p2 |x+><x+|
    DensityMatrix sigma;  // p1 |z+><z+| + p2 |z-><z-|
};

inline Fig1States fig1_states(double p1) {
    detail::require_unit_interval(p1, "p1");
    const double p2 = 1.0 - p1;
    return {DensityMatrix(Matrix{{p1 + p2 / 2.0, p2 / 2.0}, {p2 / 2.0, p2 / 2.0}}),
            DensityMatrix(Matrix{{p1, 0.0}, {0.0, p2}})};
}

// Descending Schmidt weights lambda_k (squared Schmidt coefficients).
inline std::vector<double> schmidt_coefficients(const BipartitePureState& psi) {
    const Subsystem smaller = psi.dim_a() <= psi.dim_b() ? Subsystem::A : Subsystem::B;
    std::vector<double> lambda = psi.reduced(smaller).spectrum();
    std::reverse(lambda.begin(), lambda.end());
    return lambda;
}

// ---- random sampling -------------------------------------------------------

using Rng = std::mt19937_64;

// Independent generator for (seed, stream); used to give each trial of a
// sampled check its own reproducible sub-seed.
inline Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    return Rng(seq);
}

inline cplx complex_gaussian(Rng& rng) {
    std::normal_distribution<double> n01(0.0, 1.0);
    const double re = n01(rng);
    const double im = n01(rng);
    return {re, im};
}

inline Ket random_ket(std::size_t n, Rng& rng) {
    Ket v(n);
    for (auto& z : v) z = complex_gaussian(rng);
    const double s = norm(v);
    for (auto& z : v) z /= s;
    return v;
}

// Ginibre construction rho = G G^dagger / Tr(G G^dagger), G of size d x rank.
inline DensityMatrix random_density(std::size_t d, std::size_t rank, Rng& rng) {
    if (d == 0 || rank < 1 || rank > d) {
        throw InvalidArgument("random_density: rank " + std::to_string(rank) + " not in [1, " + std::to_string(d) + "]");
    }
    Matrix g(d, rank);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < rank; ++k) g(i, k) = complex_gaussian(rng);
    Matrix m = g * g.adjoint();
    m *= 1.0 / m.trace().real();
    return DensityMatrix(std::move(m));
}

inline DensityMatrix random_density(std::size_t d, std::size_t rank, std::uint64_t seed) {
    Rng rng = make_rng(seed);
    return random_density(d, rank, rng);
}

// Haar unitary: Gram-Schmidt on a complex Ginibre matrix (QR with positive R diagonal).
inline Matrix haar_unitary(std::size_t d, Rng& rng) {
    std::vector<Ket> cols;
    cols.reserve(d);
    for (std::size_t k = 0; k < d; ++k) {
        Ket v(d);
        for (auto& z : v) z = complex_gaussian(rng);
        for (int pass = 0; pass < 2; ++pass) {
            for (const Ket& q : cols) {
                cplx overlap = 0.0;
                for (std::size_t i = 0; i < d; ++i) overlap += std::conj(q[i]) * v[i];
                for (std::size_t i = 0; i < d; ++i) v[i] -= overlap * q[i];
            }
        }
        const double s = norm(v);
        for (auto& z : v) z /= s;
        cols.push_back(std::move(v));
    }
    Matrix u(d, d);
    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t i = 0; i < d; ++i) u(i, k) = cols[k][i];
    return u;
}

inline BipartitePureState random_bipartite(std::size_t dim_a, std::size_t dim_b, Rng& rng) {
    return BipartitePureState(dim_a, dim_b, random_ket(dim_a * dim_b, rng));
}

}  // namespace ccr
