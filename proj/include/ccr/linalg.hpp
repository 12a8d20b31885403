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

// Dense complex linear algebra for small (d <= 64) matrices.
//
// Everything here is a value type or a pure function. The eigensolver is a
// cyclic complex Jacobi iteration with a fixed sweep order, so identical
// input always yields bit-identical output.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <complex>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ccr/error.hpp"

namespace ccr {

using cplx = std::complex<double>;
using Ket = std::vector<cplx>;

inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kPsdTolerance = 1e-10;
// Eigenvalues of magnitude below this (relative to max(1, |lambda|_max)) are
// rounding noise from the diagonalization and are treated as exact zeros by
// the PSD matrix functions.
inline constexpr double kEigenNoiseFloor = 1e-14;
inline constexpr double kJacobiTolerance = 1e-12;
inline constexpr int kJacobiMaxSweeps = 100;
inline constexpr std::size_t kMaxDim = 64;

inline double abs2(cplx z) { return z.real() * z.real() + z.imag() * z.imag(); }

// Row-major dense complex matrix.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
        : rows_(rows), cols_(cols), data_(std::move(entries)) {
        if (data_.size() != rows_ * cols_) {
            throw DimensionMismatch("Matrix: " + std::to_string(data_.size()) + " entries for a " +
                                    std::to_string(rows_) + "x" + std::to_string(cols_) + " matrix");
        }
    }
    Matrix(std::initializer_list<std::initializer_list<cplx>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& row : rows) {
            if (row.size() != cols_) throw DimensionMismatch("Matrix: ragged initializer");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    static Matrix diagonal(std::span<const double> values) {
        Matrix m(values.size(), values.size());
        for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
        return m;
    }

    static Matrix column(std::span<const cplx> v) {
        return Matrix(v.size(), 1, std::vector<cplx>(v.begin(), v.end()));
    }

    // |v><v|
    static Matrix outer(std::span<const cplx> v) {
        Matrix m(v.size(), v.size());
        for (std::size_t i = 0; i < v.size(); ++i)
            for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = v[i] * std::conj(v[j]);
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const cplx> entries() const noexcept { return data_; }

    Matrix adjoint() const {
        Matrix out(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
        return out;
    }

    cplx trace() const {
        cplx t = 0.0;
        for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
        return t;
    }

    Matrix& operator+=(const Matrix& other) {
        require_same_shape(other, "+");
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& other) {
        require_same_shape(other, "-");
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
        return *this;
    }
    Matrix& operator*=(cplx s) {
        for (auto& z : data_) z *= s;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, cplx s) { return a *= s; }
    friend Matrix operator*(cplx s, Matrix a) { return a *= s; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) {
            throw DimensionMismatch("Matrix product: " + a.shape() + " * " + b.shape());
        }
        Matrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const cplx aik = a(i, k);
                if (aik == cplx{}) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
            }
        return out;
    }

    std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

private:
    void require_same_shape(const Matrix& other, const char* op) const {
        if (rows_ != other.rows_ || cols_ != other.cols_) {
            throw DimensionMismatch(std::string("Matrix ") + op + ": " + shape() + " vs " + other.shape());
        }
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> data_;
};

inline double max_abs(const Matrix& m) {
    double r = 0.0;
    for (cplx z : m.entries()) r = std::max(r, std::abs(z));
    return r;
}

inline double max_abs_diff(const Matrix& a, const Matrix& b) { return max_abs(a - b); }

inline double hermiticity_residual(const Matrix& m) {
    if (!m.is_square()) return std::numeric_limits<double>::infinity();
    double r = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i; j < m.cols(); ++j) r = std::max(r, std::abs(m(i, j) - std::conj(m(j, i))));
    return r;
}

// Tr(A B) without forming the product.
inline cplx trace_of_product(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows() || a.rows() != b.cols()) {
        throw DimensionMismatch("trace_of_product: " + a.shape() + " * " + b.shape());
    }
    cplx t = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) t += a(i, k) * b(k, i);
    return t;
}

// Hermitian d x d matrix. Construction checks Hermiticity within the
// tolerance and stores the exactly-Hermitian part (A + A^dagger) / 2.
class HermitianMatrix {
public:
    HermitianMatrix() = default;
    explicit HermitianMatrix(Matrix m, double tolerance = kHermitianTolerance) {
        if (!m.is_square()) throw DimensionMismatch("HermitianMatrix: non-square " + m.shape());
        if (m.rows() == 0) throw DimensionMismatch("HermitianMatrix: empty matrix");
        const double residual = hermiticity_residual(m);
        if (!(residual <= tolerance)) throw InvariantViolation("hermitian", residual, tolerance);
        const std::size_t n = m.rows();
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) = m(i, i).real();
            for (std::size_t j = i + 1; j < n; ++j) {
                const cplx avg = 0.5 * (m(i, j) + std::conj(m(j, i)));
                m(i, j) = avg;
                m(j, i) = std::conj(avg);
            }
        }
        m_ = std::move(m);
    }
    HermitianMatrix(std::initializer_list<std::initializer_list<cplx>> rows) : HermitianMatrix(Matrix(rows)) {}

    std::size_t dim() const noexcept { return m_.rows(); }
    const Matrix& matrix() const noexcept { return m_; }
    operator const Matrix&() const noexcept { return m_; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

private:
    Matrix m_;
};

// Eigenvalues ascending; column k of `vectors` pairs with values[k].
struct EigenSystem {
    std::vector<double> values;
    Matrix vectors;

    // V f(Lambda) V^dagger
    Matrix reconstruct(const std::function<double(double)>& f = [](double x) { return x; }) const {
        const std::size_t n = values.size();
        Matrix out(n, n);
        for (std::size_t k = 0; k < n; ++k) {
            const double fk = f(values[k]);
            if (fk == 0.0) continue;
            for (std::size_t i = 0; i < n; ++i) {
                const cplx vik = vectors(i, k) * fk;
                for (std::size_t j = 0; j < n; ++j) out(i, j) += vik * std::conj(vectors(j, k));
            }
        }
        return out;
    }
};

namespace detail {

inline double max_offdiagonal(const Matrix& a) {
    double r = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = i + 1; j < a.cols(); ++j) r = std::max(r, std::abs(a(i, j)));
    return r;
}

// One two-sided complex Jacobi rotation annihilating a(p, q).
inline void jacobi_rotate(Matrix& a, Matrix& v, std::size_t p, std::size_t q) {
    const cplx apq = a(p, q);
    const double g = std::abs(apq);
    if (g == 0.0) return;
    const cplx phase = std::conj(apq / g);  // brings a(p, q) to the positive real axis
    const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * g);
    const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;

    // J restricted to (p, q): [[c, s], [-s * phase, c * phase]]
    const cplx jpp = c, jpq = s, jqp = -s * phase, jqq = c * phase;
    const std::size_t n = a.rows();
    for (std::size_t k = 0; k < n; ++k) {
        const cplx akp = a(k, p), akq = a(k, q);
        a(k, p) = akp * jpp + akq * jqp;
        a(k, q) = akp * jpq + akq * jqq;
    }
    for (std::size_t k = 0; k < n; ++k) {
        const cplx apk = a(p, k), aqk = a(q, k);
        a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
        a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
    }
    for (std::size_t k = 0; k < n; ++k) {
        const cplx vkp = v(k, p), vkq = v(k, q);
        v(k, p) = vkp * jpp + vkq * jqp;
        v(k, q) = vkp * jpq + vkq * jqq;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = a(p, p).real();
    a(q, q) = a(q, q).real();
}

}  // namespace detail

inline EigenSystem hermitian_eig(const HermitianMatrix& h) {
    const std::size_t n = h.dim();
    if (n > kMaxDim) throw DimensionMismatch("hermitian_eig: dim " + std::to_string(n) + " exceeds 64");
    Matrix a = h.matrix();
    Matrix v = Matrix::identity(n);
    const double scale = std::max(1.0, max_abs(a));

    int sweep = 0;
    double off = detail::max_offdiagonal(a);
    while (off >= kJacobiTolerance * scale) {
        if (sweep == kJacobiMaxSweeps) {
            throw ConvergenceError("hermitian_eig: no convergence after " + std::to_string(kJacobiMaxSweeps) +
                                   " sweeps, max off-diagonal residual " + std::to_string(off));
        }
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) detail::jacobi_rotate(a, v, p, q);
        off = detail::max_offdiagonal(a);
        ++sweep;
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });
    EigenSystem es{std::vector<double>(n), Matrix(n, n)};
    for (std::size_t k = 0; k < n; ++k) {
        es.values[k] = a(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i) es.vectors(i, k) = v(i, order[k]);
    }
    return es;
}

// Maps eigenvalues of a PSD matrix onto [0, inf): values in [-1e-10, 0) and
// sub-noise-floor positives become 0, anything below -1e-10 is an error.
inline std::vector<double> clamp_psd_spectrum(std::span<const double> values) {
    double top = 1.0;
    for (double x : values) top = std::max(top, x);
    std::vector<double> out(values.begin(), values.end());
    for (double& x : out) {
        if (x < -kPsdTolerance) {
            char buf[48];
            std::snprintf(buf, sizeof buf, "not PSD: eigenvalue %.6g", x);
            throw InvariantViolation(buf, -x, kPsdTolerance);
        }
        if (x <= kEigenNoiseFloor * top) x = 0.0;
    }
    return out;
}

inline HermitianMatrix psd_sqrt(const EigenSystem& es) {
    EigenSystem clamped{clamp_psd_spectrum(es.values), es.vectors};
    return HermitianMatrix(clamped.reconstruct([](double x) { return std::sqrt(x); }), 1e-10);
}

inline HermitianMatrix psd_sqrt(const HermitianMatrix& rho) { return psd_sqrt(hermitian_eig(rho)); }

inline Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const cplx aij = a(i, j);
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return out;
}

inline Ket kron(std::span<const cplx> a, std::span<const cplx> b) {
    Ket out;
    out.reserve(a.size() * b.size());
    for (cplx x : a)
        for (cplx y : b) out.push_back(x * y);
    return out;
}

inline Matrix commutator(const Matrix& a, const Matrix& b) {
    if (!a.is_square() || a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionMismatch("commutator: " + a.shape() + " vs " + b.shape());
    }
    return a * b - b * a;
}

enum class Subsystem { A, B };

// Partial trace of an operator on C^dimA (x) C^dimB, keeping `keep`.
inline Matrix partial_trace(const Matrix& m, std::size_t dim_a, std::size_t dim_b, Subsystem keep) {
    if (!m.is_square() || m.rows() != dim_a * dim_b) {
        throw DimensionMismatch("partial_trace: " + m.shape() + " is not " + std::to_string(dim_a) + "*" +
                                std::to_string(dim_b) + " square");
    }
    if (keep == Subsystem::A) {
        Matrix out(dim_a, dim_a);
        for (std::size_t i = 0; i < dim_a; ++i)
            for (std::size_t j = 0; j < dim_a; ++j)
                for (std::size_t k = 0; k < dim_b; ++k) out(i, j) += m(i * dim_b + k, j * dim_b + k);
        return out;
    }
    Matrix out(dim_b, dim_b);
    for (std::size_t i = 0; i < dim_b; ++i)
        for (std::size_t j = 0; j < dim_b; ++j)
            for (std::size_t k = 0; k < dim_a; ++k) out(i, j) += m(k * dim_b + i, k * dim_b + j);
    return out;
}

inline HermitianMatrix partial_trace(const HermitianMatrix& m, std::size_t dim_a, std::size_t dim_b,
                                     Subsystem keep) {
    return HermitianMatrix(partial_trace(m.matrix(), dim_a, dim_b, keep));
}

// Reduced state of a pure ket without forming the full projector.
inline Matrix reduced_from_ket(std::span<const cplx> psi, std::size_t dim_a, std::size_t dim_b, Subsystem keep) {
    if (psi.size() != dim_a * dim_b) {
        throw DimensionMismatch("reduced_from_ket: ket length " + std::to_string(psi.size()) + " is not " +
                                std::to_string(dim_a) + "*" + std::to_string(dim_b));
    }
    if (keep == Subsystem::A) {
        Matrix out(dim_a, dim_a);
        for (std::size_t i = 0; i < dim_a; ++i)
            for (std::size_t j = 0; j < dim_a; ++j)
                for (std::size_t k = 0; k < dim_b; ++k) out(i, j) += psi[i * dim_b + k] * std::conj(psi[j * dim_b + k]);
        return out;
    }
    Matrix out(dim_b, dim_b);
    for (std::size_t i = 0; i < dim_b; ++i)
        for (std::size_t j = 0; j < dim_b; ++j)
            for (std::size_t k = 0; k < dim_a; ++k) out(i, j) += psi[k * dim_b + i] * std::conj(psi[k * dim_b + j]);
    return out;
}

inline Ket apply(const Matrix& m, std::span<const cplx> v) {
    if (m.cols() != v.size()) throw DimensionMismatch("apply: " + m.shape() + " on length " + std::to_string(v.size()));
    Ket out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
    return out;
}

inline double norm(std::span<const cplx> v) {
    double s = 0.0;
    for (cplx z : v) s += abs2(z);
    return std::sqrt(s);
}

}  // namespace ccr
