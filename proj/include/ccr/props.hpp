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

// Sampling-based refutation checks: convexity / concavity of the measures
// under classical mixing, the extremal cases of the uncertainty axioms, the
// entanglement-monotone conditions on U_c, the detector-coupling transfer,
// and sweeps of every exact identity over random states.
//
// Every trial draws from its own generator seeded by (seed, trial index),
// so a verdict does not depend on evaluation order.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "ccr/complementarity.hpp"
#include "ccr/gellmann.hpp"
#include "ccr/states.hpp"
#include "ccr/uncertainty.hpp"

namespace ccr {

inline constexpr double kExactSlack = 1e-10;
inline constexpr double kFiniteDifferenceSlack = 1e-8;
inline constexpr double kFiniteDifferenceStep = 1e-6;

struct PropertyVerdict {
    std::string name;
    std::size_t trials = 0;
    double worst_violation = 0.0;
    double slack = 0.0;
    bool pass = true;
    std::uint64_t seed = 0;
};

inline PropertyVerdict make_verdict(std::string name, std::size_t trials, double worst, double slack,
                                    std::uint64_t seed) {
    return {std::move(name), trials, worst, slack, worst <= slack, seed};
}

enum class Quantifier {
    PathQuantum,    // Q(rho, |j><j|), every j
    Uq,
    Cl1,
    Chs,
    Cre,
    Pl,
    Pvn,
    Pl1,
    PathClassical,  // C(rho, |j><j|), every j
    Uc,
    Wl1,
    Sl,
    Svn,
};

inline const std::vector<std::pair<Quantifier, std::string>>& quantifier_ids() {
    static const std::vector<std::pair<Quantifier, std::string>> ids{
        {Quantifier::PathQuantum, "Q_path"}, {Quantifier::Uq, "U_q"},   {Quantifier::Cl1, "C_l1"},
        {Quantifier::Chs, "C_hs"},           {Quantifier::Cre, "C_re"}, {Quantifier::Pl, "P_l"},
        {Quantifier::Pvn, "P_vn"},           {Quantifier::Pl1, "P_l1"}, {Quantifier::PathClassical, "C_path"},
        {Quantifier::Uc, "U_c"},             {Quantifier::Wl1, "W_l1"}, {Quantifier::Sl, "S_l"},
        {Quantifier::Svn, "S_vn"}};
    return ids;
}

inline std::string to_string(Quantifier q) {
    for (const auto& [id, name] : quantifier_ids())
        if (id == q) return name;
    return "?";
}

inline Quantifier parse_quantifier(const std::string& name) {
    for (const auto& [id, n] : quantifier_ids())
        if (n == name) return id;
    throw InvalidArgument("unknown quantifier id '" + name + "'");
}

// Measures that must not increase under classical mixing.
inline const std::vector<Quantifier>& convex_quantifiers() {
    static const std::vector<Quantifier> q{Quantifier::PathQuantum, Quantifier::Uq, Quantifier::Cl1, Quantifier::Chs,
                                           Quantifier::Cre,         Quantifier::Pl, Quantifier::Pvn, Quantifier::Pl1};
    return q;
}

// Measures that must not decrease under classical mixing.
inline const std::vector<Quantifier>& concave_quantifiers() {
    static const std::vector<Quantifier> q{Quantifier::PathClassical, Quantifier::Uc, Quantifier::Wl1, Quantifier::Sl,
                                           Quantifier::Svn};
    return q;
}

using MeasureFn = std::function<std::vector<double>(const DensityMatrix&)>;

inline MeasureFn measure_fn(Quantifier q) {
    auto scalar = [](double (*f)(const DensityMatrix&)) {
        return MeasureFn([f](const DensityMatrix& rho) { return std::vector<double>{f(rho)}; });
    };
    auto per_path = [](double (*f)(const DensityMatrix&, std::size_t)) {
        return MeasureFn([f](const DensityMatrix& rho) {
            std::vector<double> v(rho.dim());
            for (std::size_t j = 0; j < rho.dim(); ++j) v[j] = f(rho, j);
            return v;
        });
    };
    switch (q) {
        case Quantifier::PathQuantum: return per_path(&path_quantum_uncertainty);
        case Quantifier::Uq: return scalar(&total_quantum_uncertainty);
        case Quantifier::Cl1: return scalar(&coherence_l1);
        case Quantifier::Chs: return scalar(&coherence_hs);
        case Quantifier::Cre: return scalar(&coherence_re);
        case Quantifier::Pl: return scalar(&predictability_l);
        case Quantifier::Pvn: return scalar(&predictability_vn);
        case Quantifier::Pl1: return scalar(&predictability_l1);
        case Quantifier::PathClassical: return per_path(&path_classical_uncertainty);
        case Quantifier::Uc: return scalar(&total_classical_uncertainty);
        case Quantifier::Wl1: return scalar(&w_l1);
        case Quantifier::Sl: return scalar(&linear_entropy);
        case Quantifier::Svn: return scalar(&vn_entropy);
    }
    throw InvalidArgument("unknown quantifier");
}

// ---- random helpers --------------------------------------------------------

inline std::size_t uniform_index(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// Flat Dirichlet weights.
inline std::vector<double> random_simplex(std::size_t k, Rng& rng) {
    std::exponential_distribution<double> e(1.0);
    std::vector<double> w(k);
    double s = 0.0;
    for (auto& x : w) s += (x = e(rng));
    for (auto& x : w) x /= s;
    return w;
}

inline HermitianMatrix random_observable(std::size_t d, Rng& rng) {
    Matrix g(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) g(i, j) = complex_gaussian(rng);
    return HermitianMatrix((g + g.adjoint()) * 0.5);
}

inline DensityMatrix random_density_any_rank(std::size_t d, Rng& rng) {
    return random_density(d, uniform_index(rng, 1, d), rng);
}

inline DensityMatrix mix(std::span<const DensityMatrix> parts, std::span<const double> weights) {
    Matrix m(parts.front().dim(), parts.front().dim());
    for (std::size_t i = 0; i < parts.size(); ++i) m += parts[i].matrix() * weights[i];
    return DensityMatrix(std::move(m));
}

// ---- convexity / concavity -------------------------------------------------

namespace detail {

// sign = +1: f(mix) <= sum w f(parts); sign = -1: reversed.
inline PropertyVerdict check_mixing(const std::string& name, const MeasureFn& f, double sign, std::size_t d,
                                    std::size_t trials, std::uint64_t seed) {
    if (d < 1) throw InvalidArgument("mixing check: d must be positive");
    double worst = -std::numeric_limits<double>::infinity();
    for (std::size_t t = 0; t < trials; ++t) {
        Rng rng = make_rng(seed, t);
        const std::size_t k = uniform_index(rng, 2, 4);
        std::vector<DensityMatrix> parts;
        for (std::size_t i = 0; i < k; ++i) parts.push_back(random_density_any_rank(d, rng));
        const std::vector<double> w = random_simplex(k, rng);
        const std::vector<double> at_mix = f(mix(parts, w));
        std::vector<double> averaged(at_mix.size(), 0.0);
        for (std::size_t i = 0; i < k; ++i) {
            const std::vector<double> v = f(parts[i]);
            for (std::size_t c = 0; c < v.size(); ++c) averaged[c] += w[i] * v[c];
        }
        for (std::size_t c = 0; c < at_mix.size(); ++c) worst = std::max(worst, sign * (at_mix[c] - averaged[c]));
    }
    return make_verdict(name + "[d=" + std::to_string(d) + "]", trials, trials ? worst : 0.0, kExactSlack, seed);
}

inline void require_listed(Quantifier q, const std::vector<Quantifier>& list, const char* what) {
    if (std::find(list.begin(), list.end(), q) == list.end()) {
        throw InvalidArgument(to_string(q) + " is not a " + what + " quantifier");
    }
}

}  // namespace detail

inline PropertyVerdict check_convexity(const std::string& name, const MeasureFn& f, std::size_t d, std::size_t trials,
                                       std::uint64_t seed) {
    return detail::check_mixing("convex/" + name, f, +1.0, d, trials, seed);
}

inline PropertyVerdict check_concavity(const std::string& name, const MeasureFn& f, std::size_t d, std::size_t trials,
                                       std::uint64_t seed) {
    return detail::check_mixing("concave/" + name, f, -1.0, d, trials, seed);
}

inline PropertyVerdict check_convexity(Quantifier q, std::size_t d, std::size_t trials, std::uint64_t seed) {
    detail::require_listed(q, convex_quantifiers(), "convex");
    return check_convexity(to_string(q), measure_fn(q), d, trials, seed);
}

inline PropertyVerdict check_concavity(Quantifier q, std::size_t d, std::size_t trials, std::uint64_t seed) {
    detail::require_listed(q, concave_quantifiers(), "concave");
    return check_concavity(to_string(q), measure_fn(q), d, trials, seed);
}

// ---- extremal cases of the uncertainty axioms ------------------------------

// Pure states carry no classical uncertainty; states commuting with the
// observable carry no quantum uncertainty.
inline std::vector<PropertyVerdict> check_extremal(std::size_t d, std::size_t trials, std::uint64_t seed) {
    double pure_classical = 0.0;     // C-parts of pure states
    double pure_split = 0.0;         // |Q - V| for pure states
    double commuting_quantum = 0.0;  // Q-parts when [rho, A] = 0
    double commuting_split = 0.0;    // |C - V| when [rho, A] = 0
    for (std::size_t t = 0; t < trials; ++t) {
        Rng rng = make_rng(seed, t);
        const HermitianMatrix a = random_observable(d, rng);

        const DensityMatrix pure = random_density(d, 1, rng);
        double c = classical_uncertainty(pure, a);
        c = std::max(c, total_classical_uncertainty(pure));
        c = std::max(c, w_l1(pure));
        c = std::max(c, linear_entropy(pure));
        c = std::max(c, vn_entropy(pure));
        for (std::size_t j = 0; j < d; ++j) c = std::max(c, path_classical_uncertainty(pure, j));
        pure_classical = std::max(pure_classical, c);
        pure_split = std::max(pure_split, std::abs(skew_information(pure, a) - variance(pure, a)));

        // rho = U diag(p) U^dagger and A = U diag(a) U^dagger share an eigenbasis.
        const Matrix u = haar_unitary(d, rng);
        const DensityMatrix diag_rho = dephase(random_density_any_rank(d, rng));
        std::vector<double> spectrum(d);
        for (auto& x : spectrum) x = std::normal_distribution<double>(0.0, 1.0)(rng);
        const DensityMatrix rho = diag_rho.conjugated(u);
        const HermitianMatrix commuting(u * Matrix::diagonal(spectrum) * u.adjoint());
        commuting_quantum = std::max(commuting_quantum, skew_information(rho, commuting));
        commuting_split =
            std::max(commuting_split, std::abs(classical_uncertainty(rho, commuting) - variance(rho, commuting)));

        // Incoherent in the path basis: every path projector commutes with it.
        double q = std::max({total_quantum_uncertainty(diag_rho), coherence_l1(diag_rho), coherence_hs(diag_rho),
                             coherence_re(diag_rho), coherence_wy(diag_rho)});
        for (std::size_t j = 0; j < d; ++j) q = std::max(q, path_quantum_uncertainty(diag_rho, j));
        commuting_quantum = std::max(commuting_quantum, q);
    }
    const std::string tag = "[d=" + std::to_string(d) + "]";
    return {make_verdict("pure_classical_zero" + tag, trials, pure_classical, 1e-9, seed),
            make_verdict("pure_quantum_equals_variance" + tag, trials, pure_split, 1e-9, seed),
            make_verdict("commuting_quantum_zero" + tag, trials, commuting_quantum, 1e-9, seed),
            make_verdict("commuting_classical_equals_variance" + tag, trials, commuting_split, 1e-9, seed)};
}

// ---- U_c as an entanglement monotone ---------------------------------------

struct MonotoneOptions {
    std::size_t dim_a_min = 2, dim_a_max = 4;
    std::size_t dim_b_min = 2, dim_b_max = 4;
    // One trial in `product_every` uses an exact product state.
    std::size_t product_every = 4;
};

// U_c of V diag(lambda) V^dagger in the path basis, with sqrt taken on lambda.
inline double uc_from_schmidt(std::span<const double> lambda, const Matrix& v) {
    double uc = 0.0;
    for (std::size_t j = 0; j < v.rows(); ++j) {
        double s = 0.0, r = 0.0;
        for (std::size_t k = 0; k < lambda.size(); ++k) {
            const double w = abs2(v(j, k));
            s += std::sqrt(lambda[k]) * w;
            r += lambda[k] * w;
        }
        uc += s * s - r * r;
    }
    return uc;
}

// max over pairs a, b of nonzero Schmidt weights of
// (lambda_a - lambda_b)(dU_c/dlambda_a - dU_c/dlambda_b), by central
// differences along e_a - e_b (which stays on the simplex).
inline double schmidt_direction_worst(const DensityMatrix& rho_a) {
    const std::vector<double>& lambda = rho_a.spectrum();
    const Matrix& v = rho_a.eigen().vectors;
    double worst = -std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < lambda.size(); ++a)
        for (std::size_t b = a + 1; b < lambda.size(); ++b) {
            const double smaller = std::min(lambda[a], lambda[b]);
            if (smaller < 1e-9) continue;
            const double h = std::min(kFiniteDifferenceStep, smaller / 2.0);
            std::vector<double> plus = lambda, minus = lambda;
            plus[a] += h;
            plus[b] -= h;
            minus[a] -= h;
            minus[b] += h;
            const double derivative = (uc_from_schmidt(plus, v) - uc_from_schmidt(minus, v)) / (2.0 * h);
            worst = std::max(worst, (lambda[a] - lambda[b]) * derivative);
        }
    return worst;
}

// Four sub-checks on random bipartite pure states:
//   uc_nonnegative             U_c(rho_A) >= 0
//   uc_zero_iff_pure           U_c < 1e-9  <=>  Tr rho_A^2 > 1 - 1e-8
//   uc_local_unitary_invariant U_c unchanged under U_A (x) U_B with the path basis rotated by U_A
//   uc_schmidt_direction       (l_a - l_b)(dU_c/dl_a - dU_c/dl_b) <= 0 for every Schmidt pair
inline std::vector<PropertyVerdict> check_monotone_uc(std::size_t trials, std::uint64_t seed,
                                                      const MonotoneOptions& opt = {}) {
    double negativity = -std::numeric_limits<double>::infinity();
    double zero_iff = -std::numeric_limits<double>::infinity();
    double unitary = 0.0;
    double direction = -std::numeric_limits<double>::infinity();
    for (std::size_t t = 0; t < trials; ++t) {
        Rng rng = make_rng(seed, t);
        const std::size_t da = uniform_index(rng, opt.dim_a_min, opt.dim_a_max);
        const std::size_t db = uniform_index(rng, opt.dim_b_min, opt.dim_b_max);
        const bool product = opt.product_every != 0 && t % opt.product_every == 0;
        const BipartitePureState psi = product
            ? BipartitePureState(da, db, kron(random_ket(da, rng), random_ket(db, rng)))
            : random_bipartite(da, db, rng);
        const DensityMatrix rho_a = psi.reduced(Subsystem::A);
        const double uc = total_classical_uncertainty(rho_a);
        const double purity = 1.0 - linear_entropy(rho_a);

        negativity = std::max(negativity, -uc);

        // Positive margin means the two zero tests disagree.
        zero_iff = std::max(zero_iff, purity > 1.0 - 1e-8 ? uc - 1e-9 : 1e-9 - uc);

        const Matrix ua = haar_unitary(da, rng);
        const Matrix ub = haar_unitary(db, rng);
        const BipartitePureState moved(da, db, ccr::apply(kron(ua, ub), psi.amplitudes()));
        const DensityMatrix rho_moved = moved.reduced(Subsystem::A);
        // Evaluating in the basis {U_A |j>} is evaluating U_A^dagger rho' U_A in the standard basis.
        const double uc_moved = total_classical_uncertainty(rho_moved.conjugated(ua.adjoint()));
        unitary = std::max(unitary, std::abs(uc_moved - uc));

        if (!product) direction = std::max(direction, schmidt_direction_worst(rho_a));
    }
    const auto finite = [](double x) { return std::isfinite(x) ? x : 0.0; };
    return {make_verdict("uc_nonnegative", trials, finite(negativity), 1e-12, seed),
            make_verdict("uc_zero_iff_pure", trials, finite(zero_iff), 0.0, seed),
            make_verdict("uc_local_unitary_invariant", trials, unitary, 1e-9, seed),
            make_verdict("uc_schmidt_direction", trials, finite(direction), kFiniteDifferenceSlack, seed)};
}

// ---- detector coupling -----------------------------------------------------

struct DetectorPoint {
    double gamma, U_q, U_c, P_l;
};

inline std::vector<DetectorPoint> detector_curve(cplx a0, cplx a1, std::size_t steps) {
    if (steps < 2) throw InvalidArgument("detector_curve: need at least 2 grid points");
    std::vector<DetectorPoint> out;
    out.reserve(steps);
    for (std::size_t i = 0; i < steps; ++i) {
        const double gamma = static_cast<double>(i) / static_cast<double>(steps - 1);
        const DensityMatrix rho = detector_reduced_state(DetectorModel::two_path(a0, a1, gamma));
        out.push_back({gamma, total_quantum_uncertainty(rho), total_classical_uncertainty(rho), predictability_l(rho)});
    }
    return out;
}

// Along gamma in [0, 1]: U_q + U_c and P_l stay fixed, U_q never decreases,
// U_q(0) = 0 and U_q(1) = S_l(rho_diag).
inline std::vector<PropertyVerdict> check_detector_transfer(cplx a0, cplx a1, std::size_t steps = 101) {
    const std::vector<DetectorPoint> curve = detector_curve(a0, a1, steps);
    const double total0 = curve.front().U_q + curve.front().U_c;
    double sum_drift = 0.0, pl_drift = 0.0, decrease = 0.0;
    for (std::size_t i = 0; i < curve.size(); ++i) {
        sum_drift = std::max(sum_drift, std::abs(curve[i].U_q + curve[i].U_c - total0));
        pl_drift = std::max(pl_drift, std::abs(curve[i].P_l - curve.front().P_l));
        if (i > 0) decrease = std::max(decrease, curve[i - 1].U_q - curve[i].U_q);
    }
    const double s_l_diag = 1.0 - std::norm(a0) * std::norm(a0) - std::norm(a1) * std::norm(a1);
    const double endpoints = std::max(std::abs(curve.front().U_q), std::abs(curve.back().U_q - s_l_diag));
    return {make_verdict("detector_uncertainty_sum_constant", steps, sum_drift, kExactSlack, 0),
            make_verdict("detector_P_l_constant", steps, pl_drift, kExactSlack, 0),
            make_verdict("detector_U_q_nondecreasing", steps, decrease, kExactSlack, 0),
            make_verdict("detector_endpoints", steps, endpoints, kExactSlack, 0)};
}

// ---- exact identities over random states -----------------------------------

inline std::uint64_t identity_stream(std::size_t d, std::size_t rank, std::size_t i) {
    return (static_cast<std::uint64_t>(d) << 48) | (static_cast<std::uint64_t>(rank) << 32) | i;
}

// Residual sweep over `count` Ginibre states of dimension d and fixed rank.
inline std::vector<PropertyVerdict> check_identities(std::size_t d, std::size_t rank, std::size_t count,
                                                     std::uint64_t seed) {
    const GmmBasis basis = gmm_basis(d);
    const double dd = static_cast<double>(d);
    double unpl = 0, rel = 0, l1 = 0, bz = 0, gmm_ccr = 0, uq_cwy = 0, unc = 0, path_sum = 0, path_form = 0;
    double varp = 0, varc = 0, gdia = 0, goff = 0, uncgell = -std::numeric_limits<double>::infinity(), pauli = 0;
    double split = 0, bound = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < count; ++i) {
        Rng rng = make_rng(seed, identity_stream(d, rank, i));
        const DensityMatrix rho = random_density(d, rank, rng);
        const QuantifierReport r = ccr_report(rho);
        unpl = std::max(unpl, std::abs(r.r_unpl));
        rel = std::max(rel, std::abs(r.r_rel));
        l1 = std::max(l1, std::abs(r.r_l1));
        bz = std::max(bz, std::abs(r.r_bz));
        uq_cwy = std::max(uq_cwy, std::abs(r.U_q - r.C_wy));
        unc = std::max(unc, std::abs(r.U_q + r.U_c - r.S_l_diag));
        bound = std::max(bound, r.U_q + r.U_c - max_linear_entropy(d));

        double vsum = 0.0;
        for (std::size_t j = 0; j < d; ++j) {
            const HermitianMatrix pj = path_projector(d, j);
            vsum += variance(rho, pj);
            path_form = std::max(path_form, std::abs(path_quantum_uncertainty(rho, j) - skew_information(rho, pj)));
        }
        path_sum = std::max(path_sum, std::abs(vsum - (r.U_q + r.U_c)));

        const HermitianMatrix a = random_observable(d, rng);
        split = std::max(split, std::abs(variance(rho, a) - skew_information(rho, a) - classical_uncertainty(rho, a)));

        const GmmExpectationSums e = gmm_expectation_sums(basis, rho);
        varp = std::max(varp, std::abs(e.diag_sq_sum - 2.0 * r.P_l));
        varc = std::max(varc, std::abs(e.offdiag_sq_sum - 2.0 * r.C_hs));
        const GmmVarianceSums v = gmm_variance_sums(basis, rho);
        gdia = std::max(gdia, std::abs(v.diag_var_sum - v.diag_var_closed_form));
        goff = std::max(goff, std::abs(v.offdiag_var_sum - v.offdiag_var_closed_form));
        const double c_gamma = gmm_classical_uncertainty(v, d);
        gmm_ccr = std::max(gmm_ccr, std::abs(r.P_l + r.C_hs + c_gamma - (dd - 1.0) / dd));
        const double lhs = v.diag_var_sum + v.offdiag_var_sum;
        uncgell = std::max(uncgell, 2.0 * (dd - 1.0) - lhs);
        if (d == 2) pauli = std::max(pauli, std::abs(lhs - (3.0 - 2.0 * (r.C_hs + r.P_l))));
    }
    const std::string tag = "[d=" + std::to_string(d) + ",rank=" + std::to_string(rank) + "]";
    std::vector<PropertyVerdict> out{
        make_verdict("ccr_unpl" + tag, count, unpl, 1e-9, seed),
        make_verdict("ccr_rel" + tag, count, rel, 1e-9, seed),
        make_verdict("ccr_l1" + tag, count, l1, 1e-9, seed),
        make_verdict("ccr_bz" + tag, count, bz, 1e-9, seed),
        make_verdict("ccr_gmm" + tag, count, gmm_ccr, 1e-9, seed),
        make_verdict("uq_equals_cwy" + tag, count, uq_cwy, 1e-10, seed),
        make_verdict("unc_linear_entropy" + tag, count, unc, 1e-9, seed),
        make_verdict("uncertainty_bound" + tag, count, bound, 1e-10, seed),
        make_verdict("path_variance_sum" + tag, count, path_sum, 1e-9, seed),
        make_verdict("path_closed_form" + tag, count, path_form, 1e-9, seed),
        make_verdict("variance_split" + tag, count, split, 1e-9, seed),
        make_verdict("gmm_varp" + tag, count, varp, 1e-9, seed),
        make_verdict("gmm_varc" + tag, count, varc, 1e-9, seed),
        make_verdict("gmm_gdia" + tag, count, gdia, 1e-9, seed),
        make_verdict("gmm_goff" + tag, count, goff, 1e-9, seed),
        make_verdict("gmm_uncgell" + tag, count, uncgell, 1e-10, seed),
    };
    if (d == 2) out.push_back(make_verdict("pauli_tradeoff" + tag, count, pauli, 1e-10, seed));
    return out;
}

// ---- full verification run -------------------------------------------------

struct VerifyOptions {
    std::vector<std::size_t> dims{2, 3, 4, 8};
    std::size_t trials = 1000;
    std::uint64_t seed = 42;
    // Self-test hook: swaps P_l for -P_l in the convexity suite so that the
    // harness must report a failure.
    bool inject_fault = false;
};

inline std::vector<PropertyVerdict> run_verification(const VerifyOptions& opt) {
    std::vector<PropertyVerdict> out;
    auto append = [&](std::vector<PropertyVerdict> v) {
        for (auto& x : v) out.push_back(std::move(x));
    };
    for (std::size_t d : opt.dims) {
        if (d < 2 || d > kMaxDim) throw InvalidArgument("verify: dimension " + std::to_string(d) + " not in [2, 64]");
        for (std::size_t rank = 1; rank <= d; ++rank) append(check_identities(d, rank, opt.trials, opt.seed));
        append(check_extremal(d, opt.trials, opt.seed));
        for (Quantifier q : convex_quantifiers()) {
            if (opt.inject_fault && q == Quantifier::Pl) {
                MeasureFn broken = [](const DensityMatrix& rho) { return std::vector<double>{-predictability_l(rho)}; };
                out.push_back(check_convexity("P_l(fault)", broken, d, opt.trials, opt.seed));
            } else {
                out.push_back(check_convexity(q, d, opt.trials, opt.seed));
            }
        }
        for (Quantifier q : concave_quantifiers()) out.push_back(check_concavity(q, d, opt.trials, opt.seed));
    }
    append(check_monotone_uc(opt.trials, opt.seed));
    append(check_detector_transfer(cplx(1.0 / std::sqrt(2.0)), cplx(1.0 / std::sqrt(2.0))));
    return out;
}

}  // namespace ccr
