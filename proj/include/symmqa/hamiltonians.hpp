// Copyright 2026 The symmqa authors
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

#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "symmqa/spin_ops.hpp"

namespace symmqa {

namespace detail {

// Accumulate weight * P_j * Q_k (single-site P at site j, Q at site k, j != k)
// without forming the embedded factors. Basis columns are enumerated once;
// only the bits of sites j and k change between row and column.
inline void add_two_site_term(Matrix& h, const Matrix& p, int j, const Matrix& q, int k,
                              int sites, Complex weight) {
    const Eigen::Index dim = dim_of(sites);
    const int shift_j = sites - j;
    const int shift_k = sites - k;
    for (Eigen::Index c = 0; c < dim; ++c) {
        const int cj = static_cast<int>((c >> shift_j) & 1);
        const int ck = static_cast<int>((c >> shift_k) & 1);
        for (int rj = 0; rj < 2; ++rj)
            for (int rk = 0; rk < 2; ++rk) {
                const Complex v = p(rj, cj) * q(rk, ck);
                if (v == Complex(0.0, 0.0)) continue;
                Eigen::Index r = c;
                r ^= static_cast<Eigen::Index>(cj ^ rj) << shift_j;
                r ^= static_cast<Eigen::Index>(ck ^ rk) << shift_k;
                h(r, c) += weight * v;
            }
    }
}

inline void add_one_site_term(Matrix& h, const Matrix& p, int j, int sites, Complex weight) {
    const Eigen::Index dim = dim_of(sites);
    const int shift_j = sites - j;
    for (Eigen::Index c = 0; c < dim; ++c) {
        const int cj = static_cast<int>((c >> shift_j) & 1);
        for (int rj = 0; rj < 2; ++rj) {
            const Complex v = p(rj, cj);
            if (v == Complex(0.0, 0.0)) continue;
            const Eigen::Index r = c ^ (static_cast<Eigen::Index>(cj ^ rj) << shift_j);
            h(r, c) += weight * v;
        }
    }
}

}  // namespace detail

/// Transverse-field driver H_D = -B sum_j sigma_j^x. Ground state |+...+>
/// with energy -L*B for B > 0.
inline ManyBodyOperator transverse_field(int sites, double field) {
    if (sites < 1) throw ArgumentError("transverse_field: sites must be >= 1");
    const Matrix sx = single_site_pauli(PauliKind::X).matrix;
    Matrix h = Matrix::Zero(dim_of(sites), dim_of(sites));
    for (int j = 1; j <= sites; ++j) detail::add_one_site_term(h, sx, j, sites, -field);
    return make_operator(sites, std::move(h), true);
}

/// Periodic XY ring H = g sum_j (sigma_j^+ sigma_{j+1}^- + h.c.) with
/// sigma_{L+1} = sigma_1 and the ladder convention sigma_pm = sigma_x +- i
/// sigma_y (each flip-flop bond carries 4x its textbook weight). For L = 2
/// the formula is applied literally, so both j = 1 and j = 2 connect the
/// same pair of sites and the bond doubles.
inline ManyBodyOperator xy_ring(int sites, double coupling) {
    if (sites < 2) throw ArgumentError("xy_ring: need at least 2 sites");
    const Matrix sp = single_site_pauli(PauliKind::Plus).matrix;
    const Matrix sm = single_site_pauli(PauliKind::Minus).matrix;
    Matrix h = Matrix::Zero(dim_of(sites), dim_of(sites));
    for (int j = 1; j <= sites; ++j) {
        const int jn = j % sites + 1;
        detail::add_two_site_term(h, sp, j, sm, jn, sites, coupling);
        detail::add_two_site_term(h, sm, j, sp, jn, sites, coupling);
    }
    return make_operator(sites, std::move(h), true);
}

/// Phase convention for the deformed spin star's collective ladder weights.
/// `Complex` reads the exponent as e^{+-2*pi*i*j/L}; `Real` keeps the
/// literal real exponential, Hermitized, which turns the flip-flop weights
/// into cosh(2*pi*j/L).
enum class SpinStarPhase { Complex, Real };

/// Deformed spin star on outer_spins + 1 sites. The central qubit is the
/// first tensor factor (embed site 1); outer spin j sits at embed site j+1.
/// H = omega sigma_0^z + omega1 J^z + J (sigma_0^+ J^- + sigma_0^- J^+),
/// J^pm = sum_j e^{+-2 pi i j/L} sigma_j^pm, J^z = sum_j sigma_j^z over the
/// outer spins.
inline ManyBodyOperator deformed_spin_star(int outer_spins, double omega, double omega1,
                                           double coupling,
                                           SpinStarPhase phase = SpinStarPhase::Complex) {
    if (outer_spins < 1) throw ArgumentError("deformed_spin_star: need >= 1 outer spin");
    const int sites = outer_spins + 1;
    const Matrix sz = single_site_pauli(PauliKind::Z).matrix;
    const Matrix sp = single_site_pauli(PauliKind::Plus).matrix;
    const Matrix sm = single_site_pauli(PauliKind::Minus).matrix;
    Matrix h = Matrix::Zero(dim_of(sites), dim_of(sites));
    detail::add_one_site_term(h, sz, 1, sites, omega);
    for (int j = 1; j <= outer_spins; ++j) detail::add_one_site_term(h, sz, j + 1, sites, omega1);
    for (int j = 1; j <= outer_spins; ++j) {
        const double arg = 2.0 * std::numbers::pi * j / outer_spins;
        if (phase == SpinStarPhase::Complex) {
            const Complex w = std::polar(1.0, arg);
            // sigma_0^+ e^{-i arg} sigma_j^-  +  sigma_0^- e^{+i arg} sigma_j^+
            detail::add_two_site_term(h, sp, 1, sm, j + 1, sites, coupling * std::conj(w));
            detail::add_two_site_term(h, sm, 1, sp, j + 1, sites, coupling * w);
        } else {
            // Literal real exponentials make the formula non-Hermitian; keep
            // its Hermitian part, i.e. cosh-weighted flip-flops.
            const double w = std::cosh(arg);
            detail::add_two_site_term(h, sp, 1, sm, j + 1, sites, coupling * w);
            detail::add_two_site_term(h, sm, 1, sp, j + 1, sites, coupling * w);
        }
    }
    return make_operator(sites, std::move(h), true);
}

/// Open-boundary XXZ chain H = sum_j J_j (x x + y y + delta z z) on
/// couplings.size() + 1 sites; delta is dimensionless.
inline ManyBodyOperator random_xxz_chain(const std::vector<double>& couplings, double delta) {
    if (couplings.empty()) throw ArgumentError("random_xxz_chain: coupling list is empty");
    const int sites = static_cast<int>(couplings.size()) + 1;
    const Matrix sx = single_site_pauli(PauliKind::X).matrix;
    const Matrix sy = single_site_pauli(PauliKind::Y).matrix;
    const Matrix sz = single_site_pauli(PauliKind::Z).matrix;
    Matrix h = Matrix::Zero(dim_of(sites), dim_of(sites));
    for (int j = 1; j < sites; ++j) {
        const double jj = couplings[static_cast<std::size_t>(j - 1)];
        detail::add_two_site_term(h, sx, j, sx, j + 1, sites, jj);
        detail::add_two_site_term(h, sy, j, sy, j + 1, sites, jj);
        detail::add_two_site_term(h, sz, j, sz, j + 1, sites, jj * delta);
    }
    return make_operator(sites, std::move(h), true);
}

/// Linear annealing schedule H(t) = (t/T) H_P + (1 - t/T) H_D.
struct AnnealSchedule {
    ManyBodyOperator problem;
    ManyBodyOperator driver;
    double total_time = 0.0;  // ns
};

inline AnnealSchedule make_schedule(ManyBodyOperator problem, ManyBodyOperator driver,
                                    double total_time) {
    if (problem.sites != driver.sites)
        throw ArgumentError("make_schedule: problem and driver site counts differ");
    if (!problem.hermitian || !driver.hermitian)
        throw ContractError("make_schedule: both Hamiltonians must be Hermitian");
    if (!(total_time > 0.0)) throw ArgumentError("make_schedule: total_time must be > 0");
    return AnnealSchedule{std::move(problem), std::move(driver), total_time};
}

inline ManyBodyOperator schedule_at(const AnnealSchedule& schedule, double t) {
    if (t < 0.0 || t > schedule.total_time)
        throw ArgumentError("schedule_at: t outside [0, T]");
    const double s = t / schedule.total_time;
    Matrix h = s * schedule.problem.matrix + (1.0 - s) * schedule.driver.matrix;
    return make_operator(schedule.problem.sites, std::move(h), true);
}

/// Ground energy of xy_ring(L, g) within the sector of k down spins, from
/// the Jordan-Wigner free-fermion picture: single-particle energies are
/// 8 g cos(q) with q = 2 pi m / L for odd k (periodic fermions) and
/// q = 2 pi (m + 1/2) / L for even k (anti-periodic); the sector ground
/// energy is the sum of the k smallest.
inline double xy_ground_energy_analytic(int sites, double coupling, int sector_filling) {
    if (sites < 2) throw ArgumentError("xy_ground_energy_analytic: need >= 2 sites");
    if (sector_filling < 0 || sector_filling > sites)
        throw ArgumentError("xy_ground_energy_analytic: filling outside 0..L");
    if (sector_filling == 0) return 0.0;
    std::vector<double> energies(static_cast<std::size_t>(sites));
    const double offset = (sector_filling % 2 == 0) ? 0.5 : 0.0;
    for (int m = 0; m < sites; ++m) {
        const double q = 2.0 * std::numbers::pi * (m + offset) / sites;
        energies[static_cast<std::size_t>(m)] = 8.0 * coupling * std::cos(q);
    }
    std::sort(energies.begin(), energies.end());
    double sum = 0.0;
    for (int i = 0; i < sector_filling; ++i) sum += energies[static_cast<std::size_t>(i)];
    return sum;
}

}  // namespace symmqa
