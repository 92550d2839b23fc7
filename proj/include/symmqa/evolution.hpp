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

#include <cmath>
#include <functional>
#include <limits>
#include <utility>
#include <vector>

#include "symmqa/hamiltonians.hpp"
#include "symmqa/spin_ops.hpp"

namespace symmqa {

enum class IntegratorMethod { AdaptiveRK, FixedRK4, AdaptiveTaylor };

inline std::string to_string(IntegratorMethod m) {
    switch (m) {
        case IntegratorMethod::AdaptiveRK: return "adaptive-rk";
        case IntegratorMethod::FixedRK4: return "fixed-rk4";
        case IntegratorMethod::AdaptiveTaylor: return "adaptive-taylor";
    }
    return "?";
}

struct IntegratorParams {
    IntegratorMethod method = IntegratorMethod::AdaptiveRK;
    double rel_tol = 1e-8;
    double abs_tol = 1e-10;
    double max_step = 0.0;  // ns; 0 means total_time / 1000
    int sample_count = 50;
};

inline void validate_params(const IntegratorParams& p) {
    if (!(p.rel_tol > 0.0) || !(p.abs_tol > 0.0))
        throw ArgumentError("integrator: tolerances must be > 0");
    if (p.max_step < 0.0) throw ArgumentError("integrator: max_step must be >= 0");
    if (p.sample_count < 2) throw ArgumentError("integrator: sample_count must be >= 2");
}

/// Per-site Lindblad dephasing/flip channel at rate gamma. Only the
/// involutive Pauli kinds are accepted: for those, sigma rho sigma - rho is
/// the full GKSL dissipator (the anticommutator term reduces to -rho).
struct NoiseSpec {
    double rate = 0.0;  // GHz
    PauliKind kind = PauliKind::Z;
};

inline NoiseSpec make_noise(double rate, PauliKind kind) {
    if (rate < 0.0) throw ArgumentError("make_noise: rate must be >= 0");
    if (kind != PauliKind::X && kind != PauliKind::Y && kind != PauliKind::Z)
        throw ArgumentError("make_noise: Lindblad kind must be an involutive Pauli (x, y, z)");
    return NoiseSpec{rate, kind};
}

namespace detail {

// Elementwise dissipator factor for per-site sigma^z noise on an arbitrary
// basis-index list: damp(i, j) = -2 gamma * hamming(basis_i xor basis_j).
// Stored complex so it combines with state arrays without casts.
inline Matrix z_damp_matrix(double gamma, const std::vector<Eigen::Index>& basis) {
    const auto d = static_cast<Eigen::Index>(basis.size());
    Matrix damp(d, d);
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j) {
            const auto x = static_cast<std::uint64_t>(basis[static_cast<std::size_t>(i)] ^
                                                      basis[static_cast<std::size_t>(j)]);
            damp(i, j) = Complex(-2.0 * gamma * std::popcount(x), 0.0);
        }
    return damp;
}

inline std::vector<Eigen::Index> full_basis(int sites) {
    std::vector<Eigen::Index> basis(static_cast<std::size_t>(dim_of(sites)));
    for (std::size_t i = 0; i < basis.size(); ++i) basis[i] = static_cast<Eigen::Index>(i);
    return basis;
}

// GKSL generator along a linear schedule, on a fixed basis (the full space
// or a single magnetization sector). H(t) = H_D + (t/T)(H_P - H_D).
struct OpenSystem {
    using State = Matrix;
    Matrix h_driver;
    Matrix h_diff;  // H_P - H_D
    double total_time = 1.0;
    Matrix damp;                    // z-noise fast path; empty if unused
    std::vector<Matrix> lindblads;  // generic involutive ops (x/y noise)
    double gamma = 0.0;
    mutable Matrix h_t;

    void prepare(double t) const { h_t = h_driver + (t / total_time) * h_diff; }

    State apply(const State& y) const {
        State out = Complex(0.0, -1.0) * (h_t * y - y * h_t);
        if (damp.size() > 0) out.array() += damp.array() * y.array();
        for (const Matrix& op : lindblads) out.noalias() += gamma * (op * y * op) - gamma * y;
        return out;
    }

    // d/dt of the generator applied to y (the schedule is linear in t).
    State apply_slope(const State& y) const {
        return (Complex(0.0, -1.0) / total_time) * (h_diff * y - y * h_diff);
    }

    State rhs(double t, const State& y) const {
        prepare(t);
        return apply(y);
    }
    // Trace and Hermiticity are conserved by the RHS itself; invariants are
    // enforced at sample points instead.
    void post_step(State&, double) const {}
};

struct ClosedSystem {
    using State = Vector;
    Matrix h_driver;
    Matrix h_diff;
    double total_time = 1.0;
    mutable Matrix h_t;

    void prepare(double t) const { h_t = h_driver + (t / total_time) * h_diff; }
    State apply(const State& y) const { return Complex(0.0, -1.0) * (h_t * y); }
    State apply_slope(const State& y) const {
        return (Complex(0.0, -1.0) / total_time) * (h_diff * y);
    }
    State rhs(double t, const State& y) const {
        prepare(t);
        return apply(y);
    }
    // The exact flow is unitary: remove the per-step norm drift (and treat a
    // drift beyond 1e-8 in a single step as a broken step).
    void post_step(State& y, double t) const {
        const double norm = y.norm();
        if (std::abs(norm - 1.0) > 1e-8)
            throw IntegrationError("per-step norm drift " + format_sci(norm - 1.0), t);
        y /= norm;
    }
};

template <class State>
double error_norm(const State& err, const State& y0, const State& y1, double atol, double rtol) {
    const auto sc = atol + rtol * y0.array().abs().max(y1.array().abs());
    return std::sqrt((err.array().abs() / sc).square().mean());
}

// Dormand-Prince 5(4) embedded pair with FSAL, per-segment.
template <class Sys, class State>
void integrate_dp54(const Sys& sys, State& y, double t0, double t1, double h_init,
                    double max_step, double rtol, double atol) {
    static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    static constexpr double a21 = 1.0 / 5;
    static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                            a54 = -212.0 / 729;
    static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                            a64 = 49.0 / 176, a65 = -5103.0 / 18656;
    static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                            b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    static constexpr double e1 = 35.0 / 384 - 5179.0 / 57600, e3 = 500.0 / 1113 - 7571.0 / 16695,
                            e4 = 125.0 / 192 - 393.0 / 640,
                            e5 = -2187.0 / 6784 + 92097.0 / 339200,
                            e6 = 11.0 / 84 - 187.0 / 2100, e7 = -1.0 / 40;

    double t = t0;
    double h = std::min({h_init, max_step, t1 - t0});
    State k1 = sys.rhs(t, y);
    int consecutive_rejects = 0;
    while (t < t1) {
        h = std::min(h, t1 - t);
        const State y2 = y + h * a21 * k1;
        const State k2 = sys.rhs(t + c2 * h, y2);
        const State y3 = y + h * (a31 * k1 + a32 * k2);
        const State k3 = sys.rhs(t + c3 * h, y3);
        const State y4 = y + h * (a41 * k1 + a42 * k2 + a43 * k3);
        const State k4 = sys.rhs(t + c4 * h, y4);
        const State y5 = y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4);
        const State k5 = sys.rhs(t + c5 * h, y5);
        const State y6 = y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5);
        const State k6 = sys.rhs(t + h, y6);
        const State ynew = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
        const State k7 = sys.rhs(t + h, ynew);
        const State err_vec =
            h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);
        const double err = error_norm(err_vec, y, ynew, atol, rtol);
        if (err <= 1.0) {
            t += h;
            y = ynew;
            sys.post_step(y, t);
            k1 = k7;  // FSAL; any post_step rescaling is far below step tolerance
            consecutive_rejects = 0;
            const double factor = (err > 0.0) ? 0.9 * std::pow(err, -0.2) : 5.0;
            h = std::min(h * std::clamp(factor, 0.2, 5.0), max_step);
        } else {
            if (++consecutive_rejects > 200)
                throw IntegrationError("adaptive RK step size collapsed", t);
            h *= std::clamp(0.9 * std::pow(err, -0.2), 0.05, 0.9);
        }
        if (!(h > 0.0) || t + h == t) throw IntegrationError("step underflow", t);
    }
}

template <class Sys, class State>
void integrate_rk4(const Sys& sys, State& y, double t0, double t1, double step) {
    const double span = t1 - t0;
    const int n = std::max(1, static_cast<int>(std::ceil(span / step)));
    const double h = span / n;
    for (int i = 0; i < n; ++i) {
        const double t = t0 + i * h;
        const State k1 = sys.rhs(t, y);
        const State k2 = sys.rhs(t + 0.5 * h, y + (0.5 * h) * k1);
        const State k3 = sys.rhs(t + 0.5 * h, y + (0.5 * h) * k2);
        const State k4 = sys.rhs(t + h, y + h * k3);
        y += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        sys.post_step(y, t + h);
    }
}

// Adaptive Taylor-series propagation. The generator is affine in t, so the
// state derivatives follow the closed recursion
//   d_{k+1} = (L(t) d_k + L' d_{k-1}) / (k + 1),  d_k = y^{(k)} / k!,
// and the step size comes from the last two retained terms. High order
// (default 16) keeps steps at several radians of phase while the terms are
// h-independent, so no rejection loop is needed.
template <class Sys, class State>
void integrate_taylor(const Sys& sys, State& y, double t0, double t1, double max_step,
                      double rtol, double atol, int order = 16) {
    const int p = order;
    std::vector<State> d(static_cast<std::size_t>(p) + 1);
    double t = t0;
    while (t < t1) {
        sys.prepare(t);
        d[0] = y;
        d[1] = sys.apply(d[0]);
        for (int k = 1; k < p; ++k)
            d[static_cast<std::size_t>(k) + 1] =
                (sys.apply(d[static_cast<std::size_t>(k)]) +
                 sys.apply_slope(d[static_cast<std::size_t>(k) - 1])) /
                (k + 1.0);
        const double tol = atol + rtol * y.norm();
        double h = std::min(max_step, t1 - t);
        for (int k = p - 1; k <= p; ++k) {
            const double nk = d[static_cast<std::size_t>(k)].norm();
            if (nk > 0.0) h = std::min(h, 0.9 * std::pow(tol / nk, 1.0 / k));
        }
        if (!(h > 0.0) || t + h == t) throw IntegrationError("Taylor step underflow", t);
        h = std::min(h, t1 - t);
        State acc = d[static_cast<std::size_t>(p)];
        for (int k = p - 1; k >= 0; --k) acc = h * acc + d[static_cast<std::size_t>(k)];
        y = std::move(acc);
        t += h;
        sys.post_step(y, t);
    }
}

inline std::vector<double> sample_times(double total_time, int count) {
    std::vector<double> ts(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i)
        ts[static_cast<std::size_t>(i)] = total_time * i / (count - 1.0);
    ts.back() = total_time;
    return ts;
}

// Integrate 0 -> T hitting every sample time exactly; observer(t, y) runs at
// each sample including t = 0.
template <class Sys>
void run_schedule(const Sys& sys, typename Sys::State& y, const IntegratorParams& params,
                  const std::function<void(double, const typename Sys::State&)>& observer) {
    validate_params(params);
    const double total = sys.total_time;
    const double max_step = params.max_step > 0.0 ? params.max_step : total / 1000.0;
    const std::vector<double> ts = sample_times(total, params.sample_count);
    observer(0.0, y);
    for (std::size_t i = 1; i < ts.size(); ++i) {
        const double ta = ts[i - 1], tb = ts[i];
        switch (params.method) {
            case IntegratorMethod::AdaptiveRK:
                integrate_dp54(sys, y, ta, tb, max_step, max_step, params.rel_tol,
                               params.abs_tol);
                break;
            case IntegratorMethod::FixedRK4:
                integrate_rk4(sys, y, ta, tb, max_step);
                break;
            case IntegratorMethod::AdaptiveTaylor:
                integrate_taylor(sys, y, ta, tb, max_step, params.rel_tol, params.abs_tol);
                break;
        }
        observer(tb, y);
    }
}

inline OpenSystem make_open_system(const AnnealSchedule& schedule, const NoiseSpec& noise) {
    OpenSystem sys;
    sys.h_driver = schedule.driver.matrix;
    sys.h_diff = schedule.problem.matrix - schedule.driver.matrix;
    sys.total_time = schedule.total_time;
    sys.gamma = noise.rate;
    const int sites = schedule.problem.sites;
    if (noise.rate > 0.0) {
        if (noise.kind == PauliKind::Z) {
            sys.damp = z_damp_matrix(noise.rate, full_basis(sites));
        } else {
            const ManyBodyOperator op1 = single_site_pauli(noise.kind);
            for (int j = 1; j <= sites; ++j)
                sys.lindblads.push_back(embed(op1, j, sites).matrix);
        }
    }
    return sys;
}

}  // namespace detail

/// Right-hand side of the GKSL equation with a fixed Hamiltonian:
/// drho/dt = -i[H, rho] + gamma sum_n (sigma_n rho sigma_n - rho).
inline Matrix gksl_rhs(const DensityMatrix& rho, const ManyBodyOperator& h,
                       const NoiseSpec& noise) {
    if (rho.sites != h.sites) throw ArgumentError("gksl_rhs: dimension mismatch");
    Matrix out = Complex(0.0, -1.0) * (h.matrix * rho.matrix - rho.matrix * h.matrix);
    if (noise.rate > 0.0) {
        if (noise.kind == PauliKind::Z) {
            const Matrix damp = detail::z_damp_matrix(noise.rate, detail::full_basis(rho.sites));
            out.array() += damp.array() * rho.matrix.array();
        } else {
            const ManyBodyOperator op1 = single_site_pauli(noise.kind);
            for (int j = 1; j <= rho.sites; ++j) {
                const Matrix op = embed(op1, j, rho.sites).matrix;
                out.noalias() += noise.rate * (op * rho.matrix * op);
                out.noalias() -= noise.rate * rho.matrix;
            }
        }
    }
    return out;
}

/// Trace distance (1/2) ||a - b||_1 between two Hermitian matrices.
inline double trace_distance(const Matrix& a, const Matrix& b) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(a - b, Eigen::EigenvaluesOnly);
    return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

inline double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
    return trace_distance(a.matrix, b.matrix);
}

struct OpenEvolution {
    DensityMatrix final_state;
    std::vector<std::pair<double, DensityMatrix>> samples;
};

/// Integrate the GKSL master equation along the schedule. Density-matrix
/// invariants (trace, Hermiticity, positivity) are checked at every sample;
/// a violation raises IntegrationError carrying the offending time.
inline OpenEvolution evolve_open(const DensityMatrix& rho0, const AnnealSchedule& schedule,
                                 const NoiseSpec& noise, const IntegratorParams& params) {
    if (rho0.sites != schedule.problem.sites)
        throw ArgumentError("evolve_open: state and schedule dimensions differ");
    validate_density(rho0);
    make_noise(noise.rate, noise.kind);
    const detail::OpenSystem sys = detail::make_open_system(schedule, noise);
    Matrix y = rho0.matrix;
    OpenEvolution result;
    detail::run_schedule<detail::OpenSystem>(
        sys, y, params, [&](double t, const Matrix& state) {
            DensityMatrix rho{rho0.sites, state};
            try {
                validate_density(rho);
            } catch (const ContractError& e) {
                throw IntegrationError(e.what(), t);
            }
            result.samples.emplace_back(t, std::move(rho));
        });
    result.final_state = result.samples.back().second;
    return result;
}

struct ClosedEvolution {
    StateVector final_state;
    std::vector<std::pair<double, StateVector>> samples;
};

/// Integrate the Schroedinger equation d psi/dt = -i H(t) psi along the
/// schedule (the gamma = 0 limit of the GKSL equation). Norm drift beyond
/// 1e-8 at any sample raises IntegrationError; the stored states are
/// renormalized after that check.
inline ClosedEvolution evolve_closed(const StateVector& psi0, const AnnealSchedule& schedule,
                                     const IntegratorParams& params) {
    if (psi0.sites != schedule.problem.sites)
        throw ArgumentError("evolve_closed: state and schedule dimensions differ");
    detail::ClosedSystem sys;
    sys.h_driver = schedule.driver.matrix;
    sys.h_diff = schedule.problem.matrix - schedule.driver.matrix;
    sys.total_time = schedule.total_time;
    Vector y = psi0.amplitudes;
    ClosedEvolution result;
    detail::run_schedule<detail::ClosedSystem>(
        sys, y, params, [&](double t, const Vector& state) {
            const double drift = std::abs(state.norm() - 1.0);
            if (drift > 1e-8)
                throw IntegrationError("closed evolution norm drift " + std::to_string(drift), t);
            Vector normalized = state / state.norm();
            result.samples.emplace_back(t, make_state_vector(psi0.sites, std::move(normalized)));
        });
    result.final_state = result.samples.back().second;
    return result;
}

}  // namespace symmqa
