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

#include <chrono>
#include <cstdint>
#include <optional>
#include <random>
#include <variant>
#include <vector>

#include "symmqa/detail/parallel.hpp"
#include "symmqa/evolution.hpp"
#include "symmqa/hamiltonians.hpp"
#include "symmqa/symmetry.hpp"

namespace symmqa {

/// PRNG contract for coupling sampling, recorded in every result record:
/// std::mt19937_64 mapped to [lo, hi) via the top 53 bits.
inline constexpr const char* kPrngId = "mt19937_64-u53";

enum class DriverKind { Transverse, Xy };

inline std::string to_string(DriverKind k) {
    return k == DriverKind::Transverse ? "transverse" : "xy";
}

struct SpinStarSpec {
    int outer_spins = 3;
    double omega = 0.5;
    double omega1 = 0.5;
    double coupling = 5.0;
    SpinStarPhase phase = SpinStarPhase::Complex;
};

struct XxzSpec {
    std::vector<double> couplings;
    double delta = 0.7;
};

struct RandomXxzSpec {
    int sites = 4;
    double delta = 0.7;
    std::uint64_t seed = 0;
    double low = 0.0;
    double high = 2.0;
};

using ProblemSpec = std::variant<SpinStarSpec, XxzSpec, RandomXxzSpec>;

/// Deterministic uniform couplings in [lo, hi).
inline std::vector<double> sample_couplings(std::uint64_t seed, int count, double lo,
                                            double hi) {
    if (count < 1) throw ArgumentError("sample_couplings: count must be >= 1");
    if (!(lo < hi)) throw ArgumentError("sample_couplings: need lo < hi");
    std::mt19937_64 gen(seed);
    std::vector<double> out(static_cast<std::size_t>(count));
    for (double& v : out) {
        const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
        v = lo + (hi - lo) * u;
    }
    return out;
}

inline int problem_sites(const ProblemSpec& spec) {
    return std::visit(
        [](const auto& s) -> int {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, SpinStarSpec>) return s.outer_spins + 1;
            if constexpr (std::is_same_v<T, XxzSpec>)
                return static_cast<int>(s.couplings.size()) + 1;
            if constexpr (std::is_same_v<T, RandomXxzSpec>) return s.sites;
        },
        spec);
}

inline ManyBodyOperator build_problem(const ProblemSpec& spec) {
    return std::visit(
        [](const auto& s) -> ManyBodyOperator {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, SpinStarSpec>)
                return deformed_spin_star(s.outer_spins, s.omega, s.omega1, s.coupling, s.phase);
            if constexpr (std::is_same_v<T, XxzSpec>)
                return random_xxz_chain(s.couplings, s.delta);
            if constexpr (std::is_same_v<T, RandomXxzSpec>) {
                if (s.sites < 2) throw ArgumentError("random-xxz: need >= 2 sites");
                return random_xxz_chain(sample_couplings(s.seed, s.sites - 1, s.low, s.high),
                                        s.delta);
            }
        },
        spec);
}

inline ManyBodyOperator build_driver(DriverKind kind, int sites, double amplitude) {
    return kind == DriverKind::Transverse ? transverse_field(sites, amplitude)
                                          : xy_ring(sites, amplitude);
}

struct SectorPolicy {
    enum class Kind { Auto, FixedM, Global };
    Kind kind = Kind::Auto;
    int magnetization = 0;  // used by FixedM
};

struct ExperimentConfig {
    ProblemSpec problem;
    DriverKind driver = DriverKind::Xy;
    double amplitude = 1.0;       // B or g, GHz
    double annealing_time = 100;  // ns
    NoiseSpec noise{};
    SectorPolicy sector_policy{};
    IntegratorParams integrator{};
    std::uint64_t seed = 0;
    // Exact optimization: an XY-driver state started inside one sector stays
    // there under both the Hamiltonian and sigma^z dephasing, so the whole
    // evolution may run in the sector block.
    bool restrict_to_sector = false;
};

inline void validate_config(const ExperimentConfig& config) {
    if (!(config.amplitude > 0.0)) throw ArgumentError("config: amplitude must be > 0");
    if (!(config.annealing_time > 0.0))
        throw ArgumentError("config: annealing_time must be > 0");
    make_noise(config.noise.rate, config.noise.kind);
    validate_params(config.integrator);
}

struct SamplePoint {
    double t = 0.0;                 // ns
    double energy = 0.0;            // Tr(rho H_P), GHz
    double ground_population = 0.0; // Tr(P_ground rho)
};

struct SectorPopulation {
    int magnetization = 0;
    double population = 0.0;
};

struct RunResult {
    double e_true = 0.0;
    double e_qa = 0.0;
    double estimation_error = 0.0;
    double ground_fidelity = 0.0;
    int ground_degeneracy = 1;
    std::optional<int> initial_sector;
    std::vector<SectorPopulation> initial_populations;
    std::vector<SectorPopulation> final_populations;
    std::vector<SamplePoint> samples;
    double wall_time_s = 0.0;
    bool used_closed_path = false;
    bool used_sector_restriction = false;
};

namespace detail {

struct ProblemAnalysis {
    ManyBodyOperator hamiltonian;
    double ground_energy = 0.0;
    int ground_degeneracy = 1;
    Matrix ground_vectors;  // columns spanning the ground eigenspace
    bool conserves_sz = false;
    SectorDecomposition decomposition;
    std::vector<int> ground_sectors;  // magnetizations attaining the minimum
};

inline ProblemAnalysis analyze_problem(const ProblemSpec& spec) {
    ProblemAnalysis a{build_problem(spec)};
    const int sites = a.hamiltonian.sites;
    Eigen::SelfAdjointEigenSolver<Matrix> es(a.hamiltonian.matrix);
    const Eigen::VectorXd& evals = es.eigenvalues();
    a.ground_energy = evals(0);
    const double range = std::max(evals.maxCoeff() - evals.minCoeff(), 1.0);
    int deg = 0;
    while (deg < evals.size() && evals(deg) - evals(0) <= kDegeneracyRelTol * range) ++deg;
    a.ground_degeneracy = deg;
    a.ground_vectors = es.eigenvectors().leftCols(deg);
    a.decomposition = decompose(sites);
    a.conserves_sz = block_leakage(a.hamiltonian, a.decomposition) <= kConservationTol;
    if (a.conserves_sz) {
        for (const Sector& sector : a.decomposition.sectors) {
            const SectorOperator block = restrict_to_sector(a.hamiltonian, sector);
            Eigen::SelfAdjointEigenSolver<Matrix> bs(block.matrix, Eigen::EigenvaluesOnly);
            if (bs.eigenvalues()(0) - a.ground_energy <= kDegeneracyRelTol * range)
                a.ground_sectors.push_back(sector.magnetization);
        }
    }
    return a;
}

inline int resolve_sector(const ExperimentConfig& config, const ProblemAnalysis& analysis) {
    switch (config.sector_policy.kind) {
        case SectorPolicy::Kind::FixedM:
            sector_of_magnetization(analysis.decomposition, config.sector_policy.magnetization);
            return config.sector_policy.magnetization;
        case SectorPolicy::Kind::Auto: {
            if (!analysis.conserves_sz)
                throw ContractError("sector policy auto: problem does not conserve S_z");
            if (analysis.ground_sectors.size() > 1) {
                std::string ms;
                for (int m : analysis.ground_sectors)
                    ms += (ms.empty() ? "" : ", ") + std::to_string(m);
                throw AmbiguityError(
                    "problem ground state is degenerate across magnetization sectors m = {" + ms +
                    "}; choose one explicitly with sector_policy fixed_m");
            }
            if (analysis.ground_sectors.empty())
                throw ContractError("sector policy auto: no sector attains the ground energy");
            return analysis.ground_sectors.front();
        }
        case SectorPolicy::Kind::Global: {
            // The driver's global ground sector: scan per-sector driver minima.
            const ManyBodyOperator driver = build_driver(
                config.driver, analysis.hamiltonian.sites, config.amplitude);
            double best = std::numeric_limits<double>::infinity();
            int best_m = analysis.decomposition.sectors.front().magnetization;
            for (const Sector& sector : analysis.decomposition.sectors) {
                const SectorGroundState g = sector_ground_state(driver, sector);
                if (g.energy < best - 1e-12) {
                    best = g.energy;
                    best_m = sector.magnetization;
                }
            }
            return best_m;
        }
    }
    throw ArgumentError("unknown sector policy");
}

}  // namespace detail

struct InitialState {
    DensityMatrix rho;
    std::optional<int> sector;  // set for XY-driver states
};

/// Ground state of the drive Hamiltonian: |+...+><+...+| for the transverse
/// field; for the XY driver, the driver's ground state within the policy's
/// sector (auto = the sector holding the problem's exact ground state).
inline InitialState initial_state(const ExperimentConfig& config) {
    validate_config(config);
    const detail::ProblemAnalysis analysis = detail::analyze_problem(config.problem);
    const int sites = analysis.hamiltonian.sites;
    if (config.driver == DriverKind::Transverse) {
        const Eigen::Index dim = dim_of(sites);
        Vector plus = Vector::Constant(dim, Complex(1.0 / std::sqrt(static_cast<double>(dim)), 0));
        return InitialState{projector_of(make_state_vector(sites, std::move(plus))), {}};
    }
    const int m = detail::resolve_sector(config, analysis);
    const Sector& sector = sector_of_magnetization(analysis.decomposition, m);
    const ManyBodyOperator driver = build_driver(config.driver, sites, config.amplitude);
    const SectorGroundState ground = sector_ground_state(driver, sector);
    return InitialState{projector_of(ground.state), m};
}

namespace detail {

inline std::vector<SectorPopulation> sector_populations(const SectorDecomposition& dec,
                                                        const Matrix& rho) {
    std::vector<SectorPopulation> out;
    out.reserve(dec.sectors.size());
    for (const Sector& sector : dec.sectors) {
        double p = 0.0;
        for (Eigen::Index idx : sector.indices) p += rho(idx, idx).real();
        out.push_back({sector.magnetization, p});
    }
    return out;
}

// Keep only the sector's rows (columns untouched).
inline Matrix restrict_rows(const Matrix& m, const Sector& sector) {
    Matrix out(static_cast<Eigen::Index>(sector.indices.size()), m.cols());
    for (Eigen::Index i = 0; i < out.rows(); ++i)
        out.row(i) = m.row(sector.indices[static_cast<std::size_t>(i)]);
    return out;
}

inline Matrix sector_block(const Matrix& m, const Sector& sector) {
    const auto d = static_cast<Eigen::Index>(sector.indices.size());
    Matrix out(d, d);
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j)
            out(i, j) = m(sector.indices[static_cast<std::size_t>(i)],
                          sector.indices[static_cast<std::size_t>(j)]);
    return out;
}

}  // namespace detail

/// One full experiment: prepare, evolve, measure.
/// E_qa = Tr(rho(T) H_P), estimation error = |E_true - E_qa|, fidelity is
/// the population of the (possibly degenerate) ground eigenspace of H_P.
/// When noise.rate == 0 the run integrates the pure state directly.
inline RunResult run(const ExperimentConfig& config) {
    const auto t_start = std::chrono::steady_clock::now();
    validate_config(config);
    const detail::ProblemAnalysis analysis = detail::analyze_problem(config.problem);
    const int sites = analysis.hamiltonian.sites;
    const ManyBodyOperator driver = build_driver(config.driver, sites, config.amplitude);

    RunResult result;
    result.e_true = analysis.ground_energy;
    result.ground_degeneracy = analysis.ground_degeneracy;
    const bool closed = config.noise.rate == 0.0;
    result.used_closed_path = closed;

    // Initial pure state (full-space amplitudes) and its sector, if any.
    Vector psi0;
    std::optional<int> sector_m;
    if (config.driver == DriverKind::Transverse) {
        const Eigen::Index dim = dim_of(sites);
        psi0 = Vector::Constant(dim, Complex(1.0 / std::sqrt(static_cast<double>(dim)), 0.0));
    } else {
        const int m = detail::resolve_sector(config, analysis);
        sector_m = m;
        psi0 = sector_ground_state(driver,
                                   sector_of_magnetization(analysis.decomposition, m))
                   .state.amplitudes;
    }
    result.initial_sector = sector_m;

    const bool restricted = config.restrict_to_sector && sector_m.has_value() &&
                            analysis.conserves_sz &&
                            (closed || config.noise.kind == PauliKind::Z);
    result.used_sector_restriction = restricted;

    // Working basis: one sector or the full space.
    const Sector* sector =
        restricted ? &sector_of_magnetization(analysis.decomposition, *sector_m) : nullptr;
    const std::vector<Eigen::Index> basis =
        restricted ? sector->indices : detail::full_basis(sites);

    Matrix h_p, h_d;
    Vector psi_work;
    if (restricted) {
        h_p = detail::sector_block(analysis.hamiltonian.matrix, *sector);
        h_d = detail::sector_block(driver.matrix, *sector);
        psi_work = detail::restrict_rows(psi0, *sector);
        psi_work.normalize();
    } else {
        h_p = analysis.hamiltonian.matrix;
        h_d = driver.matrix;
        psi_work = psi0;
    }
    const Matrix ground_block = restricted
                                    ? detail::restrict_rows(analysis.ground_vectors, *sector)
                                    : analysis.ground_vectors;

    const auto observe = [&](double t, const Matrix& rho) {
        SamplePoint p;
        p.t = t;
        p.energy = (rho * h_p).trace().real();
        p.ground_population = (ground_block.adjoint() * rho * ground_block).trace().real();
        result.samples.push_back(p);
    };
    const auto observe_pure = [&](double t, const Vector& psi) {
        SamplePoint p;
        p.t = t;
        p.energy = psi.dot(h_p * psi).real();
        p.ground_population = (ground_block.adjoint() * psi).squaredNorm();
        result.samples.push_back(p);
    };

    Matrix rho_final;
    Vector psi_final;
    if (closed) {
        detail::ClosedSystem sys;
        sys.h_driver = h_d;
        sys.h_diff = h_p - h_d;
        sys.total_time = config.annealing_time;
        Vector y = psi_work;
        detail::run_schedule<detail::ClosedSystem>(
            sys, y, config.integrator, [&](double t, const Vector& state) {
                const double drift = std::abs(state.norm() - 1.0);
                if (drift > 1e-8)
                    throw IntegrationError("norm drift " + std::to_string(drift), t);
                observe_pure(t, state);
            });
        psi_final = y / y.norm();
    } else {
        detail::OpenSystem sys;
        sys.h_driver = h_d;
        sys.h_diff = h_p - h_d;
        sys.total_time = config.annealing_time;
        sys.gamma = config.noise.rate;
        if (config.noise.kind == PauliKind::Z) {
            sys.damp = detail::z_damp_matrix(config.noise.rate, basis);
        } else {
            const ManyBodyOperator op1 = single_site_pauli(config.noise.kind);
            for (int j = 1; j <= sites; ++j)
                sys.lindblads.push_back(embed(op1, j, sites).matrix);
        }
        Matrix y = psi_work * psi_work.adjoint();
        detail::run_schedule<detail::OpenSystem>(
            sys, y, config.integrator, [&](double t, const Matrix& state) {
                // Same invariants as validate_density, on the working block.
                const double tr = std::abs(state.trace().real() - 1.0) +
                                  std::abs(state.trace().imag());
                if (tr > kTraceTol)
                    throw IntegrationError("trace drift " + std::to_string(tr), t);
                const double herm = hermiticity_defect(state);
                if (herm > kDensityHermTol)
                    throw IntegrationError("hermiticity drift " + std::to_string(herm), t);
                Eigen::SelfAdjointEigenSolver<Matrix> es(state, Eigen::EigenvaluesOnly);
                const double min_eig = es.eigenvalues().minCoeff();
                if (min_eig < kPositivityTol)
                    throw IntegrationError("positivity violation " + std::to_string(min_eig), t);
                observe(t, state);
            });
        rho_final = std::move(y);
    }

    result.e_qa = result.samples.back().energy;
    result.estimation_error = std::abs(result.e_true - result.e_qa);
    const double fidelity = result.samples.back().ground_population;
    if (fidelity < -1e-9 || fidelity > 1.0 + 1e-9)
        throw NumericalError("ground fidelity outside [0,1]: " + std::to_string(fidelity));
    result.ground_fidelity = std::clamp(fidelity, 0.0, 1.0);

    // Endpoint sector populations in the full space.
    const auto populations = [&](const Matrix& rho_full) {
        return detail::sector_populations(analysis.decomposition, rho_full);
    };
    if (restricted) {
        // All weight sits in the chosen sector; report the computed trace.
        const double tr = closed ? psi_final.squaredNorm() : rho_final.trace().real();
        for (const Sector& s : analysis.decomposition.sectors)
            result.final_populations.push_back(
                {s.magnetization, s.magnetization == *sector_m ? tr : 0.0});
        for (const Sector& s : analysis.decomposition.sectors)
            result.initial_populations.push_back(
                {s.magnetization, s.magnetization == *sector_m ? 1.0 : 0.0});
    } else {
        const Matrix rho0_full = psi_work * psi_work.adjoint();
        result.initial_populations = populations(rho0_full);
        if (closed) {
            const Matrix rho_t = psi_final * psi_final.adjoint();
            result.final_populations = populations(rho_t);
        } else {
            result.final_populations = populations(rho_final);
        }
    }

    result.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
    return result;
}

struct AmplitudePoint {
    double amplitude = 0.0;
    RunResult result;
};

struct AmplitudeOptimization {
    double best_amplitude = 0.0;
    RunResult best_result;
    std::vector<AmplitudePoint> curve;  // sorted by amplitude
    bool argmin_on_boundary = false;
};

inline constexpr int kGoldenSectionIterations = 10;

namespace detail {

// Golden-section refinement of the estimation error in log-amplitude space.
inline void golden_refine(const ExperimentConfig& base, double lo, double hi,
                          AmplitudeOptimization& opt) {
    constexpr double invphi = 0.6180339887498949;
    double a = std::log(lo), b = std::log(hi);
    const auto probe = [&](double x) {
        ExperimentConfig c = base;
        c.amplitude = std::exp(x);
        RunResult r = run(c);
        const double err = r.estimation_error;
        opt.curve.push_back({c.amplitude, std::move(r)});
        if (err < opt.best_result.estimation_error) {
            opt.best_amplitude = c.amplitude;
            opt.best_result = opt.curve.back().result;
        }
        return err;
    };
    double x1 = b - invphi * (b - a), x2 = a + invphi * (b - a);
    double f1 = probe(x1), f2 = probe(x2);
    for (int i = 0; i < kGoldenSectionIterations - 2; ++i) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = probe(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = probe(x2);
        }
    }
}

}  // namespace detail

/// Run the experiment at every amplitude in the grid and return the argmin
/// of the estimation error (ties toward the smaller amplitude), plus the
/// full error-vs-amplitude curve. With refine = true, a golden-section pass
/// sharpens the best bracket.
inline AmplitudeOptimization optimize_amplitude(const ExperimentConfig& config,
                                                std::vector<double> amplitude_grid,
                                                int threads = 0, bool refine = false) {
    if (amplitude_grid.empty()) throw ArgumentError("optimize_amplitude: empty grid");
    std::sort(amplitude_grid.begin(), amplitude_grid.end());
    if (!(amplitude_grid.front() > 0.0))
        throw ArgumentError("optimize_amplitude: amplitudes must be > 0");
    AmplitudeOptimization opt;
    opt.curve.resize(amplitude_grid.size());
    detail::parallel_for(amplitude_grid.size(), threads, [&](std::size_t i) {
        ExperimentConfig c = config;
        c.amplitude = amplitude_grid[i];
        opt.curve[i] = {c.amplitude, run(c)};
    });
    std::size_t best = 0;
    for (std::size_t i = 1; i < opt.curve.size(); ++i)
        if (opt.curve[i].result.estimation_error < opt.curve[best].result.estimation_error)
            best = i;
    opt.best_amplitude = opt.curve[best].amplitude;
    opt.best_result = opt.curve[best].result;
    opt.argmin_on_boundary =
        amplitude_grid.size() > 1 && (best == 0 || best + 1 == amplitude_grid.size());
    if (refine && amplitude_grid.size() > 1) {
        const double lo = amplitude_grid[best == 0 ? 0 : best - 1];
        const double hi = amplitude_grid[std::min(best + 1, amplitude_grid.size() - 1)];
        if (lo < hi) detail::golden_refine(config, lo, hi, opt);
        std::sort(opt.curve.begin(), opt.curve.end(),
                  [](const AmplitudePoint& x, const AmplitudePoint& y) {
                      return x.amplitude < y.amplitude;
                  });
    }
    return opt;
}

struct TimeSweepPoint {
    double annealing_time = 0.0;
    double amplitude = 0.0;
    RunResult result;
};

struct TimeSweep {
    std::vector<TimeSweepPoint> points;
    double optimal_time = 0.0;
    double min_error = 0.0;
};

/// Error vs annealing time, optionally re-optimizing the drive amplitude at
/// each time (the protocol used for the reproduction figures). Cells run on
/// the work pool; results are ordered by (T, amplitude) regardless of
/// thread count.
inline TimeSweep sweep_annealing_time(const ExperimentConfig& config,
                                      const std::vector<double>& annealing_times, bool optimize,
                                      const std::vector<double>& amplitude_grid = {},
                                      int threads = 0, bool refine = false) {
    if (annealing_times.empty()) throw ArgumentError("sweep_annealing_time: empty T list");
    for (std::size_t i = 0; i < annealing_times.size(); ++i) {
        if (!(annealing_times[i] > 0.0))
            throw ArgumentError("sweep_annealing_time: annealing times must be > 0");
        if (i > 0 && annealing_times[i] <= annealing_times[i - 1])
            throw ArgumentError("sweep_annealing_time: annealing times must ascend");
    }
    TimeSweep sweep;
    sweep.points.resize(annealing_times.size());
    if (optimize) {
        std::vector<double> grid = amplitude_grid;
        if (grid.empty()) throw ArgumentError("sweep_annealing_time: empty amplitude grid");
        std::sort(grid.begin(), grid.end());
        const std::size_t na = grid.size();
        std::vector<AmplitudePoint> cells(annealing_times.size() * na);
        detail::parallel_for(cells.size(), threads, [&](std::size_t cell) {
            ExperimentConfig c = config;
            c.annealing_time = annealing_times[cell / na];
            c.amplitude = grid[cell % na];
            cells[cell] = {c.amplitude, run(c)};
        });
        detail::parallel_for(annealing_times.size(), refine ? threads : 1, [&](std::size_t ti) {
            std::size_t best = ti * na;
            for (std::size_t a = 1; a < na; ++a)
                if (cells[ti * na + a].result.estimation_error <
                    cells[best].result.estimation_error)
                    best = ti * na + a;
            AmplitudeOptimization opt;
            opt.best_amplitude = cells[best].amplitude;
            opt.best_result = cells[best].result;
            if (refine) {
                const std::size_t k = best - ti * na;
                const double lo = grid[k == 0 ? 0 : k - 1];
                const double hi = grid[std::min(k + 1, na - 1)];
                ExperimentConfig c = config;
                c.annealing_time = annealing_times[ti];
                if (lo < hi) detail::golden_refine(c, lo, hi, opt);
            }
            sweep.points[ti] = {annealing_times[ti], opt.best_amplitude,
                                std::move(opt.best_result)};
        });
    } else {
        detail::parallel_for(annealing_times.size(), threads, [&](std::size_t ti) {
            ExperimentConfig c = config;
            c.annealing_time = annealing_times[ti];
            sweep.points[ti] = {c.annealing_time, c.amplitude, run(c)};
        });
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < sweep.points.size(); ++i)
        if (sweep.points[i].result.estimation_error <
            sweep.points[best].result.estimation_error)
            best = i;
    sweep.optimal_time = sweep.points[best].annealing_time;
    sweep.min_error = sweep.points[best].result.estimation_error;
    return sweep;
}

/// Log-spaced grid helper used by sweep configs.
inline std::vector<double> logspace(double lo, double hi, int points) {
    if (points < 1) throw ArgumentError("logspace: points must be >= 1");
    if (!(lo > 0.0) || !(hi > lo)) throw ArgumentError("logspace: need 0 < lo < hi");
    std::vector<double> out(static_cast<std::size_t>(points));
    if (points == 1) {
        out[0] = lo;
        return out;
    }
    const double la = std::log10(lo), lb = std::log10(hi);
    for (int i = 0; i < points; ++i)
        out[static_cast<std::size_t>(i)] = std::pow(10.0, la + (lb - la) * i / (points - 1.0));
    out.front() = lo;
    out.back() = hi;
    return out;
}

/// Default drive-amplitude grid: 25 log-spaced points over [0.05, 20] GHz.
inline std::vector<double> default_amplitude_grid() { return logspace(0.05, 20.0, 25); }

}  // namespace symmqa
