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

#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "symmqa/annealing.hpp"
#include "symmqa/evolution.hpp"
#include "symmqa/hamiltonians.hpp"
#include "symmqa/symmetry.hpp"
#include "symmqa/table1.hpp"

namespace symmqa {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Does the analytic Jordan-Wigner ground energy match sector-restricted
/// dense diagonalization for every filling, L = 2..max_sites? Exposed so a
/// deliberately broken ring builder can be fed in (mutation testing).
inline bool jw_agrees(const std::function<ManyBodyOperator(int, double)>& ring_builder,
                      int max_sites, double coupling, double tol, std::string* detail = nullptr) {
    for (int sites = 2; sites <= max_sites; ++sites) {
        const ManyBodyOperator ring = ring_builder(sites, coupling);
        const SectorDecomposition dec = decompose(sites);
        for (const Sector& sector : dec.sectors) {
            const SectorOperator block = restrict_to_sector(ring, sector);
            Eigen::SelfAdjointEigenSolver<Matrix> es(block.matrix, Eigen::EigenvaluesOnly);
            const double dense = es.eigenvalues()(0);
            const double analytic =
                xy_ground_energy_analytic(sites, coupling, sector.down_count);
            if (std::abs(dense - analytic) > tol) {
                if (detail) {
                    std::ostringstream os;
                    os << "L=" << sites << " k=" << sector.down_count << ": dense " << dense
                       << " vs analytic " << analytic;
                    *detail = os.str();
                }
                return false;
            }
        }
    }
    return true;
}

namespace detail {

inline CheckResult check(const std::string& name, const std::function<std::string()>& body) {
    try {
        std::string msg = body();
        return {name, msg.empty(), msg.empty() ? "ok" : msg};
    } catch (const std::exception& e) {
        return {name, false, e.what()};
    }
}

inline std::string expect(bool cond, const std::string& msg) { return cond ? "" : msg; }

}  // namespace detail

/// Built-in oracle and invariant suite behind `symmqa verify`.
inline std::vector<CheckResult> run_verification_suite() {
    using detail::check;
    using detail::expect;
    std::vector<CheckResult> results;

    results.push_back(check("pauli ladder convention (no 1/2)", [] {
        const Matrix sp = single_site_pauli(PauliKind::Plus).matrix;
        const Matrix sm = single_site_pauli(PauliKind::Minus).matrix;
        const Matrix sx = single_site_pauli(PauliKind::X).matrix;
        const Matrix sy = single_site_pauli(PauliKind::Y).matrix;
        const double d1 = (sp - (Matrix(2, 2) << 0, 2, 0, 0).finished()).cwiseAbs().maxCoeff();
        const double d2 = (sp + sm - 2.0 * sx).cwiseAbs().maxCoeff();
        const double d3 = (sp - sm - Complex(0, 2) * sy).cwiseAbs().maxCoeff();
        return expect(d1 == 0.0 && d2 == 0.0 && d3 == 0.0, "ladder operators off convention");
    }));

    results.push_back(check("embed site ordering (site 1 = MSB)", [] {
        const ManyBodyOperator sz = single_site_pauli(PauliKind::Z);
        const Vector d1 = embed(sz, 1, 2).matrix.diagonal();
        const Vector d2 = embed(sz, 2, 2).matrix.diagonal();
        const bool ok1 = d1(0) == 1.0 && d1(1) == 1.0 && d1(2) == -1.0 && d1(3) == -1.0;
        const bool ok2 = d2(0) == 1.0 && d2(1) == -1.0 && d2(2) == 1.0 && d2(3) == -1.0;
        return expect(ok1 && ok2, "embedding does not follow MSB-first ordering");
    }));

    results.push_back(check("total_sz equals sum of embedded sigma_z", [] {
        const ManyBodyOperator sz = single_site_pauli(PauliKind::Z);
        Matrix sum = Matrix::Zero(16, 16);
        for (int j = 1; j <= 4; ++j) sum += embed(sz, j, 4).matrix;
        const double d = (total_sz(4).matrix - sum).cwiseAbs().maxCoeff();
        return expect(d == 0.0, "total_sz deviates from the embedded sum");
    }));

    results.push_back(check("pauli algebra [x,y] = 2 i z", [] {
        const Matrix c = commutator(single_site_pauli(PauliKind::X),
                                    single_site_pauli(PauliKind::Y)).matrix;
        const Matrix want = Complex(0, 2) * single_site_pauli(PauliKind::Z).matrix;
        return expect((c - want).cwiseAbs().maxCoeff() <= 1e-15, "commutator off");
    }));

    results.push_back(check("xy ring conserves S_z; transverse field does not", [] {
        const SectorDecomposition dec = decompose(4);
        const double leak_xy = block_leakage(xy_ring(4, 1.0), dec);
        const double leak_tf = block_leakage(transverse_field(4, 1.0), dec);
        const bool cons = is_conserved(xy_ring(4, 1.0), total_sz(4), 1e-12);
        return expect(leak_xy == 0.0 && cons && leak_tf > 0.5,
                      "conservation pattern wrong (xy leak " + std::to_string(leak_xy) +
                          ", tf leak " + std::to_string(leak_tf) + ")");
    }));

    results.push_back(check("deformed spin star Hermitian and conserving", [] {
        const ManyBodyOperator h = deformed_spin_star(3, 0.5, 0.5, 5.0);
        const double leak = block_leakage(h, decompose(4));
        return expect(h.hermitian && leak <= 1e-12,
                      "spin star leakage " + std::to_string(leak));
    }));

    results.push_back(check("random XXZ chain Hermitian and conserving", [] {
        const ManyBodyOperator h = random_xxz_chain(xxz_reference_couplings(3), 0.7);
        const double leak = block_leakage(h, decompose(4));
        return expect(h.hermitian && leak <= 1e-12, "xxz leakage " + std::to_string(leak));
    }));

    results.push_back(check("jordan-wigner ground energies match dense diagonalization", [] {
        std::string why;
        const bool ok = jw_agrees([](int sites, double g) { return xy_ring(sites, g); }, 6, 1.0,
                                  1e-9, &why);
        return expect(ok, why);
    }));

    results.push_back(check("sector spectra union equals full spectrum", [] {
        const ManyBodyOperator h = xy_ring(4, 1.0);
        Eigen::SelfAdjointEigenSolver<Matrix> full(h.matrix, Eigen::EigenvaluesOnly);
        std::vector<double> sector_evals;
        for (const Sector& sector : decompose(4).sectors) {
            const SectorOperator block = restrict_to_sector(h, sector);
            Eigen::SelfAdjointEigenSolver<Matrix> es(block.matrix, Eigen::EigenvaluesOnly);
            for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
                sector_evals.push_back(es.eigenvalues()(i));
        }
        std::sort(sector_evals.begin(), sector_evals.end());
        double worst = 0.0;
        for (Eigen::Index i = 0; i < full.eigenvalues().size(); ++i)
            worst = std::max(worst, std::abs(full.eigenvalues()(i) -
                                             sector_evals[static_cast<std::size_t>(i)]));
        return expect(worst <= 1e-9, "union deviates by " + std::to_string(worst));
    }));

    results.push_back(check("schedule endpoints and midpoint", [] {
        const AnnealSchedule sched =
            make_schedule(random_xxz_chain(xxz_reference_couplings(3), 0.7),
                          transverse_field(4, 1.0), 100.0);
        const double d0 =
            (schedule_at(sched, 0.0).matrix - sched.driver.matrix).cwiseAbs().maxCoeff();
        const double d1 =
            (schedule_at(sched, 100.0).matrix - sched.problem.matrix).cwiseAbs().maxCoeff();
        const Matrix mid = 0.5 * (sched.problem.matrix + sched.driver.matrix);
        const double dm = (schedule_at(sched, 50.0).matrix - mid).cwiseAbs().maxCoeff();
        return expect(d0 == 0.0 && d1 == 0.0 && dm <= 1e-15, "schedule interpolation off");
    }));

    results.push_back(check("single-qubit dephasing matches exp(-2 gamma t)", [] {
        const double gamma = 2.5e-5, total = 1e4;
        Matrix plus(2, 2);
        plus << 0.5, 0.5, 0.5, 0.5;
        const AnnealSchedule sched = make_schedule(
            make_operator(1, Matrix::Zero(2, 2), true),
            make_operator(1, Matrix::Zero(2, 2), true), total);
        const OpenEvolution evo =
            evolve_open(make_density_matrix(1, plus), sched, make_noise(gamma, PauliKind::Z),
                        IntegratorParams{});
        const double got = evo.final_state.matrix(0, 1).real();
        const double want = 0.5 * std::exp(-2.0 * gamma * total);
        const double rel = std::abs(got - want) / want;
        return expect(rel <= 1e-6, "relative error " + std::to_string(rel));
    }));

    results.push_back(check("gksl right-hand side is traceless and Hermitian", [] {
        const ManyBodyOperator h = random_xxz_chain(xxz_reference_couplings(3), 0.7);
        Vector amp = Vector::Zero(16);
        amp(3) = Complex(0.6, 0.0);
        amp(5) = Complex(0.0, 0.8);
        const DensityMatrix rho = projector_of(make_state_vector(4, amp));
        const Matrix rhs = gksl_rhs(rho, h, make_noise(1e-4, PauliKind::Z));
        const double tr = std::abs(rhs.trace());
        const double herm = hermiticity_defect(rhs);
        return expect(tr <= 1e-12 && herm <= 1e-12,
                      "trace " + std::to_string(tr) + ", herm " + std::to_string(herm));
    }));

    results.push_back(check("open and closed evolution agree at gamma = 0", [] {
        ExperimentConfig cfg;
        cfg.problem = XxzSpec{xxz_reference_couplings(3), 0.7};
        cfg.driver = DriverKind::Xy;
        cfg.amplitude = 1.0;
        cfg.annealing_time = 50.0;
        const InitialState init = initial_state(cfg);
        const AnnealSchedule sched = make_schedule(build_problem(cfg.problem),
                                                   build_driver(cfg.driver, 4, cfg.amplitude),
                                                   cfg.annealing_time);
        IntegratorParams tight;
        tight.rel_tol = 1e-10;
        tight.abs_tol = 1e-12;
        const OpenEvolution open =
            evolve_open(init.rho, sched, make_noise(0.0, PauliKind::Z), tight);
        // recover the pure state from the projector's dominant eigenvector
        Eigen::SelfAdjointEigenSolver<Matrix> es(init.rho.matrix);
        const Vector psi0 = es.eigenvectors().col(15);
        const ClosedEvolution closed =
            evolve_closed(make_state_vector(4, psi0), sched, tight);
        const double dist =
            trace_distance(open.final_state.matrix, projector_of(closed.final_state).matrix);
        return expect(dist <= 1e-7, "trace distance " + format_sci(dist));
    }));

    results.push_back(check("coupling sampler is deterministic and in range", [] {
        const std::vector<double> a = sample_couplings(42, 1000, 0.0, 2.0);
        const std::vector<double> b = sample_couplings(42, 1000, 0.0, 2.0);
        if (a != b) return std::string("same seed produced different draws");
        for (double v : a)
            if (v < 0.0 || v >= 2.0) return std::string("draw outside [0, 2)");
        return std::string();
    }));

    results.push_back(check("ground-state expectation equals minimum eigenvalue", [] {
        const ManyBodyOperator h = deformed_spin_star(3, 0.5, 0.5, 5.0);
        Eigen::SelfAdjointEigenSolver<Matrix> es(h.matrix);
        const StateVector ground = make_state_vector(4, es.eigenvectors().col(0));
        const double diff = std::abs(expectation(h, ground) - es.eigenvalues()(0));
        return expect(diff <= 1e-9, "difference " + std::to_string(diff));
    }));

    return results;
}

}  // namespace symmqa
