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

#include <bit>
#include <complex>
#include <cstdint>
#include <string>

#include <Eigen/Dense>

#include "symmqa/errors.hpp"

namespace symmqa {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kStateNormTol = 1e-10;
inline constexpr double kImagResidueTol = 1e-10;

inline Eigen::Index dim_of(int sites) { return Eigen::Index{1} << sites; }

/// Many-body operator on L spin-1/2 sites, stored dense.
/// Site 1 is the most significant bit of the basis index; bit value 1 is a
/// down spin (sigma_z eigenvalue -1).
struct ManyBodyOperator {
    int sites = 0;
    Matrix matrix;
    bool hermitian = false;
};

inline double hermiticity_defect(const Matrix& m) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

inline ManyBodyOperator make_operator(int sites, Matrix m, bool hermitian) {
    if (sites < 1) throw ArgumentError("make_operator: sites must be >= 1");
    if (m.rows() != dim_of(sites) || m.cols() != dim_of(sites))
        throw ArgumentError("make_operator: matrix dimension must be 2^sites");
    if (hermitian) {
        const double defect = hermiticity_defect(m);
        if (defect > kHermitianTol)
            throw ContractError("make_operator: hermitian flag set but max|M - M^dag| = " +
                                std::to_string(defect));
    }
    return ManyBodyOperator{sites, std::move(m), hermitian};
}

/// Pure state on L sites; unit norm enforced at construction.
struct StateVector {
    int sites = 0;
    Vector amplitudes;
};

inline StateVector make_state_vector(int sites, Vector amplitudes) {
    if (sites < 1) throw ArgumentError("make_state_vector: sites must be >= 1");
    if (amplitudes.size() != dim_of(sites))
        throw ArgumentError("make_state_vector: amplitude count must be 2^sites");
    const double norm = amplitudes.norm();
    if (std::abs(norm - 1.0) > kStateNormTol)
        throw ContractError("make_state_vector: norm deviates from 1 by " +
                            std::to_string(std::abs(norm - 1.0)));
    return StateVector{sites, std::move(amplitudes)};
}

/// Mixed state on L sites. Trace, Hermiticity and positivity are enforced
/// on construction and re-checked at integrator sample points.
struct DensityMatrix {
    int sites = 0;
    Matrix matrix;
};

inline constexpr double kTraceTol = 1e-9;
inline constexpr double kDensityHermTol = 1e-10;
inline constexpr double kPositivityTol = -1e-8;

inline void validate_density(const DensityMatrix& rho) {
    const double trace_defect = std::abs(rho.matrix.trace().real() - 1.0) +
                                std::abs(rho.matrix.trace().imag());
    if (trace_defect > kTraceTol)
        throw ContractError("density matrix: |trace - 1| = " + std::to_string(trace_defect));
    const double herm = hermiticity_defect(rho.matrix);
    if (herm > kDensityHermTol)
        throw ContractError("density matrix: hermiticity defect " + std::to_string(herm));
    Eigen::SelfAdjointEigenSolver<Matrix> es(rho.matrix, Eigen::EigenvaluesOnly);
    const double min_eig = es.eigenvalues().minCoeff();
    if (min_eig < kPositivityTol)
        throw ContractError("density matrix: min eigenvalue " + std::to_string(min_eig));
}

inline DensityMatrix make_density_matrix(int sites, Matrix m) {
    if (sites < 1) throw ArgumentError("make_density_matrix: sites must be >= 1");
    if (m.rows() != dim_of(sites) || m.cols() != dim_of(sites))
        throw ArgumentError("make_density_matrix: dimension must be 2^sites");
    DensityMatrix rho{sites, std::move(m)};
    validate_density(rho);
    return rho;
}

inline DensityMatrix projector_of(const StateVector& psi) {
    return DensityMatrix{psi.sites, psi.amplitudes * psi.amplitudes.adjoint()};
}

enum class PauliKind { X, Y, Z, Plus, Minus, Identity };

inline std::string to_string(PauliKind k) {
    switch (k) {
        case PauliKind::X: return "x";
        case PauliKind::Y: return "y";
        case PauliKind::Z: return "z";
        case PauliKind::Plus: return "plus";
        case PauliKind::Minus: return "minus";
        case PauliKind::Identity: return "identity";
    }
    return "?";
}

/// 2x2 Pauli matrices. The ladder operators follow the convention
/// sigma_pm = sigma_x +- i sigma_y with no factor 1/2, so sigma_plus is
/// [[0,2],[0,0]]. Flip-flop products are 4x their textbook magnitude; the
/// amplitudes g and J absorb this.
inline ManyBodyOperator single_site_pauli(PauliKind kind) {
    Matrix m = Matrix::Zero(2, 2);
    const Complex i(0.0, 1.0);
    bool herm = true;
    switch (kind) {
        case PauliKind::X: m << 0, 1, 1, 0; break;
        case PauliKind::Y: m << 0, -i, i, 0; break;
        case PauliKind::Z: m << 1, 0, 0, -1; break;
        case PauliKind::Plus: m << 0, 2, 0, 0; herm = false; break;
        case PauliKind::Minus: m << 0, 0, 2, 0; herm = false; break;
        case PauliKind::Identity: m = Matrix::Identity(2, 2); break;
    }
    return ManyBodyOperator{1, std::move(m), herm};
}

/// Tensor-embed a single-site operator at site j (1-based) of an L-site
/// register: I (x) ... (x) op (x) ... (x) I. Site 1 is the most significant
/// bit of the basis index.
inline ManyBodyOperator embed(const ManyBodyOperator& op, int site, int total_sites) {
    if (op.sites != 1) throw ArgumentError("embed: operator must act on a single site");
    if (total_sites < 1) throw ArgumentError("embed: total_sites must be >= 1");
    if (site < 1 || site > total_sites)
        throw ArgumentError("embed: site " + std::to_string(site) + " outside 1.." +
                            std::to_string(total_sites));
    const Eigen::Index left = Eigen::Index{1} << (site - 1);
    const Eigen::Index right = Eigen::Index{1} << (total_sites - site);
    const Eigen::Index dim = dim_of(total_sites);
    Matrix out = Matrix::Zero(dim, dim);
    // index = (l * 2 + s) * right + r with s the embedded site's bit
    for (Eigen::Index l = 0; l < left; ++l)
        for (int s_row = 0; s_row < 2; ++s_row)
            for (int s_col = 0; s_col < 2; ++s_col) {
                const Complex v = op.matrix(s_row, s_col);
                if (v == Complex(0.0, 0.0)) continue;
                const Eigen::Index row0 = (l * 2 + s_row) * right;
                const Eigen::Index col0 = (l * 2 + s_col) * right;
                for (Eigen::Index r = 0; r < right; ++r) out(row0 + r, col0 + r) = v;
            }
    return ManyBodyOperator{total_sites, std::move(out), op.hermitian};
}

/// Total magnetization S_z = sum_j sigma_j^z, built directly from bit
/// counts: the eigenvalue on a basis state with k down spins is L - 2k.
inline ManyBodyOperator total_sz(int sites) {
    if (sites < 1) throw ArgumentError("total_sz: sites must be >= 1");
    const Eigen::Index dim = dim_of(sites);
    Matrix m = Matrix::Zero(dim, dim);
    for (Eigen::Index b = 0; b < dim; ++b) {
        const int down = std::popcount(static_cast<std::uint64_t>(b));
        m(b, b) = Complex(sites - 2 * down, 0.0);
    }
    return ManyBodyOperator{sites, std::move(m), true};
}

inline ManyBodyOperator commutator(const ManyBodyOperator& a, const ManyBodyOperator& b) {
    if (a.sites != b.sites)
        throw ArgumentError("commutator: operators act on different site counts");
    Matrix m = a.matrix * b.matrix - b.matrix * a.matrix;
    return ManyBodyOperator{a.sites, std::move(m), false};
}

namespace detail {

inline double real_expectation(Complex value, const char* what) {
    if (std::abs(value.imag()) > kImagResidueTol)
        throw NumericalError(std::string(what) + ": imaginary residue " +
                             std::to_string(value.imag()));
    return value.real();
}

}  // namespace detail

/// <psi|op|psi> for a pure state; op must carry the hermitian flag.
inline double expectation(const ManyBodyOperator& op, const StateVector& psi) {
    if (!op.hermitian) throw ContractError("expectation: operator is not flagged Hermitian");
    if (op.sites != psi.sites) throw ArgumentError("expectation: dimension mismatch");
    const Complex v = psi.amplitudes.dot(op.matrix * psi.amplitudes);
    return detail::real_expectation(v, "expectation");
}

/// Tr(rho * op) for a mixed state; op must carry the hermitian flag.
inline double expectation(const ManyBodyOperator& op, const DensityMatrix& rho) {
    if (!op.hermitian) throw ContractError("expectation: operator is not flagged Hermitian");
    if (op.sites != rho.sites) throw ArgumentError("expectation: dimension mismatch");
    const Complex v = (rho.matrix * op.matrix).trace();
    return detail::real_expectation(v, "expectation");
}

}  // namespace symmqa
