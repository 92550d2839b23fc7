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
#include <cstdint>
#include <vector>

#include "symmqa/spin_ops.hpp"

namespace symmqa {

inline constexpr double kConservationTol = 1e-10;
inline constexpr double kDegeneracyRelTol = 1e-10;

/// One total-magnetization sector: all computational basis states with
/// down_count down spins, magnetization m = L - 2 * down_count.
struct Sector {
    int magnetization = 0;
    int down_count = 0;
    std::vector<Eigen::Index> indices;  // sorted ascending
};

/// Partition of the 2^L basis into the L+1 sectors, ordered m = L, L-2, ..., -L.
struct SectorDecomposition {
    int sites = 0;
    std::vector<Sector> sectors;
};

inline SectorDecomposition decompose(int sites) {
    if (sites < 1) throw ArgumentError("decompose: sites must be >= 1");
    SectorDecomposition dec{sites, std::vector<Sector>(static_cast<std::size_t>(sites) + 1)};
    for (int k = 0; k <= sites; ++k) {
        dec.sectors[static_cast<std::size_t>(k)].magnetization = sites - 2 * k;
        dec.sectors[static_cast<std::size_t>(k)].down_count = k;
    }
    const Eigen::Index dim = dim_of(sites);
    for (Eigen::Index b = 0; b < dim; ++b) {
        const int k = std::popcount(static_cast<std::uint64_t>(b));
        dec.sectors[static_cast<std::size_t>(k)].indices.push_back(b);
    }
    return dec;
}

inline const Sector& sector_of_magnetization(const SectorDecomposition& dec, int m) {
    for (const Sector& s : dec.sectors)
        if (s.magnetization == m) return s;
    throw ArgumentError("no sector with magnetization " + std::to_string(m));
}

/// True iff max|[H,Q]| <= tol elementwise.
inline bool is_conserved(const ManyBodyOperator& h, const ManyBodyOperator& q, double tol) {
    if (h.sites != q.sites) throw ArgumentError("is_conserved: dimension mismatch");
    return commutator(h, q).matrix.cwiseAbs().maxCoeff() <= tol;
}

/// Largest |matrix element| of op connecting two different magnetization
/// sectors; 0 exactly for S_z-conserving operators.
inline double block_leakage(const ManyBodyOperator& op, const SectorDecomposition& dec) {
    if (op.sites != dec.sites) throw ArgumentError("block_leakage: dimension mismatch");
    double worst = 0.0;
    const Eigen::Index dim = dim_of(op.sites);
    for (Eigen::Index c = 0; c < dim; ++c) {
        const int kc = std::popcount(static_cast<std::uint64_t>(c));
        for (Eigen::Index r = 0; r < dim; ++r) {
            if (std::popcount(static_cast<std::uint64_t>(r)) == kc) continue;
            worst = std::max(worst, std::abs(op.matrix(r, c)));
        }
    }
    return worst;
}

/// Restriction of an S_z-conserving operator to one sector's basis.
struct SectorOperator {
    int magnetization = 0;
    Matrix matrix;
    int parent_sites = 0;
};

inline SectorOperator restrict_to_sector(const ManyBodyOperator& op, const Sector& sector) {
    const double leak = block_leakage(op, decompose(op.sites));
    if (leak > kConservationTol)
        throw ContractError("restrict_to_sector: operator does not conserve S_z (leakage " +
                            std::to_string(leak) + ")");
    const auto d = static_cast<Eigen::Index>(sector.indices.size());
    Matrix block(d, d);
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j)
            block(i, j) = op.matrix(sector.indices[static_cast<std::size_t>(i)],
                                    sector.indices[static_cast<std::size_t>(j)]);
    return SectorOperator{sector.magnetization, std::move(block), op.sites};
}

/// Zero-pad a sector-basis vector back into the full 2^L space.
inline Vector embed_sector_vector(const Sector& sector, const Vector& v, int sites) {
    if (v.size() != static_cast<Eigen::Index>(sector.indices.size()))
        throw ArgumentError("embed_sector_vector: length does not match sector size");
    Vector full = Vector::Zero(dim_of(sites));
    for (Eigen::Index i = 0; i < v.size(); ++i)
        full(sector.indices[static_cast<std::size_t>(i)]) = v(i);
    return full;
}

struct SectorGroundState {
    double energy = 0.0;
    StateVector state;   // embedded in the full space, zeros outside the sector
    int degeneracy = 1;  // eigenvalues within 1e-10 * spectral range of the minimum
};

namespace detail {

// Deterministic phase fixing: first amplitude above threshold made real
// positive.
inline void fix_phase(Vector& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        const double a = std::abs(v(i));
        if (a > 1e-12) {
            v *= std::conj(v(i)) / a;
            return;
        }
    }
}

}  // namespace detail

/// Lowest eigenpair of H restricted to the sector, re-embedded into the
/// full space. Degenerate ground levels are reported via `degeneracy`,
/// never silently resolved.
inline SectorGroundState sector_ground_state(const ManyBodyOperator& h, const Sector& sector) {
    const SectorOperator block = restrict_to_sector(h, sector);
    Eigen::SelfAdjointEigenSolver<Matrix> es(block.matrix);
    const Eigen::VectorXd& evals = es.eigenvalues();
    const double range = std::max(evals.maxCoeff() - evals.minCoeff(), 1.0);
    int degeneracy = 0;
    for (Eigen::Index i = 0; i < evals.size(); ++i)
        if (evals(i) - evals(0) <= kDegeneracyRelTol * range) ++degeneracy;
    Vector ground = es.eigenvectors().col(0);
    detail::fix_phase(ground);
    Vector full = embed_sector_vector(sector, ground, h.sites);
    full.normalize();
    return SectorGroundState{evals(0), make_state_vector(h.sites, std::move(full)), degeneracy};
}

}  // namespace symmqa
