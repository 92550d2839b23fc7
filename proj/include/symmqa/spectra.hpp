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
#include <optional>
#include <vector>

#include "symmqa/detail/parallel.hpp"
#include "symmqa/hamiltonians.hpp"
#include "symmqa/symmetry.hpp"

namespace symmqa {

/// Instantaneous eigenvalue trajectories of H(s T) on a uniform s-grid.
/// Levels are sorted ascending per grid point (crossing-blind matching);
/// sector_labels, when non-empty, gives the magnetization of each level at
/// each grid point.
struct SpectrumTrace {
    std::vector<double> s_grid;
    Eigen::MatrixXd levels;        // grid point x level index
    Eigen::MatrixXi sector_labels; // empty unless sector-resolved
};

inline constexpr int kDefaultSpectrumGrid = 201;

namespace detail {

inline std::vector<double> uniform_s_grid(int grid_points) {
    std::vector<double> s(static_cast<std::size_t>(grid_points));
    for (int i = 0; i < grid_points; ++i)
        s[static_cast<std::size_t>(i)] = i / (grid_points - 1.0);
    s.back() = 1.0;
    return s;
}

}  // namespace detail

/// Lowest level_count eigenvalues of H(s T) on a uniform grid of
/// grid_points values of s in [0, 1].
inline SpectrumTrace trace_spectrum(const AnnealSchedule& schedule, int grid_points,
                                    int level_count, int threads = 0) {
    const Eigen::Index dim = dim_of(schedule.problem.sites);
    if (grid_points < 2) throw ArgumentError("trace_spectrum: need >= 2 grid points");
    if (level_count < 1 || level_count > dim)
        throw ArgumentError("trace_spectrum: level_count outside 1..2^L");
    SpectrumTrace trace;
    trace.s_grid = detail::uniform_s_grid(grid_points);
    trace.levels.resize(grid_points, level_count);
    detail::parallel_for(trace.s_grid.size(), threads, [&](std::size_t i) {
        const double s = trace.s_grid[i];
        const Matrix h = s * schedule.problem.matrix + (1.0 - s) * schedule.driver.matrix;
        Eigen::SelfAdjointEigenSolver<Matrix> es(h, Eigen::EigenvaluesOnly);
        trace.levels.row(static_cast<Eigen::Index>(i)) =
            es.eigenvalues().head(level_count).transpose();
    });
    return trace;
}

/// Sector-restricted spectrum; both endpoint Hamiltonians must conserve S_z.
inline SpectrumTrace trace_sector_spectrum(const AnnealSchedule& schedule, const Sector& sector,
                                           int grid_points, int level_count, int threads = 0) {
    if (grid_points < 2) throw ArgumentError("trace_sector_spectrum: need >= 2 grid points");
    const SectorOperator hp = restrict_to_sector(schedule.problem, sector);
    const SectorOperator hd = restrict_to_sector(schedule.driver, sector);
    const auto dim = static_cast<Eigen::Index>(sector.indices.size());
    if (level_count < 1 || level_count > dim)
        throw ArgumentError("trace_sector_spectrum: level_count outside 1..sector dim");
    SpectrumTrace trace;
    trace.s_grid = detail::uniform_s_grid(grid_points);
    trace.levels.resize(grid_points, level_count);
    trace.sector_labels = Eigen::MatrixXi::Constant(grid_points, level_count,
                                                    sector.magnetization);
    detail::parallel_for(trace.s_grid.size(), threads, [&](std::size_t i) {
        const double s = trace.s_grid[i];
        const Matrix h = s * hp.matrix + (1.0 - s) * hd.matrix;
        Eigen::SelfAdjointEigenSolver<Matrix> es(h, Eigen::EigenvaluesOnly);
        trace.levels.row(static_cast<Eigen::Index>(i)) =
            es.eigenvalues().head(level_count).transpose();
    });
    return trace;
}

/// Full spectrum with per-level sector labels: the union of all sector
/// traces, merge-sorted by energy at each grid point.
inline SpectrumTrace trace_spectrum_labeled(const AnnealSchedule& schedule, int grid_points,
                                            int level_count, int threads = 0) {
    const int sites = schedule.problem.sites;
    const Eigen::Index dim = dim_of(sites);
    if (level_count < 1 || level_count > dim)
        throw ArgumentError("trace_spectrum_labeled: level_count outside 1..2^L");
    const SectorDecomposition dec = decompose(sites);
    std::vector<SpectrumTrace> parts;
    parts.reserve(dec.sectors.size());
    for (const Sector& sector : dec.sectors)
        parts.push_back(trace_sector_spectrum(schedule, sector,
                                              grid_points,
                                              static_cast<int>(sector.indices.size()), threads));
    SpectrumTrace trace;
    trace.s_grid = detail::uniform_s_grid(grid_points);
    trace.levels.resize(grid_points, level_count);
    trace.sector_labels.resize(grid_points, level_count);
    std::vector<std::pair<double, int>> merged(static_cast<std::size_t>(dim));
    for (int i = 0; i < grid_points; ++i) {
        std::size_t n = 0;
        for (const SpectrumTrace& part : parts)
            for (Eigen::Index c = 0; c < part.levels.cols(); ++c)
                merged[n++] = {part.levels(i, c), part.sector_labels(i, c)};
        std::sort(merged.begin(), merged.end());
        for (int c = 0; c < level_count; ++c) {
            trace.levels(i, c) = merged[static_cast<std::size_t>(c)].first;
            trace.sector_labels(i, c) = merged[static_cast<std::size_t>(c)].second;
        }
    }
    return trace;
}

struct MinimumGap {
    double s_star = 0.0;
    double gap = 0.0;  // GHz
};

/// Minimum of E_1 - E_0 over the grid, reported at its first attainment.
/// With a magnetization argument the gap is taken between the two lowest
/// levels carrying that sector label (requires a labeled trace).
inline MinimumGap min_gap(const SpectrumTrace& trace, std::optional<int> within_sector = {}) {
    if (trace.levels.cols() < 2) throw ArgumentError("min_gap: need at least 2 levels");
    MinimumGap best{0.0, std::numeric_limits<double>::infinity()};
    bool found = false;
    for (Eigen::Index i = 0; i < trace.levels.rows(); ++i) {
        double e0 = std::numeric_limits<double>::infinity();
        double e1 = std::numeric_limits<double>::infinity();
        if (within_sector) {
            if (trace.sector_labels.size() == 0)
                throw ArgumentError("min_gap: sector filter requires a labeled trace");
            for (Eigen::Index c = 0; c < trace.levels.cols(); ++c) {
                if (trace.sector_labels(i, c) != *within_sector) continue;
                const double e = trace.levels(i, c);
                if (e < e0) {
                    e1 = e0;
                    e0 = e;
                } else if (e < e1) {
                    e1 = e;
                }
            }
            if (!std::isfinite(e1)) continue;  // fewer than 2 levels in sector here
        } else {
            e0 = trace.levels(i, 0);
            e1 = trace.levels(i, 1);
        }
        const double gap = e1 - e0;
        if (gap < best.gap) {
            best.gap = gap;
            best.s_star = trace.s_grid[static_cast<std::size_t>(i)];
        }
        found = true;
    }
    if (!found) throw ArgumentError("min_gap: sector has fewer than 2 levels everywhere");
    return best;
}

}  // namespace symmqa
