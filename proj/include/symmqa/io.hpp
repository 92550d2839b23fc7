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
#include <cstdio>
#include <ctime>
#include <ostream>
#include <string>
#include <vector>

#include "symmqa/config.hpp"
#include "symmqa/spectra.hpp"
#include "symmqa/version.hpp"

namespace symmqa {

/// 17 significant digits: lossless round trip for IEEE doubles.
inline std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline std::string iso8601_utc_now() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

/// CSV columns: s, level_0..level_{k-1}[, sector_0..sector_{k-1}].
inline void write_spectrum_csv(std::ostream& out, const SpectrumTrace& trace) {
    const Eigen::Index levels = trace.levels.cols();
    const bool labeled = trace.sector_labels.size() > 0;
    out << "s";
    for (Eigen::Index c = 0; c < levels; ++c) out << ",level_" << c;
    if (labeled)
        for (Eigen::Index c = 0; c < levels; ++c) out << ",sector_" << c;
    out << "\n";
    for (Eigen::Index i = 0; i < trace.levels.rows(); ++i) {
        out << format_g17(trace.s_grid[static_cast<std::size_t>(i)]);
        for (Eigen::Index c = 0; c < levels; ++c) out << "," << format_g17(trace.levels(i, c));
        if (labeled)
            for (Eigen::Index c = 0; c < levels; ++c) out << "," << trace.sector_labels(i, c);
        out << "\n";
    }
}

struct SweepCsvRow {
    double annealing_time = 0.0;
    std::string driver;
    double amplitude = 0.0;
    double error = 0.0;
    double fidelity = 0.0;
};

inline void write_sweep_csv(std::ostream& out, const std::vector<SweepCsvRow>& rows) {
    out << "T,driver,amplitude_opt,error,fidelity\n";
    for (const SweepCsvRow& r : rows)
        out << format_g17(r.annealing_time) << "," << r.driver << ","
            << format_g17(r.amplitude) << "," << format_g17(r.error) << ","
            << format_g17(r.fidelity) << "\n";
}

inline Json populations_to_json(const std::vector<SectorPopulation>& pops) {
    Json arr = Json::array();
    for (const SectorPopulation& p : pops)
        arr.push_back(Json{{"m", p.magnetization}, {"population", p.population}});
    return arr;
}

/// Flattened RunResult + config echo + provenance. Re-parsing and feeding
/// record["config"] back in reproduces the run.
inline Json build_result_record(const FullConfig& cfg, const RunResult& result) {
    Json j;
    j["config"] = config_to_json(cfg);
    j["driver"] = to_string(cfg.base.driver);
    j["e_true"] = result.e_true;
    j["e_qa"] = result.e_qa;
    j["estimation_error"] = result.estimation_error;
    j["ground_fidelity"] = result.ground_fidelity;
    j["ground_degeneracy"] = result.ground_degeneracy;
    if (result.initial_sector)
        j["initial_sector_m"] = *result.initial_sector;
    else
        j["initial_sector_m"] = nullptr;
    j["sector_populations_initial"] = populations_to_json(result.initial_populations);
    j["sector_populations_final"] = populations_to_json(result.final_populations);
    Json samples = Json::array();
    for (const SamplePoint& p : result.samples)
        samples.push_back(Json{{"t", p.t},
                               {"energy", p.energy},
                               {"ground_population", p.ground_population}});
    j["samples"] = samples;
    j["used_closed_path"] = result.used_closed_path;
    j["used_sector_restriction"] = result.used_sector_restriction;
    j["wall_time_s"] = result.wall_time_s;
    j["library_version"] = kLibraryVersion;
    j["prng"] = kPrngId;
    j["timestamp"] = iso8601_utc_now();
    return j;
}

struct DriverSummary {
    std::string driver;
    double optimal_time = 0.0;
    double min_error = 0.0;
    double amplitude_at_optimum = 0.0;
    double fidelity_at_optimum = 0.0;
};

inline Json build_sweep_summary(const std::vector<DriverSummary>& summaries) {
    Json drivers;
    for (const DriverSummary& s : summaries)
        drivers[s.driver] = Json{{"optimal_T", s.optimal_time},
                                 {"min_error", s.min_error},
                                 {"amplitude_at_optimum", s.amplitude_at_optimum},
                                 {"fidelity_at_optimum", s.fidelity_at_optimum}};
    return Json{{"drivers", drivers},
                {"library_version", kLibraryVersion},
                {"timestamp", iso8601_utc_now()}};
}

}  // namespace symmqa
