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

#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "symmqa/annealing.hpp"
#include "symmqa/spectra.hpp"
#include "symmqa/table1.hpp"

namespace symmqa {

using Json = nlohmann::json;

struct SweepSpec {
    std::vector<double> annealing_times;
    std::vector<double> amplitudes;
    bool optimize_per_time = true;
    bool refine = false;
};

struct SpectrumSpec {
    int grid_points = kDefaultSpectrumGrid;
    int levels = 0;  // 0 = all
    bool sectors = false;
};

/// Declarative experiment description: the ExperimentConfig plus sweep grids
/// and per-command options. Unknown keys are rejected during parsing.
struct FullConfig {
    ExperimentConfig base;
    SweepSpec sweep;
    SpectrumSpec spectrum;
    std::vector<DriverKind> drivers = {DriverKind::Transverse, DriverKind::Xy};
    int threads = 0;
};

namespace detail {

inline void reject_unknown_keys(const Json& obj, const std::set<std::string>& allowed,
                                const std::string& context) {
    for (const auto& [key, value] : obj.items())
        if (!allowed.contains(key))
            throw ArgumentError("config: unknown key '" + key + "' in " + context);
}

template <class T>
T get_or(const Json& obj, const std::string& key, const T& fallback) {
    if (!obj.contains(key)) return fallback;
    return obj.at(key).get<T>();
}

inline std::vector<double> parse_grid(const Json& j, const std::string& context) {
    if (j.is_array()) return j.get<std::vector<double>>();
    if (!j.is_object())
        throw ArgumentError("config: " + context + " must be an array or {min,max,points}");
    reject_unknown_keys(j, {"min", "max", "points", "spacing"}, context);
    const double lo = j.at("min").get<double>();
    const double hi = j.at("max").get<double>();
    const int points = j.at("points").get<int>();
    const std::string spacing = get_or<std::string>(j, "spacing", "log");
    if (spacing == "log") return logspace(lo, hi, points);
    if (spacing != "linear")
        throw ArgumentError("config: " + context + ".spacing must be 'log' or 'linear'");
    if (points < 1) throw ArgumentError("config: " + context + ".points must be >= 1");
    std::vector<double> out(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i)
        out[static_cast<std::size_t>(i)] =
            points == 1 ? lo : lo + (hi - lo) * i / (points - 1.0);
    return out;
}

inline DriverKind parse_driver(const std::string& s) {
    if (s == "transverse") return DriverKind::Transverse;
    if (s == "xy") return DriverKind::Xy;
    throw ArgumentError("config: unknown driver '" + s + "'");
}

inline PauliKind parse_pauli(const std::string& s) {
    if (s == "x") return PauliKind::X;
    if (s == "y") return PauliKind::Y;
    if (s == "z") return PauliKind::Z;
    throw ArgumentError("config: Lindblad kind must be x, y or z, got '" + s + "'");
}

inline ProblemSpec parse_problem(const Json& j) {
    if (!j.is_object()) throw ArgumentError("config: problem must be an object");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "spin-star") {
        reject_unknown_keys(j, {"kind", "outer_spins", "omega", "omega1", "coupling", "phase"},
                            "problem");
        SpinStarSpec s;
        s.outer_spins = j.at("outer_spins").get<int>();
        s.omega = j.at("omega").get<double>();
        s.omega1 = j.at("omega1").get<double>();
        s.coupling = j.at("coupling").get<double>();
        const std::string phase = get_or<std::string>(j, "phase", "complex");
        if (phase == "complex")
            s.phase = SpinStarPhase::Complex;
        else if (phase == "real")
            s.phase = SpinStarPhase::Real;
        else
            throw ArgumentError("config: spin_star_phase must be 'complex' or 'real'");
        return s;
    }
    if (kind == "xxz-chain") {
        reject_unknown_keys(j, {"kind", "couplings", "delta"}, "problem");
        XxzSpec s;
        s.couplings = j.at("couplings").get<std::vector<double>>();
        s.delta = j.at("delta").get<double>();
        return s;
    }
    if (kind == "random-xxz") {
        reject_unknown_keys(j, {"kind", "sites", "delta", "seed", "low", "high"}, "problem");
        RandomXxzSpec s;
        s.sites = j.at("sites").get<int>();
        s.delta = j.at("delta").get<double>();
        s.seed = j.at("seed").get<std::uint64_t>();
        s.low = get_or<double>(j, "low", 0.0);
        s.high = get_or<double>(j, "high", 2.0);
        return s;
    }
    throw ArgumentError("config: unknown problem kind '" + kind + "'");
}

inline SectorPolicy parse_policy(const Json& j) {
    SectorPolicy p;
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s == "auto")
            p.kind = SectorPolicy::Kind::Auto;
        else if (s == "global")
            p.kind = SectorPolicy::Kind::Global;
        else
            throw ArgumentError("config: sector_policy must be 'auto', 'global' or {fixed_m}");
        return p;
    }
    if (j.is_object()) {
        reject_unknown_keys(j, {"fixed_m"}, "sector_policy");
        p.kind = SectorPolicy::Kind::FixedM;
        p.magnetization = j.at("fixed_m").get<int>();
        return p;
    }
    throw ArgumentError("config: sector_policy must be 'auto', 'global' or {fixed_m}");
}

inline IntegratorParams parse_integrator(const Json& j) {
    reject_unknown_keys(j, {"method", "rel_tol", "abs_tol", "max_step", "sample_count"},
                        "integrator");
    IntegratorParams p;
    const std::string method = get_or<std::string>(j, "method", "adaptive-rk");
    if (method == "adaptive-rk")
        p.method = IntegratorMethod::AdaptiveRK;
    else if (method == "fixed-rk4")
        p.method = IntegratorMethod::FixedRK4;
    else if (method == "adaptive-taylor")
        p.method = IntegratorMethod::AdaptiveTaylor;
    else
        throw ArgumentError("config: unknown integrator method '" + method + "'");
    p.rel_tol = get_or<double>(j, "rel_tol", p.rel_tol);
    p.abs_tol = get_or<double>(j, "abs_tol", p.abs_tol);
    p.max_step = get_or<double>(j, "max_step", p.max_step);
    p.sample_count = get_or<int>(j, "sample_count", p.sample_count);
    validate_params(p);
    return p;
}

}  // namespace detail

inline FullConfig parse_config(const Json& j) {
    if (!j.is_object()) throw ArgumentError("config: document must be a JSON object");
    detail::reject_unknown_keys(
        j,
        {"problem", "driver", "amplitude", "annealing_time", "noise", "sector_policy",
         "integrator", "seed", "restrict_to_sector", "sweep", "spectrum", "drivers", "threads"},
        "config");
    FullConfig cfg;
    cfg.base.problem = detail::parse_problem(j.at("problem"));
    cfg.base.driver = detail::parse_driver(j.at("driver").get<std::string>());
    cfg.base.amplitude = j.at("amplitude").get<double>();
    cfg.base.annealing_time = j.at("annealing_time").get<double>();
    if (j.contains("noise")) {
        detail::reject_unknown_keys(j.at("noise"), {"rate", "kind"}, "noise");
        cfg.base.noise = make_noise(
            j.at("noise").at("rate").get<double>(),
            detail::parse_pauli(detail::get_or<std::string>(j.at("noise"), "kind", "z")));
    }
    if (j.contains("sector_policy")) cfg.base.sector_policy = detail::parse_policy(j.at("sector_policy"));
    if (j.contains("integrator")) cfg.base.integrator = detail::parse_integrator(j.at("integrator"));
    cfg.base.seed = detail::get_or<std::uint64_t>(j, "seed", 0);
    cfg.base.restrict_to_sector = detail::get_or<bool>(j, "restrict_to_sector", false);
    if (j.contains("sweep")) {
        const Json& s = j.at("sweep");
        detail::reject_unknown_keys(
            s, {"annealing_times", "amplitudes", "optimize_per_time", "refine"}, "sweep");
        if (s.contains("annealing_times"))
            cfg.sweep.annealing_times = detail::parse_grid(s.at("annealing_times"),
                                                           "sweep.annealing_times");
        cfg.sweep.amplitudes = s.contains("amplitudes")
                                   ? detail::parse_grid(s.at("amplitudes"), "sweep.amplitudes")
                                   : default_amplitude_grid();
        cfg.sweep.optimize_per_time = detail::get_or<bool>(s, "optimize_per_time", true);
        cfg.sweep.refine = detail::get_or<bool>(s, "refine", false);
    } else {
        cfg.sweep.amplitudes = default_amplitude_grid();
    }
    if (j.contains("spectrum")) {
        const Json& s = j.at("spectrum");
        detail::reject_unknown_keys(s, {"grid_points", "levels", "sectors"}, "spectrum");
        cfg.spectrum.grid_points = detail::get_or<int>(s, "grid_points", kDefaultSpectrumGrid);
        cfg.spectrum.levels = detail::get_or<int>(s, "levels", 0);
        cfg.spectrum.sectors = detail::get_or<bool>(s, "sectors", false);
    }
    if (j.contains("drivers")) {
        cfg.drivers.clear();
        for (const auto& d : j.at("drivers"))
            cfg.drivers.push_back(detail::parse_driver(d.get<std::string>()));
        if (cfg.drivers.empty()) throw ArgumentError("config: drivers list is empty");
    }
    cfg.threads = detail::get_or<int>(j, "threads", 0);
    validate_config(cfg.base);
    return cfg;
}

inline Json problem_to_json(const ProblemSpec& spec) {
    return std::visit(
        [](const auto& s) -> Json {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, SpinStarSpec>)
                return Json{{"kind", "spin-star"},
                            {"outer_spins", s.outer_spins},
                            {"omega", s.omega},
                            {"omega1", s.omega1},
                            {"coupling", s.coupling},
                            {"phase", s.phase == SpinStarPhase::Complex ? "complex" : "real"}};
            if constexpr (std::is_same_v<T, XxzSpec>)
                return Json{{"kind", "xxz-chain"}, {"couplings", s.couplings},
                            {"delta", s.delta}};
            if constexpr (std::is_same_v<T, RandomXxzSpec>)
                return Json{{"kind", "random-xxz"}, {"sites", s.sites},   {"delta", s.delta},
                            {"seed", s.seed},       {"low", s.low},       {"high", s.high}};
        },
        spec);
}

/// Canonical JSON echo of a configuration; feeding it back through
/// parse_config reproduces the run (grids are emitted resolved).
inline Json config_to_json(const FullConfig& cfg) {
    Json j;
    j["problem"] = problem_to_json(cfg.base.problem);
    j["driver"] = to_string(cfg.base.driver);
    j["amplitude"] = cfg.base.amplitude;
    j["annealing_time"] = cfg.base.annealing_time;
    j["noise"] = Json{{"rate", cfg.base.noise.rate}, {"kind", to_string(cfg.base.noise.kind)}};
    switch (cfg.base.sector_policy.kind) {
        case SectorPolicy::Kind::Auto: j["sector_policy"] = "auto"; break;
        case SectorPolicy::Kind::Global: j["sector_policy"] = "global"; break;
        case SectorPolicy::Kind::FixedM:
            j["sector_policy"] = Json{{"fixed_m", cfg.base.sector_policy.magnetization}};
            break;
    }
    j["integrator"] = Json{{"method", to_string(cfg.base.integrator.method)},
                           {"rel_tol", cfg.base.integrator.rel_tol},
                           {"abs_tol", cfg.base.integrator.abs_tol},
                           {"max_step", cfg.base.integrator.max_step},
                           {"sample_count", cfg.base.integrator.sample_count}};
    j["seed"] = cfg.base.seed;
    j["restrict_to_sector"] = cfg.base.restrict_to_sector;
    Json sweep;
    if (!cfg.sweep.annealing_times.empty()) sweep["annealing_times"] = cfg.sweep.annealing_times;
    sweep["amplitudes"] = cfg.sweep.amplitudes;
    sweep["optimize_per_time"] = cfg.sweep.optimize_per_time;
    sweep["refine"] = cfg.sweep.refine;
    j["sweep"] = sweep;
    j["spectrum"] = Json{{"grid_points", cfg.spectrum.grid_points},
                         {"levels", cfg.spectrum.levels},
                         {"sectors", cfg.spectrum.sectors}};
    Json drivers = Json::array();
    for (DriverKind d : cfg.drivers) drivers.push_back(to_string(d));
    j["drivers"] = drivers;
    j["threads"] = cfg.threads;
    return j;
}

inline std::vector<std::string> preset_names() {
    return {"spin-star-fig3", "xxz-fig4", "xxz-fig4-L5"};
}

/// Self-contained reproduction presets. Sweep ranges and integrator choices
/// are data, not code: everything can be overridden by an explicit config.
inline Json preset_config(const std::string& name) {
    Json j;
    j["driver"] = "xy";
    j["amplitude"] = 1.0;
    j["annealing_time"] = 100.0;
    j["sector_policy"] = "auto";
    // adaptive-taylor keeps the 2 x 20 x 25-cell reproduction sweeps fast;
    // it is cross-checked against adaptive-rk and fixed-rk4 in the tests.
    j["integrator"] = Json{{"method", "adaptive-taylor"}, {"rel_tol", 1e-9},
                           {"abs_tol", 1e-11},            {"max_step", 0.0},
                           {"sample_count", 50}};
    j["seed"] = 1234;
    j["restrict_to_sector"] = true;
    j["sweep"] = Json{{"annealing_times",
                       Json{{"min", 10.0}, {"max", 10000.0}, {"points", 20}, {"spacing", "log"}}},
                      {"amplitudes",
                       Json{{"min", 0.05}, {"max", 20.0}, {"points", 25}, {"spacing", "log"}}},
                      {"optimize_per_time", true},
                      {"refine", false}};
    j["spectrum"] = Json{{"grid_points", kDefaultSpectrumGrid}, {"levels", 0}, {"sectors", false}};
    j["drivers"] = Json::array({"transverse", "xy"});
    j["threads"] = 0;
    if (name == "spin-star-fig3") {
        j["problem"] = Json{{"kind", "spin-star"}, {"outer_spins", 3}, {"omega", 0.5},
                            {"omega1", 0.5},       {"coupling", 5.0},  {"phase", "complex"}};
        j["noise"] = Json{{"rate", 2.5e-5}, {"kind", "z"}};
        return j;
    }
    if (name == "xxz-fig4") {
        j["problem"] = Json{{"kind", "xxz-chain"},
                            {"couplings", xxz_reference_couplings(3)},
                            {"delta", 0.7}};
        j["noise"] = Json{{"rate", 1e-4}, {"kind", "z"}};
        return j;
    }
    if (name == "xxz-fig4-L5") {
        // All four reference couplings on 5 sites. The ground state is
        // degenerate across m = +-1, so the sector must be fixed explicitly.
        j["problem"] = Json{{"kind", "xxz-chain"},
                            {"couplings", xxz_reference_couplings(4)},
                            {"delta", 0.7}};
        j["noise"] = Json{{"rate", 1e-4}, {"kind", "z"}};
        j["sector_policy"] = Json{{"fixed_m", 1}};
        return j;
    }
    throw ArgumentError("unknown preset '" + name + "'; available: spin-star-fig3, xxz-fig4, "
                        "xxz-fig4-L5");
}

}  // namespace symmqa
