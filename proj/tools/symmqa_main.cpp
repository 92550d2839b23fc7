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

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "symmqa/config.hpp"
#include "symmqa/io.hpp"
#include "symmqa/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNumerical = 2;
constexpr int kExitVerification = 3;

struct CommonArgs {
    std::string config_path;
    std::string preset;
    std::string out_path;
    std::string drivers;
    bool sectors = false;
    std::int64_t seed = -1;
    int threads = 0;
};

void add_common_options(CLI::App* cmd, CommonArgs& args, bool with_out) {
    cmd->add_option("--config", args.config_path, "experiment config JSON file");
    cmd->add_option("--preset", args.preset,
                    "built-in preset: spin-star-fig3, xxz-fig4, xxz-fig4-L5");
    if (with_out) cmd->add_option("--out", args.out_path, "output file path");
    cmd->add_option("--drivers", args.drivers, "comma-separated driver list (xy,transverse)");
    cmd->add_flag("--sectors", args.sectors, "label spectrum levels by magnetization sector");
    cmd->add_option("--seed", args.seed, "override the experiment seed");
    cmd->add_option("--threads", args.threads,
                    "worker threads (default: SYMMQA_THREADS or hardware)");
}

symmqa::FullConfig load_config(const CommonArgs& args) {
    if (args.config_path.empty() == args.preset.empty())
        throw symmqa::ArgumentError("exactly one of --config or --preset is required");
    symmqa::Json doc;
    if (!args.preset.empty()) {
        doc = symmqa::preset_config(args.preset);
    } else {
        std::ifstream in(args.config_path);
        if (!in) throw symmqa::ArgumentError("cannot read config file " + args.config_path);
        try {
            in >> doc;
        } catch (const symmqa::Json::exception& e) {
            throw symmqa::ArgumentError("config parse error: " + std::string(e.what()));
        }
    }
    symmqa::FullConfig cfg = symmqa::parse_config(doc);
    if (!args.drivers.empty()) {
        cfg.drivers.clear();
        std::stringstream ss(args.drivers);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) cfg.drivers.push_back(symmqa::detail::parse_driver(item));
        if (cfg.drivers.empty()) throw symmqa::ArgumentError("--drivers list is empty");
    }
    if (args.sectors) cfg.spectrum.sectors = true;
    if (args.seed >= 0) {
        cfg.base.seed = static_cast<std::uint64_t>(args.seed);
        if (auto* random = std::get_if<symmqa::RandomXxzSpec>(&cfg.base.problem))
            random->seed = static_cast<std::uint64_t>(args.seed);
    }
    if (args.threads > 0) cfg.threads = args.threads;
    return cfg;
}

std::ofstream open_output(const std::string& path) {
    if (path.empty()) throw symmqa::ArgumentError("--out is required for this command");
    std::ofstream out(path);
    if (!out) throw symmqa::ArgumentError("cannot write output file " + path);
    return out;
}

std::string summary_path_for(const std::string& csv_path) {
    const std::string suffix = ".csv";
    if (csv_path.size() > suffix.size() &&
        csv_path.compare(csv_path.size() - suffix.size(), suffix.size(), suffix) == 0)
        return csv_path.substr(0, csv_path.size() - suffix.size()) + ".summary.json";
    return csv_path + ".summary.json";
}

int cmd_spectrum(const CommonArgs& args) {
    symmqa::FullConfig cfg = load_config(args);
    if (cfg.drivers.size() != 1)
        throw symmqa::ArgumentError(
            "spectrum needs a single driver; pick one with --drivers xy or "
            "--drivers transverse");
    const symmqa::ManyBodyOperator problem = symmqa::build_problem(cfg.base.problem);
    const symmqa::ManyBodyOperator driver =
        symmqa::build_driver(cfg.drivers[0], problem.sites, cfg.base.amplitude);
    const symmqa::AnnealSchedule sched =
        symmqa::make_schedule(problem, driver, cfg.base.annealing_time);
    const int levels = cfg.spectrum.levels > 0
                           ? cfg.spectrum.levels
                           : static_cast<int>(symmqa::dim_of(problem.sites));
    const symmqa::SpectrumTrace trace =
        cfg.spectrum.sectors
            ? symmqa::trace_spectrum_labeled(sched, cfg.spectrum.grid_points, levels,
                                             cfg.threads)
            : symmqa::trace_spectrum(sched, cfg.spectrum.grid_points, levels, cfg.threads);
    std::ofstream out = open_output(args.out_path);
    symmqa::write_spectrum_csv(out, trace);
    return kExitOk;
}

int cmd_anneal(const CommonArgs& args) {
    symmqa::FullConfig cfg = load_config(args);
    if (args.drivers.empty() && cfg.drivers.size() == 1) cfg.base.driver = cfg.drivers[0];
    if (!args.drivers.empty()) {
        if (cfg.drivers.size() != 1)
            throw symmqa::ArgumentError("anneal runs a single driver; pass one value");
        cfg.base.driver = cfg.drivers[0];
    }
    const symmqa::RunResult result = symmqa::run(cfg.base);
    const symmqa::Json record = symmqa::build_result_record(cfg, result);
    std::cout << record.dump() << "\n";
    if (!args.out_path.empty()) {
        std::ofstream out(args.out_path, std::ios::app);
        if (!out) throw symmqa::ArgumentError("cannot write output file " + args.out_path);
        out << record.dump() << "\n";
    }
    return kExitOk;
}

int cmd_sweep(const CommonArgs& args) {
    symmqa::FullConfig cfg = load_config(args);
    if (cfg.sweep.annealing_times.empty())
        throw symmqa::ArgumentError("config: sweep.annealing_times is required for sweep");
    std::vector<symmqa::SweepCsvRow> rows;
    std::vector<symmqa::DriverSummary> summaries;
    for (symmqa::DriverKind driver : cfg.drivers) {
        symmqa::ExperimentConfig base = cfg.base;
        base.driver = driver;
        const symmqa::TimeSweep sweep = symmqa::sweep_annealing_time(
            base, cfg.sweep.annealing_times, cfg.sweep.optimize_per_time, cfg.sweep.amplitudes,
            cfg.threads, cfg.sweep.refine);
        symmqa::DriverSummary summary;
        summary.driver = symmqa::to_string(driver);
        summary.optimal_time = sweep.optimal_time;
        summary.min_error = sweep.min_error;
        for (const symmqa::TimeSweepPoint& p : sweep.points) {
            rows.push_back({p.annealing_time, symmqa::to_string(driver), p.amplitude,
                            p.result.estimation_error, p.result.ground_fidelity});
            if (p.annealing_time == sweep.optimal_time) {
                summary.amplitude_at_optimum = p.amplitude;
                summary.fidelity_at_optimum = p.result.ground_fidelity;
            }
        }
        summaries.push_back(summary);
        std::cerr << "sweep[" << summary.driver << "]: min error " << summary.min_error
                  << " GHz at T = " << summary.optimal_time << " ns\n";
    }
    std::ofstream out = open_output(args.out_path);
    symmqa::write_sweep_csv(out, rows);
    const symmqa::Json summary = symmqa::build_sweep_summary(summaries);
    std::ofstream sum_out(summary_path_for(args.out_path));
    if (!sum_out)
        throw symmqa::ArgumentError("cannot write summary file " +
                                    summary_path_for(args.out_path));
    sum_out << summary.dump(2) << "\n";
    std::cout << summary.dump() << "\n";
    return kExitOk;
}

int cmd_optimize(const CommonArgs& args) {
    symmqa::FullConfig cfg = load_config(args);
    if (cfg.drivers.size() == 1) cfg.base.driver = cfg.drivers[0];
    const symmqa::AmplitudeOptimization opt = symmqa::optimize_amplitude(
        cfg.base, cfg.sweep.amplitudes, cfg.threads, cfg.sweep.refine);
    if (opt.argmin_on_boundary)
        std::cerr << "warning: optimal amplitude " << opt.best_amplitude
                  << " GHz sits on the grid boundary; widen sweep.amplitudes\n";
    if (!args.out_path.empty()) {
        std::ofstream out = open_output(args.out_path);
        out << "amplitude,error,fidelity\n";
        for (const symmqa::AmplitudePoint& p : opt.curve)
            out << symmqa::format_g17(p.amplitude) << ","
                << symmqa::format_g17(p.result.estimation_error) << ","
                << symmqa::format_g17(p.result.ground_fidelity) << "\n";
    }
    symmqa::Json best{{"driver", symmqa::to_string(cfg.base.driver)},
                      {"amplitude", opt.best_amplitude},
                      {"estimation_error", opt.best_result.estimation_error},
                      {"ground_fidelity", opt.best_result.ground_fidelity},
                      {"argmin_on_boundary", opt.argmin_on_boundary}};
    std::cout << best.dump() << "\n";
    return kExitOk;
}

int cmd_verify() {
    const std::vector<symmqa::CheckResult> checks = symmqa::run_verification_suite();
    bool all_ok = true;
    for (const symmqa::CheckResult& c : checks) {
        std::cout << (c.passed ? "PASS  " : "FAIL  ") << c.name;
        if (!c.passed) std::cout << "  [" << c.detail << "]";
        std::cout << "\n";
        all_ok = all_ok && c.passed;
    }
    std::cout << (all_ok ? "all " : "some of ") << checks.size() << " checks "
              << (all_ok ? "passed" : "FAILED") << "\n";
    return all_ok ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"symmqa: quantum annealing in symmetric subspaces, at desk scale"};
    app.require_subcommand(1);

    CommonArgs spectrum_args, anneal_args, sweep_args, optimize_args;
    CLI::App* spectrum =
        app.add_subcommand("spectrum", "eigenvalue trajectories along the schedule -> CSV");
    add_common_options(spectrum, spectrum_args, true);
    CLI::App* anneal =
        app.add_subcommand("anneal", "single annealing run -> JSON record on stdout");
    add_common_options(anneal, anneal_args, true);
    CLI::App* sweep = app.add_subcommand(
        "sweep", "error vs annealing time with per-T amplitude optimization -> CSV + summary");
    add_common_options(sweep, sweep_args, true);
    CLI::App* optimize =
        app.add_subcommand("optimize", "drive-amplitude optimization at fixed T");
    add_common_options(optimize, optimize_args, true);
    app.add_subcommand("verify", "run the built-in oracle/invariant suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (spectrum->parsed()) return cmd_spectrum(spectrum_args);
        if (anneal->parsed()) return cmd_anneal(anneal_args);
        if (sweep->parsed()) return cmd_sweep(sweep_args);
        if (optimize->parsed()) return cmd_optimize(optimize_args);
        return cmd_verify();
    } catch (const symmqa::ArgumentError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const symmqa::AmbiguityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    }
}
