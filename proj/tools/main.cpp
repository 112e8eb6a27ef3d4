#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <string>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "delchoice/benchmark.hpp"
#include "delchoice/experiment.hpp"
#include "delchoice/serialization.hpp"
#include "delchoice/verify.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitRuntime = 1;
constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;

fs::path default_out_dir(const std::string& flag_out, const std::string& spec_out) {
    if (!flag_out.empty()) return flag_out;
    if (!spec_out.empty()) return spec_out;
    if (const char* env = std::getenv("DELCHOICE_OUT")) return env;
    return "delchoice_out";
}

int cmd_run(const std::string& spec_path, const std::string& out_flag, int jobs,
            long long seed_override) {
    json doc;
    try {
        std::ifstream in(spec_path);
        if (!in) {
            std::cerr << "error: cannot open spec file " << spec_path << "\n";
            return kExitParse;
        }
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    }

    delchoice::ExperimentSpec spec;
    try {
        spec = delchoice::experiment_from_json(doc);
        if (seed_override >= 0)
            spec.seeds = {static_cast<std::uint64_t>(seed_override)};
    } catch (const std::exception& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidation;
    }

    try {
        const fs::path out = default_out_dir(out_flag, spec.out_dir);
        auto artifacts = delchoice::run_experiment(spec, out, jobs);
        std::cout << "wrote " << artifacts.trace_files.size() << " trace files, "
                  << artifacts.summary_file.string() << ", "
                  << artifacts.plot_file.string() << "\n";
        return 0;
    } catch (const std::invalid_argument& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "runtime error: " << e.what() << "\n";
        return kExitRuntime;
    }
}

int cmd_verify(const std::string& suite_name) {
    delchoice::verify::Suite suite;
    try {
        suite = delchoice::verify::suite_from_name(suite_name);
    } catch (const std::exception& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidation;
    }
    bool all_passed = true;
    delchoice::verify::run_acceptance(suite, [&](const auto& r) {
        all_passed = all_passed && r.passed;
        std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << std::setw(2)
                  << std::setfill('0') << r.id << std::setfill(' ') << " " << r.name
                  << " (" << std::fixed << std::setprecision(1) << r.seconds << "s) "
                  << r.detail << "\n"
                  << std::defaultfloat;
        std::cout.flush();
    });
    std::cout << (all_passed ? "all criteria passed" : "some criteria failed") << "\n";
    return all_passed ? 0 : kExitRuntime;
}

int cmd_fixtures(const std::string& action, const std::string& name,
                 const std::string& path, int grid, int samples) {
    try {
        if (action == "list") {
            for (const auto& n : delchoice::fixture_names()) std::cout << n << "\n";
            return 0;
        }
        if (name.empty()) {
            std::cerr << "validation error: fixture name required\n";
            return kExitValidation;
        }
        delchoice::InstanceModel inst = delchoice::fixture_by_name(name);
        if (action == "show") {
            std::cout << delchoice::instance_to_json(inst).dump(2) << "\n";
            return 0;
        }
        if (path.empty()) {
            std::cerr << "validation error: output path required\n";
            return kExitValidation;
        }
        if (action == "export") {
            std::ofstream out(path);
            if (!out) throw std::runtime_error("cannot open " + path);
            out << delchoice::instance_to_json(inst).dump(2) << "\n";
            return 0;
        }
        if (action == "curve") {
            auto result = delchoice::opt_threshold(inst, grid, samples, 20240901);
            std::ofstream out(path);
            if (!out) throw std::runtime_error("cannot open " + path);
            out << "tau,f_estimate,stderr,n_samples\n" << std::setprecision(17);
            for (const auto& p : result.f_curve)
                out << p.tau << ',' << p.f << ',' << p.stderr_est << ',' << p.n_samples
                    << '\n';
            std::cout << "tau_star " << result.tau_star << ", f(tau_star) "
                      << result.opt_per_round << "\n";
            return 0;
        }
        std::cerr << "validation error: unknown action " << action << "\n";
        return kExitValidation;
    } catch (const std::invalid_argument& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "runtime error: " << e.what() << "\n";
        return kExitRuntime;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"delegated choice simulation engine"};
    app.require_subcommand(1);

    auto* run = app.add_subcommand("run", "execute an experiment spec");
    std::string spec_path, out_flag;
    int jobs = 1;
    long long seed_override = -1;
    run->add_option("--spec", spec_path, "experiment spec (JSON)")->required();
    run->add_option("--out", out_flag,
                    "output directory (default: spec 'out', then $DELCHOICE_OUT)");
    run->add_option("--jobs", jobs, "parallel (T, seed) cells")->default_val(1);
    run->add_option("--seed-override", seed_override,
                    "replace the spec's seed list with a single seed");

    auto* verify = app.add_subcommand("verify", "run the acceptance suite");
    std::string suite = "fast";
    verify->add_option("--suite", suite, "fast or full")->default_val("fast");

    auto* fixtures = app.add_subcommand("fixtures", "inspect built-in instances");
    std::string action = "list", name, path;
    int grid = 512, samples = 20000;
    fixtures->add_option("action", action, "list | show | export | curve");
    fixtures->add_option("name", name, "fixture name, e.g. P1(0.1,1e-14)");
    fixtures->add_option("path", path, "output file for export/curve");
    fixtures->add_option("--grid", grid, "curve grid size")->default_val(512);
    fixtures->add_option("--samples", samples, "Monte Carlo samples per grid point")
        ->default_val(20000);

    CLI11_PARSE(app, argc, argv);

    if (run->parsed()) return cmd_run(spec_path, out_flag, jobs, seed_override);
    if (verify->parsed()) return cmd_verify(suite);
    return cmd_fixtures(action, name, path, grid, samples);
}
