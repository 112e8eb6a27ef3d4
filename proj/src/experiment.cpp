#include "delchoice/experiment.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace delchoice {

namespace fs = std::filesystem;

namespace {

void write_atomic(const fs::path& target, const std::string& content) {
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        out << content;
        if (!out) throw std::runtime_error("write failed: " + tmp.string());
    }
    fs::rename(tmp, target);
}

std::string fmt(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

}  // namespace

ExperimentArtifacts run_experiment(const ExperimentSpec& spec, const fs::path& out_dir,
                                   int jobs) {
    if (jobs < 1) throw std::invalid_argument("jobs must be >= 1");
    if (spec.horizons.empty()) throw std::invalid_argument("experiment has no horizons");
    if (spec.seeds.empty()) throw std::invalid_argument("experiment has no seeds");
    fs::create_directories(out_dir);

    SimulationConfig base;
    base.instance = spec.instance;
    base.mechanism = spec.mechanism;
    base.mechanism_params = spec.mechanism_params;
    base.agent = spec.agent;
    base.agent_params = spec.agent_params;
    base.opt_per_round = benchmark_opt(spec.instance);

    struct Cell {
        int T;
        std::uint64_t seed;
        fs::path file;
    };
    std::vector<Cell> cells;
    for (int T : spec.horizons)
        for (std::uint64_t seed : spec.seeds) {
            std::ostringstream name;
            name << "run_" << spec.name << "_T" << T << "_seed" << seed << ".csv";
            cells.push_back({T, seed, out_dir / name.str()});
        }

    struct CellStats {
        double final_regret = 0.0;
        double seconds = 0.0;
    };
    std::vector<CellStats> stats(cells.size());

    auto run_cell = [&](std::size_t i) {
        SimulationConfig config = base;
        config.T = cells[i].T;
        config.seed = cells[i].seed;
        auto start = std::chrono::steady_clock::now();
        RunResult result = run_simulation(config);
        std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        write_atomic(cells[i].file, run_result_csv(result));
        stats[i] = {result.cum_regret.back(), elapsed.count()};
    };

    if (jobs == 1) {
        for (std::size_t i = 0; i < cells.size(); ++i) run_cell(i);
    } else {
        std::size_t next = 0;
        while (next < cells.size()) {
            std::vector<std::future<void>> batch;
            for (int j = 0; j < jobs && next < cells.size(); ++j, ++next)
                batch.push_back(std::async(std::launch::async, run_cell, next));
            for (auto& f : batch) f.get();
        }
    }

    // Summary: one row per horizon, aggregated over seeds in spec order.
    std::ostringstream summary;
    summary << "T,mean_regret,stddev_regret,runtime_seconds\n";
    std::ostringstream plot;
    plot << "T,mean_regret\n";
    std::size_t idx = 0;
    for (int T : spec.horizons) {
        double sum = 0.0, sum_sq = 0.0, seconds = 0.0;
        const auto n = static_cast<double>(spec.seeds.size());
        for (std::size_t s = 0; s < spec.seeds.size(); ++s, ++idx) {
            sum += stats[idx].final_regret;
            sum_sq += stats[idx].final_regret * stats[idx].final_regret;
            seconds += stats[idx].seconds;
        }
        double mean = sum / n;
        double var = n > 1 ? std::max(0.0, (sum_sq - n * mean * mean) / (n - 1)) : 0.0;
        summary << T << ',' << fmt(mean) << ',' << fmt(std::sqrt(var)) << ','
                << std::setprecision(6) << seconds << '\n';
        plot << T << ',' << fmt(mean) << '\n';
    }

    ExperimentArtifacts artifacts;
    for (const auto& cell : cells) artifacts.trace_files.push_back(cell.file);
    artifacts.summary_file = out_dir / ("summary_" + spec.name + ".csv");
    artifacts.plot_file = out_dir / ("plot_" + spec.name + ".csv");
    write_atomic(artifacts.summary_file, summary.str());
    write_atomic(artifacts.plot_file, plot.str());
    return artifacts;
}

}  // namespace delchoice
