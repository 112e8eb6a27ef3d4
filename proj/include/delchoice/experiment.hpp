#pragma once

#include <filesystem>
#include <string>

#include "delchoice/engine.hpp"
#include "delchoice/serialization.hpp"

// Experiment execution: one replicate() per (T, seed) cell, with per-run
// trace CSVs, a summary CSV, and a plot-data file written to the output
// directory. CSV bytes are deterministic for a fixed spec.
namespace delchoice {

struct ExperimentArtifacts {
    std::vector<std::filesystem::path> trace_files;
    std::filesystem::path summary_file;
    std::filesystem::path plot_file;
};

ExperimentArtifacts run_experiment(const ExperimentSpec& spec,
                                   const std::filesystem::path& out_dir, int jobs = 1);

}  // namespace delchoice
