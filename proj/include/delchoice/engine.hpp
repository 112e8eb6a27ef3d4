#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "delchoice/agents.hpp"
#include "delchoice/benchmark.hpp"
#include "delchoice/core.hpp"
#include "delchoice/instances.hpp"
#include "delchoice/mechanisms.hpp"

// The round loop: sample realization, query mechanism, query agent, resolve,
// record; plus seeded replication.
namespace delchoice {

// splitmix64 step; used to derive independent sub-streams from a root seed so
// adding randomness to one component never perturbs another's stream.
std::uint64_t split_seed(std::uint64_t root, std::uint64_t stream);

struct SimulationConfig {
    InstanceModel instance;
    std::string mechanism;
    nlohmann::json mechanism_params;
    std::string agent;
    nlohmann::json agent_params;
    int T = 1;
    std::uint64_t seed = 0;
    // opt_per_round for the regret trace; negative means "compute it here"
    double opt_per_round = -1.0;
};

struct RunResult {
    History history;
    std::vector<double> cum_regret;
    double agent_discounted_total = 0.0;
    double opt_per_round = 0.0;
};

std::unique_ptr<Mechanism> make_mechanism(const std::string& name,
                                          const nlohmann::json& params, int T);
std::unique_ptr<Agent> make_agent(const std::string& name, const nlohmann::json& params);
std::vector<std::string> mechanism_names();
std::vector<std::string> agent_names();

// Low-level loop against already-built components. gamma discounts the
// agent-utility trace only.
RunResult run_loop(const InstanceModel& instance, Mechanism& mechanism, Agent& agent,
                   int T, std::uint64_t seed, double opt_per_round, double gamma = 1.0);

RunResult run_simulation(const SimulationConfig& config);

// Benchmark opt for an instance (exact when deterministic, Monte Carlo
// otherwise) with the documented defaults.
double benchmark_opt(const InstanceModel& instance, int grid_size = 2000,
                     int n_samples = 100000, std::uint64_t seed = 20240901);

struct ReplicateResult {
    std::vector<std::uint64_t> seeds;
    std::vector<double> final_regret;       // per seed
    std::vector<double> mean_regret_trace;  // averaged over seeds, length T
    double mean_final_regret = 0.0;
    double stddev_final_regret = 0.0;
    double opt_per_round = 0.0;
};

ReplicateResult replicate(const SimulationConfig& base,
                          const std::vector<std::uint64_t>& seeds, int parallelism = 1);

// RunResult trace as CSV (t, set kind/threshold, proposal utilities,
// acceptance, principal utility, cumulative regret).
std::string run_result_csv(const RunResult& result);

}  // namespace delchoice
