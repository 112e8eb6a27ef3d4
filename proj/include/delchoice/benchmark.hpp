#pragma once

#include <cstdint>
#include <vector>

#include "delchoice/agents.hpp"
#include "delchoice/core.hpp"
#include "delchoice/instances.hpp"

// Stackelberg benchmark: the threshold-utility curve f(tau), its maximizer,
// and regret against T * opt.
namespace delchoice {

struct FCurvePoint {
    double tau = 0.0;
    double f = 0.0;
    double stderr_est = 0.0;
    int n_samples = 0;
};

struct BenchmarkResult {
    double tau_star = 0.0;
    double opt_per_round = 0.0;
    std::vector<FCurvePoint> f_curve;
    bool exact = false;  // deterministic instances are evaluated exactly
};

// Expected principal utility of announcing threshold tau against a myopic
// best responder. Exact for deterministic instances; Monte Carlo otherwise.
double f_tau(const InstanceModel& instance, double tau, bool inclusive, int n_samples,
             std::uint64_t seed);

// Maximize f over the uniform grid {j/grid_size}; deterministic instances are
// additionally evaluated at every distinct X_a (exact OPT = max_a X_a there).
// Ties resolve to the lowest tau.
BenchmarkResult opt_threshold(const InstanceModel& instance, int grid_size,
                              int n_samples, std::uint64_t seed);

// T * opt_per_round - realized cumulative principal utility.
double stackelberg_regret(const History& history, double opt_per_round);

// Suboptimality gaps Delta_i = max_j means_j - means_i.
std::vector<double> gaps(const std::vector<double>& means);

}  // namespace delchoice
