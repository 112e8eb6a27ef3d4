#include "delchoice/benchmark.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace delchoice {

namespace {

double f_tau_exact(const InstanceModel& instance, const EligibleSet& set) {
    const Realization r{1, instance.solutions};
    const Proposal p = best_response(r, set);
    return round_outcome(set, r, p).principal_utility;
}

struct McEstimate {
    double mean = 0.0;
    double stderr_est = 0.0;
};

McEstimate f_tau_mc(const InstanceModel& instance, const EligibleSet& set, int n_samples,
                    std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    double sum = 0.0, sumsq = 0.0;
    for (int s = 1; s <= n_samples; ++s) {
        const Realization r = instance.realize(s, rng);
        const Proposal p = best_response(r, set);
        const double x = round_outcome(set, r, p).principal_utility;
        sum += x;
        sumsq += x * x;
    }
    const double mean = sum / n_samples;
    const double var = std::max(0.0, sumsq / n_samples - mean * mean);
    return {mean, std::sqrt(var / n_samples)};
}

}  // namespace

double f_tau(const InstanceModel& instance, double tau, bool inclusive, int n_samples,
             std::uint64_t seed) {
    const EligibleSet set =
        inclusive ? EligibleSet::inclusive(tau) : EligibleSet::strict(tau);
    if (instance.deterministic) return f_tau_exact(instance, set);
    if (n_samples < 1) throw std::invalid_argument("n_samples must be at least 1");
    return f_tau_mc(instance, set, n_samples, seed).mean;
}

BenchmarkResult opt_threshold(const InstanceModel& instance, int grid_size,
                              int n_samples, std::uint64_t seed) {
    if (grid_size < 2) throw std::invalid_argument("grid_size must be at least 2");

    std::set<double> taus;
    for (int j = 0; j <= grid_size; ++j)
        taus.insert(static_cast<double>(j) / grid_size);
    if (instance.deterministic)
        for (const auto& s : instance.solutions) taus.insert(s.x);

    BenchmarkResult result;
    result.exact = instance.deterministic;
    result.tau_star = 0.0;
    result.opt_per_round = -1.0;
    for (double tau : taus) {  // ascending, so ties keep the lowest tau
        FCurvePoint pt;
        pt.tau = tau;
        if (instance.deterministic) {
            pt.f = f_tau_exact(instance, EligibleSet::inclusive(tau));
        } else {
            const auto est = f_tau_mc(instance, EligibleSet::inclusive(tau), n_samples,
                                      seed ^ std::hash<double>{}(tau));
            pt.f = est.mean;
            pt.stderr_est = est.stderr_est;
            pt.n_samples = n_samples;
        }
        if (pt.f > result.opt_per_round) {
            result.opt_per_round = pt.f;
            result.tau_star = tau;
        }
        result.f_curve.push_back(pt);
    }
    if (instance.deterministic && !instance.solutions.empty()) {
        // With fixed solutions the optimum is attained at tau = max_a X_a, and
        // ties on flat stretches of the curve resolve to that canonical point.
        double max_x = 0.0;
        for (const auto& s : instance.solutions) max_x = std::max(max_x, s.x);
        if (f_tau_exact(instance, EligibleSet::inclusive(max_x)) >=
            result.opt_per_round) {
            result.opt_per_round = f_tau_exact(instance, EligibleSet::inclusive(max_x));
            result.tau_star = max_x;
        }
    }
    return result;
}

double stackelberg_regret(const History& history, double opt_per_round) {
    return history.rounds() * opt_per_round - history.total_principal_utility();
}

std::vector<double> gaps(const std::vector<double>& means) {
    if (means.empty()) throw std::invalid_argument("means must be non-empty");
    const double best = *std::max_element(means.begin(), means.end());
    std::vector<double> out;
    out.reserve(means.size());
    for (double m : means) out.push_back(best - m);
    return out;
}

}  // namespace delchoice
