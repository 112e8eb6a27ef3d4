#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "delchoice/core.hpp"

// Instance generators, assumption checkers, and the named fixtures used by
// the lower-bound and stochastic experiments.
namespace delchoice {

enum class SamplerKind { None, TwoUniformComplement, TwoUniformComplementTruncated };

struct InstanceMetadata {
    int K = 0;
    std::optional<double> y_min;
    std::optional<double> d;
    std::optional<double> L1;
    std::optional<double> L2;
    std::string notes;
};

// Either a fixed solution set (realization constant across rounds) or a named
// per-round i.i.d. sampler.
struct InstanceModel {
    bool deterministic = true;
    std::vector<Solution> solutions;          // deterministic case
    SamplerKind sampler = SamplerKind::None;  // stochastic case
    double sampler_param = 0.0;               // y_min for the truncated sampler
    InstanceMetadata meta;

    Realization realize(int round, std::mt19937_64& rng) const;

    // Analytic threshold-utility curve, available for the stochastic fixtures.
    bool has_analytic_curve() const { return sampler != SamplerKind::None; }
    double analytic_f(double tau) const;
    double analytic_tau_star() const;
    double analytic_opt() const;

    double max_x() const;  // deterministic instances only
};

InstanceModel deterministic_instance(std::vector<Solution> solutions);

// --- assumption checkers ------------------------------------------------

struct CheckResult {
    bool ok = true;
    // witness pair (indices into the solution list) when a check fails
    std::size_t witness_a = 0;
    std::size_t witness_b = 0;
};

// d-dense: every pair is within d in x, or bridged by some c with
// d_X(a,c) <= d and d_X(b,c) <= d_X(a,b).
CheckResult check_d_dense(const InstanceModel& instance, double d);

// (L1, L2)-Lipschitz: L1*|dx| <= |dy| <= L2*|dx| for every pair.
CheckResult check_lipschitz(const InstanceModel& instance, double L1, double L2);

// Sampled variant for stochastic instances: L1*|dx| <= |dy| within every
// sampled realization.
bool check_stochastic_lipschitz(const InstanceModel& instance, double L1,
                                int n_samples, std::uint64_t seed);

// --- generators and fixtures ---------------------------------------------

// K solutions with consecutive x gaps in (0, d] and y decreasing with slope
// in [L1, L2], all y > y_min. Output passes both checkers.
InstanceModel generate_deterministic_chain(int K, double d, double L1, double L2,
                                           double y_min, std::uint64_t seed);

// Named fixtures: P1(d, y), P2(d), AppendixK(eps), TwoUniformComplement,
// TwoUniformComplementTruncated(y_min).
InstanceModel fixture_p1(double d, double y);
InstanceModel fixture_p2(double d);
InstanceModel fixture_appendix_k(double eps);
InstanceModel fixture_two_uniform_complement();
InstanceModel fixture_two_uniform_complement_truncated(double y_min);

std::vector<std::string> fixture_names();
// Parse "P1(0.1,1e-14)"-style references; bare names use documented defaults.
InstanceModel fixture_by_name(const std::string& name);

}  // namespace delchoice
