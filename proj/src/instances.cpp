#include "delchoice/instances.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace delchoice {

namespace {

double unit_curve(double tau) {
    // Two i.i.d. X ~ U[0,1] with Y = 1 - X: the best response to E_tau is the
    // eligible solution of minimal x, giving f(tau) = 1/3 + tau - tau^2 - tau^3/3.
    return 1.0 / 3.0 + tau - tau * tau - tau * tau * tau / 3.0;
}

constexpr double kUnitTauStar = 0.41421356237309515;  // sqrt(2) - 1

}  // namespace

Realization InstanceModel::realize(int round, std::mt19937_64& rng) const {
    if (deterministic) return {round, solutions};
    Realization r{round, {}};
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const double scale =
        sampler == SamplerKind::TwoUniformComplementTruncated ? 1.0 - sampler_param : 1.0;
    r.solutions.reserve(2);
    for (int i = 0; i < 2; ++i) {
        const double x = scale * unif(rng);
        r.solutions.emplace_back(i, x, 1.0 - x);
    }
    return r;
}

double InstanceModel::analytic_f(double tau) const {
    if (!has_analytic_curve())
        throw std::logic_error("no analytic curve for this instance");
    const double scale =
        sampler == SamplerKind::TwoUniformComplementTruncated ? 1.0 - sampler_param : 1.0;
    if (tau > scale) return 0.0;
    return scale * unit_curve(tau / scale);
}

double InstanceModel::analytic_tau_star() const {
    if (!has_analytic_curve())
        throw std::logic_error("no analytic curve for this instance");
    const double scale =
        sampler == SamplerKind::TwoUniformComplementTruncated ? 1.0 - sampler_param : 1.0;
    return scale * kUnitTauStar;
}

double InstanceModel::analytic_opt() const { return analytic_f(analytic_tau_star()); }

double InstanceModel::max_x() const {
    if (!deterministic)
        throw std::logic_error("max_x is defined for deterministic instances only");
    double m = 0.0;
    for (const auto& s : solutions) m = std::max(m, s.x);
    return m;
}

InstanceModel deterministic_instance(std::vector<Solution> solutions) {
    InstanceModel inst;
    inst.deterministic = true;
    inst.solutions = std::move(solutions);
    inst.meta.K = static_cast<int>(inst.solutions.size());
    return inst;
}

CheckResult check_d_dense(const InstanceModel& instance, double d) {
    if (d <= 0.0) throw std::invalid_argument("d must be positive");
    const auto& sols = instance.solutions;
    const auto dx = [&](std::size_t i, std::size_t j) {
        return std::abs(sols[i].x - sols[j].x);
    };
    // Absolute slack so grids like {0.1, 0.15, 0.2} pass at d = 0.05 despite
    // binary-representation error in the pairwise differences.
    constexpr double kSlack = 1e-12;
    for (std::size_t a = 0; a < sols.size(); ++a) {
        for (std::size_t b = a + 1; b < sols.size(); ++b) {
            if (dx(a, b) <= d + kSlack) continue;
            bool bridged = false;
            for (std::size_t c = 0; c < sols.size() && !bridged; ++c) {
                if (c == a || c == b) continue;
                bridged = dx(a, c) <= d + kSlack && dx(b, c) <= dx(a, b) + kSlack;
            }
            if (!bridged) return {false, a, b};
        }
    }
    return {};
}

CheckResult check_lipschitz(const InstanceModel& instance, double L1, double L2) {
    if (!(L1 > 0.0 && L1 <= L2))
        throw std::invalid_argument("require 0 < L1 <= L2");
    const auto& sols = instance.solutions;
    for (std::size_t a = 0; a < sols.size(); ++a) {
        for (std::size_t b = a + 1; b < sols.size(); ++b) {
            const double dx = std::abs(sols[a].x - sols[b].x);
            const double dy = std::abs(sols[a].y - sols[b].y);
            if (L1 * dx > dy || dy > L2 * dx) return {false, a, b};
        }
    }
    return {};
}

bool check_stochastic_lipschitz(const InstanceModel& instance, double L1,
                                int n_samples, std::uint64_t seed) {
    if (L1 <= 0.0) throw std::invalid_argument("L1 must be positive");
    std::mt19937_64 rng(seed);
    for (int s = 0; s < n_samples; ++s) {
        const Realization r = instance.realize(s + 1, rng);
        for (std::size_t a = 0; a < r.solutions.size(); ++a) {
            for (std::size_t b = a + 1; b < r.solutions.size(); ++b) {
                const double dx = std::abs(r.solutions[a].x - r.solutions[b].x);
                const double dy = std::abs(r.solutions[a].y - r.solutions[b].y);
                if (L1 * dx > dy + 1e-12) return false;
            }
        }
    }
    return true;
}

InstanceModel generate_deterministic_chain(int K, double d, double L1, double L2,
                                           double y_min, std::uint64_t seed) {
    if (K < 1 || d <= 0.0 || !(L1 > 0.0 && L1 <= L2) || y_min <= 0.0)
        throw std::invalid_argument("invalid chain parameters");
    // x budget: the chain spans at most K*d; y budget: the total y drop is at
    // most L2*K*d and must leave room above y_min.
    if (K * d > 1.0 || y_min + L2 * K * d >= 1.0)
        throw std::invalid_argument("infeasible chain parameters: budget exceeded");

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> gap_dist(d * 1e-3, d);
    std::uniform_real_distribution<double> slope_dist(L1, L2);

    // x ascends in steps of at most d; y descends with slope in [L1, L2], so
    // every pair (not only consecutive ones) satisfies the Lipschitz band.
    std::vector<Solution> sols;
    double x = gap_dist(rng);
    double y = 1.0 - 1e-9;
    for (int i = 0; i < K; ++i) {
        if (i > 0) {
            const double gap = gap_dist(rng);
            x += gap;
            y -= slope_dist(rng) * gap;
        }
        sols.emplace_back(i, x, y);
    }
    if (sols.back().y <= y_min)
        throw std::invalid_argument("infeasible chain parameters: y-budget exceeded");

    InstanceModel inst = deterministic_instance(std::move(sols));
    inst.meta.y_min = y_min;
    inst.meta.d = d;
    inst.meta.L1 = L1;
    inst.meta.L2 = L2;
    return inst;
}

InstanceModel fixture_p1(double d, double y) {
    InstanceModel inst = deterministic_instance({{0, d, 1.0}, {1, 2.0 * d, y}});
    inst.meta.d = d;
    inst.meta.y_min = y;
    inst.meta.notes = "P1";
    return inst;
}

InstanceModel fixture_p2(double d) {
    InstanceModel inst = deterministic_instance({{0, d, 1.0}});
    inst.meta.d = d;
    inst.meta.y_min = 1.0;
    inst.meta.notes = "P2";
    return inst;
}

InstanceModel fixture_appendix_k(double eps) {
    InstanceModel inst = deterministic_instance({{0, 0.5, 1.0}, {1, 1.0, eps}});
    inst.meta.y_min = eps;
    inst.meta.notes = "AppendixK";
    return inst;
}

InstanceModel fixture_two_uniform_complement() {
    InstanceModel inst;
    inst.deterministic = false;
    inst.sampler = SamplerKind::TwoUniformComplement;
    inst.meta.K = 2;
    inst.meta.L1 = 1.0;
    inst.meta.notes = "TwoUniformComplement";
    return inst;
}

InstanceModel fixture_two_uniform_complement_truncated(double y_min) {
    if (!(y_min > 0.0 && y_min < 1.0))
        throw std::invalid_argument("y_min must lie in (0,1)");
    InstanceModel inst;
    inst.deterministic = false;
    inst.sampler = SamplerKind::TwoUniformComplementTruncated;
    inst.sampler_param = y_min;
    inst.meta.K = 2;
    inst.meta.L1 = 1.0;
    inst.meta.y_min = y_min;
    inst.meta.notes = "TwoUniformComplementTruncated";
    return inst;
}

std::vector<std::string> fixture_names() {
    return {"P1", "P2", "AppendixK", "TwoUniformComplement",
            "TwoUniformComplementTruncated"};
}

namespace {

std::vector<double> parse_args(const std::string& ref, std::string& base) {
    const auto open = ref.find('(');
    if (open == std::string::npos) {
        base = ref;
        return {};
    }
    base = ref.substr(0, open);
    const auto close = ref.rfind(')');
    if (close == std::string::npos || close < open)
        throw std::invalid_argument("malformed fixture reference: " + ref);
    std::vector<double> args;
    std::string body = ref.substr(open + 1, close - open - 1);
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) args.push_back(std::stod(tok));
    return args;
}

}  // namespace

InstanceModel fixture_by_name(const std::string& name) {
    std::string base;
    const std::vector<double> args = parse_args(name, base);
    const auto arg = [&](std::size_t i, double dflt) {
        return i < args.size() ? args[i] : dflt;
    };
    if (base == "P1") return fixture_p1(arg(0, 0.1), arg(1, 1e-14));
    if (base == "P2") return fixture_p2(arg(0, 0.1));
    if (base == "AppendixK") return fixture_appendix_k(arg(0, 0.1));
    if (base == "TwoUniformComplement") return fixture_two_uniform_complement();
    if (base == "TwoUniformComplementTruncated")
        return fixture_two_uniform_complement_truncated(arg(0, 0.05));
    throw std::invalid_argument("unknown fixture: " + name);
}

}  // namespace delchoice
