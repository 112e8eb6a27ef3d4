#include "delchoice/engine.hpp"

#include <cmath>
#include <future>
#include <sstream>

#include "delchoice/rppm.hpp"

namespace delchoice {

std::uint64_t split_seed(std::uint64_t root, std::uint64_t stream) {
    std::uint64_t z = root + stream * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

namespace {

double param(const nlohmann::json& p, const std::string& key, double dflt) {
    return p.contains(key) ? p.at(key).get<double>() : dflt;
}

}  // namespace

std::unique_ptr<Mechanism> make_mechanism(const std::string& name,
                                          const nlohmann::json& params, int T) {
    if (name == "iterative_search") return std::make_unique<IterativeSearch>();
    if (name == "delayed_iterative_search")
        return std::make_unique<DelayedIterativeSearch>(param(params, "gamma", 0.9),
                                                        param(params, "y_min", 0.05));
    if (name == "delayed_binary_search")
        return std::make_unique<DelayedBinarySearch>(
            param(params, "gamma", 0.9), param(params, "y_min", 0.05),
            static_cast<int>(param(params, "T", T)));
    if (name == "delayed_progressive_search") {
        const std::string sched =
            params.contains("epsilon_schedule") ? params.at("epsilon_schedule") : "fixed";
        if (sched != "fixed" && sched != "adaptive")
            throw std::invalid_argument("epsilon_schedule must be fixed or adaptive");
        return std::make_unique<DelayedProgressiveSearch>(
            param(params, "gamma", 0.9), param(params, "L1", 1.0),
            param(params, "L2", 1.2), param(params, "d", 0.01),
            param(params, "beta", 4.0),
            sched == "fixed" ? EpsSchedule::Fixed : EpsSchedule::Adaptive);
    }
    if (name == "ucb_threshold")
        return std::make_unique<UcbThreshold>(static_cast<int>(param(params, "T", T)));
    if (name == "successive_elimination_delayed")
        return std::make_unique<SuccessiveEliminationDelayed>(
            static_cast<int>(param(params, "Q", 10)),
            static_cast<int>(param(params, "D", 0)), param(params, "delta", 0.0),
            static_cast<int>(param(params, "T", T)));
    if (name == "stochastic_strategic")
        return stochastic_strategic_mechanism(
            param(params, "gamma", 0.9), param(params, "L1", 1.0),
            param(params, "y_min", 0.05), static_cast<int>(param(params, "T", T)));
    if (name == "rppm_adapter")
        return std::make_unique<DelegationAdapter>(std::make_unique<KlFixedValuePricer>(
            static_cast<int>(param(params, "T", T))));
    throw std::invalid_argument("unknown mechanism: " + name);
}

std::unique_ptr<Agent> make_agent(const std::string& name, const nlohmann::json& params) {
    if (name == "myopic") return std::make_unique<MyopicAgent>();
    if (name == "adversarial_eps")
        return std::make_unique<AdversarialEpsAgent>(param(params, "eps", 0.0));
    if (name == "p1_hider")
        return std::make_unique<HidingAgent>(HidingFixture::P1Hider,
                                             static_cast<int>(param(params, "K_budget", 0)),
                                             param(params, "gamma", 0.9));
    if (name == "non_discounting_hider")
        return std::make_unique<HidingAgent>(HidingFixture::NonDiscountingHider, 0,
                                             param(params, "gamma", 0.9));
    throw std::invalid_argument("unknown agent: " + name);
}

std::vector<std::string> mechanism_names() {
    return {"iterative_search", "delayed_iterative_search", "delayed_binary_search",
            "delayed_progressive_search", "ucb_threshold",
            "successive_elimination_delayed", "stochastic_strategic", "rppm_adapter"};
}

std::vector<std::string> agent_names() {
    return {"myopic", "adversarial_eps", "p1_hider", "non_discounting_hider"};
}

RunResult run_loop(const InstanceModel& instance, Mechanism& mechanism, Agent& agent,
                   int T, std::uint64_t seed, double opt_per_round, double gamma) {
    if (T < 1) throw std::invalid_argument("T must be at least 1");
    std::mt19937_64 realization_rng(split_seed(seed, 1));

    RunResult result;
    result.opt_per_round = opt_per_round;
    result.history.records.reserve(T);
    result.cum_regret.reserve(T);
    double cum_utility = 0.0;
    double gamma_pow = 1.0;
    for (int t = 1; t <= T; ++t) {
        const Realization realization = instance.realize(t, realization_rng);
        const EligibleSet eligible = mechanism.announce(t);
        AgentObservation obs{&realization, &eligible, t};
        const Proposal proposal = agent.act(obs);
        const Outcome out = round_outcome(eligible, realization, proposal);
        RoundRecord rec{t,
                        eligible,
                        proposal,
                        out.accepted,
                        out.principal_utility,
                        out.agent_utility_raw,
                        gamma_pow * out.agent_utility_raw,
                        proposal.is_null() ? 0.0 : realization.solutions[*proposal.index].x,
                        proposal.is_null() ? 0.0 : realization.solutions[*proposal.index].y};
        mechanism.feedback(rec);
        cum_utility += rec.principal_utility;
        result.agent_discounted_total += rec.agent_utility_discounted;
        result.cum_regret.push_back(t * opt_per_round - cum_utility);
        result.history.records.push_back(std::move(rec));
        gamma_pow *= gamma;
    }
    return result;
}

double benchmark_opt(const InstanceModel& instance, int grid_size, int n_samples,
                     std::uint64_t seed) {
    if (instance.deterministic)
        return instance.solutions.empty() ? 0.0 : instance.max_x();
    if (instance.has_analytic_curve()) return instance.analytic_opt();
    return opt_threshold(instance, grid_size, n_samples, seed).opt_per_round;
}

RunResult run_simulation(const SimulationConfig& config) {
    auto mechanism = make_mechanism(config.mechanism, config.mechanism_params, config.T);
    auto agent = make_agent(config.agent, config.agent_params);
    const double opt = config.opt_per_round >= 0.0 ? config.opt_per_round
                                                   : benchmark_opt(config.instance);
    const double gamma = config.agent_params.contains("gamma")
                             ? config.agent_params.at("gamma").get<double>()
                             : 1.0;
    return run_loop(config.instance, *mechanism, *agent, config.T, config.seed, opt, gamma);
}

ReplicateResult replicate(const SimulationConfig& base,
                          const std::vector<std::uint64_t>& seeds, int parallelism) {
    if (seeds.empty()) throw std::invalid_argument("seed list must be non-empty");
    const double opt =
        base.opt_per_round >= 0.0 ? base.opt_per_round : benchmark_opt(base.instance);

    std::vector<RunResult> runs(seeds.size());
    const auto work = [&](std::size_t i) {
        SimulationConfig cfg = base;
        cfg.seed = seeds[i];
        cfg.opt_per_round = opt;
        runs[i] = run_simulation(cfg);
    };
    if (parallelism <= 1) {
        for (std::size_t i = 0; i < seeds.size(); ++i) work(i);
    } else {
        // aggregation below iterates in seed order, so scheduling cannot
        // change the result
        std::vector<std::future<void>> futures;
        for (std::size_t i = 0; i < seeds.size(); ++i)
            futures.push_back(std::async(std::launch::async, work, i));
        for (auto& f : futures) f.get();
    }

    ReplicateResult agg;
    agg.seeds = seeds;
    agg.opt_per_round = opt;
    agg.mean_regret_trace.assign(base.T, 0.0);
    for (const auto& run : runs) {
        agg.final_regret.push_back(run.cum_regret.back());
        for (int t = 0; t < base.T; ++t) agg.mean_regret_trace[t] += run.cum_regret[t];
    }
    for (double& v : agg.mean_regret_trace) v /= static_cast<double>(seeds.size());
    double sum = 0.0, sumsq = 0.0;
    for (double v : agg.final_regret) {
        sum += v;
        sumsq += v * v;
    }
    agg.mean_final_regret = sum / seeds.size();
    const double var =
        std::max(0.0, sumsq / seeds.size() - agg.mean_final_regret * agg.mean_final_regret);
    agg.stddev_final_regret = std::sqrt(var);
    return agg;
}

std::string run_result_csv(const RunResult& result) {
    std::ostringstream os;
    os.precision(17);
    os << "t,tau_or_set_kind,proposal_x,proposal_y,accepted,principal_utility,cum_regret\n";
    for (std::size_t i = 0; i < result.history.records.size(); ++i) {
        const RoundRecord& rec = result.history.records[i];
        os << rec.round << ',' << describe(rec.eligible) << ',' << rec.proposal_x << ','
           << rec.proposal_y << ',' << (rec.accepted ? 1 : 0) << ','
           << rec.principal_utility << ',' << result.cum_regret[i] << '\n';
    }
    return os.str();
}

}  // namespace delchoice
