#include "delchoice/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>
#include <stdexcept>

#include "delchoice/agents.hpp"
#include "delchoice/benchmark.hpp"
#include "delchoice/engine.hpp"
#include "delchoice/experiment.hpp"
#include "delchoice/instances.hpp"
#include "delchoice/mechanisms.hpp"
#include "delchoice/rppm.hpp"

namespace delchoice::verify {

namespace {

namespace fs = std::filesystem;

struct Check {
    bool ok = true;
    std::ostringstream out;

    void require(bool cond, const std::string& msg) {
        if (!cond) {
            ok = false;
            out << "FAILED[" << msg << "] ";
        }
    }
    void note(const std::string& msg) { out << msg << " "; }
};

std::string num(double v, int prec = 6) {
    std::ostringstream os;
    os << std::setprecision(prec) << v;
    return os.str();
}

// run_loop without retaining the full history; optionally collects the
// per-round quantities a criterion compares.
struct LightRun {
    double regret = 0.0;
    double total_utility = 0.0;
    std::vector<char> accepted;
    std::vector<double> principal;
    std::vector<EligibleSet> announced;
    std::vector<RoundRecord> records;
};

struct Collect {
    bool patterns = false;
    bool announcements = false;
    bool records = false;
};

LightRun light_loop(const InstanceModel& instance, Mechanism& mechanism, Agent& agent,
                    int T, std::uint64_t seed, double opt_per_round,
                    Collect collect = {}) {
    std::mt19937_64 realization_rng(split_seed(seed, 1));
    LightRun run;
    if (collect.patterns) {
        run.accepted.reserve(T);
        run.principal.reserve(T);
    }
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
                        out.agent_utility_raw,
                        proposal.is_null() ? 0.0 : realization.solutions[*proposal.index].x,
                        proposal.is_null() ? 0.0 : realization.solutions[*proposal.index].y};
        mechanism.feedback(rec);
        run.total_utility += out.principal_utility;
        if (collect.patterns) {
            run.accepted.push_back(out.accepted ? 1 : 0);
            run.principal.push_back(out.principal_utility);
        }
        if (collect.announcements) run.announced.push_back(eligible);
        if (collect.records) run.records.push_back(rec);
    }
    run.regret = T * opt_per_round - run.total_utility;
    return run;
}

InstanceModel random_instance(int K, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<Solution> sols;
    sols.reserve(K);
    for (int i = 0; i < K; ++i) sols.emplace_back(i, u(rng), u(rng));
    return deterministic_instance(std::move(sols));
}

double mean(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
}

std::string read_bytes(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + p.string());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string drop_last_column(const std::string& csv) {
    std::istringstream in(csv);
    std::ostringstream out;
    std::string line;
    while (std::getline(in, line)) {
        auto pos = line.rfind(',');
        out << (pos == std::string::npos ? line : line.substr(0, pos)) << '\n';
    }
    return out.str();
}

// Shared state between criteria that reference each other's measurements.
struct Context {
    double ucb_ratio = -1.0;  // regret / sqrt(T ln T) reference from criterion 9
};

// --- criterion bodies -----------------------------------------------------

void c01_iterative_cap(Suite suite, Context&, Check& c) {
    const int T = suite == Suite::Full ? 10000 : 2000;
    std::mt19937_64 rng(12345);
    double worst_margin = -1e300;
    for (int K = 1; K <= 50; ++K) {
        InstanceModel inst = random_instance(K, rng);
        IterativeSearch mech;
        MyopicAgent agent;
        LightRun run = light_loop(inst, mech, agent, T, 1000 + K, inst.max_x());
        worst_margin = std::max(worst_margin, run.regret - (K + 1));
        c.require(run.regret <= K + 1 + 1e-9,
                  "K=" + std::to_string(K) + " regret " + num(run.regret));
    }
    c.note("worst regret-(K+1) margin " + num(worst_margin) + " over 50 instances, T=" +
           std::to_string(T));
}

void c02_pricer_rate(Suite suite, Context&, Check& c) {
    const std::vector<int> horizons = suite == Suite::Full
                                          ? std::vector<int>{1 << 10, 1 << 16, 1 << 22}
                                          : std::vector<int>{1 << 10, 1 << 13, 1 << 16};
    for (double v : {0.2, 0.5, 0.73, 0.95}) {
        InstanceModel inst = deterministic_instance({Solution(0, v, 0.8)});
        double lo = 1e300, hi = -1e300;
        for (int T : horizons) {
            DelegationAdapter mech(std::make_unique<KlFixedValuePricer>(T));
            MyopicAgent agent;
            LightRun run = light_loop(inst, mech, agent, T, 7, v);
            const double ratio = run.regret / std::log2(std::log2(static_cast<double>(T)));
            lo = std::min(lo, ratio);
            hi = std::max(hi, ratio);
        }
        c.require(hi <= 2.0 * lo + 1e-12, "v=" + num(v) + " regret/loglog spread " +
                                              num(hi / lo) + " exceeds 2");
        c.note("v=" + num(v) + " spread " + num(hi / lo, 4));
    }
}

void c03_adapter_coupling(Suite suite, Context&, Check& c) {
    const int T = 4096;
    const int n = suite == Suite::Full ? 20 : 8;
    std::mt19937_64 rng(777);
    for (int i = 0; i < n; ++i) {
        InstanceModel inst = random_instance(2 + i % 7, rng);
        const double v = inst.max_x();
        DelegationAdapter mech(std::make_unique<KlFixedValuePricer>(T));
        MyopicAgent agent;
        LightRun run =
            light_loop(inst, mech, agent, T, 50 + i, v, Collect{.patterns = true});
        KlFixedValuePricer pricer(T);
        RppmRun rppm = run_rppm(pricer, v, T);
        bool patterns_match = true, utility_dominates = true;
        for (int t = 0; t < T; ++t) {
            if ((run.accepted[t] != 0) != (rppm.sales[t] != 0)) patterns_match = false;
            const double revenue_t = rppm.sales[t] ? rppm.prices[t] : 0.0;
            if (run.principal[t] < revenue_t) utility_dominates = false;
        }
        c.require(patterns_match, "instance " + std::to_string(i) + " sale pattern");
        c.require(utility_dominates, "instance " + std::to_string(i) + " revenue bound");
    }
    c.note(std::to_string(n) + " instances, T=" + std::to_string(T) + ", exact");
}

void c04_delayed_iterative(Suite suite, Context&, Check& c) {
    const double gamma = 0.9, y_min = 0.05;
    double worst_frac = 0.0;
    for (int K = 1; K <= 10; K += suite == Suite::Full ? 1 : 3) {
        InstanceModel chain =
            generate_deterministic_chain(K, 0.02, 0.9, 1.1, y_min, 100 + K);
        DelayedIterativeSearch mech(gamma, y_min);
        AdversarialEpsAgent agent(y_min / 2.0);
        const int D = mech.delay();
        const int T = std::max(2000, (K + 1) * (D + 1) + 50);
        LightRun run = light_loop(chain, mech, agent, T, 60 + K, chain.max_x());
        const double bound = 2.0 * (K + 1) * (D + 1);
        worst_frac = std::max(worst_frac, run.regret / bound);
        c.require(mech.committed(), "K=" + std::to_string(K) + " did not commit");
        c.require(run.regret <= bound + 1e-9,
                  "K=" + std::to_string(K) + " regret " + num(run.regret) + " > " +
                      num(bound));
    }
    c.note("worst regret/bound fraction " + num(worst_frac, 4));

    // Lookahead against a scaled-down delay: the unrestricted optimum must
    // stay within the per-round eps envelope of the eps-best-response optimum.
    InstanceModel chain = generate_deterministic_chain(3, 0.05, 0.9, 1.1, 0.5, 777);
    DelayedIterativeSearch mech(0.5, 0.5);
    const int horizon = 8;
    const double tg = t_gamma(0.5);
    const double eps_delay = tg * std::exp(-mech.delay() / tg);
    LookaheadResult unrestricted = lookahead_oracle(chain, mech, horizon, 0.5);
    LookaheadResult restricted =
        lookahead_oracle(chain, mech, horizon, 0.5, 10'000'000, eps_delay);
    double envelope = restricted.value;
    double pow = 1.0;
    for (int t = 0; t < horizon; ++t, pow *= 0.5) envelope += eps_delay * pow;
    c.require(unrestricted.value <= envelope + 1e-9,
              "oracle " + num(unrestricted.value) + " beats envelope " + num(envelope));
    c.note("oracle " + num(unrestricted.value, 8) + " vs eps-restricted " +
           num(restricted.value, 8) + " (eps " + num(eps_delay, 4) + ")");
}

void c05_binary_search(Suite suite, Context&, Check& c) {
    const int T = suite == Suite::Full ? 100000 : 20000;
    const std::vector<int> ks =
        suite == Suite::Full ? std::vector<int>{4, 7, 10} : std::vector<int>{5};
    for (int K : ks) {
        InstanceModel chain = generate_deterministic_chain(K, 0.02, 0.9, 1.1, 0.05, 200 + K);
        DelayedBinarySearch mech(0.9, 0.05, T);
        AdversarialEpsAgent agent(0.025);
        LightRun run = light_loop(chain, mech, agent, T, 80 + K, chain.max_x());
        const double max_x = chain.max_x();
        const double bound = 4.0 * (mech.delay() + std::log2(static_cast<double>(T))) + 1.0;
        c.require(mech.committed(), "K=" + std::to_string(K) + " did not commit");
        c.require(mech.lower() <= max_x + 1e-12 && mech.lower() >= max_x - 1.0 / T - 1e-12,
                  "K=" + std::to_string(K) + " final l " + num(mech.lower(), 10) +
                      " not within 1/T of " + num(max_x, 10));
        c.require(run.regret <= bound + 1e-9, "K=" + std::to_string(K) + " regret " +
                                                  num(run.regret) + " > " + num(bound));
        c.note("K=" + std::to_string(K) + " regret " + num(run.regret, 5) + "/" +
               num(bound, 5));
    }
}

void c06_progressive_search(Suite suite, Context&, Check& c) {
    const int T = suite == Suite::Full ? 100000 : 20000;
    struct Case {
        double d;
        int K;
    };
    const std::vector<Case> cases = suite == Suite::Full
                                        ? std::vector<Case>{{0.01, 50}, {0.005, 100}}
                                        : std::vector<Case>{{0.02, 25}};
    for (const Case& cs : cases) {
        InstanceModel chain =
            generate_deterministic_chain(cs.K, cs.d, 1.0, 1.2, 0.05, 300 + cs.K);
        c.require(check_d_dense(chain, cs.d).ok, "chain not d-dense");
        c.require(check_lipschitz(chain, 1.0, 1.2).ok, "chain not Lipschitz");
        DelayedProgressiveSearch mech(0.9, 1.0, 1.2, cs.d);
        const double eps = mech.alpha() * 4.0 * cs.d;
        AdversarialEpsAgent agent(eps);
        LightRun run = light_loop(chain, mech, agent, T, 90 + cs.K, chain.max_x());
        const int D = delay_rounds(0.9, eps);
        const double bound = 8.0 * (D + std::log(1.0 / (4.0 * cs.d)) + 4.0 * cs.d * T);
        c.require(mech.committed(), "d=" + num(cs.d) + " did not commit");
        c.require(mech.lower() >= chain.max_x() - 4.0 * cs.d - 1e-9,
                  "d=" + num(cs.d) + " final l " + num(mech.lower(), 8) + " below max X - 4d");
        c.require(run.regret <= bound + 1e-9,
                  "d=" + num(cs.d) + " regret " + num(run.regret) + " > " + num(bound));
        c.note("d=" + num(cs.d) + " regret " + num(run.regret, 5) + "/" + num(bound, 5));
    }
}

void c07_hiding_transcripts(Suite suite, Context&, Check& c) {
    for (int k = 0; k <= 280; ++k)
        c.require(!should_reveal(k, 0.9, 1e-14), "should_reveal true at K_budget " +
                                                     std::to_string(k));
    c.require(should_reveal(300, 0.9, 1e-14), "should_reveal false at K_budget 300");

    const int T = suite == Suite::Full ? 400 : 200;
    InstanceModel p1 = fixture_p1(0.1, 1e-14);
    InstanceModel p2 = fixture_p2(0.1);
    std::vector<std::unique_ptr<Mechanism>> protos;
    protos.push_back(std::make_unique<IterativeSearch>());
    protos.push_back(std::make_unique<DelayedIterativeSearch>(0.9, 0.05));
    protos.push_back(std::make_unique<DelayedBinarySearch>(0.9, 0.05, T));
    protos.push_back(std::make_unique<DelayedProgressiveSearch>(0.9, 1.0, 1.2, 0.1));
    protos.push_back(std::make_unique<UcbThreshold>(T));
    protos.push_back(stochastic_strategic_mechanism(0.9, 1.0, 0.05, T));
    protos.push_back(
        std::make_unique<DelegationAdapter>(std::make_unique<KlFixedValuePricer>(T)));
    protos.push_back(std::make_unique<DelayWrapper>(std::make_unique<IterativeSearch>(), 5));
    for (const auto& proto : protos) {
        auto mech_hidden = proto->clone();
        auto mech_plain = proto->clone();
        HidingAgent hider(HidingFixture::P1Hider, 280, 0.9);
        MyopicAgent myopic;
        LightRun a = light_loop(p1, *mech_hidden, hider, T, 1, p1.max_x(),
                                Collect{.announcements = true});
        LightRun b = light_loop(p2, *mech_plain, myopic, T, 1, p2.max_x(),
                                Collect{.announcements = true});
        bool equal = a.announced == b.announced;
        c.require(equal, proto->name() + " transcripts diverge");
        c.require(!hider.revealed(), proto->name() + " agent revealed");
    }
    c.note(std::to_string(protos.size()) + " mechanisms, T=" + std::to_string(T) +
           ", exact transcript match");
}

void c08_pretend_single(Suite, Context&, Check& c) {
    InstanceModel inst = fixture_appendix_k(0.1);
    IterativeSearch proto;
    const int horizon = 10;
    const double gamma = 0.999;
    MyopicAgent truthful;
    HidingAgent pretend(HidingFixture::NonDiscountingHider, 0, gamma);
    const double v_truth = scripted_policy_value(inst, proto, truthful, horizon, gamma);
    const double v_pretend = scripted_policy_value(inst, proto, pretend, horizon, gamma);
    LookaheadResult oracle = lookahead_oracle(inst, proto, horizon, gamma);
    c.require(v_pretend >= v_truth - 1e-12, "pretend-single " + num(v_pretend, 8) +
                                                " < truthful " + num(v_truth, 8));
    c.require(oracle.value >= v_pretend - 1e-9, "oracle below pretend-single value");
    c.require(oracle.value >= v_truth - 1e-9, "oracle below truthful value");
    c.note("pretend " + num(v_pretend, 8) + ", truthful " + num(v_truth, 8) + ", oracle " +
           num(oracle.value, 8));
}

void c09_ucb_rate(Suite suite, Context& ctx, Check& c) {
    InstanceModel inst = fixture_two_uniform_complement();
    const double opt = inst.analytic_opt();
    const double mc = f_tau(inst, inst.analytic_tau_star(), true, 1'000'000, 424242);
    c.require(std::abs(mc - opt) <= 0.005, "Monte Carlo f(tau*) " + num(mc, 6) +
                                               " off analytic " + num(opt, 6));

    const int n_seeds = suite == Suite::Full ? 20 : 6;
    const int T1 = suite == Suite::Full ? 10000 : 4000;
    const int T2 = 4 * T1;
    const int T3 = suite == Suite::Full ? 100000 : 40000;
    auto mean_regret = [&](int T) {
        std::vector<double> regrets;
        for (int s = 0; s < n_seeds; ++s) {
            UcbThreshold mech(T);
            MyopicAgent agent;
            regrets.push_back(
                light_loop(inst, mech, agent, T, split_seed(9000, s), opt).regret);
        }
        return mean(regrets);
    };
    const double r1 = mean_regret(T1) / std::sqrt(T1 * std::log(static_cast<double>(T1)));
    const double r2 = mean_regret(T2) / std::sqrt(T2 * std::log(static_cast<double>(T2)));
    const double spread = std::max(r1, r2) / std::min(r1, r2);
    c.require(spread <= 1.5,
              "ratio spread " + num(spread, 4) + " (r1 " + num(r1, 4) + ", r2 " + num(r2, 4) + ")");
    const double regret3 = mean_regret(T3);
    const double terminal = opt - regret3 / T3;
    c.require(terminal >= 0.522, "terminal per-round utility " + num(terminal, 5));
    ctx.ucb_ratio = std::max(r1, r2);
    c.note("ratios " + num(r1, 4) + "/" + num(r2, 4) + ", terminal utility " +
           num(terminal, 5) + " (analytic opt " + num(opt, 6) + ")");
}

void c10_discretization_rate(Suite, Context&, Check& c) {
    InstanceModel inst = fixture_two_uniform_complement();
    const double f_star = inst.analytic_opt();
    auto err = [&](int Q) {
        double best = -1e300;
        for (int i = 1; i <= Q; ++i)
            best = std::max(best, inst.analytic_f(static_cast<double>(i) / Q));
        return f_star - best;
    };
    double prev = err(8);
    std::ostringstream seen;
    for (int Q : {16, 32, 64}) {
        const double cur = err(Q);
        const double ratio = prev / cur;
        seen << num(ratio, 4) << " ";
        c.require(ratio >= 3.0 && ratio <= 5.0,
                  "error ratio " + num(ratio, 4) + " at Q=" + std::to_string(Q) +
                      " outside [3,5]");
        prev = cur;
    }
    c.note("per-doubling error ratios: " + seen.str());
}

void c11_strategic_bandit(Suite suite, Context& ctx, Check& c) {
    InstanceModel inst = fixture_two_uniform_complement_truncated(0.05);
    const int T = suite == Suite::Full ? 100000 : 20000;
    const int n_seeds = suite == Suite::Full ? 20 : 5;
    const double eps = std::min(1.0 / T, 0.05);
    const double opt = inst.analytic_opt();

    auto probe = stochastic_strategic_mechanism(0.9, 1.0, 0.05, T);
    const int Q = probe->num_arms();
    int opt_arm = 0;
    double best = -1e300;
    for (int i = 0; i < Q; ++i) {
        const double f = inst.analytic_f(probe->arm_threshold(i));
        if (f > best) {
            best = f;
            opt_arm = i;
        }
    }

    int survived = 0;
    std::vector<double> regrets;
    for (int s = 0; s < n_seeds; ++s) {
        auto mech = stochastic_strategic_mechanism(0.9, 1.0, 0.05, T);
        AdversarialEpsAgent agent(eps);
        regrets.push_back(light_loop(inst, *mech, agent, T, split_seed(11000, s), opt).regret);
        if (mech->is_active(opt_arm)) ++survived;
    }
    c.require(survived == n_seeds, "optimal arm eliminated in " +
                                       std::to_string(n_seeds - survived) + "/" +
                                       std::to_string(n_seeds) + " runs");
    const double ratio =
        mean(regrets) / std::sqrt(T * std::log(static_cast<double>(T)));
    c.require(ctx.ucb_ratio > 0.0, "reference UCB ratio unavailable");
    if (ctx.ucb_ratio > 0.0)
        c.require(ratio <= 3.0 * ctx.ucb_ratio,
                  "regret ratio " + num(ratio, 4) + " > 3 x " + num(ctx.ucb_ratio, 4));
    c.note("optimal arm " + num(probe->arm_threshold(opt_arm), 3) + " survived " +
           std::to_string(survived) + "/" + std::to_string(n_seeds) + ", ratio " +
           num(ratio, 4) + " vs reference " + num(ctx.ucb_ratio, 4));
}

void c12_delay_metamorphic(Suite, Context&, Check& c) {
    const int T = 60, D = 5;
    InstanceModel inst = fixture_two_uniform_complement();
    std::vector<std::unique_ptr<Mechanism>> inners;
    inners.push_back(std::make_unique<IterativeSearch>());
    inners.push_back(std::make_unique<DelayedBinarySearch>(0.9, 0.05, T));
    inners.push_back(std::make_unique<UcbThreshold>(T));
    inners.push_back(stochastic_strategic_mechanism(0.9, 1.0, 0.05, T));
    inners.push_back(
        std::make_unique<DelegationAdapter>(std::make_unique<KlFixedValuePricer>(T)));

    std::mt19937_64 rng(5150);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const int per_wrapper = 1000 / static_cast<int>(inners.size());
    int checked = 0;
    for (auto& inner : inners) {
        DelayWrapper pristine(inner->clone(), D);
        std::string label = pristine.name();
        auto driver = pristine.clone();
        MyopicAgent agent;
        LightRun run =
            light_loop(inst, *driver, agent, T, 3, 0.0, Collect{.records = true});

        auto announce_at = [&](const std::vector<RoundRecord>& records, int t) {
            auto m = pristine.clone();
            EligibleSet e;
            for (int r = 1; r <= t; ++r) {
                e = m->announce(r);
                if (r < t) m->feedback(records[r - 1]);
            }
            return e;
        };

        for (int i = 0; i < per_wrapper; ++i) {
            const int t = 2 + static_cast<int>(rng() % (T - 1));
            const int lo = std::max(1, t - D + 1);
            const int r = lo + static_cast<int>(rng() % (t - lo + 1));
            std::vector<RoundRecord> mutated = run.records;
            RoundRecord& m = mutated[r - 1];
            m.accepted = !m.accepted;
            m.principal_utility = u(rng);
            m.agent_utility_raw = u(rng);
            m.proposal_x = u(rng);
            m.proposal_y = u(rng);
            const bool same = announce_at(mutated, t) == announce_at(run.records, t);
            if (!same) {
                c.require(false, label + " announcement changed (t=" + std::to_string(t) +
                                     ", mutated round " + std::to_string(r) + ")");
                break;
            }
            ++checked;
        }
    }
    c.note(std::to_string(checked) + " mutations across " +
           std::to_string(inners.size()) + " wrapped mechanisms, exact");
}

void c13_determinism(Suite, Context&, Check& c) {
    const std::vector<std::string> fixtures = {"P1(0.1,1e-14)", "P2(0.1)", "AppendixK(0.1)",
                                               "TwoUniformComplement",
                                               "TwoUniformComplementTruncated(0.05)"};
    const std::vector<std::string> agents = {"myopic", "adversarial_eps"};
    const fs::path base =
        fs::temp_directory_path() /
        ("delchoice-verify-determinism-" + std::to_string(std::random_device{}()));
    fs::remove_all(base);
    int combos = 0;
    for (const std::string& f : fixtures)
        for (const std::string& m : mechanism_names())
            for (const std::string& a : agents) {
                ExperimentSpec spec;
                spec.name = "combo" + std::to_string(combos);
                spec.instance = fixture_by_name(f);
                spec.mechanism = m;
                spec.mechanism_params = nlohmann::json::object();
                spec.agent = a;
                spec.agent_params = a == "adversarial_eps"
                                        ? nlohmann::json{{"eps", 0.01}}
                                        : nlohmann::json::object();
                spec.horizons = {256};
                spec.seeds = {11, 12};
                const fs::path dir = base / spec.name;
                ExperimentArtifacts one = run_experiment(spec, dir / "a", 1);
                ExperimentArtifacts two = run_experiment(spec, dir / "b", 2);
                bool same = true;
                for (std::size_t i = 0; i < one.trace_files.size(); ++i)
                    if (read_bytes(one.trace_files[i]) != read_bytes(two.trace_files[i]))
                        same = false;
                if (read_bytes(one.plot_file) != read_bytes(two.plot_file)) same = false;
                // runtime column excluded: wall-clock time is not reproducible
                if (drop_last_column(read_bytes(one.summary_file)) !=
                    drop_last_column(read_bytes(two.summary_file)))
                    same = false;
                c.require(same, f + "/" + m + "/" + a + " output differs");
                ++combos;
            }
    fs::remove_all(base);
    c.note(std::to_string(combos) + " fixture/mechanism/agent combinations, "
           "serial vs 2-job runs byte-identical");
}

using Body = void (*)(Suite, Context&, Check&);

struct Entry {
    int id;
    const char* name;
    Body body;
};

constexpr Entry kCriteria[] = {
    {1, "iterative-search-regret-cap", c01_iterative_cap},
    {2, "pricer-loglog-rate", c02_pricer_rate},
    {3, "adapter-pricing-coupling", c03_adapter_coupling},
    {4, "delayed-iterative-regret-and-lookahead", c04_delayed_iterative},
    {5, "binary-search-commit-and-regret", c05_binary_search},
    {6, "progressive-search-regret", c06_progressive_search},
    {7, "hiding-transcript-equality", c07_hiding_transcripts},
    {8, "pretend-single-solution-value", c08_pretend_single},
    {9, "ucb-rate-and-terminal-utility", c09_ucb_rate},
    {10, "grid-discretization-rate", c10_discretization_rate},
    {11, "strategic-bandit-composition", c11_strategic_bandit},
    {12, "delay-wrapper-metamorphic", c12_delay_metamorphic},
    {13, "run-determinism", c13_determinism},
};

}  // namespace

Suite suite_from_name(const std::string& name) {
    if (name == "fast") return Suite::Fast;
    if (name == "full") return Suite::Full;
    throw std::invalid_argument("unknown suite: " + name + " (expected fast or full)");
}

std::vector<CriterionResult> run_acceptance(
    Suite suite, const std::function<void(const CriterionResult&)>& on_result) {
    std::vector<CriterionResult> results;
    Context ctx;
    for (const Entry& entry : kCriteria) {
        CriterionResult r;
        r.id = entry.id;
        r.name = entry.name;
        const auto start = std::chrono::steady_clock::now();
        Check check;
        try {
            entry.body(suite, ctx, check);
        } catch (const std::exception& e) {
            check.ok = false;
            check.out << "exception: " << e.what();
        }
        r.passed = check.ok;
        r.detail = check.out.str();
        r.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (on_result) on_result(r);
        results.push_back(std::move(r));
    }
    return results;
}

}  // namespace delchoice::verify
