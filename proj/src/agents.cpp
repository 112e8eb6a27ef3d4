#include "delchoice/agents.hpp"

#include <cmath>

#include "delchoice/mechanisms.hpp"

namespace delchoice {

namespace {

// Eventual utilities of a proposal per the single-proposal semantics: an
// ineligible or null proposal pays (0, 0).
struct Eventual {
    double principal = 0.0;
    double agent = 0.0;
};

Eventual eventual_utility(const Realization& r, const EligibleSet& e, const Proposal& p) {
    if (p.is_null()) return {};
    const Solution& sol = r.solutions[*p.index];
    if (!is_eligible(e, sol)) return {};
    return {sol.x, sol.y};
}

}  // namespace

Proposal best_response(const Realization& realization, const EligibleSet& eligible) {
    Proposal best = Proposal::null();
    double best_y = 0.0, best_x = 0.0;  // Null baseline
    for (std::size_t i = 0; i < realization.solutions.size(); ++i) {
        const Solution& s = realization.solutions[i];
        if (!is_eligible(eligible, s)) continue;
        if (s.y > best_y || (s.y == best_y && s.x > best_x)) {
            best = Proposal::of(i);
            best_y = s.y;
            best_x = s.x;
        }
    }
    return best;
}

std::vector<Proposal> eps_best_response_set(const Realization& realization,
                                            const EligibleSet& eligible, double eps) {
    if (eps < 0.0) throw std::invalid_argument("eps must be nonnegative");
    double m = 0.0;  // Null is always feasible with utility 0
    for (const Solution& s : realization.solutions)
        if (is_eligible(eligible, s)) m = std::max(m, s.y);

    std::vector<Proposal> out;
    if (m <= eps) out.push_back(Proposal::null());
    for (std::size_t i = 0; i < realization.solutions.size(); ++i) {
        const Solution& s = realization.solutions[i];
        if (is_eligible(eligible, s) && s.y >= m - eps) out.push_back(Proposal::of(i));
    }
    return out;
}

Proposal adversarial_eps_response(const Realization& realization,
                                  const EligibleSet& eligible, double eps) {
    const auto candidates = eps_best_response_set(realization, eligible, eps);
    Proposal pick = candidates.front();
    Eventual pick_u = eventual_utility(realization, eligible, pick);
    for (std::size_t k = 1; k < candidates.size(); ++k) {
        const Eventual u = eventual_utility(realization, eligible, candidates[k]);
        if (u.principal < pick_u.principal ||
            (u.principal == pick_u.principal && u.agent < pick_u.agent)) {
            pick = candidates[k];
            pick_u = u;
        }
    }
    return pick;
}

bool should_reveal(int k_budget, double gamma, double y) {
    if (!(gamma > 0.0 && gamma < 1.0) || y < 0.0 || k_budget < 0)
        throw std::invalid_argument("invalid should_reveal parameters");
    return y / (1.0 - gamma) >= std::pow(gamma, k_budget);
}

AdversarialEpsAgent::AdversarialEpsAgent(double eps) : eps_(eps) {
    if (eps < 0.0) throw std::invalid_argument("eps must be nonnegative");
}

HidingAgent::HidingAgent(HidingFixture fixture, int k_budget, double gamma)
    : fixture_(fixture), k_budget_(k_budget), gamma_(gamma) {}

Proposal HidingAgent::act(const AgentObservation& obs) {
    const Realization& r = *obs.realization;
    const EligibleSet& e = *obs.eligible;
    if (fixture_ == HidingFixture::P1Hider) {
        if (!revealed_ && !r.solutions.empty() &&
            should_reveal(k_budget_, gamma_, r.solutions.size() > 1 ? r.solutions[1].y : 0.0))
            revealed_ = true;
        if (revealed_) return best_response(r, e);
        // hide a2: propose only a1 when eligible
        if (!r.solutions.empty() && is_eligible(e, r.solutions[0])) return Proposal::of(0);
        return Proposal::null();
    }
    // non-discounting hider: pretends only the first solution exists, forever
    if (!r.solutions.empty() && is_eligible(e, r.solutions[0])) return Proposal::of(0);
    return Proposal::null();
}

std::string HidingAgent::name() const {
    return fixture_ == HidingFixture::P1Hider ? "p1_hider" : "non_discounting_hider";
}

namespace {

struct OracleSearch {
    const Realization* realization;
    int horizon;
    double gamma;
    std::uint64_t node_limit;
    double eps_filter;
    std::uint64_t nodes = 0;

    struct Best {
        double value;
        std::vector<Proposal> policy;
    };

    Best search(Mechanism& mech, int round) {
        if (round > horizon) return {0.0, {}};
        if (++nodes > node_limit)
            throw std::runtime_error("lookahead budget exceeded");
        const EligibleSet e = mech.announce(round);

        std::vector<Proposal> actions;
        if (eps_filter >= 0.0) {
            actions = eps_best_response_set(*realization, e, eps_filter);
        } else {
            actions.push_back(Proposal::null());
            for (std::size_t i = 0; i < realization->solutions.size(); ++i)
                actions.push_back(Proposal::of(i));
        }

        Best best{-1.0, {}};
        for (const Proposal& p : actions) {
            const Outcome out = round_outcome(e, *realization, p);
            RoundRecord rec{round, e, p, out.accepted, out.principal_utility,
                            out.agent_utility_raw,
                            std::pow(gamma, round - 1) * out.agent_utility_raw};
            auto next = mech.clone();
            next->feedback(rec);
            Best sub = search(*next, round + 1);
            const double value = rec.agent_utility_discounted + sub.value;
            if (value > best.value) {
                best.value = value;
                best.policy.clear();
                best.policy.push_back(p);
                best.policy.insert(best.policy.end(), sub.policy.begin(), sub.policy.end());
            }
        }
        return best;
    }
};

}  // namespace

LookaheadResult lookahead_oracle(const InstanceModel& instance, const Mechanism& mechanism,
                                 int horizon, double gamma, std::uint64_t node_limit,
                                 double eps_filter) {
    if (!instance.deterministic)
        throw std::invalid_argument("lookahead oracle requires a deterministic instance");
    if (horizon < 1 || horizon > 12)
        throw std::invalid_argument("horizon must lie in [1, 12]");
    const Realization realization{1, instance.solutions};
    OracleSearch s{&realization, horizon, gamma, node_limit, eps_filter};
    auto mech = mechanism.clone();
    auto best = s.search(*mech, 1);
    return {std::move(best.policy), best.value, s.nodes};
}

double scripted_policy_value(const InstanceModel& instance, const Mechanism& mechanism,
                             Agent& agent, int horizon, double gamma) {
    auto mech = mechanism.clone();
    const Realization realization{1, instance.solutions};
    double value = 0.0;
    for (int t = 1; t <= horizon; ++t) {
        const EligibleSet e = mech->announce(t);
        Realization r = realization;
        r.round = t;
        AgentObservation obs{&r, &e, t};
        const Proposal p = agent.act(obs);
        const Outcome out = round_outcome(e, r, p);
        RoundRecord rec{t, e, p, out.accepted, out.principal_utility,
                        out.agent_utility_raw,
                        std::pow(gamma, t - 1) * out.agent_utility_raw};
        mech->feedback(rec);
        value += rec.agent_utility_discounted;
    }
    return value;
}

}  // namespace delchoice
