#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "delchoice/core.hpp"
#include "delchoice/instances.hpp"

// Agent-side policies: exact and approximate best response, the worst-case
// eps-best-response adversary, the scripted hiding agents from the lower-bound
// constructions, and a brute-force lookahead oracle for small instances.
namespace delchoice {

struct AgentObservation {
    const Realization* realization = nullptr;
    const EligibleSet* eligible = nullptr;
    int round = 1;
};

// Best response: maximize agent utility over eligible solutions and Null
// (Null pays 0); ties broken in favor of the principal (max x, Null = 0).
Proposal best_response(const Realization& realization, const EligibleSet& eligible);

// All proposals within eps of the best eventual agent utility. Only eligible
// solutions and Null qualify; Null is included iff the maximum is <= eps.
std::vector<Proposal> eps_best_response_set(const Realization& realization,
                                            const EligibleSet& eligible, double eps);

// Worst-case pick from the eps-best-response set: minimize principal utility,
// ties by minimal agent utility, then by solution order (Null first).
Proposal adversarial_eps_response(const Realization& realization,
                                  const EligibleSet& eligible, double eps);

// Appendix G reveal inequality, simplified to its j-independent form:
// reveal iff y/(1-gamma) >= gamma^K_budget.
bool should_reveal(int k_budget, double gamma, double y);

class Agent {
public:
    virtual ~Agent() = default;
    virtual Proposal act(const AgentObservation& obs) = 0;
    virtual std::string name() const = 0;
};

class MyopicAgent final : public Agent {
public:
    Proposal act(const AgentObservation& obs) override {
        return best_response(*obs.realization, *obs.eligible);
    }
    std::string name() const override { return "myopic"; }
};

class AdversarialEpsAgent final : public Agent {
public:
    explicit AdversarialEpsAgent(double eps);
    Proposal act(const AgentObservation& obs) override {
        return adversarial_eps_response(*obs.realization, *obs.eligible, eps_);
    }
    std::string name() const override { return "adversarial_eps"; }
    double eps() const { return eps_; }

private:
    double eps_;
};

enum class HidingFixture { P1Hider, NonDiscountingHider };

// Scripted strategic agents from the lower-bound constructions. The P1 hider
// proposes only a1 (index 0) while the reveal inequality is false, then turns
// into a best responder. The non-discounting hider pretends only solution 0
// exists forever.
class HidingAgent final : public Agent {
public:
    HidingAgent(HidingFixture fixture, int k_budget, double gamma);
    Proposal act(const AgentObservation& obs) override;
    std::string name() const override;
    bool revealed() const { return revealed_; }

private:
    HidingFixture fixture_;
    int k_budget_;
    double gamma_;
    bool revealed_ = false;
};

class Mechanism;  // mechanisms.hpp

struct LookaheadResult {
    std::vector<Proposal> policy;
    double value = 0.0;  // total discounted agent utility
    std::uint64_t nodes = 0;
};

// Exhaustive backward induction over (mechanism state, round) for a
// deterministic instance. eps_filter < 0 searches all proposals; otherwise the
// search is restricted to eps-best responses each round.
LookaheadResult lookahead_oracle(const InstanceModel& instance, const Mechanism& mechanism,
                                 int horizon, double gamma,
                                 std::uint64_t node_limit = 10'000'000,
                                 double eps_filter = -1.0);

// Discounted value of a fixed agent against a fresh copy of the mechanism.
double scripted_policy_value(const InstanceModel& instance, const Mechanism& mechanism,
                             Agent& agent, int horizon, double gamma);

}  // namespace delchoice
