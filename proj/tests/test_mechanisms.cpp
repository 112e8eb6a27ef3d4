#include "doctest.h"

#include <random>

#include "delchoice/agents.hpp"
#include "delchoice/instances.hpp"
#include "delchoice/mechanisms.hpp"

using namespace delchoice;

namespace {

struct Drive {
    std::vector<EligibleSet> announced;
    double total_utility = 0.0;
};

Drive drive(const InstanceModel& instance, Mechanism& mechanism, Agent& agent, int T,
            std::uint64_t seed = 7) {
    std::mt19937_64 rng(seed);
    Drive d;
    for (int t = 1; t <= T; ++t) {
        const Realization realization = instance.realize(t, rng);
        const EligibleSet eligible = mechanism.announce(t);
        AgentObservation obs{&realization, &eligible, t};
        const Proposal proposal = agent.act(obs);
        const Outcome out = round_outcome(eligible, realization, proposal);
        RoundRecord rec{t, eligible, proposal, out.accepted, out.principal_utility,
                        out.agent_utility_raw, out.agent_utility_raw,
                        proposal.is_null() ? 0.0 : realization.solutions[*proposal.index].x,
                        proposal.is_null() ? 0.0 : realization.solutions[*proposal.index].y};
        mechanism.feedback(rec);
        d.announced.push_back(eligible);
        d.total_utility += out.principal_utility;
    }
    return d;
}

}  // namespace

TEST_CASE("delay and grid formulas") {
    CHECK(delay_rounds(0.99, 0.01) == 922);
    CHECK(delay_rounds(0.5, 0.5) == 3);
    CHECK(delay_rounds(0.9, 0.05) == 53);
    CHECK_THROWS_AS(delay_rounds(1.0, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(delay_rounds(0.9, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(t_gamma(0.0), std::invalid_argument);
    CHECK(ucb_grid_size(10000) == 6);
    CHECK(ucb_grid_size(100000) == 10);
}

TEST_CASE("iterative search ratchets and commits") {
    InstanceModel inst =
        deterministic_instance({Solution(0, 0.3, 0.9), Solution(1, 0.7, 0.5)});
    IterativeSearch mech;
    MyopicAgent agent;
    Drive d = drive(inst, mech, agent, 100);
    CHECK(d.announced[0] == EligibleSet::strict(0.0));
    CHECK(d.announced[1] == EligibleSet::strict(0.3));
    CHECK(d.announced[2] == EligibleSet::strict(0.7));
    for (int t = 3; t < 100; ++t) CHECK(d.announced[t] == EligibleSet::inclusive(0.7));
    CHECK(100 * 0.7 - d.total_utility == doctest::Approx(1.1));
    CHECK(mech.committed());
}

TEST_CASE("iterative search on a single solution") {
    InstanceModel inst = deterministic_instance({Solution(0, 0.5, 0.5)});
    IterativeSearch mech;
    MyopicAgent agent;
    Drive d = drive(inst, mech, agent, 5);
    CHECK(d.announced[0] == EligibleSet::strict(0.0));
    CHECK(d.announced[1] == EligibleSet::strict(0.5));
    CHECK(d.announced[2] == EligibleSet::inclusive(0.5));
}

TEST_CASE("iterative search with a zero-utility solution") {
    InstanceModel inst = deterministic_instance({Solution(0, 0.0, 0.5)});
    IterativeSearch mech;
    MyopicAgent agent;
    Drive d = drive(inst, mech, agent, 5);
    CHECK(d.announced[0] == EligibleSet::strict(0.0));  // never accepts
    for (int t = 1; t < 5; ++t) CHECK(d.announced[t] == EligibleSet::inclusive(0.0));
}

TEST_CASE("delayed iterative search visits the same thresholds as the plain version") {
    InstanceModel inst =
        deterministic_instance({Solution(0, 0.3, 0.9), Solution(1, 0.7, 0.5)});
    DelayedIterativeSearch mech(0.5, 0.5);  // D = 3
    CHECK(mech.delay() == 3);
    MyopicAgent agent;
    Drive d = drive(inst, mech, agent, 40);

    // probes happen every D+1 rounds with constant filler announcements between
    for (int block = 0; block < 2; ++block)
        for (int i = 1; i <= 3; ++i)
            CHECK(d.announced[4 * block + i] == d.announced[4 * block]);
    CHECK(d.announced[0] == EligibleSet::strict(0.0));
    CHECK(d.announced[4] == EligibleSet::strict(0.3));
    CHECK(d.announced[8] == EligibleSet::strict(0.7));
    CHECK(mech.committed());
    CHECK(d.announced[39] == EligibleSet::inclusive(0.7));
}

TEST_CASE("binary search halves until the width target") {
    InstanceModel inst = deterministic_instance({Solution(0, 0.73, 0.5)});
    const int T = 8;
    DelayedBinarySearch mech(0.5, 0.4, T);  // width target 1/8
    MyopicAgent agent;
    Drive d = drive(inst, mech, agent, 60);
    int probes = 0;
    for (const EligibleSet& e : d.announced)
        if (e.kind == SetKind::ThresholdStrict) ++probes;
    CHECK(probes == 3);  // halvings until r - l <= 1/8
    CHECK(mech.committed());
    CHECK(mech.upper() - mech.lower() <= 1.0 / T + 1e-12);
    CHECK(mech.lower() <= 0.73 + 1e-12);
    CHECK(mech.lower() >= 0.73 - 1.0 / T - 1e-12);
}

TEST_CASE("binary search interval stays monotone") {
    InstanceModel inst = deterministic_instance({Solution(0, 0.73, 0.5)});
    DelayedBinarySearch mech(0.9, 0.05, 1000);
    MyopicAgent agent;
    std::mt19937_64 rng(1);
    double prev_l = -1.0, prev_r = 2.0;
    for (int t = 1; t <= 4000; ++t) {
        const Realization realization = inst.realize(t, rng);
        const EligibleSet eligible = mech.announce(t);
        AgentObservation obs{&realization, &eligible, t};
        const Proposal proposal = agent.act(obs);
        const Outcome out = round_outcome(eligible, realization, proposal);
        RoundRecord rec{t, eligible, proposal, out.accepted, out.principal_utility,
                        out.agent_utility_raw, out.agent_utility_raw, 0.0, 0.0};
        mech.feedback(rec);
        CHECK(mech.lower() >= prev_l - 1e-15);
        CHECK(mech.upper() <= prev_r + 1e-15);
        CHECK(mech.lower() <= mech.upper() + 1e-15);
        prev_l = mech.lower();
        prev_r = mech.upper();
    }
    CHECK(mech.committed());
}

TEST_CASE("progressive search alpha and degenerate first proposal") {
    DelayedProgressiveSearch mech(0.9, 1.0, 1.2, 0.01);
    CHECK(mech.alpha() == doctest::Approx(0.1));
    CHECK_THROWS_AS(DelayedProgressiveSearch(0.9, 1.0, 2.0, 0.01), std::invalid_argument);

    InstanceModel inst = deterministic_instance({Solution(0, 0.5, 0.0)});
    DelayedProgressiveSearch m2(0.9, 1.0, 1.2, 0.01);
    MyopicAgent agent;
    Drive d = drive(inst, m2, agent, 10);
    CHECK(d.announced[0] == EligibleSet::accept_all());
    CHECK(m2.committed());  // r = min(r, l + 0/L1) collapses the interval
    for (int t = 1; t < 10; ++t) CHECK(d.announced[t] == EligibleSet::inclusive(0.5));
}

TEST_CASE("UCB threshold grid round-robin initialization") {
    const int T = 10000;
    UcbThreshold mech(T);
    REQUIRE(mech.num_arms() == 6);
    InstanceModel inst = deterministic_instance({Solution(0, 0.9, 0.5)});
    MyopicAgent agent;
    Drive d = drive(inst, mech, agent, T);
    std::vector<double> first;
    for (int t = 0; t < mech.num_arms(); ++t) {
        CHECK(d.announced[t].kind == SetKind::ThresholdInclusive);
        first.push_back(d.announced[t].tau);
    }
    std::sort(first.begin(), first.end());
    for (int i = 0; i < mech.num_arms(); ++i)
        CHECK(first[i] == doctest::Approx((i + 1.0) / mech.num_arms()));
    int total = 0;
    for (int n : mech.pulls()) total += n;
    CHECK(total == T);
}

TEST_CASE("successive elimination removes dominated arms") {
    InstanceModel inst = deterministic_instance({Solution(0, 0.9, 0.5)});
    // arms 0.5 and 1.0: rewards 0.9 and 0
    SuccessiveEliminationDelayed mech(2, 0, 0.0, 1000);
    MyopicAgent agent;
    drive(inst, mech, agent, 1000);
    CHECK(mech.is_active(0));
    CHECK_FALSE(mech.is_active(1));

    SuccessiveEliminationDelayed wide(2, 0, 1.0, 1000);
    MyopicAgent agent2;
    drive(inst, wide, agent2, 1000);
    CHECK(wide.is_active(0));
    CHECK(wide.is_active(1));  // delta = 1 keeps every interval overlapping
}

TEST_CASE("strategic composition derives its parameters") {
    auto mech = stochastic_strategic_mechanism(0.9, 1.0, 0.05, 10000);
    CHECK(mech->num_arms() == 6);
    CHECK(mech->delay() == 116);
    CHECK(mech->delta() == doctest::Approx(1e-4));
}

TEST_CASE("delay wrapper identity and total blackout") {
    InstanceModel inst =
        deterministic_instance({Solution(0, 0.3, 0.9), Solution(1, 0.7, 0.5)});

    DelayWrapper identity(std::make_unique<IterativeSearch>(), 0);
    IterativeSearch bare;
    MyopicAgent a1, a2;
    Drive wrapped = drive(inst, identity, a1, 30);
    Drive plain = drive(inst, bare, a2, 30);
    CHECK(wrapped.announced == plain.announced);

    DelayWrapper blackout(std::make_unique<IterativeSearch>(), 1000);
    MyopicAgent a3;
    Drive dark = drive(inst, blackout, a3, 50);
    for (const EligibleSet& e : dark.announced) CHECK(e == EligibleSet::strict(0.0));
}
