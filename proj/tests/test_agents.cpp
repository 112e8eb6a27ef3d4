#include "doctest.h"

#include <algorithm>
#include <random>

#include "delchoice/agents.hpp"
#include "delchoice/mechanisms.hpp"

using namespace delchoice;

namespace {
Realization make_realization(std::vector<std::pair<double, double>> xy) {
    Realization r{1, {}};
    int id = 0;
    for (auto [x, y] : xy) r.solutions.emplace_back(id++, x, y);
    return r;
}
}  // namespace

TEST_CASE("best response maximizes agent utility, ties favor the principal") {
    auto r = make_realization({{0.1, 1.0}, {0.2, 0.01}});
    CHECK(best_response(r, EligibleSet::inclusive(0.0)) == Proposal::of(0));

    auto single = make_realization({{0.5, 0.5}});
    CHECK(best_response(single, EligibleSet::strict(0.9)) == Proposal::null());

    auto tie = make_realization({{0.3, 0.7}, {0.6, 0.7}});
    CHECK(best_response(tie, EligibleSet::inclusive(0.0)) == Proposal::of(1));

    // zero agent utility still beats Null on the principal tie-break
    auto zero = make_realization({{0.4, 0.0}});
    CHECK(best_response(zero, EligibleSet::inclusive(0.0)) == Proposal::of(0));
}

TEST_CASE("eps-best-response set membership") {
    auto r = make_realization({{0.5, 0.2}, {0.6, 0.18}, {0.2, 0.9}});
    auto set = eps_best_response_set(r, EligibleSet::inclusive(0.3), 0.05);
    REQUIRE(set.size() == 2);
    CHECK(std::count(set.begin(), set.end(), Proposal::of(0)) == 1);
    CHECK(std::count(set.begin(), set.end(), Proposal::of(1)) == 1);

    auto exact = eps_best_response_set(r, EligibleSet::inclusive(0.3), 0.0);
    REQUIRE(exact.size() == 1);
    CHECK(exact[0] == Proposal::of(0));

    auto blocked = eps_best_response_set(r, EligibleSet::accept_none(), 0.1);
    REQUIRE(blocked.size() == 1);
    CHECK(blocked[0] == Proposal::null());
}

TEST_CASE("eps-best-response set grows with eps") {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        Realization r{1, {}};
        const int K = 1 + static_cast<int>(rng() % 5);
        for (int i = 0; i < K; ++i) r.solutions.emplace_back(i, u(rng), u(rng));
        EligibleSet set = EligibleSet::inclusive(u(rng));
        const double e1 = 0.3 * u(rng), e2 = e1 + 0.3 * u(rng);
        auto small = eps_best_response_set(r, set, e1);
        auto large = eps_best_response_set(r, set, e2);
        for (const Proposal& p : small)
            CHECK(std::count(large.begin(), large.end(), p) == 1);
    }
}

TEST_CASE("adversarial pick minimizes the principal's utility") {
    auto r = make_realization({{0.5, 0.2}, {0.6, 0.18}, {0.2, 0.9}});
    CHECK(adversarial_eps_response(r, EligibleSet::inclusive(0.3), 0.05) == Proposal::of(0));
    CHECK(adversarial_eps_response(r, EligibleSet::accept_none(), 0.1) == Proposal::null());

    // Null qualifies when the best achievable utility is within eps of zero
    auto weak = make_realization({{0.4, 0.03}});
    CHECK(adversarial_eps_response(weak, EligibleSet::inclusive(0.0), 0.05) ==
          Proposal::null());
}

TEST_CASE("reveal inequality") {
    CHECK(should_reveal(10, 0.9, 0.05));
    CHECK_FALSE(should_reveal(0, 0.9, 0.05));
    for (int k = 0; k <= 20; ++k) CHECK(should_reveal(k, 0.5, 0.5));
}

TEST_CASE("hiding agents follow their scripts") {
    InstanceModel p1 = fixture_p1(0.1, 1e-14);
    Realization r{1, p1.solutions};

    HidingAgent hider(HidingFixture::P1Hider, 0, 0.9);  // reveal condition false
    EligibleSet all = EligibleSet::inclusive(0.0);
    AgentObservation obs{&r, &all, 1};
    CHECK(hider.act(obs) == Proposal::of(0));

    EligibleSet above = EligibleSet::strict(0.1);
    AgentObservation obs2{&r, &above, 2};
    CHECK(hider.act(obs2) == Proposal::null());
    CHECK_FALSE(hider.revealed());

    InstanceModel k = fixture_appendix_k(0.1);
    Realization rk{1, k.solutions};
    HidingAgent pretend(HidingFixture::NonDiscountingHider, 0, 0.999);
    EligibleSet mid = EligibleSet::inclusive(0.4);
    AgentObservation obs3{&rk, &mid, 1};
    CHECK(pretend.act(obs3) == Proposal::of(0));
}

TEST_CASE("lookahead oracle prefers hiding on the two-solution lower-bound pair") {
    InstanceModel p1 = fixture_p1(0.1, 1e-14);
    IterativeSearch proto;
    const int horizon = 8;
    const double gamma = 0.9;

    MyopicAgent truthful;
    HidingAgent hider(HidingFixture::P1Hider, 0, gamma);
    const double v_truth = scripted_policy_value(p1, proto, truthful, horizon, gamma);
    const double v_hide = scripted_policy_value(p1, proto, hider, horizon, gamma);
    CHECK(v_hide > v_truth);

    LookaheadResult best = lookahead_oracle(p1, proto, horizon, gamma);
    CHECK(best.value >= v_hide - 1e-9);
    CHECK(best.value >= v_truth - 1e-9);
}

TEST_CASE("lookahead respects its node budget") {
    InstanceModel p1 = fixture_p1(0.1, 1e-14);
    IterativeSearch proto;
    CHECK_THROWS(lookahead_oracle(p1, proto, 12, 0.9, 10));
}

TEST_CASE("single-solution oracle proposes whenever eligible") {
    InstanceModel p2 = fixture_p2(0.1);
    IterativeSearch proto;
    LookaheadResult best = lookahead_oracle(p2, proto, 6, 0.9);
    MyopicAgent myopic;
    const double v_myopic = scripted_policy_value(p2, proto, myopic, 6, 0.9);
    CHECK(best.value == doctest::Approx(v_myopic));
}
