#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "delchoice/core.hpp"

using namespace delchoice;

TEST_CASE("eligibility thresholds: inclusive and strict boundaries") {
    Solution s(0, 0.5, 0.2);
    CHECK(is_eligible(EligibleSet::inclusive(0.5), s));
    CHECK_FALSE(is_eligible(EligibleSet::strict(0.5), s));
    CHECK(is_eligible(EligibleSet::strict(0.49), s));
    CHECK_FALSE(is_eligible(EligibleSet::accept_none(), s));
    CHECK(is_eligible(EligibleSet::accept_all(), s));
    CHECK(is_eligible(EligibleSet::accept_all(), Solution(1, 0.0, 0.0)));
}

TEST_CASE("explicit point sets match within tolerance") {
    EligibleSet set = EligibleSet::explicit_points({{0.5, 0.2}});
    CHECK(is_eligible(set, Solution(0, 0.5, 0.2)));
    CHECK(is_eligible(set, Solution(0, 0.5 + 1e-13, 0.2)));
    CHECK_FALSE(is_eligible(set, Solution(0, 0.51, 0.2)));
}

TEST_CASE("round outcome semantics") {
    Realization r{1, {Solution(0, 0.5, 0.2)}};
    Outcome accepted = round_outcome(EligibleSet::inclusive(0.3), r, Proposal::of(0));
    CHECK(accepted.accepted);
    CHECK(accepted.principal_utility == doctest::Approx(0.5));
    CHECK(accepted.agent_utility_raw == doctest::Approx(0.2));

    Outcome rejected = round_outcome(EligibleSet::inclusive(0.6), r, Proposal::of(0));
    CHECK_FALSE(rejected.accepted);
    CHECK(rejected.principal_utility == 0.0);
    CHECK(rejected.agent_utility_raw == 0.0);

    Outcome null = round_outcome(EligibleSet::accept_all(), r, Proposal::null());
    CHECK_FALSE(null.accepted);
    CHECK(null.principal_utility == 0.0);

    CHECK_THROWS_AS(round_outcome(EligibleSet::accept_all(), r, Proposal::of(3)),
                    std::out_of_range);
}

TEST_CASE("solutions validate their utility range") {
    CHECK_THROWS_AS(Solution(0, 1.5, 0.2), std::invalid_argument);
    CHECK_THROWS_AS(Solution(0, 0.5, -0.1), std::invalid_argument);
    CHECK_NOTHROW(Solution(0, 0.0, 1.0));
}

TEST_CASE("history accumulates principal utility") {
    History h;
    for (int t = 1; t <= 3; ++t) {
        RoundRecord rec;
        rec.round = t;
        rec.principal_utility = 0.25;
        h.records.push_back(rec);
    }
    CHECK(h.rounds() == 3);
    CHECK(h.total_principal_utility() == doctest::Approx(0.75));
}

TEST_CASE("eligible set equality and description") {
    CHECK(EligibleSet::inclusive(0.3) == EligibleSet::inclusive(0.3));
    CHECK_FALSE(EligibleSet::inclusive(0.3) == EligibleSet::strict(0.3));
    CHECK_FALSE(describe(EligibleSet::inclusive(0.3)).empty());
    CHECK_FALSE(describe(EligibleSet::accept_none()).empty());
}
