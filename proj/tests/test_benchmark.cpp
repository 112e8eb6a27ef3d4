#include "doctest.h"

#include <cmath>

#include "delchoice/benchmark.hpp"

using namespace delchoice;

TEST_CASE("threshold utility is exact on deterministic instances") {
    InstanceModel inst =
        deterministic_instance({Solution(0, 0.3, 0.9), Solution(1, 0.7, 0.5)});
    CHECK(f_tau(inst, 0.0, true, 1, 1) == doctest::Approx(0.3));
    CHECK(f_tau(inst, 0.5, true, 1, 1) == doctest::Approx(0.7));
    CHECK(f_tau(inst, 0.8, true, 1, 1) == doctest::Approx(0.0));
}

TEST_CASE("Monte Carlo matches the analytic curve at the maximizer") {
    InstanceModel inst = fixture_two_uniform_complement();
    const double tau_star = std::sqrt(2.0) - 1.0;
    const double estimate = f_tau(inst, tau_star, true, 200000, 33);
    CHECK(std::abs(estimate - 4.0 * (std::sqrt(2.0) - 1.0) / 3.0) < 0.01);
}

TEST_CASE("optimal threshold search") {
    InstanceModel det =
        deterministic_instance({Solution(0, 0.3, 0.9), Solution(1, 0.7, 0.5)});
    BenchmarkResult r = opt_threshold(det, 10, 1, 1);
    CHECK(r.exact);
    CHECK(r.tau_star == doctest::Approx(0.7));
    CHECK(r.opt_per_round == doctest::Approx(0.7));

    InstanceModel single = deterministic_instance({Solution(0, 0.5, 0.5)});
    BenchmarkResult s = opt_threshold(single, 10, 1, 1);
    CHECK(s.tau_star == doctest::Approx(0.5));
    CHECK(s.opt_per_round == doctest::Approx(0.5));

    InstanceModel stoc = fixture_two_uniform_complement();
    BenchmarkResult m = opt_threshold(stoc, 200, 20000, 20240901);
    CHECK_FALSE(m.exact);
    CHECK(std::abs(m.tau_star - (std::sqrt(2.0) - 1.0)) < 0.05);
    CHECK(std::abs(m.opt_per_round - 0.55228) < 0.015);
    CHECK_FALSE(m.f_curve.empty());
}

TEST_CASE("Monte Carlo curve points sit within their error bars") {
    InstanceModel stoc = fixture_two_uniform_complement();
    BenchmarkResult m = opt_threshold(stoc, 20, 20000, 99);
    for (const FCurvePoint& p : m.f_curve) {
        CHECK(p.stderr_est >= 0.0);
        CHECK(std::abs(p.f - stoc.analytic_f(p.tau)) <= 5.0 * p.stderr_est + 1e-9);
    }
}

TEST_CASE("regret arithmetic") {
    History h;
    for (int t = 1; t <= 10; ++t) {
        RoundRecord rec;
        rec.round = t;
        rec.principal_utility = 0.0;
        h.records.push_back(rec);
    }
    CHECK(stackelberg_regret(h, 0.7) == doctest::Approx(7.0));

    History perfect;
    for (int t = 1; t <= 10; ++t) {
        RoundRecord rec;
        rec.round = t;
        rec.principal_utility = 0.7;
        perfect.records.push_back(rec);
    }
    CHECK(stackelberg_regret(perfect, 0.7) == doctest::Approx(0.0));
}

TEST_CASE("regret is additive over history concatenation") {
    History a, b, both;
    for (int t = 1; t <= 6; ++t) {
        RoundRecord rec;
        rec.round = t;
        rec.principal_utility = 0.1 * t;
        (t <= 3 ? a : b).records.push_back(rec);
        both.records.push_back(rec);
    }
    CHECK(stackelberg_regret(both, 0.5) ==
          doctest::Approx(stackelberg_regret(a, 0.5) + stackelberg_regret(b, 0.5)));
}

TEST_CASE("suboptimality gaps") {
    auto g = gaps({0.2, 0.5, 0.5});
    REQUIRE(g.size() == 3);
    CHECK(g[0] == doctest::Approx(0.3));
    CHECK(g[1] == doctest::Approx(0.0));
    CHECK(g[2] == doctest::Approx(0.0));
    CHECK(gaps({0.4}) == std::vector<double>{0.0});
}
