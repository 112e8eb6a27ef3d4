#include "doctest.h"

#include <cmath>
#include <sstream>

#include "delchoice/engine.hpp"

using namespace delchoice;

namespace {
SimulationConfig ucb_config(int T, std::uint64_t seed) {
    SimulationConfig config;
    config.instance = fixture_two_uniform_complement();
    config.mechanism = "ucb_threshold";
    config.mechanism_params = nlohmann::json::object();
    config.agent = "myopic";
    config.agent_params = nlohmann::json::object();
    config.T = T;
    config.seed = seed;
    return config;
}
}  // namespace

TEST_CASE("seed splitting produces distinct sub-streams") {
    CHECK(split_seed(1, 0) != split_seed(1, 1));
    CHECK(split_seed(1, 0) != split_seed(2, 0));
    CHECK(split_seed(1, 0) == split_seed(1, 0));
}

TEST_CASE("identical configs replay bit-for-bit") {
    RunResult a = run_simulation(ucb_config(2000, 99));
    RunResult b = run_simulation(ucb_config(2000, 99));
    REQUIRE(a.cum_regret.size() == b.cum_regret.size());
    for (std::size_t i = 0; i < a.cum_regret.size(); ++i)
        CHECK(a.cum_regret[i] == b.cum_regret[i]);
    CHECK(a.history.total_principal_utility() == b.history.total_principal_utility());

    RunResult c = run_simulation(ucb_config(2000, 100));
    CHECK(a.cum_regret.back() != c.cum_regret.back());
}

TEST_CASE("regret accounting closes exactly") {
    RunResult r = run_simulation(ucb_config(1500, 5));
    const double total = r.history.total_principal_utility();
    CHECK(std::abs(1500 * r.opt_per_round - total - r.cum_regret.back()) < 1e-9);
}

TEST_CASE("hand-traced iterative-search regret") {
    SimulationConfig config;
    config.instance =
        deterministic_instance({Solution(0, 0.3, 0.9), Solution(1, 0.7, 0.5)});
    config.mechanism = "iterative_search";
    config.mechanism_params = nlohmann::json::object();
    config.agent = "myopic";
    config.agent_params = nlohmann::json::object();
    config.T = 100;
    config.seed = 1;
    RunResult r = run_simulation(config);
    CHECK(r.cum_regret.back() == doctest::Approx(1.1));
    CHECK(r.history.records.back().eligible == EligibleSet::inclusive(0.7));
}

TEST_CASE("empty instances yield zero regret against a zero benchmark") {
    SimulationConfig config = ucb_config(50, 1);
    config.instance = deterministic_instance({});
    RunResult r = run_simulation(config);
    CHECK(r.opt_per_round == 0.0);
    CHECK(r.cum_regret.back() == doctest::Approx(0.0));
    for (const RoundRecord& rec : r.history.records) CHECK(rec.proposal.is_null());
}

TEST_CASE("agent discounting trace") {
    SimulationConfig config;
    config.instance = deterministic_instance({Solution(0, 0.5, 0.8)});
    config.mechanism = "iterative_search";
    config.mechanism_params = nlohmann::json::object();
    config.agent = "adversarial_eps";
    config.agent_params = {{"eps", 0.01}, {"gamma", 0.9}};
    config.T = 30;
    config.seed = 1;
    RunResult r = run_simulation(config);
    double expected = 0.0, pow = 1.0;
    for (const RoundRecord& rec : r.history.records) {
        expected += pow * rec.agent_utility_raw;
        CHECK(rec.agent_utility_discounted == doctest::Approx(pow * rec.agent_utility_raw));
        pow *= 0.9;
    }
    CHECK(r.agent_discounted_total == doctest::Approx(expected));
}

TEST_CASE("replication aggregates deterministically across parallelism") {
    SimulationConfig base = ucb_config(1000, 0);
    std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5};
    ReplicateResult serial = replicate(base, seeds, 1);
    ReplicateResult parallel = replicate(base, seeds, 4);
    CHECK(serial.final_regret == parallel.final_regret);
    CHECK(serial.mean_final_regret == parallel.mean_final_regret);
    CHECK(serial.mean_regret_trace == parallel.mean_regret_trace);

    ReplicateResult twin = replicate(base, {7, 7}, 2);
    CHECK(twin.stddev_final_regret == doctest::Approx(0.0));
}

TEST_CASE("deterministic pipelines have zero variance across seeds") {
    SimulationConfig base;
    base.instance = fixture_p2(0.1);
    base.mechanism = "iterative_search";
    base.mechanism_params = nlohmann::json::object();
    base.agent = "myopic";
    base.agent_params = nlohmann::json::object();
    base.T = 200;
    ReplicateResult r = replicate(base, {1, 99, 12345}, 1);
    CHECK(r.stddev_final_regret == doctest::Approx(0.0));
}

TEST_CASE("factory rejects unknown names") {
    CHECK_THROWS_AS(make_mechanism("nope", nlohmann::json::object(), 10),
                    std::invalid_argument);
    CHECK_THROWS_AS(make_agent("nope", nlohmann::json::object()), std::invalid_argument);
    CHECK(mechanism_names().size() == 8);
    CHECK(agent_names().size() == 4);
}

TEST_CASE("trace CSV shape") {
    RunResult r = run_simulation(ucb_config(25, 3));
    const std::string csv = run_result_csv(r);
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    CHECK(line ==
          "t,tau_or_set_kind,proposal_x,proposal_y,accepted,principal_utility,cum_regret");
    int rows = 0;
    while (std::getline(in, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 25);
}
