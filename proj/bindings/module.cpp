#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "delchoice/agents.hpp"
#include "delchoice/benchmark.hpp"
#include "delchoice/engine.hpp"
#include "delchoice/instances.hpp"
#include "delchoice/mechanisms.hpp"
#include "delchoice/serialization.hpp"
#include "delchoice/verify.hpp"

namespace py = pybind11;
using nlohmann::json;

namespace {

delchoice::InstanceModel parse_instance(const std::string& doc) {
    return delchoice::instance_from_json(json::parse(doc));
}

delchoice::SimulationConfig make_config(const std::string& instance_json,
                                        const std::string& mechanism,
                                        const std::string& mechanism_params,
                                        const std::string& agent,
                                        const std::string& agent_params, int T,
                                        std::uint64_t seed) {
    delchoice::SimulationConfig config;
    config.instance = parse_instance(instance_json);
    config.mechanism = mechanism;
    config.mechanism_params = json::parse(mechanism_params);
    config.agent = agent;
    config.agent_params = json::parse(agent_params);
    config.T = T;
    config.seed = seed;
    return config;
}

}  // namespace

PYBIND11_MODULE(_delchoice, m) {
    m.doc() = "simulation engine for the repeated delegated choice problem";

    m.def("fixture_names", &delchoice::fixture_names);
    m.def(
        "fixture_json",
        [](const std::string& name) {
            return delchoice::instance_to_json(delchoice::fixture_by_name(name)).dump();
        },
        py::arg("name"));
    m.def(
        "generate_chain_json",
        [](int K, double d, double L1, double L2, double y_min, std::uint64_t seed) {
            return delchoice::instance_to_json(delchoice::generate_deterministic_chain(
                                                   K, d, L1, L2, y_min, seed))
                .dump();
        },
        py::arg("K"), py::arg("d"), py::arg("L1"), py::arg("L2"), py::arg("y_min"),
        py::arg("seed") = 1);

    m.def("t_gamma", &delchoice::t_gamma, py::arg("gamma"));
    m.def("delay_rounds", &delchoice::delay_rounds, py::arg("gamma"), py::arg("eps"));
    m.def("ucb_grid_size", &delchoice::ucb_grid_size, py::arg("T"));
    m.def("should_reveal", &delchoice::should_reveal, py::arg("k_budget"),
          py::arg("gamma"), py::arg("y"));
    m.def("mechanism_names", &delchoice::mechanism_names);
    m.def("agent_names", &delchoice::agent_names);

    m.def(
        "f_tau",
        [](const std::string& instance_json, double tau, bool inclusive, int n_samples,
           std::uint64_t seed) {
            return delchoice::f_tau(parse_instance(instance_json), tau, inclusive,
                                    n_samples, seed);
        },
        py::arg("instance_json"), py::arg("tau"), py::arg("inclusive") = true,
        py::arg("n_samples") = 100000, py::arg("seed") = 20240901);

    m.def(
        "opt_threshold",
        [](const std::string& instance_json, int grid_size, int n_samples,
           std::uint64_t seed) {
            auto r = delchoice::opt_threshold(parse_instance(instance_json), grid_size,
                                              n_samples, seed);
            py::dict out;
            out["tau_star"] = r.tau_star;
            out["opt_per_round"] = r.opt_per_round;
            out["exact"] = r.exact;
            py::list curve;
            for (const auto& p : r.f_curve)
                curve.append(py::make_tuple(p.tau, p.f, p.stderr_est, p.n_samples));
            out["f_curve"] = curve;
            return out;
        },
        py::arg("instance_json"), py::arg("grid_size") = 512,
        py::arg("n_samples") = 20000, py::arg("seed") = 20240901);

    m.def(
        "simulate",
        [](const std::string& instance_json, const std::string& mechanism,
           const std::string& mechanism_params, const std::string& agent,
           const std::string& agent_params, int T, std::uint64_t seed,
           bool keep_trace) {
            auto result = delchoice::run_simulation(make_config(
                instance_json, mechanism, mechanism_params, agent, agent_params, T, seed));
            py::dict out;
            out["final_regret"] = result.cum_regret.back();
            out["opt_per_round"] = result.opt_per_round;
            out["total_utility"] = result.history.total_principal_utility();
            out["agent_discounted_total"] = result.agent_discounted_total;
            if (keep_trace) out["cum_regret"] = result.cum_regret;
            return out;
        },
        py::arg("instance_json"), py::arg("mechanism"),
        py::arg("mechanism_params") = "{}", py::arg("agent") = "myopic",
        py::arg("agent_params") = "{}", py::arg("T") = 1000, py::arg("seed") = 0,
        py::arg("keep_trace") = false);

    m.def(
        "replicate",
        [](const std::string& instance_json, const std::string& mechanism,
           const std::string& mechanism_params, const std::string& agent,
           const std::string& agent_params, int T,
           const std::vector<std::uint64_t>& seeds, int parallelism) {
            auto base = make_config(instance_json, mechanism, mechanism_params, agent,
                                    agent_params, T, 0);
            auto r = delchoice::replicate(base, seeds, parallelism);
            py::dict out;
            out["final_regret"] = r.final_regret;
            out["mean_final_regret"] = r.mean_final_regret;
            out["stddev_final_regret"] = r.stddev_final_regret;
            out["opt_per_round"] = r.opt_per_round;
            return out;
        },
        py::arg("instance_json"), py::arg("mechanism"),
        py::arg("mechanism_params") = "{}", py::arg("agent") = "myopic",
        py::arg("agent_params") = "{}", py::arg("T") = 1000,
        py::arg("seeds") = std::vector<std::uint64_t>{1, 2, 3},
        py::arg("parallelism") = 1);

    m.def(
        "acceptance",
        [](const std::string& suite) {
            py::list out;
            for (const auto& r :
                 delchoice::verify::run_acceptance(delchoice::verify::suite_from_name(suite))) {
                py::dict d;
                d["id"] = r.id;
                d["name"] = r.name;
                d["passed"] = r.passed;
                d["detail"] = r.detail;
                d["seconds"] = r.seconds;
                out.append(d);
            }
            return out;
        },
        py::arg("suite") = "fast");
}
