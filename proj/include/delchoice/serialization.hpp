#pragma once

#include <nlohmann/json.hpp>

#include "delchoice/instances.hpp"

// JSON schemas for instances and experiment specs. Field names are part of
// the CLI contract; unknown keys are rejected.
namespace delchoice {

nlohmann::json instance_to_json(const InstanceModel& instance);
InstanceModel instance_from_json(const nlohmann::json& j);

struct ExperimentSpec {
    std::string name;
    InstanceModel instance;
    std::string mechanism;
    nlohmann::json mechanism_params;
    std::string agent;
    nlohmann::json agent_params;
    std::vector<int> horizons;           // T list
    std::vector<std::uint64_t> seeds;
    std::string out_dir;                 // optional; overridable on the CLI
};

ExperimentSpec experiment_from_json(const nlohmann::json& j);

}  // namespace delchoice
