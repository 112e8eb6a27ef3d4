#include "delchoice/serialization.hpp"

#include <fstream>

namespace delchoice {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& j, std::initializer_list<const char*> allowed,
                         const std::string& where) {
    for (const auto& [key, value] : j.items()) {
        bool ok = false;
        for (const char* a : allowed)
            if (key == a) ok = true;
        if (!ok) throw std::invalid_argument("unknown key '" + key + "' in " + where);
    }
}

json metadata_to_json(const InstanceMetadata& m) {
    json j;
    j["K"] = m.K;
    if (m.d) j["d"] = *m.d;
    if (m.L1) j["L1"] = *m.L1;
    if (m.L2) j["L2"] = *m.L2;
    if (m.y_min) j["y_min"] = *m.y_min;
    return j;
}

}  // namespace

nlohmann::json instance_to_json(const InstanceModel& instance) {
    json j;
    if (instance.deterministic) {
        j["kind"] = "deterministic";
        json sols = json::array();
        for (const auto& s : instance.solutions) sols.push_back({{"x", s.x}, {"y", s.y}});
        j["solutions"] = sols;
    } else {
        j["kind"] = "stochastic";
        json sampler;
        sampler["name"] = instance.sampler == SamplerKind::TwoUniformComplement
                              ? "TwoUniformComplement"
                              : "TwoUniformComplementTruncated";
        sampler["params"] = json::object();
        if (instance.sampler == SamplerKind::TwoUniformComplementTruncated)
            sampler["params"]["y_min"] = instance.sampler_param;
        j["sampler"] = sampler;
    }
    j["metadata"] = metadata_to_json(instance.meta);
    return j;
}

InstanceModel instance_from_json(const nlohmann::json& j) {
    reject_unknown_keys(j, {"kind", "solutions", "sampler", "metadata"}, "instance");
    const std::string kind = j.at("kind");
    InstanceModel inst;
    if (kind == "deterministic") {
        std::vector<Solution> sols;
        int id = 0;
        for (const auto& s : j.at("solutions")) {
            reject_unknown_keys(s, {"x", "y"}, "solution");
            sols.emplace_back(id++, s.at("x").get<double>(), s.at("y").get<double>());
        }
        inst = deterministic_instance(std::move(sols));
    } else if (kind == "stochastic") {
        const auto& sampler = j.at("sampler");
        reject_unknown_keys(sampler, {"name", "params"}, "sampler");
        const std::string name = sampler.at("name");
        if (name == "TwoUniformComplement") {
            inst = fixture_two_uniform_complement();
        } else if (name == "TwoUniformComplementTruncated") {
            inst = fixture_two_uniform_complement_truncated(
                sampler.at("params").at("y_min").get<double>());
        } else {
            throw std::invalid_argument("unknown sampler: " + name);
        }
    } else {
        throw std::invalid_argument("unknown instance kind: " + kind);
    }
    if (j.contains("metadata")) {
        const auto& m = j.at("metadata");
        reject_unknown_keys(m, {"K", "d", "L1", "L2", "y_min"}, "metadata");
        if (m.contains("K")) inst.meta.K = m.at("K").get<int>();
        if (m.contains("d")) inst.meta.d = m.at("d").get<double>();
        if (m.contains("L1")) inst.meta.L1 = m.at("L1").get<double>();
        if (m.contains("L2")) inst.meta.L2 = m.at("L2").get<double>();
        if (m.contains("y_min")) inst.meta.y_min = m.at("y_min").get<double>();
    }
    return inst;
}

ExperimentSpec experiment_from_json(const nlohmann::json& j) {
    reject_unknown_keys(j,
                        {"name", "instance", "mechanism", "agent", "T", "seeds", "out"},
                        "experiment spec");
    ExperimentSpec spec;
    spec.name = j.value("name", "experiment");

    const auto& inst = j.at("instance");
    reject_unknown_keys(inst, {"fixture", "generator", "file", "inline"}, "instance ref");
    if (inst.contains("fixture")) {
        spec.instance = fixture_by_name(inst.at("fixture").get<std::string>());
    } else if (inst.contains("generator")) {
        const auto& g = inst.at("generator");
        reject_unknown_keys(g, {"K", "d", "L1", "L2", "y_min", "seed"}, "generator");
        spec.instance = generate_deterministic_chain(
            g.at("K").get<int>(), g.at("d").get<double>(), g.at("L1").get<double>(),
            g.at("L2").get<double>(), g.at("y_min").get<double>(),
            g.value("seed", 1ULL));
    } else if (inst.contains("file")) {
        std::ifstream in(inst.at("file").get<std::string>());
        if (!in) throw std::invalid_argument("cannot open instance file");
        spec.instance = instance_from_json(json::parse(in));
    } else if (inst.contains("inline")) {
        spec.instance = instance_from_json(inst.at("inline"));
    } else {
        throw std::invalid_argument("instance must name a fixture, generator, file, or inline document");
    }

    const auto& mech = j.at("mechanism");
    reject_unknown_keys(mech, {"name", "params"}, "mechanism");
    spec.mechanism = mech.at("name").get<std::string>();
    spec.mechanism_params = mech.value("params", json::object());

    const auto& agent = j.at("agent");
    reject_unknown_keys(agent, {"name", "params"}, "agent");
    spec.agent = agent.at("name").get<std::string>();
    spec.agent_params = agent.value("params", json::object());

    for (const auto& t : j.at("T")) spec.horizons.push_back(t.get<int>());
    for (const auto& s : j.at("seeds")) spec.seeds.push_back(s.get<std::uint64_t>());
    if (spec.horizons.empty() || spec.seeds.empty())
        throw std::invalid_argument("T and seeds must be non-empty");
    spec.out_dir = j.value("out", "");
    return spec;
}

}  // namespace delchoice
