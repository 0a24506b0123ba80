#include "neorl/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "neorl/errors.hpp"

namespace neorl {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> known,
                         const std::string& where) {
    for (const auto& [key, value] : obj.items()) {
        bool ok = false;
        for (const char* k : known) {
            if (key == k) {
                ok = true;
                break;
            }
        }
        if (!ok) throw ConfigError("config: unknown key '" + where + key + "'");
    }
}

EnvParams env_from_json(const json& j) {
    reject_unknown_keys(j,
                        {"arena_width", "arena_height", "agent_radius", "object_radius",
                         "object_count", "accel_per_step", "velocity_damping", "object_speed_min",
                         "object_speed_max", "green_probability"},
                        "env.");
    EnvParams env;
    env.arena_width = j.value("arena_width", env.arena_width);
    env.arena_height = j.value("arena_height", env.arena_height);
    env.agent_radius = j.value("agent_radius", env.agent_radius);
    env.object_radius = j.value("object_radius", env.object_radius);
    env.object_count = j.value("object_count", env.object_count);
    env.accel_per_step = j.value("accel_per_step", env.accel_per_step);
    env.velocity_damping = j.value("velocity_damping", env.velocity_damping);
    env.object_speed_min = j.value("object_speed_min", env.object_speed_min);
    env.object_speed_max = j.value("object_speed_max", env.object_speed_max);
    env.green_probability = j.value("green_probability", env.green_probability);
    return env;
}

json env_to_json(const EnvParams& env) {
    return json{{"arena_width", env.arena_width},
                {"arena_height", env.arena_height},
                {"agent_radius", env.agent_radius},
                {"object_radius", env.object_radius},
                {"object_count", env.object_count},
                {"accel_per_step", env.accel_per_step},
                {"velocity_damping", env.velocity_damping},
                {"object_speed_min", env.object_speed_min},
                {"object_speed_max", env.object_speed_max},
                {"green_probability", env.green_probability}};
}

Overrides overrides_from_json(const json& j) {
    reject_unknown_keys(j,
                        {"gamma", "alpha", "epsilon", "feedback_gain", "pc_tap_weight",
                         "ovc_tap_weight", "pc_resolution", "ovc_resolution", "normalize_desire"},
                        "overrides.");
    Overrides o;
    if (j.contains("gamma")) o.gamma = j.at("gamma").get<double>();
    if (j.contains("alpha")) o.alpha = j.at("alpha").get<double>();
    if (j.contains("epsilon")) o.epsilon = j.at("epsilon").get<double>();
    if (j.contains("feedback_gain")) o.feedback_gain = j.at("feedback_gain").get<double>();
    if (j.contains("pc_tap_weight")) o.pc_tap_weight = j.at("pc_tap_weight").get<double>();
    if (j.contains("ovc_tap_weight")) o.ovc_tap_weight = j.at("ovc_tap_weight").get<double>();
    if (j.contains("pc_resolution")) o.pc_resolution = j.at("pc_resolution").get<int>();
    if (j.contains("ovc_resolution")) o.ovc_resolution = j.at("ovc_resolution").get<int>();
    if (j.contains("normalize_desire")) o.normalize_desire = j.at("normalize_desire").get<bool>();
    return o;
}

json overrides_to_json(const Overrides& o) {
    json j = json::object();
    if (o.gamma) j["gamma"] = *o.gamma;
    if (o.alpha) j["alpha"] = *o.alpha;
    if (o.epsilon) j["epsilon"] = *o.epsilon;
    if (o.feedback_gain) j["feedback_gain"] = *o.feedback_gain;
    if (o.pc_tap_weight) j["pc_tap_weight"] = *o.pc_tap_weight;
    if (o.ovc_tap_weight) j["ovc_tap_weight"] = *o.ovc_tap_weight;
    if (o.pc_resolution) j["pc_resolution"] = *o.pc_resolution;
    if (o.ovc_resolution) j["ovc_resolution"] = *o.ovc_resolution;
    if (o.normalize_desire) j["normalize_desire"] = *o.normalize_desire;
    return j;
}

ObjectFilter filter_from_string(const std::string& s) {
    if (s == "all") return ObjectFilter::All;
    if (s == "green") return ObjectFilter::GreenOnly;
    if (s == "red") return ObjectFilter::RedOnly;
    throw ConfigError("config: edge filter '" + s + "': expected all, green or red");
}

const char* filter_to_string(ObjectFilter f) {
    switch (f) {
        case ObjectFilter::All: return "all";
        case ObjectFilter::GreenOnly: return "green";
        case ObjectFilter::RedOnly: return "red";
    }
    return "all";
}

NetworkSpec network_from_json(const json& j) {
    reject_unknown_keys(j, {"epsilon", "normalize_desire", "nodes", "edges", "taps"}, "network.");
    NetworkSpec spec;
    spec.epsilon = j.value("epsilon", spec.epsilon);
    spec.normalize_desire = j.value("normalize_desire", spec.normalize_desire);
    for (const json& nj : j.value("nodes", json::array())) {
        reject_unknown_keys(nj, {"name", "resolution", "gamma", "alpha", "groups"},
                            "network.nodes.");
        NodeSpec node;
        node.name = nj.at("name").get<std::string>();
        node.resolution = nj.value("resolution", node.resolution);
        node.gamma = nj.value("gamma", node.gamma);
        node.alpha = nj.value("alpha", node.alpha);
        node.groups = nj.value("groups", std::vector<std::string>{});
        spec.nodes.push_back(std::move(node));
    }
    for (const json& ej : j.value("edges", json::array())) {
        reject_unknown_keys(ej, {"source", "target", "gain", "delay"}, "network.edges.");
        EdgeSpec edge;
        const json& src = ej.at("source");
        const std::string kind = src.at("kind").get<std::string>();
        if (kind == "objects") {
            reject_unknown_keys(src, {"kind", "filter"}, "network.edges.source.");
            edge.source = EdgeSource::external(filter_from_string(src.value("filter", "all")));
        } else if (kind == "desire") {
            reject_unknown_keys(src, {"kind", "node", "group"}, "network.edges.source.");
            edge.source = EdgeSource::desire(src.at("node").get<std::string>(),
                                             src.at("group").get<std::string>());
        } else {
            throw ConfigError("config: edge source kind '" + kind +
                              "': expected objects or desire");
        }
        const json& dst = ej.at("target");
        reject_unknown_keys(dst, {"node", "group"}, "network.edges.target.");
        edge.target_node = dst.at("node").get<std::string>();
        edge.target_group = dst.at("group").get<std::string>();
        edge.gain = ej.value("gain", 1.0);
        const std::string delay = ej.value("delay", "immediate");
        if (delay == "immediate") {
            edge.delay = EdgeDelay::Immediate;
        } else if (delay == "one_step") {
            edge.delay = EdgeDelay::OneStep;
        } else {
            throw ConfigError("config: edge delay '" + delay +
                              "': expected immediate or one_step");
        }
        spec.edges.push_back(std::move(edge));
    }
    for (const json& tj : j.value("taps", json::array())) {
        reject_unknown_keys(tj, {"node", "group", "weight"}, "network.taps.");
        spec.taps.push_back({tj.at("node").get<std::string>(), tj.at("group").get<std::string>(),
                             tj.value("weight", 1.0)});
    }
    return spec;
}

json network_to_json(const NetworkSpec& spec) {
    json nodes = json::array();
    for (const NodeSpec& node : spec.nodes) {
        nodes.push_back(json{{"name", node.name},
                             {"resolution", node.resolution},
                             {"gamma", node.gamma},
                             {"alpha", node.alpha},
                             {"groups", node.groups}});
    }
    json edges = json::array();
    for (const EdgeSpec& edge : spec.edges) {
        json src;
        if (edge.source.kind == EdgeSource::Kind::ExternalObjects) {
            src = json{{"kind", "objects"}, {"filter", filter_to_string(edge.source.filter)}};
        } else {
            src = json{{"kind", "desire"}, {"node", edge.source.node}, {"group", edge.source.group}};
        }
        edges.push_back(
            json{{"source", src},
                 {"target", json{{"node", edge.target_node}, {"group", edge.target_group}}},
                 {"gain", edge.gain},
                 {"delay", edge.delay == EdgeDelay::Immediate ? "immediate" : "one_step"}});
    }
    json taps = json::array();
    for (const TapSpec& tap : spec.taps) {
        taps.push_back(json{{"node", tap.node}, {"group", tap.group}, {"weight", tap.weight}});
    }
    return json{{"epsilon", spec.epsilon},
                {"normalize_desire", spec.normalize_desire},
                {"nodes", nodes},
                {"edges", edges},
                {"taps", taps}};
}

}  // namespace

ExperimentConfig parse_config_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    try {
        reject_unknown_keys(j,
                            {"preset", "steps", "seeds", "sample_interval", "steps_per_second",
                             "workers", "env", "overrides", "network"},
                            "");
        ExperimentConfig config;
        config.preset = j.value("preset", config.preset);
        config.steps = j.value("steps", config.steps);
        config.sample_interval = j.value("sample_interval", config.sample_interval);
        config.steps_per_second = j.value("steps_per_second", config.steps_per_second);
        config.workers = j.value("workers", config.workers);
        if (j.contains("seeds")) {
            if (j.at("seeds").is_number()) {
                const long count = j.at("seeds").get<long>();
                if (count < 1) throw ConfigError("seeds: count must be >= 1");
                config.seeds.clear();
                for (long s = 1; s <= count; ++s) config.seeds.push_back(s);
            } else {
                config.seeds = j.at("seeds").get<std::vector<std::uint64_t>>();
            }
        }
        if (j.contains("env")) config.env = env_from_json(j.at("env"));
        if (j.contains("overrides")) config.overrides = overrides_from_json(j.at("overrides"));
        if (j.contains("network")) config.custom_network = network_from_json(j.at("network"));
        if (config.preset == "custom" && !j.contains("network")) {
            throw ConfigError("config: preset 'custom' requires a network object");
        }
        return config;
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
}

ExperimentConfig load_config_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("config: cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config_json(buffer.str());
}

std::string dump_config_json(const ExperimentConfig& config, int indent) {
    json j{{"preset", config.preset},
           {"steps", config.steps},
           {"seeds", config.seeds},
           {"sample_interval", config.sample_interval},
           {"steps_per_second", config.steps_per_second},
           {"workers", config.workers},
           {"env", env_to_json(config.env)},
           {"overrides", overrides_to_json(config.overrides)}};
    if (config.preset == "custom") {
        j["network"] = network_to_json(config.custom_network);
    }
    return j.dump(indent) + "\n";
}

}  // namespace neorl
