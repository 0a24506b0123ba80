#include "neorl/presets.hpp"

#include <string>

#include "neorl/errors.hpp"

namespace neorl {

Preset parse_preset(std::string_view name) {
    if (name == "A" || name == "a") return Preset::A;
    if (name == "B" || name == "b") return Preset::B;
    if (name == "C" || name == "c") return Preset::C;
    if (name == "D" || name == "d") return Preset::D;
    throw ConfigError("preset '" + std::string(name) + "': expected one of A, B, C, D");
}

const char* preset_name(Preset p) {
    switch (p) {
        case Preset::A: return "A";
        case Preset::B: return "B";
        case Preset::C: return "C";
        case Preset::D: return "D";
    }
    return "?";
}

NetworkSpec make_preset(Preset p, const PresetParams& pp) {
    NetworkSpec spec;
    spec.epsilon = pp.epsilon;
    spec.normalize_desire = pp.normalize_desire;
    spec.bounds = pp.bounds;

    NodeSpec pc{"pc", pp.pc_resolution, pp.gamma, pp.alpha, {}};
    NodeSpec ovc{"ovc", pp.ovc_resolution, pp.gamma, pp.alpha, {"main"}};

    if (p == Preset::A) {
        pc.groups = {"all"};
        spec.nodes = {pc, ovc};
        spec.edges = {
            {EdgeSource::external(ObjectFilter::All), "pc", "all"},
            {EdgeSource::desire("pc", "all"), "ovc", "main"},
        };
        spec.taps = {{"ovc", "main", pp.ovc_tap_weight}};
        return spec;
    }

    // B, C and D all split the coarse desires by valence.
    pc.groups = {"green", "red"};
    spec.edges = {
        {EdgeSource::external(ObjectFilter::GreenOnly), "pc", "green"},
        {EdgeSource::external(ObjectFilter::RedOnly), "pc", "red"},
        {EdgeSource::desire("pc", "green"), "ovc", "main"},
        {EdgeSource::desire("pc", "red"), "ovc", "main"},
    };
    spec.taps = {{"ovc", "main", pp.ovc_tap_weight}};

    if (p == Preset::C) {
        pc.groups.push_back("all");
        spec.edges.push_back({EdgeSource::external(ObjectFilter::All), "pc", "all"});
        spec.taps.push_back({"pc", "all", pp.pc_tap_weight});
    } else if (p == Preset::D) {
        spec.edges.push_back(
            {EdgeSource::desire("ovc", "main"), "ovc", "main", pp.feedback_gain,
             EdgeDelay::OneStep});
    }

    spec.nodes = {pc, ovc};
    return spec;
}

}  // namespace neorl
