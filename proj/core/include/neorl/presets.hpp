#pragma once

#include <string_view>

#include "neorl/network.hpp"

namespace neorl {

enum class Preset { A, B, C, D };

// Accepts "A".."D" (case-insensitive); throws ConfigError otherwise.
Preset parse_preset(std::string_view name);
const char* preset_name(Preset p);

struct PresetParams {
    int pc_resolution = 7;    // coarse map feeding the fine map
    int ovc_resolution = 23;
    double gamma = 0.95;
    double alpha = 0.1;
    double epsilon = 0.02;
    double feedback_gain = -1.0;  // recurrent desire gain in preset D
    double pc_tap_weight = 1.0;   // preset C taps both maps 1:1
    double ovc_tap_weight = 1.0;
    bool normalize_desire = false;
    Rect bounds = {{0.0, 0.0}, {1.0, 1.0}};
};

// The four reference architectures. All route external objects through the
// coarse "pc" node into the value-generating "ovc" node:
//   A: one desire from all objects; tap on ovc.
//   B: desires split by valence (green and red groups); tap on ovc.
//   C: B plus a direct tap on pc over all objects, weighted 1:1 with ovc.
//   D: B plus a one-step recurrent self-desire on ovc with negative unit gain.
NetworkSpec make_preset(Preset p, const PresetParams& params = {});

}  // namespace neorl
