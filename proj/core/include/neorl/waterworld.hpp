#pragma once

#include <cstdint>
#include <vector>

#include "neorl/geometry.hpp"
#include "neorl/rng.hpp"

namespace neorl {

// Clone parameters for the drifting-objects navigation task. The defaults
// approximate the usual implementation's feel at a nominal 30 steps/second;
// every constant is configurable.
struct EnvParams {
    double arena_width = 1.0;
    double arena_height = 1.0;
    double agent_radius = 0.03;
    double object_radius = 0.03;
    int object_count = 3;
    double accel_per_step = 0.008;
    double velocity_damping = 0.975;
    double object_speed_min = 0.001;  // per-axis magnitude, length/step
    double object_speed_max = 0.005;
    double green_probability = 0.5;

    Rect arena() const { return {{0.0, 0.0}, {arena_width, arena_height}}; }

    // Throws ConfigError naming the violated field.
    void validate() const;

    friend bool operator==(const EnvParams&, const EnvParams&) = default;
};

enum class Color : std::uint8_t { Green, Red };

inline double valence_of(Color c) { return c == Color::Green ? 1.0 : -1.0; }

struct ObjectState {
    Vec2 position;
    Vec2 velocity;
    Color color;
    friend bool operator==(const ObjectState&, const ObjectState&) = default;
};

struct EnvState {
    Vec2 agent_position;
    Vec2 agent_velocity;
    std::vector<ObjectState> objects;
    Rng rng;  // advances only on respawn sampling
    long step_counter = 0;
    friend bool operator==(const EnvState&, const EnvState&) = default;
};

enum class EventKind : std::uint8_t { CapturedGreen, CapturedRed, BoardReset };

struct StepOutcome {
    double reward = 0.0;  // +1 per green capture, -1 per red capture
    std::vector<EventKind> events;
};

struct Observation {
    Vec2 agent_position;
    Vec2 agent_velocity;
    std::vector<ObjectState> objects;
};

// Deterministic, seedable environment: the agent accelerates in the four
// cardinal directions among drifting circular objects. Object slots are
// stable; a captured object is replaced in place by a fresh sample, and
// capturing the last green object also replaces every remaining object.
class WaterWorld {
public:
    WaterWorld(EnvParams params, std::uint64_t seed);

    // Resume from a captured state, for replay and scripted scenarios.
    WaterWorld(EnvParams params, EnvState state);

    // One step: velocity update, position integration, sticky wall clamp for
    // the agent, reflecting walls for objects, then capture resolution.
    StepOutcome step(Action action);

    Observation observe() const;

    const EnvParams& params() const { return params_; }
    const EnvState& state() const { return state_; }

private:
    ObjectState sample_object();
    ObjectState sample_initial_object(int placed);

    EnvParams params_;
    EnvState state_;
};

}  // namespace neorl
