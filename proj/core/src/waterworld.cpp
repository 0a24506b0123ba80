#include "neorl/waterworld.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "neorl/errors.hpp"

namespace neorl {

namespace {

bool positive_finite(double v) { return std::isfinite(v) && v > 0.0; }

constexpr int kMaxSpawnAttempts = 1000000;

}  // namespace

void EnvParams::validate() const {
    if (!positive_finite(arena_width)) throw ConfigError("arena_width: must be > 0");
    if (!positive_finite(arena_height)) throw ConfigError("arena_height: must be > 0");
    if (!positive_finite(agent_radius)) throw ConfigError("agent_radius: must be > 0");
    if (!positive_finite(object_radius)) throw ConfigError("object_radius: must be > 0");
    if (object_count < 1) throw ConfigError("object_count: must be >= 1");
    if (!std::isfinite(accel_per_step) || accel_per_step < 0.0) {
        throw ConfigError("accel_per_step: must be >= 0");
    }
    if (!(velocity_damping > 0.0) || !(velocity_damping <= 1.0)) {
        throw ConfigError("velocity_damping: must be in (0, 1]");
    }
    if (!std::isfinite(object_speed_min) || object_speed_min < 0.0) {
        throw ConfigError("object_speed_min: must be >= 0");
    }
    if (!std::isfinite(object_speed_max) || object_speed_max < object_speed_min) {
        throw ConfigError("object_speed_max: must be >= object_speed_min");
    }
    if (!(green_probability >= 0.0) || !(green_probability <= 1.0)) {
        throw ConfigError("green_probability: must be in [0, 1]");
    }
    const double side = std::min(arena_width, arena_height);
    if (2.0 * agent_radius >= side) throw ConfigError("agent_radius: agent does not fit the arena");
    if (2.0 * object_radius >= side) throw ConfigError("object_radius: objects do not fit the arena");
}

WaterWorld::WaterWorld(EnvParams params, std::uint64_t seed) : params_(params) {
    params_.validate();
    state_.rng = Rng(seed);
    state_.agent_position = params_.arena().center();
    state_.agent_velocity = {0.0, 0.0};
    state_.objects.reserve(params_.object_count);
    for (int i = 0; i < params_.object_count; ++i) {
        state_.objects.push_back(sample_initial_object(i));
    }
}

WaterWorld::WaterWorld(EnvParams params, EnvState state)
    : params_(params), state_(std::move(state)) {
    params_.validate();
    if (static_cast<int>(state_.objects.size()) != params_.object_count) {
        throw ConfigError("object_count: state holds " + std::to_string(state_.objects.size()) +
                          " objects, params expect " + std::to_string(params_.object_count));
    }
}

// Draw order is fixed (x, y until accepted, then color, then per-axis speed
// magnitude and sign) so that runs replay bit-identically.
ObjectState WaterWorld::sample_object() {
    const Rect arena = params_.arena();
    const double r = params_.object_radius;
    const double capture = params_.agent_radius + params_.object_radius;
    ObjectState obj;
    int attempts = 0;
    do {
        if (++attempts > kMaxSpawnAttempts) {
            throw std::runtime_error("object spawn: no free position found");
        }
        obj.position.x = uniform_in(state_.rng, arena.lo.x + r, arena.hi.x - r);
        obj.position.y = uniform_in(state_.rng, arena.lo.y + r, arena.hi.y - r);
    } while ((obj.position - state_.agent_position).norm2() < capture * capture);
    obj.color = bernoulli(state_.rng, params_.green_probability) ? Color::Green : Color::Red;
    const double sx = uniform_in(state_.rng, params_.object_speed_min, params_.object_speed_max);
    obj.velocity.x = bernoulli(state_.rng, 0.5) ? sx : -sx;
    const double sy = uniform_in(state_.rng, params_.object_speed_min, params_.object_speed_max);
    obj.velocity.y = bernoulli(state_.rng, 0.5) ? sy : -sy;
    return obj;
}

ObjectState WaterWorld::sample_initial_object(int placed) {
    // Initial placement additionally avoids already-placed objects.
    const double min_sep = 2.0 * params_.object_radius;
    for (int attempts = 0; attempts < kMaxSpawnAttempts; ++attempts) {
        ObjectState obj = sample_object();
        bool clear = true;
        for (int j = 0; j < placed; ++j) {
            if ((obj.position - state_.objects[j].position).norm2() < min_sep * min_sep) {
                clear = false;
                break;
            }
        }
        if (clear) return obj;
    }
    throw std::runtime_error("object spawn: no free position found");
}

StepOutcome WaterWorld::step(Action action) {
    const Rect arena = params_.arena();
    EnvState& s = state_;

    s.agent_velocity =
        s.agent_velocity * params_.velocity_damping + unit_vector(action) * params_.accel_per_step;
    s.agent_position = s.agent_position + s.agent_velocity;

    // Sticky walls for the agent: clamp the center to the radius inset and
    // zero the normal velocity component.
    const double ar = params_.agent_radius;
    if (s.agent_position.x < arena.lo.x + ar) {
        s.agent_position.x = arena.lo.x + ar;
        s.agent_velocity.x = 0.0;
    } else if (s.agent_position.x > arena.hi.x - ar) {
        s.agent_position.x = arena.hi.x - ar;
        s.agent_velocity.x = 0.0;
    }
    if (s.agent_position.y < arena.lo.y + ar) {
        s.agent_position.y = arena.lo.y + ar;
        s.agent_velocity.y = 0.0;
    } else if (s.agent_position.y > arena.hi.y - ar) {
        s.agent_position.y = arena.hi.y - ar;
        s.agent_velocity.y = 0.0;
    }

    // Objects drift and reflect; negating a component preserves its speed.
    const double orr = params_.object_radius;
    for (ObjectState& o : s.objects) {
        o.position = o.position + o.velocity;
        if (o.position.x < arena.lo.x + orr) {
            o.position.x = arena.lo.x + orr;
            o.velocity.x = -o.velocity.x;
        } else if (o.position.x > arena.hi.x - orr) {
            o.position.x = arena.hi.x - orr;
            o.velocity.x = -o.velocity.x;
        }
        if (o.position.y < arena.lo.y + orr) {
            o.position.y = arena.lo.y + orr;
            o.velocity.y = -o.velocity.y;
        } else if (o.position.y > arena.hi.y - orr) {
            o.position.y = arena.hi.y - orr;
            o.velocity.y = -o.velocity.y;
        }
    }

    // Captures are resolved simultaneously on the post-integration positions,
    // strict overlap only.
    const double capture = params_.agent_radius + params_.object_radius;
    const double capture2 = capture * capture;
    StepOutcome out;
    int greens_on_board = 0;
    int greens_captured = 0;
    std::vector<int> captured;
    for (int i = 0; i < static_cast<int>(s.objects.size()); ++i) {
        if (s.objects[i].color == Color::Green) ++greens_on_board;
        if ((s.objects[i].position - s.agent_position).norm2() < capture2) {
            captured.push_back(i);
            if (s.objects[i].color == Color::Green) {
                ++greens_captured;
                out.reward += 1.0;
                out.events.push_back(EventKind::CapturedGreen);
            } else {
                out.reward -= 1.0;
                out.events.push_back(EventKind::CapturedRed);
            }
        }
    }

    const bool board_reset = greens_captured > 0 && greens_captured == greens_on_board;

    for (const int i : captured) {
        s.objects[i] = sample_object();
    }
    if (board_reset) {
        std::size_t next_captured = 0;
        for (int i = 0; i < static_cast<int>(s.objects.size()); ++i) {
            if (next_captured < captured.size() && captured[next_captured] == i) {
                ++next_captured;  // already replaced above
                continue;
            }
            s.objects[i] = sample_object();
        }
        out.events.push_back(EventKind::BoardReset);
    }

    ++s.step_counter;
    return out;
}

Observation WaterWorld::observe() const {
    return {state_.agent_position, state_.agent_velocity, state_.objects};
}

}  // namespace neorl
