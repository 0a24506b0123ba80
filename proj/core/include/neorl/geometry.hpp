#pragma once

#include <array>
#include <cmath>

namespace neorl {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator*(Vec2 a, double s) { return {a.x * s, a.y * s}; }
    friend Vec2 operator*(double s, Vec2 a) { return {a.x * s, a.y * s}; }
    friend bool operator==(const Vec2&, const Vec2&) = default;

    double norm2() const { return x * x + y * y; }
    double norm() const { return std::sqrt(norm2()); }
};

struct Rect {
    Vec2 lo;
    Vec2 hi;

    double width() const { return hi.x - lo.x; }
    double height() const { return hi.y - lo.y; }
    Vec2 center() const { return {(lo.x + hi.x) * 0.5, (lo.y + hi.y) * 0.5}; }
    bool valid() const { return hi.x > lo.x && hi.y > lo.y; }
    friend bool operator==(const Rect&, const Rect&) = default;
};

inline double clamp(double v, double lo, double hi) {
    return v < lo ? lo : (v > hi ? hi : v);
}

inline Vec2 clamp(Vec2 v, const Rect& r) {
    return {clamp(v.x, r.lo.x, r.hi.x), clamp(v.y, r.lo.y, r.hi.y)};
}

// Cardinal action set. The index order N, S, E, W is load-bearing: Q vectors
// are quadruples in this order throughout.
enum class Action : int { North = 0, South = 1, East = 2, West = 3 };

inline constexpr int kActionCount = 4;
inline constexpr std::array<Action, 4> kActions = {Action::North, Action::South,
                                                   Action::East, Action::West};

inline Vec2 unit_vector(Action a) {
    switch (a) {
        case Action::North: return {0.0, 1.0};
        case Action::South: return {0.0, -1.0};
        case Action::East: return {1.0, 0.0};
        case Action::West: return {-1.0, 0.0};
    }
    return {};
}

inline const char* action_name(Action a) {
    switch (a) {
        case Action::North: return "N";
        case Action::South: return "S";
        case Action::East: return "E";
        case Action::West: return "W";
    }
    return "?";
}

// Action values over {N, S, E, W}, indexed by Action.
using QVector = std::array<double, 4>;

}  // namespace neorl
