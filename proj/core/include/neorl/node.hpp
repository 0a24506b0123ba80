#pragma once

#include <span>

#include "neorl/gvf_bank.hpp"

namespace neorl {

// A purposive element-of-interest: where reward is expected and how strongly.
struct Element {
    Vec2 coordinate;
    double valence = 0.0;  // psi, signed reward expectancy
    friend bool operator==(const Element&, const Element&) = default;
};

// The two outputs of a behavioral node for one element set: an actionable
// Q vector and an output desire element for downstream nodes.
struct NodeOutput {
    QVector q{};
    Element desire;
};

// Valence-weighted superposition over the bank: each element addresses the
// value slice of the grid cell it lies in, scaled by its valence. Summation
// follows element order; the empty set yields the zero quadruple.
QVector extract_q(const GvfBank& bank, CellIndex agent_cell, std::span<const Element> elements);

// Euclidean reading of a cardinal value quadruple: d = (Q_E - Q_W, Q_N - Q_S).
inline Vec2 desire_vector(const QVector& q) {
    return {q[static_cast<int>(Action::East)] - q[static_cast<int>(Action::West)],
            q[static_cast<int>(Action::North)] - q[static_cast<int>(Action::South)]};
}

// Output element: the desire displaces the agent position (clamped to the
// arena) and carries the plain sum of the input valences.
Element emit_element(Vec2 agent_position, Vec2 d, std::span<const Element> elements,
                     const Rect& bounds);

// One full node evaluation; pure with respect to the bank. With
// normalize_desire the displacement keeps its direction but is scaled to unit
// length (zero stays zero), discarding the discounted-proximity magnitude.
NodeOutput node_forward(const GvfBank& bank, Vec2 agent_position,
                        std::span<const Element> elements, bool normalize_desire = false);

}  // namespace neorl
