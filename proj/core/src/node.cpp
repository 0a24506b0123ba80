#include "neorl/node.hpp"

namespace neorl {

QVector extract_q(const GvfBank& bank, CellIndex agent_cell, std::span<const Element> elements) {
    QVector out{};
    const NresGrid& grid = bank.grid();
    for (const Element& e : elements) {
        const QVector slice = bank.q_slice(grid.cell_of(e.coordinate), agent_cell);
        for (int a = 0; a < kActionCount; ++a) {
            out[a] += e.valence * slice[a];
        }
    }
    return out;
}

Element emit_element(Vec2 agent_position, Vec2 d, std::span<const Element> elements,
                     const Rect& bounds) {
    double valence = 0.0;
    for (const Element& e : elements) {
        valence += e.valence;
    }
    return {clamp(agent_position + d, bounds), valence};
}

NodeOutput node_forward(const GvfBank& bank, Vec2 agent_position,
                        std::span<const Element> elements, bool normalize_desire) {
    const NresGrid& grid = bank.grid();
    const QVector q = extract_q(bank, grid.cell_of(agent_position), elements);
    Vec2 d = desire_vector(q);
    if (normalize_desire) {
        const double len = d.norm();
        if (len > 0.0) d = d * (1.0 / len);
    }
    return {q, emit_element(agent_position, d, elements, grid.bounds())};
}

}  // namespace neorl
