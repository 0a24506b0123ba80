#pragma once

#include <vector>

#include "neorl/gvf_bank.hpp"

namespace neorl::oracle {

// Deterministic four-neighbor grid world used as ground truth for the bank:
// moving off the edge stays in place, cells indexed row-major like NresGrid.
struct GridWorld {
    int resolution;

    int cells() const { return resolution * resolution; }
    CellIndex next(CellIndex s, Action a) const;
};

// Shortest-path step counts from every cell to the goal.
std::vector<int> bfs_distances(const GridWorld& world, CellIndex goal);

// Exact fixed point from breadth-first distances: Q*(s, a) = gamma^d where d
// is the distance of next(s, a) to the goal and d = 0 gives 1 (entry this
// step, terminal).
std::vector<QVector> q_star(const GridWorld& world, CellIndex goal, double gamma);

// Independent second route: synchronous value iteration to a fixed point.
std::vector<QVector> q_value_iteration(const GridWorld& world, CellIndex goal, double gamma,
                                       double tol = 1e-12);

// Feeds the bank one transition per (state, action), per goal, ordered by
// increasing landing distance to that goal. At alpha = 1 each segment lands
// the corresponding table exactly on q_star in a single pass, and later
// segments leave it there (the fixed point is update-invariant).
void train_to_convergence(GvfBank& bank);

}  // namespace neorl::oracle
