#include "neorl/gvf_bank.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>

#include "neorl/csv.hpp"
#include "neorl/errors.hpp"

namespace neorl {

GvfBank::GvfBank(NresGrid grid, double gamma, double alpha)
    : grid_(grid), gamma_(gamma), alpha_(alpha) {
    if (!(gamma > 0.0) || !(gamma < 1.0)) {
        throw ConfigError("gamma: must be in (0, 1), got " + std::to_string(gamma));
    }
    if (!(alpha > 0.0) || !(alpha <= 1.0)) {
        throw ConfigError("alpha: must be in (0, 1], got " + std::to_string(alpha));
    }
    const std::size_t cells = static_cast<std::size_t>(grid_.cell_count());
    q_.assign(cells * cells * kActionCount, 0.0);
}

void GvfBank::check_cell(CellIndex cell, const char* what) const {
    if (cell >= static_cast<CellIndex>(grid_.cell_count())) {
        throw std::out_of_range(std::string(what) + " cell " + std::to_string(cell) +
                                " out of range for " + std::to_string(grid_.cell_count()) +
                                " cells");
    }
}

void GvfBank::update_all(const CellTransition& t) {
    check_cell(t.from_cell, "transition from");
    check_cell(t.to_cell, "transition to");
    const int cells = grid_.cell_count();
    const int a = static_cast<int>(t.action);
    for (CellIndex g = 0; g < static_cast<CellIndex>(cells); ++g) {
        double target;
        if (t.to_cell == g) {
            target = 1.0;  // cumulant on entry, episode terminates
        } else {
            const double* next = &q_[offset(g, t.to_cell)];
            target = gamma_ * std::max(std::max(next[0], next[1]), std::max(next[2], next[3]));
        }
        double& entry = q_[offset(g, t.from_cell) + a];
        entry += alpha_ * (target - entry);
    }
    ++updates_;
}

QVector GvfBank::q_slice(CellIndex goal, CellIndex state) const {
    check_cell(goal, "goal");
    check_cell(state, "state");
    const double* p = &q_[offset(goal, state)];
    return {p[0], p[1], p[2], p[3]};
}

double GvfBank::q(CellIndex goal, CellIndex state, Action a) const {
    check_cell(goal, "goal");
    check_cell(state, "state");
    return q_[offset(goal, state) + static_cast<int>(a)];
}

void GvfBank::dump_csv(std::ostream& os) const {
    os << "goal,state,action,value\n";
    const int cells = grid_.cell_count();
    for (int g = 0; g < cells; ++g) {
        for (int s = 0; s < cells; ++s) {
            for (const Action a : kActions) {
                os << g << ',' << s << ',' << action_name(a) << ','
                   << format_double(q_[offset(g, s) + static_cast<int>(a)]) << '\n';
            }
        }
    }
}

}  // namespace neorl
