#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "neorl/geometry.hpp"
#include "neorl/nres.hpp"

namespace neorl {

struct CellTransition {
    CellIndex from_cell;
    Action action;
    CellIndex to_cell;
};

// The cognitive map over one grid: a tabular action-value function per goal
// cell, all trained in parallel from the single behavior stream. For goal g
// the cumulant is 1 exactly when a transition enters g, where the episode
// also terminates (bootstrap suppressed), so q[g][s][a] is the discounted
// expectancy of entering g and every entry stays in [0, 1].
class GvfBank {
public:
    GvfBank(NresGrid grid, double gamma, double alpha);

    const NresGrid& grid() const { return grid_; }
    double gamma() const { return gamma_; }
    double alpha() const { return alpha_; }

    // One-step Q-learning backup for every goal from a single observed
    // transition. Only entries [*][t.from_cell][t.action] change.
    void update_all(const CellTransition& t);

    // The four action values for reaching `goal` from `state`.
    QVector q_slice(CellIndex goal, CellIndex state) const;
    double q(CellIndex goal, CellIndex state, Action a) const;

    std::uint64_t update_count() const { return updates_; }

    // Debug dump, one `goal,state,action,value` row per table entry.
    void dump_csv(std::ostream& os) const;

    friend bool operator==(const GvfBank&, const GvfBank&) = default;

private:
    std::size_t offset(CellIndex goal, CellIndex state) const {
        return (static_cast<std::size_t>(goal) * grid_.cell_count() + state) * kActionCount;
    }
    void check_cell(CellIndex cell, const char* what) const;

    NresGrid grid_;
    double gamma_;
    double alpha_;
    std::vector<double> q_;
    std::uint64_t updates_ = 0;
};

}  // namespace neorl
