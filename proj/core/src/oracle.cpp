#include "neorl/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>

#include "neorl/errors.hpp"

namespace neorl::oracle {

CellIndex GridWorld::next(CellIndex s, Action a) const {
    const int n = resolution;
    int row = static_cast<int>(s) / n;
    int col = static_cast<int>(s) % n;
    switch (a) {
        case Action::North: row = std::min(row + 1, n - 1); break;
        case Action::South: row = std::max(row - 1, 0); break;
        case Action::East: col = std::min(col + 1, n - 1); break;
        case Action::West: col = std::max(col - 1, 0); break;
    }
    return static_cast<CellIndex>(row * n + col);
}

std::vector<int> bfs_distances(const GridWorld& world, CellIndex goal) {
    std::vector<int> dist(world.cells(), -1);
    std::deque<CellIndex> frontier{goal};
    dist[goal] = 0;
    while (!frontier.empty()) {
        const CellIndex s = frontier.front();
        frontier.pop_front();
        for (const Action a : kActions) {
            const CellIndex t = world.next(s, a);
            if (dist[t] < 0) {
                dist[t] = dist[s] + 1;
                frontier.push_back(t);
            }
        }
    }
    return dist;
}

std::vector<QVector> q_star(const GridWorld& world, CellIndex goal, double gamma) {
    const std::vector<int> dist = bfs_distances(world, goal);
    // Powers built by the same repeated multiplication the backup performs.
    std::vector<double> pow_gamma(2 * world.resolution, 1.0);
    for (std::size_t k = 1; k < pow_gamma.size(); ++k) {
        pow_gamma[k] = gamma * pow_gamma[k - 1];
    }
    std::vector<QVector> q(world.cells());
    for (CellIndex s = 0; s < static_cast<CellIndex>(world.cells()); ++s) {
        for (const Action a : kActions) {
            q[s][static_cast<int>(a)] = pow_gamma[dist[world.next(s, a)]];
        }
    }
    return q;
}

std::vector<QVector> q_value_iteration(const GridWorld& world, CellIndex goal, double gamma,
                                       double tol) {
    std::vector<QVector> q(world.cells(), QVector{});
    for (;;) {
        double delta = 0.0;
        std::vector<QVector> next(world.cells());
        for (CellIndex s = 0; s < static_cast<CellIndex>(world.cells()); ++s) {
            for (const Action a : kActions) {
                const CellIndex t = world.next(s, a);
                double target;
                if (t == goal) {
                    target = 1.0;
                } else {
                    const QVector& tq = q[t];
                    target = gamma * std::max(std::max(tq[0], tq[1]), std::max(tq[2], tq[3]));
                }
                next[s][static_cast<int>(a)] = target;
                delta = std::max(delta, std::abs(target - q[s][static_cast<int>(a)]));
            }
        }
        q = std::move(next);
        if (delta < tol) return q;
    }
}

void train_to_convergence(GvfBank& bank) {
    if (bank.alpha() != 1.0) {
        throw ConfigError("train_to_convergence: requires alpha = 1");
    }
    const GridWorld world{bank.grid().resolution()};
    const int cells = world.cells();
    for (CellIndex goal = 0; goal < static_cast<CellIndex>(cells); ++goal) {
        const std::vector<int> dist = bfs_distances(world, goal);
        struct Entry {
            CellIndex s;
            Action a;
            int landing;
        };
        std::vector<Entry> sweep;
        sweep.reserve(static_cast<std::size_t>(cells) * kActionCount);
        for (CellIndex s = 0; s < static_cast<CellIndex>(cells); ++s) {
            for (const Action a : kActions) {
                sweep.push_back({s, a, dist[world.next(s, a)]});
            }
        }
        std::stable_sort(sweep.begin(), sweep.end(),
                         [](const Entry& x, const Entry& y) { return x.landing < y.landing; });
        for (const Entry& e : sweep) {
            bank.update_all({e.s, e.a, world.next(e.s, e.a)});
        }
    }
}

}  // namespace neorl::oracle
